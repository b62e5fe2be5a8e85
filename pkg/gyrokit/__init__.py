"""
-*- coding: utf-8 -*-
@FileName: __init__.py
@DateTime: 2025/10/18
@Docs: gyrokit: 陀螺群代数、L-子陀螺群商结构与强拓扑陀螺群的构造性度量化
"""

__version__ = "0.1.0"
