"""
-*- coding: utf-8 -*-
@FileName: __init__.py
@DateTime: 2025/10/18
@Docs: 核心模块：配置、异常与陀螺群抽象契约
"""
