"""
-*- coding: utf-8 -*-
@FileName: __init__.py
@DateTime: 2025/10/18
@Docs: 业务服务层 - 检查引擎、邻域链、预范数度量与子陀螺群商
"""
