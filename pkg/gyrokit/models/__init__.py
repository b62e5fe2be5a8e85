"""
-*- coding: utf-8 -*-
@FileName: __init__.py
@DateTime: 2025/10/18
@Docs: 具体陀螺群模型：Möbius 圆盘、Einstein 球、Cayley 表与群适配器
"""

from gyrokit.models.einstein import EinsteinModel, make_einstein
from gyrokit.models.mobius import MobiusModel, make_mobius
from gyrokit.models.table import (
    GroupAdapter,
    TableGyroModel,
    load_table,
    make_group_adapter,
    make_table_gyrogroup,
    validate_table,
)

__all__ = [
    "EinsteinModel",
    "GroupAdapter",
    "MobiusModel",
    "TableGyroModel",
    "load_table",
    "make_einstein",
    "make_group_adapter",
    "make_mobius",
    "make_table_gyrogroup",
    "validate_table",
]
