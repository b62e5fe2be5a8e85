"""
-*- coding: utf-8 -*-
@FileName: base.py
@DateTime: 2025/10/18
@Docs: 基础模式
"""

from pydantic import BaseModel, ConfigDict

__all__ = ["BaseSchema", "FrozenSchema"]


class BaseSchema(BaseModel):
    """基础模式：禁止额外字段"""

    model_config = ConfigDict(extra="forbid", use_enum_values=True)


class FrozenSchema(BaseSchema):
    """不可变模式"""

    model_config = ConfigDict(extra="forbid", use_enum_values=True, frozen=True)
