"""
-*- coding: utf-8 -*-
@FileName: table.py
@DateTime: 2025/10/18
@Docs: Cayley表文件模式 {"elements": [...], "identity": i, "op": [[...], ...]}
"""

from collections.abc import Callable
from typing import Self

from pydantic import Field, model_validator

from gyrokit.schemas.base import FrozenSchema

__all__ = ["CayleyTable"]


class CayleyTable(FrozenSchema):
    """有限广群的Cayley表

    只校验格式（方阵、下标范围、标签唯一）；拉丁方与陀螺群公理由 validate_table 检查。
    """

    elements: list[str] = Field(min_length=1, description="元素标签")
    identity: int = Field(ge=0, description="单位元下标")
    op: list[list[int]] = Field(description="运算表，op[i][j] 为 i⊕j 的下标")

    @model_validator(mode="after")
    def validate_shape(self) -> Self:
        """校验方阵形状与下标范围"""
        n = len(self.elements)
        if len(set(self.elements)) != n:
            raise ValueError("元素标签必须唯一")
        if self.identity >= n:
            raise ValueError(f"单位元下标 {self.identity} 超出范围 0..{n - 1}")
        if len(self.op) != n:
            raise ValueError(f"运算表应有 {n} 行，实际 {len(self.op)} 行")
        for i, row in enumerate(self.op):
            if len(row) != n:
                raise ValueError(f"第 {i} 行应有 {n} 列，实际 {len(row)} 列")
            for j, entry in enumerate(row):
                if not 0 <= entry < n:
                    raise ValueError(f"op[{i}][{j}] = {entry} 超出范围 0..{n - 1}")
        return self

    @property
    def order(self) -> int:
        """元素个数"""
        return len(self.elements)

    def index_of(self, label: str) -> int:
        """按标签查找下标，找不到时抛出 KeyError"""
        try:
            return self.elements.index(label)
        except ValueError:
            raise KeyError(label) from None

    @classmethod
    def from_function(cls, labels: list[str], identity: int, func: Callable[[int, int], int]) -> "CayleyTable":
        """由二元函数 (i, j) -> k 生成Cayley表"""
        n = len(labels)
        return cls(elements=labels, identity=identity, op=[[func(i, j) for j in range(n)] for i in range(n)])
