"""
-*- coding: utf-8 -*-
@FileName: partition.py
@DateTime: 2025/10/18
@Docs: 左陪集划分模式
"""

from typing import Self

from pydantic import Field, model_validator

from gyrokit.schemas.base import FrozenSchema

__all__ = ["CosetPartition"]


class CosetPartition(FrozenSchema):
    """G/H 的左陪集划分，blocks[k] 为第 k 个陪集 x⊕H 的元素下标（升序）"""

    labels: list[str] = Field(description="全体元素标签")
    subgroup: list[int] = Field(description="H 的元素下标")
    representatives: list[int] = Field(description="每个陪集的代表元")
    blocks: list[list[int]] = Field(description="陪集")

    @model_validator(mode="after")
    def validate_partition(self) -> Self:
        """校验陪集两两不交且覆盖全体元素"""
        seen: set[int] = set()
        for block in self.blocks:
            if not block:
                raise ValueError("陪集不能为空")
            overlap = seen.intersection(block)
            if overlap:
                raise ValueError(f"陪集相交: {sorted(overlap)}")
            seen.update(block)
        if seen != set(range(len(self.labels))):
            raise ValueError("陪集没有覆盖全部元素")
        if len(self.representatives) != len(self.blocks):
            raise ValueError("代表元个数与陪集个数不一致")
        return self

    @property
    def block_of(self) -> dict[int, int]:
        """元素下标 -> 陪集下标"""
        return {x: k for k, block in enumerate(self.blocks) for x in block}

    def label_blocks(self) -> list[list[str]]:
        """以标签表示的陪集"""
        return [[self.labels[x] for x in block] for block in self.blocks]
