"""
-*- coding: utf-8 -*-
@FileName: report.py
@DateTime: 2025/10/18
@Docs: 性质检查报告模式
"""

from typing import Any, Self

from pydantic import Field, model_validator

from gyrokit.core.config import settings
from gyrokit.schemas.base import BaseSchema

__all__ = ["Witness", "CheckReport", "RunReport"]


class Witness(BaseSchema):
    """反例见证"""

    check: str = Field(description="违反的性质")
    inputs: list[str] = Field(default_factory=list, description="输入元组")
    violation: float = Field(ge=0, description="违反量")


class CheckReport(BaseSchema):
    """性质检查报告

    passed 与 max_violation <= tolerance 等价；witnesses 非空当且仅当未通过。
    """

    name: str = Field(description="性质名称")
    passed: bool = Field(description="是否通过")
    samples: int = Field(ge=0, description="检查的元组数")
    seed: int | None = Field(default=None, description="随机种子，穷举检查为空")
    tolerance: float = Field(ge=0, description="容差")
    max_violation: float = Field(ge=0, description="最大违反量")
    witnesses: list[Witness] = Field(default_factory=list, description="反例见证")
    checks: list["CheckReport"] = Field(default_factory=list, description="子性质报告")

    @model_validator(mode="after")
    def validate_consistency(self) -> Self:
        """校验通过标志、最大违反量与见证列表的一致性"""
        if self.passed != (self.max_violation <= self.tolerance):
            raise ValueError(f"{self.name}: passed 与 max_violation/tolerance 不一致")
        if self.passed == bool(self.witnesses):
            raise ValueError(f"{self.name}: 见证列表与通过标志不一致")
        return self

    @classmethod
    def aggregate(
        cls,
        name: str,
        children: list["CheckReport"],
        *,
        seed: int | None = None,
        max_witnesses: int | None = None,
    ) -> "CheckReport":
        """把同一容差下的子报告汇总为一个报告

        Args:
            name: 汇总报告名称
            children: 子报告（容差必须一致）
            seed: 随机种子
            max_witnesses: 汇总见证上限，默认 MAX_WITNESSES

        Returns:
            汇总报告
        """
        if not children:
            return cls(name=name, passed=True, samples=0, seed=seed, tolerance=0.0, max_violation=0.0)
        tolerances = {child.tolerance for child in children}
        if len(tolerances) != 1:
            raise ValueError(f"{name}: 子报告容差不一致 {sorted(tolerances)}")

        max_witnesses = settings.MAX_WITNESSES if max_witnesses is None else max_witnesses
        witnesses: list[Witness] = []
        for child in children:
            if not child.passed and len(witnesses) < max_witnesses:
                witnesses.extend(child.witnesses[: max_witnesses - len(witnesses)])
        return cls(
            name=name,
            passed=all(child.passed for child in children),
            samples=sum(child.samples for child in children),
            seed=seed,
            tolerance=tolerances.pop(),
            max_violation=max(child.max_violation for child in children),
            witnesses=witnesses,
            checks=children,
        )

    def failed_checks(self) -> list[str]:
        """列出所有未通过的叶子性质"""
        if not self.checks:
            return [] if self.passed else [self.name]
        return [name for child in self.checks for name in child.failed_checks()]


class RunReport(BaseSchema):
    """命令行运行报告"""

    tool: str = Field(description="工具名称")
    version: str = Field(description="工具版本")
    command: str = Field(description="命令")
    model: str = Field(description="模型选择器")
    seed: int = Field(description="随机种子")
    samples: int = Field(description="样本数")
    tolerance: float = Field(description="容差")
    workers: int = Field(description="并行分片数")
    passed: bool = Field(description="全部检查是否通过")
    checks: list[CheckReport] = Field(default_factory=list, description="检查报告")
    artifacts: dict[str, str] = Field(default_factory=dict, description="生成的文件")
    result: dict[str, Any] | None = Field(default=None, description="命令结果（划分、像集等）")
