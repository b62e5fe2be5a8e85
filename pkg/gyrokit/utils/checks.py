"""
-*- coding: utf-8 -*-
@FileName: checks.py
@DateTime: 2025/10/18
@Docs: 违反量累计器 - 把逐个样本的违反量汇总成检查报告
"""

import math
from collections.abc import Callable, Iterable
from typing import Any

import numpy as np

from gyrokit.core.config import settings
from gyrokit.schemas.report import CheckReport, Witness


class ViolationTracker:
    """单个性质的违反量累计器

    违反量超过容差的样本记为见证（最多 max_witnesses 个）。
    """

    def __init__(self, name: str, tolerance: float, max_witnesses: int | None = None):
        self.name = name
        self.tolerance = tolerance
        self.max_witnesses = max_witnesses or settings.MAX_WITNESSES
        self.samples = 0
        self.max_violation = 0.0
        self.witnesses: list[Witness] = []

    def record(self, violation: float, inputs: Iterable[Any], fmt: Callable[[Any], str] = str) -> None:
        """记录一个样本

        Args:
            violation: 违反量（非负；NaN 视为无穷大）
            inputs: 输入元组，只在成为见证时格式化
            fmt: 元素格式化函数
        """
        if math.isnan(violation):
            violation = math.inf
        violation = max(violation, 0.0)
        self.samples += 1
        if violation > self.max_violation:
            self.max_violation = violation
        if violation > self.tolerance and len(self.witnesses) < self.max_witnesses:
            self.witnesses.append(Witness(check=self.name, inputs=[fmt(x) for x in inputs], violation=violation))

    def record_array(self, violations: np.ndarray, describe: Callable[[int], list[str]]) -> None:
        """批量记录一组违反量，describe(i) 给出第 i 个样本的输入描述"""
        values = np.asarray(violations, dtype=np.float64)
        values = np.maximum(np.where(np.isnan(values), np.inf, values), 0.0)
        if values.size == 0:
            return
        self.samples += int(values.size)
        self.max_violation = max(self.max_violation, float(values.max()))
        room = self.max_witnesses - len(self.witnesses)
        for index in np.flatnonzero(values > self.tolerance)[: max(room, 0)]:
            i = int(index)
            self.witnesses.append(Witness(check=self.name, inputs=describe(i), violation=float(values[i])))

    def merge(self, other: "ViolationTracker") -> "ViolationTracker":
        """按顺序合并另一个分片的累计结果"""
        self.samples += other.samples
        self.max_violation = max(self.max_violation, other.max_violation)
        room = self.max_witnesses - len(self.witnesses)
        if room > 0:
            self.witnesses.extend(other.witnesses[:room])
        return self

    @property
    def passed(self) -> bool:
        return self.max_violation <= self.tolerance

    def report(self, seed: int | None = None) -> CheckReport:
        """生成检查报告"""
        return CheckReport(
            name=self.name,
            passed=self.passed,
            samples=self.samples,
            seed=seed,
            tolerance=self.tolerance,
            max_violation=self.max_violation,
            witnesses=list(self.witnesses),
        )


def merge_trackers(trackers: list[ViolationTracker]) -> ViolationTracker:
    """按分片顺序合并累计器"""
    head, *rest = trackers
    for tracker in rest:
        head.merge(tracker)
    return head
