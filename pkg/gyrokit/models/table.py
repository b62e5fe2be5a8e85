"""
-*- coding: utf-8 -*-
@FileName: table.py
@DateTime: 2025/10/18
@Docs: Cayley表驱动的有限陀螺群与群适配器

表文件只保存运算表，陀螺旋转一律由陀螺子恒等式导出。
"""

import itertools
from pathlib import Path
from typing import Any

import numpy as np
from pydantic import ValidationError

from gyrokit.core.exceptions import (
    DomainViolationException,
    NotAssociativeException,
    TableFormatException,
    TableInvalidException,
)
from gyrokit.core.gyrogroup import GyroModel
from gyrokit.schemas.report import CheckReport
from gyrokit.schemas.table import CayleyTable
from gyrokit.services.axioms import (
    AUTOMORPHISM_LAW,
    GYRATION_BIJECTION,
    LEFT_GYROASSOCIATIVE_LAW,
    LEFT_LOOP_PROPERTY,
    run_properties,
)
from gyrokit.utils.checks import ViolationTracker
from gyrokit.utils.logger import logger


def _unique_left_inverses(table: CayleyTable) -> tuple[int | None, ...]:
    """每个 a 的唯一左逆 b（b⊕a = 0），不存在或不唯一时为 None"""
    n, e = table.order, table.identity
    inverses: list[int | None] = []
    for a in range(n):
        candidates = [b for b in range(n) if table.op[b][a] == e]
        inverses.append(candidates[0] if len(candidates) == 1 else None)
    return tuple(inverses)


class TableGyroModel(GyroModel):
    """Cayley表模型

    范数取离散范数：‖0‖ = 0，其余为 1（邻域链 {G, {0}}），陀螺旋转保持它不变。
    """

    name = "table"
    tolerance = 0.0
    is_finite = True
    is_radial = True

    def __init__(self, table: CayleyTable, name: str | None = None):
        self.table = table
        self.name = name or type(self).name
        self._rows = tuple(tuple(row) for row in table.op)
        self._inverses = _unique_left_inverses(table)
        self._elements = tuple(range(table.order))

    @property
    def identity(self) -> int:
        return self.table.identity

    @property
    def order(self) -> int:
        return self.table.order

    def coerce(self, a: Any) -> int:
        if isinstance(a, bool) or not isinstance(a, int | np.integer):
            raise DomainViolationException(self.name, repr(a), message="元素必须是下标")
        index = int(a)
        if not 0 <= index < self.table.order:
            raise DomainViolationException(self.name, repr(a))
        return index

    def _op(self, a: int, b: int) -> int:
        return self._rows[a][b]

    def _inv(self, a: int) -> int:
        inverse = self._inverses[a]
        if inverse is None:
            raise TableInvalidException("G2_inverse", [self.format(a)], message="元素没有唯一逆元")
        return inverse

    def distance(self, a: int, b: int) -> float:
        return 0.0 if a == b else 1.0

    def norm(self, a: int) -> float:
        return 0.0 if a == self.table.identity else 1.0

    def sample(self, rng: np.random.Generator, bound: float | None = None) -> int:
        # 离散范数下半径不超过 1 的球只含单位元
        if bound is not None and bound < 1.0:
            return self.table.identity
        return int(rng.integers(self.table.order))

    def elements(self) -> tuple[int, ...]:
        return self._elements

    def format(self, a: int) -> str:
        return self.table.elements[a]

    def index_of(self, label: str) -> int:
        return self.table.index_of(label)


class GroupAdapter(TableGyroModel):
    """群作为陀螺群：所有 gyr[a,b] 都是恒等映射"""

    name = "group"

    def _gyr(self, a: int, b: int, z: int) -> int:
        return z


def load_table(path: str | Path) -> CayleyTable:
    """读取 Cayley 表 JSON 文件

    Raises:
        TableFormatException: 文件不可读、JSON 语法错误或字段不合法（附 loc/msg/type 诊断）
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise TableFormatException(str(path), message="无法读取Cayley表文件", detail=str(e)) from e

    try:
        table = CayleyTable.model_validate_json(text)
    except ValidationError as e:
        error_details = [
            {"loc": list(error.get("loc", [])), "msg": error.get("msg", ""), "type": error.get("type", "")}
            for error in e.errors()
        ]
        logger.error(f"Cayley表验证失败: {path} - {error_details}")
        raise TableFormatException(str(path), detail=error_details) from e

    logger.debug(f"已加载Cayley表 {path}，阶数 {table.order}")
    return table


def _scan_latin(table: CayleyTable) -> CheckReport:
    tracker = ViolationTracker("latin_square", 0.0)
    n = table.order
    for i in range(n):
        tracker.record(float(n - len(set(table.op[i]))), ["row", table.elements[i]])
    for j in range(n):
        column = {table.op[i][j] for i in range(n)}
        tracker.record(float(n - len(column)), ["column", table.elements[j]])
    return tracker.report()


def _scan_identity(table: CayleyTable) -> CheckReport:
    tracker = ViolationTracker("G1_identity", 0.0)
    e = table.identity
    for a in range(table.order):
        ok = table.op[e][a] == a and table.op[a][e] == a
        tracker.record(0.0 if ok else 1.0, [table.elements[a]])
    return tracker.report()


def _scan_inverses(table: CayleyTable) -> CheckReport:
    tracker = ViolationTracker("G2_inverse", 0.0)
    e = table.identity
    inverses = _unique_left_inverses(table)
    for a, b in enumerate(inverses):
        ok = b is not None and table.op[a][b] == e
        tracker.record(0.0 if ok else 1.0, [table.elements[a]])
    return tracker.report()


def validate_table(table: CayleyTable) -> CheckReport:
    """穷举验证 Cayley 表是否构成陀螺群

    检查拉丁方性质、G1、G2；逆元齐全时再用导出的陀螺旋转检查 G3、G4、自同构律与双射性。
    报告列出所有违反的公理。
    """
    children = [_scan_latin(table), _scan_identity(table), _scan_inverses(table)]
    if children[-1].passed:
        model = TableGyroModel(table)
        derived = run_properties(
            model,
            "derived_gyration",
            (LEFT_GYROASSOCIATIVE_LAW, LEFT_LOOP_PROPERTY, AUTOMORPHISM_LAW, GYRATION_BIJECTION),
        )
        children.extend(derived.checks)
    else:
        logger.warning("Cayley表缺少唯一逆元，跳过依赖陀螺旋转的检查 (G3/G4/自同构)")

    report = CheckReport.aggregate("validate_table", children)
    if not report.passed:
        logger.warning(f"Cayley表验证未通过: {report.failed_checks()}")
    return report


def make_table_gyrogroup(table: CayleyTable, name: str | None = None) -> TableGyroModel:
    """由 Cayley 表构造有限陀螺群模型

    Raises:
        TableInvalidException: 携带第一个违反的公理与见证
    """
    report = validate_table(table)
    if not report.passed:
        first = next(child for child in report.checks if not child.passed)
        raise TableInvalidException(first.name, first.witnesses[0].inputs)
    return TableGyroModel(table, name=name)


def make_group_adapter(table: CayleyTable, name: str | None = None) -> GroupAdapter:
    """由结合的 Cayley 表构造群适配器（陀螺旋转恒等）

    Raises:
        NotAssociativeException: 携带违反结合律的三元组
        TableInvalidException: 单位元或逆元缺失
    """
    rows = table.op
    for a, b, c in itertools.product(range(table.order), repeat=3):
        if rows[a][rows[b][c]] != rows[rows[a][b]][c]:
            raise NotAssociativeException([table.elements[x] for x in (a, b, c)])

    for scan in (_scan_identity, _scan_inverses):
        report = scan(table)
        if not report.passed:
            raise TableInvalidException(report.name, report.witnesses[0].inputs)
    return GroupAdapter(table, name=name)
