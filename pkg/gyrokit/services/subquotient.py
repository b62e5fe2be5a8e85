"""
-*- coding: utf-8 -*-
@FileName: subquotient.py
@DateTime: 2025/10/18
@Docs: 子陀螺群与 L-子陀螺群判定、左陪集划分、商映射 π 与差映射像集 q(C)

有限模型穷举检查；连续模型在候选集的有限见证集上检查（L-条件另外采样 a ∈ G）。
"""

import itertools
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from gyrokit.core.config import settings
from gyrokit.core.exceptions import GyroException, InputException, NotAPartitionException
from gyrokit.core.gyrogroup import Element, GyroModel, gyr, inv, op, q_map
from gyrokit.schemas.partition import CosetPartition
from gyrokit.schemas.report import CheckReport
from gyrokit.services.axioms import Property, run_properties
from gyrokit.utils.checks import ViolationTracker
from gyrokit.utils.logger import logger
from gyrokit.utils.sampling import spawn_seeds


@dataclass(frozen=True)
class SubgyroCandidate:
    """候选子集 H

    有限模型用下标集 members 表示；连续模型用隶属谓词 predicate 加有限见证集 witnesses 表示。
    """

    name: str = "H"
    members: frozenset[int] | None = None
    predicate: Callable[[Element], bool] | None = None
    witnesses: tuple[Element, ...] = field(default=())

    def __post_init__(self):
        if self.members is None and self.predicate is None:
            raise InputException("候选子集必须给出元素集或隶属谓词")
        if not self.elements():
            raise InputException(f"候选子集 {self.name} 不能为空")

    @classmethod
    def from_labels(cls, m: GyroModel, labels: Iterable[str], name: str = "H") -> "SubgyroCandidate":
        """由元素标签构造有限候选子集

        Raises:
            InputException: 模型不是有限模型或存在未知标签
        """
        if not m.is_finite:
            raise InputException(f"模型 {m.name} 不是有限模型，不能按标签给出子集")
        members = set()
        for label in labels:
            try:
                members.add(m.index_of(label))
            except KeyError:
                raise InputException(f"未知元素标签: {label}", detail={"label": label}) from None
        return cls(name=name, members=frozenset(members))

    @classmethod
    def from_predicate(
        cls, predicate: Callable[[Element], bool], witnesses: Sequence[Element], name: str = "H"
    ) -> "SubgyroCandidate":
        """由隶属谓词与见证集构造连续候选子集"""
        return cls(name=name, predicate=predicate, witnesses=tuple(witnesses))

    def contains(self, m: GyroModel, x: Element) -> bool:
        x = m.coerce(x)
        if self.members is not None:
            return x in self.members
        return bool(self.predicate(x))

    def elements(self) -> tuple[Element, ...]:
        """参与检查的元素：有限模型为全部成员，连续模型为见证集"""
        if self.members is not None:
            return tuple(sorted(self.members))
        return self.witnesses


def _membership_tracker(
    m: GyroModel,
    H: SubgyroCandidate,
    name: str,
    arity: int,
    image: Callable[..., Element],
) -> ViolationTracker:
    """对 H 见证集上的每个 arity 元组检查 image(*args) ∈ H"""
    tracker = ViolationTracker(name, 0.0)
    for args in itertools.product(H.elements(), repeat=arity):
        try:
            violation = 0.0 if H.contains(m, image(*args)) else 1.0
        except GyroException:
            violation = float("inf")
        tracker.record(violation, args, m.format)
    return tracker


def _subgyrogroup_children(m: GyroModel, H: SubgyroCandidate) -> list[CheckReport]:
    identity = ViolationTracker("sub_identity", 0.0)
    identity.record(0.0 if H.contains(m, m.identity) else 1.0, [m.identity], m.format)
    trackers = [
        identity,
        _membership_tracker(m, H, "sub_inverse_closure", 1, lambda a: inv(m, a)),
        _membership_tracker(m, H, "sub_op_closure", 2, lambda a, b: op(m, a, b)),
        _membership_tracker(m, H, "sub_gyration_closure", 3, lambda a, b, c: gyr(m, a, b, c)),
    ]
    return [tracker.report() for tracker in trackers]


def is_subgyrogroup(m: GyroModel, H: SubgyroCandidate) -> CheckReport:
    """检查 H 是否为子陀螺群：含单位元，对 ⊖、⊕ 封闭，且 gyr[a,b](H) ⊆ H（a, b ∈ H）"""
    report = CheckReport.aggregate(f"subgyrogroup({H.name})", _subgyrogroup_children(m, H))
    if not report.passed:
        logger.warning(f"{H.name} 不是子陀螺群: {report.failed_checks()}")
    return report


def is_L_subgyrogroup(
    m: GyroModel,
    H: SubgyroCandidate,
    *,
    samples: int | None = None,
    seed: int | None = None,
) -> CheckReport:
    """检查 H 是否为 L-子陀螺群：子陀螺群且 gyr[a,h](H) = H 对所有 a ∈ G、h ∈ H 成立

    包含 is_subgyrogroup 的全部子检查。有限模型穷举 a；连续模型采样 samples 个 a，
    反向包含用 gyr[a,h]⁻¹ = gyr[h,a] 检查。
    """
    children = _subgyrogroup_children(m, H)
    members = H.elements()

    if m.is_finite:
        candidates: Sequence[Element] = m.elements()
        report_seed = None
    else:
        samples = settings.DEFAULT_SAMPLES if samples is None else samples
        report_seed = settings.DEFAULT_SEED if seed is None else seed
        rng = np.random.default_rng(spawn_seeds(report_seed, 1)[0])
        candidates = [m.sample(rng) for _ in range(samples)]

    forward = ViolationTracker("L_gyration_forward", 0.0)
    backward = ViolationTracker("L_gyration_backward", 0.0)
    for a, h in itertools.product(candidates, members):
        for x in members:
            for tracker, (p, q) in ((forward, (a, h)), (backward, (h, a))):
                try:
                    violation = 0.0 if H.contains(m, gyr(m, p, q, x)) else 1.0
                except GyroException:
                    violation = float("inf")
                tracker.record(violation, [a, h, x], m.format)
    children.extend([forward.report(seed=report_seed), backward.report(seed=report_seed)])

    report = CheckReport.aggregate(f"L_subgyrogroup({H.name})", children, seed=report_seed)
    if report.passed:
        logger.info(f"{H.name} 是 L-子陀螺群 (模型 {m.name})")
    else:
        logger.warning(f"{H.name} 不是 L-子陀螺群: {report.failed_checks()}")
    return report


def left_cosets(m: GyroModel, H: SubgyroCandidate) -> CosetPartition:
    """计算左陪集 {x⊕H} 并验证它们划分 G 且大小一致

    每个 x 的陪集都要与已有陪集相同或不交，否则报告相交见证。

    Raises:
        InputException: 模型不是有限模型
        NotAPartitionException: 陪集相交或大小不一致
    """
    if not m.is_finite or H.members is None:
        raise InputException("左陪集只对有限模型与有限候选子集计算")
    members = H.elements()
    size = len(members)

    owner: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    representatives: list[int] = []
    for x in m.elements():
        coset = frozenset(op(m, x, h) for h in members)
        if x not in coset:
            raise NotAPartitionException([m.format(x)], message="x 不在自身的陪集 x⊕H 中，H 不含单位元")
        if len(coset) != size:
            raise NotAPartitionException(
                [m.format(x)], message="陪集大小与 H 不一致", detail={"element": m.format(x), "size": len(coset)}
            )
        hits = {owner[y] for y in coset if y in owner}
        if not hits:
            for y in coset:
                owner[y] = len(blocks)
            blocks.append(coset)
            representatives.append(x)
        elif len(hits) > 1 or blocks[hits.pop()] != coset:
            other = next(y for y in sorted(coset) if y in owner and blocks[owner[y]] != coset)
            rep = representatives[owner[other]]
            raise NotAPartitionException(
                [m.format(x), m.format(rep), m.format(other)],
                detail={
                    "coset_of": m.format(x),
                    "meets_coset_of": m.format(rep),
                    "common_element": m.format(other),
                },
            )

    partition = CosetPartition(
        labels=[m.format(a) for a in m.elements()],
        subgroup=list(members),
        representatives=representatives,
        blocks=[sorted(block) for block in blocks],
    )
    logger.debug(f"{H.name} 的左陪集: {partition.label_blocks()}")
    return partition


def quotient_map(p: CosetPartition, x: int | str) -> int:
    """商映射 π(x)：x 所在陪集的下标（x 可以是下标或标签）

    Raises:
        InputException: 元素不存在
    """
    if isinstance(x, str):
        if x not in p.labels:
            raise InputException(f"未知元素标签: {x}", detail={"label": x})
        x = p.labels.index(x)
    block = p.block_of.get(x)
    if block is None:
        raise InputException(f"元素不在划分中: {x}")
    return block


@dataclass(frozen=True)
class QImage:
    """差映射像集 q(C) = {x⊕(⊖y) : (x, y) ∈ C}"""

    elements: tuple[Element, ...]
    contains_identity: bool
    min_norm: float | None


def q_image(m: GyroModel, pairs: Iterable[tuple[Any, Any]]) -> QImage:
    """计算差映射像集并报告是否含单位元

    有限模型的像集去重；连续模型保留全部像点，单位元判定带容差。径向模型另外给出像点的最小范数。

    Raises:
        DomainViolationException: 元素不在定义域内
    """
    images = [q_map(m, x, y) for x, y in pairs]
    if m.is_finite:
        images = list(dict.fromkeys(images))
    contains_identity = any(m.equal(q, m.identity) for q in images)
    min_norm = min((m.norm(q) for q in images), default=None) if m.is_radial else None
    return QImage(elements=tuple(images), contains_identity=contains_identity, min_norm=min_norm)


def _q_diagonal(m: GyroModel, args: tuple[Element, ...]) -> float:
    (x,) = args
    return m.distance(q_map(m, x, x), m.identity)


def _q_separation(m: GyroModel, args: tuple[Element, ...]) -> float:
    # q(x,y) = 0 当且仅当 x = y
    x, y = args
    return 0.0 if m.equal(q_map(m, x, y), m.identity) == m.equal(x, y) else 1.0


Q_DIAGONAL = Property("q_diagonal", 1, _q_diagonal)
Q_SEPARATION = Property("q_separation", 2, _q_separation)


def q_separation_check(
    m: GyroModel,
    *,
    samples: int | None = None,
    seed: int | None = None,
    tol: float | None = None,
    workers: int | None = None,
) -> CheckReport:
    """检查 q(C) 含单位元当且仅当 C 与对角线相交：q(x,x) = 0，且 x ≠ y 时 q(x,y) ≠ 0"""
    return run_properties(
        m, "q_separation", (Q_DIAGONAL, Q_SEPARATION), samples=samples, seed=seed, tol=tol, workers=workers
    )
