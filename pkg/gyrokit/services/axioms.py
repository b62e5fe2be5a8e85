"""
-*- coding: utf-8 -*-
@FileName: axioms.py
@DateTime: 2025/10/18
@Docs: 公理与恒等式检查引擎 - 连续模型按种子采样，有限模型穷举
"""

import itertools
from collections.abc import Callable
from dataclasses import dataclass

import numpy as np

from gyrokit.core.config import settings
from gyrokit.core.exceptions import GyroException
from gyrokit.core.gyrogroup import Element, GyroModel, derived_gyr, gyr, inv, left_difference, op
from gyrokit.schemas.report import CheckReport
from gyrokit.utils.checks import ViolationTracker, merge_trackers
from gyrokit.utils.logger import logger
from gyrokit.utils.sampling import run_partitioned, spawn_seeds


@dataclass(frozen=True)
class Property:
    """一条逐点可检查的性质：violation(m, args) 返回非负违反量"""

    name: str
    arity: int
    violation: Callable[[GyroModel, tuple[Element, ...]], float]


def _identity_law(m: GyroModel, args: tuple[Element, ...]) -> float:
    (a,) = args
    e = m.identity
    return max(m.distance(op(m, e, a), a), m.distance(op(m, a, e), a))


def _inverse_law(m: GyroModel, args: tuple[Element, ...]) -> float:
    (a,) = args
    ia = inv(m, a)
    return max(m.distance(op(m, ia, a), m.identity), m.distance(op(m, a, ia), m.identity))


def _left_gyroassociative_law(m: GyroModel, args: tuple[Element, ...]) -> float:
    a, b, z = args
    return m.distance(op(m, a, op(m, b, z)), op(m, op(m, a, b), gyr(m, a, b, z)))


def _left_loop_property(m: GyroModel, args: tuple[Element, ...]) -> float:
    a, b, z = args
    return m.distance(gyr(m, op(m, a, b), b, z), gyr(m, a, b, z))


def _automorphism_law(m: GyroModel, args: tuple[Element, ...]) -> float:
    a, b, u, v = args
    return m.distance(gyr(m, a, b, op(m, u, v)), op(m, gyr(m, a, b, u), gyr(m, a, b, v)))


def _gyrator_identity(m: GyroModel, args: tuple[Element, ...]) -> float:
    a, b, z = args
    return m.distance(gyr(m, a, b, z), derived_gyr(m, a, b, z))


def _symmetry_identity(m: GyroModel, args: tuple[Element, ...]) -> float:
    # ⊖y⊕x = gyr[⊖y, x](⊖x⊕y)
    x, y = args
    return m.distance(left_difference(m, y, x), gyr(m, inv(m, y), x, left_difference(m, x, y)))


def _triangle_step_identity(m: GyroModel, args: tuple[Element, ...]) -> float:
    # ⊖x⊕y = (⊖x⊕z)⊕gyr[⊖x, z](⊖z⊕y)
    x, y, z = args
    rhs = op(m, left_difference(m, x, z), gyr(m, inv(m, x), z, left_difference(m, z, y)))
    return m.distance(left_difference(m, x, y), rhs)


def _inversive_symmetry(m: GyroModel, args: tuple[Element, ...]) -> float:
    # gyr[b, a] ∘ gyr[a, b] = id
    a, b, z = args
    return m.distance(gyr(m, b, a, gyr(m, a, b, z)), z)


def _left_cancellation_law(m: GyroModel, args: tuple[Element, ...]) -> float:
    a, b = args
    return m.distance(op(m, inv(m, a), op(m, a, b)), b)


def _gyration_bijection(m: GyroModel, args: tuple[Element, ...]) -> float:
    # 有限模型：gyr[a,b] 的像集大小与元素个数之差
    a, b = args
    elements = m.elements()
    return float(len(elements) - len({gyr(m, a, b, z) for z in elements}))


IDENTITY_LAW = Property("G1_identity", 1, _identity_law)
INVERSE_LAW = Property("G2_inverse", 1, _inverse_law)
LEFT_GYROASSOCIATIVE_LAW = Property("G3_left_gyroassociative", 3, _left_gyroassociative_law)
LEFT_LOOP_PROPERTY = Property("G4_left_loop", 3, _left_loop_property)
AUTOMORPHISM_LAW = Property("gyr_automorphism", 4, _automorphism_law)
GYRATOR_IDENTITY = Property("gyrator_identity", 3, _gyrator_identity)
GYRATION_BIJECTION = Property("gyr_bijection", 2, _gyration_bijection)

SYMMETRY_IDENTITY = Property("symmetry_identity", 2, _symmetry_identity)
TRIANGLE_STEP_IDENTITY = Property("triangle_step_identity", 3, _triangle_step_identity)
INVERSIVE_SYMMETRY = Property("inversive_symmetry", 3, _inversive_symmetry)
LEFT_CANCELLATION_LAW = Property("left_cancellation", 2, _left_cancellation_law)

AXIOM_PROPERTIES = (
    IDENTITY_LAW,
    INVERSE_LAW,
    LEFT_GYROASSOCIATIVE_LAW,
    LEFT_LOOP_PROPERTY,
    AUTOMORPHISM_LAW,
    GYRATOR_IDENTITY,
)
DIFFERENCE_PROPERTIES = (SYMMETRY_IDENTITY, TRIANGLE_STEP_IDENTITY, INVERSIVE_SYMMETRY, LEFT_CANCELLATION_LAW)


def _evaluate(m: GyroModel, prop: Property, tracker: ViolationTracker, args: tuple[Element, ...]) -> None:
    try:
        violation = prop.violation(m, args)
    except GyroException as e:
        # 运算本身失败（越界、缺逆元）按无穷违反量记录，不向外抛出
        logger.debug(f"{prop.name} 在 {[m.format(x) for x in args]} 上求值失败: {e.message}")
        violation = float("inf")
    tracker.record(violation, args, m.format)


def _sampled_tracker(
    m: GyroModel,
    prop: Property,
    tol: float,
    seed_seq: np.random.SeedSequence,
    samples: int,
    workers: int,
    sampler: Callable[[np.random.Generator], tuple[Element, ...]] | None = None,
) -> ViolationTracker:
    draw = sampler or (lambda rng: tuple(m.sample(rng) for _ in range(prop.arity)))

    def task(rng: np.random.Generator, count: int) -> ViolationTracker:
        tracker = ViolationTracker(prop.name, tol)
        for _ in range(count):
            _evaluate(m, prop, tracker, draw(rng))
        return tracker

    return merge_trackers(run_partitioned(seed_seq, samples, workers, task))


def _exhaustive_tracker(m: GyroModel, prop: Property, tol: float) -> ViolationTracker:
    tracker = ViolationTracker(prop.name, tol)
    for args in itertools.product(m.elements(), repeat=prop.arity):
        _evaluate(m, prop, tracker, args)
    return tracker


def run_properties(
    m: GyroModel,
    name: str,
    properties: tuple[Property, ...] | list[Property],
    *,
    samples: int | None = None,
    seed: int | None = None,
    tol: float | None = None,
    workers: int | None = None,
    sampler: Callable[[np.random.Generator], tuple[Element, ...]] | None = None,
) -> CheckReport:
    """对模型检查一组性质并汇总为一个报告

    有限模型穷举全部元组（忽略 samples/seed）；连续模型对每条性质用派生种子独立采样。

    Args:
        m: 陀螺群模型
        name: 汇总报告名称
        properties: 性质列表
        samples: 每条性质的样本数
        seed: 随机种子
        tol: 容差，默认取模型容差
        workers: 分片数
        sampler: 自定义元组采样器（默认对每个分量调用 m.sample）

    Returns:
        汇总报告，子报告与 properties 一一对应
    """
    samples = settings.DEFAULT_SAMPLES if samples is None else samples
    seed = settings.DEFAULT_SEED if seed is None else seed
    tol = m.tolerance if tol is None else tol
    workers = workers or settings.DEFAULT_WORKERS

    children = []
    if m.is_finite:
        for prop in properties:
            children.append(_exhaustive_tracker(m, prop, tol).report())
        report_seed = None
    else:
        for prop, seed_seq in zip(properties, spawn_seeds(seed, len(properties)), strict=True):
            tracker = _sampled_tracker(m, prop, tol, seed_seq, samples, workers, sampler)
            children.append(tracker.report(seed=seed))
        report_seed = seed

    report = CheckReport.aggregate(name, children, seed=report_seed)
    if report.passed:
        logger.info(f"{name} 通过: 模型 {m.name}，最大违反量 {report.max_violation:.3e}")
    else:
        logger.warning(f"{name} 未通过: 模型 {m.name}，失败性质 {report.failed_checks()}")
    return report


def check_axioms(
    m: GyroModel,
    *,
    samples: int | None = None,
    seed: int | None = None,
    tol: float | None = None,
    workers: int | None = None,
) -> CheckReport:
    """检查陀螺群公理 G1–G4、自同构律以及闭式陀螺旋转与陀螺子恒等式的一致性

    有限模型另外检查每个 gyr[a,b] 都是元素集上的双射。
    """
    properties = list(AXIOM_PROPERTIES)
    if m.is_finite:
        properties.append(GYRATION_BIJECTION)
    return run_properties(m, "axioms", properties, samples=samples, seed=seed, tol=tol, workers=workers)


def check_difference_identities(
    m: GyroModel,
    *,
    samples: int | None = None,
    seed: int | None = None,
    tol: float | None = None,
    workers: int | None = None,
) -> CheckReport:
    """检查度量证明用到的恒等式：对称恒等式、三角步恒等式、逆对称性与左消去律"""
    return run_properties(
        m, "difference_identities", DIFFERENCE_PROPERTIES, samples=samples, seed=seed, tol=tol, workers=workers
    )
