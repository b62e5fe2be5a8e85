"""
-*- coding: utf-8 -*-
@FileName: prenorm.py
@DateTime: 2025/10/18
@Docs: 二进族 V(m/2ⁿ)、预范数 N、陀螺度量 ϱ_N 与子伪度量

径向模型里 V(q) = {x : ‖x‖ < ρ(q)}，整个族由半径表 ρ 表示：
    ρ(1) = r_0,  ρ(1/2ⁿ) = r_n,  ρ(2m/2ⁿ) = ρ(m/2ⁿ⁻¹),  ρ((2m+1)/2ⁿ) = r_n ⊕ ρ(m/2ⁿ⁻¹),  q > 1 时 V(q) = G。
预范数取网格下确界 N(x) = min{q : ‖x‖ < ρ(q)}，是理想值在 2^{-depth} 以内的上近似。
"""

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from gyrokit.core.config import settings
from gyrokit.core.exceptions import InputException, NotRadialException
from gyrokit.core.gyrogroup import Element, GyroModel, gyr, left_difference, op
from gyrokit.schemas.report import CheckReport
from gyrokit.services.axioms import Property, run_properties
from gyrokit.services.neighborhood import NeighborhoodChain, scalar_add
from gyrokit.utils.checks import ViolationTracker
from gyrokit.utils.logger import logger


def _dyadic_label(m: int, n: int) -> str:
    return "1" if n == 0 else f"{m}/{2**n}"


@dataclass(frozen=True, eq=False)
class DyadicFamily:
    """二进族的半径表

    levels[n][k] = ρ(k/2ⁿ)，k = 0..2ⁿ（ρ(0) = 0 只作为下标占位）。各层独立存储，
    audit() 据此逐条复核定义方程。只物化到 MAX_DYADIC_DEPTH 层，更深的层沿 k 的二进制位
    逐位套用递推式，得到的浮点值与物化层逐位相同。构造后只读。
    """

    chain: NeighborhoodChain
    depth: int
    levels: tuple[np.ndarray, ...]

    @property
    def scale(self) -> int:
        return 2**self.depth

    @property
    def materialized_depth(self) -> int:
        return len(self.levels) - 1

    @property
    def grid_slack(self) -> float:
        """网格截断误差 2^{-depth}"""
        return 1.0 / self.scale

    @property
    def identity_floor(self) -> float:
        """r_depth：范数低于它的元素在网格分辨率下与单位元不可区分"""
        return self.chain.radius(self.depth)

    def radius(self, m: int, n: int) -> float:
        """ρ(m/2ⁿ)，m > 2ⁿ 时为 inf（V = G）

        Raises:
            InputException: m < 1 或 n 不在 0..depth 内
        """
        if m < 1 or not 0 <= n <= self.depth:
            raise InputException(f"二进有理数超出范围: m={m}, n={n}, depth={self.depth}")
        if m > 2**n:
            return math.inf
        top = min(n, self.materialized_depth)
        value = float(self.levels[top][m >> (n - top)])
        for j in range(top + 1, n + 1):
            # 第 j 层的下标为 m >> (n - j)，奇数时 ρ = r_j ⊕ ρ(上一层)
            if (m >> (n - j)) & 1:
                value = scalar_add(self.chain.radius(j), value)
        return value

    def prenorm_of_norm(self, t: float, depth: int | None = None) -> float:
        """由范数计算预范数，可截断到较浅的网格

        在物化层上二分查找，超出物化深度的部分逐层对半细分区间。

        Args:
            t: 元素范数
            depth: 网格深度，默认使用全部深度

        Returns:
            min{k/2^depth : t < ρ(k/2^depth)}，不存在时为 1
        """
        depth = self.depth if depth is None else depth
        if t <= 0.0:
            return 0.0
        top = min(depth, self.materialized_depth)
        level = self.levels[top]
        k = int(np.searchsorted(level, t, side="right"))
        if k >= len(level):
            return 1.0

        # 不变式：ρ(lo/2^j) = value ≤ t < ρ((lo+1)/2^j)
        lo, value = k - 1, float(level[k - 1])
        for j in range(top + 1, depth + 1):
            mid = scalar_add(self.chain.radius(j), value)
            lo *= 2
            if t >= mid:
                lo += 1
                value = mid
        return (lo + 1) / 2**depth

    def rho_rows(self, max_level: int | None = None) -> list[dict[str, Any]]:
        """ρ 表：按层列出最简二进有理数 (q, q 值, ρ(q))"""
        top = min(self.depth, settings.RHO_TABLE_DEPTH if max_level is None else max_level)
        rows = [{"q": "1", "q_value": 1.0, "rho": self.radius(1, 0)}]
        for n in range(1, top + 1):
            for m in range(1, 2**n, 2):
                rows.append({"q": _dyadic_label(m, n), "q_value": m / 2**n, "rho": self.radius(m, n)})
        return rows

    def audit(self) -> CheckReport:
        """逐条复核存储的半径表

        子检查：ρ(1) = r_0、ρ(1/2ⁿ) = r_n、偶数规则、奇数规则、q > 1 为全空间、最细物化层单调。
        未物化的层只复核单位分数与 q > 1。全部要求精确相等（容差 0）。
        """
        chain = self.chain
        top = ViolationTracker("rho_top", 0.0)
        top.record(abs(float(self.levels[0][1]) - chain.r0), ["1"])

        unit = ViolationTracker("rho_unit_fractions", 0.0)
        even = ViolationTracker("rho_even_rule", 0.0)
        odd = ViolationTracker("rho_odd_rule", 0.0)
        beyond = ViolationTracker("rho_beyond_one", 0.0)
        for n in range(1, self.depth + 1):
            r_n = chain.radius(n)
            unit.record(abs(self.radius(1, n) - r_n), [_dyadic_label(1, n)])
            beyond.record(0.0 if self.radius(2**n + 1, n) == math.inf else 1.0, [_dyadic_label(2**n + 1, n)])
            if n > self.materialized_depth:
                continue
            level, parent = self.levels[n], self.levels[n - 1]
            even.record_array(
                np.abs(level[2::2] - parent[1:]),
                lambda i, n=n: [_dyadic_label(2 * (i + 1), n)],
            )
            odd.record_array(
                np.abs(level[3::2] - scalar_add(r_n, parent[1:-1])),
                lambda i, n=n: [_dyadic_label(2 * i + 3, n)],
            )

        monotone = ViolationTracker("rho_monotone", 0.0)
        finest = self.materialized_depth
        steps = np.diff(self.levels[finest][1:])
        monotone.record_array(-steps, lambda i: [_dyadic_label(i + 1, finest), _dyadic_label(i + 2, finest)])

        children = [tracker.report() for tracker in (top, unit, even, odd, beyond, monotone)]
        report = CheckReport.aggregate("dyadic_audit", children)
        logger.info(f"二进族审计 {'通过' if report.passed else '未通过'}: depth={self.depth}, 方程数 {report.samples}")
        return report


def build_dyadic_family(chain: NeighborhoodChain, depth: int) -> DyadicFamily:
    """由邻域链自底向上构造二进族，物化前 min(depth, MAX_DYADIC_DEPTH) 层

    Raises:
        InputException: depth 不在 1..chain.depth 内
    """
    if not 1 <= depth <= chain.depth:
        raise InputException(f"二进族深度 {depth} 超出邻域链深度 {chain.depth}")

    level = np.array([0.0, chain.r0])
    levels = [level]
    for n in range(1, min(depth, settings.MAX_DYADIC_DEPTH) + 1):
        r_n = chain.radius(n)
        nxt = np.empty(2**n + 1)
        nxt[0::2] = level
        nxt[1] = r_n
        nxt[3::2] = scalar_add(r_n, level[1:-1])
        nxt.setflags(write=False)
        levels.append(nxt)
        level = nxt
    levels[0].setflags(write=False)

    logger.debug(f"二进族: r0={chain.r0}, depth={depth}, 物化 {len(levels) - 1} 层")
    return DyadicFamily(chain=chain, depth=depth, levels=tuple(levels))


def _require_radial(m: GyroModel) -> None:
    if not m.is_radial:
        raise NotRadialException(m.name)


def prenorm(f: DyadicFamily, m: GyroModel, x: Any) -> float:
    """预范数 N(x) ∈ [0, 1]

    范数低于 r_depth 的元素在网格分辨率下与单位元不可区分，取 0；这个下限只由二进族决定，
    与模型的比较容差无关。

    Raises:
        DomainViolationException: x 不在定义域内
        NotRadialException: 模型没有范数
    """
    _require_radial(m)
    t = m.norm(m.coerce(x))
    if t < f.identity_floor:
        return 0.0
    return f.prenorm_of_norm(t)


def grid_prenorm(f: DyadicFamily, m: GyroModel, x: Any) -> float:
    """不取单位元下限的网格值 min{k/2^depth : ‖x‖ < ρ(k/2^depth)}，不小于理想预范数"""
    _require_radial(m)
    return f.prenorm_of_norm(m.norm(m.coerce(x)))


def gyro_metric(f: DyadicFamily, m: GyroModel, x: Any, y: Any) -> float:
    """陀螺度量 ϱ_N(x, y) = N(⊖x⊕y)"""
    return prenorm(f, m, left_difference(m, x, y))


def sub_pseudometric(f: DyadicFamily, m: GyroModel, x: Any, y: Any) -> float:
    """子伪度量 N(⊖x⊕y) + N(⊖y⊕x)

    径向模型上两项相等，结果就是 2ϱ_N。
    """
    return gyro_metric(f, m, x, y) + gyro_metric(f, m, y, x)


def sandwich_check(
    f: DyadicFamily,
    m: GyroModel,
    level: int,
    *,
    samples: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
) -> CheckReport:
    """检查夹逼包含 {N < 1/2ⁿ} ⊆ U_n ⊆ {N ≤ 2/2ⁿ + 2^{-depth}}

    样本取自半径 r_{n-1} 的球（n = 0 时取默认采样上界），使两侧边界都被覆盖。容差为 0。

    Raises:
        InputException: level 不在 0..depth 内
    """
    if not 0 <= level <= f.depth:
        raise InputException(f"夹逼层级 {level} 不在 0..{f.depth} 内")
    _require_radial(m)
    r_n = f.chain.radius(level)
    outer = 2.0 / 2**level + f.grid_slack
    bound = f.chain.radius(level - 1) if level >= 1 else None

    def inner_violation(model: GyroModel, args: tuple[Element, ...]) -> float:
        (x,) = args
        if prenorm(f, model, x) < 1.0 / 2**level:
            return max(0.0, model.norm(x) - r_n)
        return 0.0

    def outer_violation(model: GyroModel, args: tuple[Element, ...]) -> float:
        (x,) = args
        if model.norm(x) < r_n:
            return max(0.0, prenorm(f, model, x) - outer)
        return 0.0

    def sampler(rng: np.random.Generator) -> tuple[Element, ...]:
        return (m.sample(rng, bound=bound),)

    return run_properties(
        m,
        f"sandwich(n={level})",
        [
            Property(f"sandwich_inner(n={level})", 1, inner_violation),
            Property(f"sandwich_outer(n={level})", 1, outer_violation),
        ],
        samples=samples,
        seed=seed,
        tol=0.0,
        workers=workers,
        sampler=sampler,
    )


def metric_axiom_check(
    f: DyadicFamily,
    m: GyroModel,
    *,
    triples: int | None = None,
    seed: int | None = None,
    tol: float | None = None,
    workers: int | None = None,
) -> CheckReport:
    """在采样三元组上检查 ϱ_N 的度量公理

    非负性、ϱ(x,x) = 0、对称性、三角不等式（右侧取网格值，松弛 2·2^{-depth}）、网格分辨率下的不可区分性
    （ϱ ≤ 2^{-depth} ⇒ ‖⊖x⊕y‖ < r_depth）以及子伪度量不小于 ϱ_N。
    """
    _require_radial(m)
    r_depth = f.identity_floor
    slack = 2.0 * f.grid_slack

    def nonnegativity(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, y, _ = args
        return max(0.0, -gyro_metric(f, model, x, y))

    def identity(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, _, _ = args
        return gyro_metric(f, model, x, x)

    def symmetry(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, y, _ = args
        return abs(gyro_metric(f, model, x, y) - gyro_metric(f, model, y, x))

    def triangle(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, y, z = args
        legs = grid_prenorm(f, model, left_difference(model, x, z)) + grid_prenorm(
            f, model, left_difference(model, z, y)
        )
        excess = gyro_metric(f, model, x, y) - legs
        return max(0.0, excess - slack)

    def indiscernibility(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, y, _ = args
        if gyro_metric(f, model, x, y) <= f.grid_slack:
            return max(0.0, model.norm(left_difference(model, x, y)) - r_depth)
        return 0.0

    def domination(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, y, _ = args
        return max(0.0, gyro_metric(f, model, x, y) - sub_pseudometric(f, model, x, y))

    properties = [
        Property("metric_nonnegative", 3, nonnegativity),
        Property("metric_identity", 3, identity),
        Property("metric_symmetry", 3, symmetry),
        Property("metric_triangle", 3, triangle),
        Property("metric_indiscernibility", 3, indiscernibility),
        Property("sub_pseudometric_dominates", 3, domination),
    ]
    return run_properties(m, "metric_axioms", properties, samples=triples, seed=seed, tol=tol, workers=workers)


def gyration_invariance_check(
    f: DyadicFamily,
    m: GyroModel,
    *,
    samples: int | None = None,
    seed: int | None = None,
    tol: float = 0.0,
    workers: int | None = None,
) -> CheckReport:
    """检查 N(gyr[x,y]z) = N(z)

    z 取自半径 r_0 的球（球外 N 恒为 1），默认要求精确相等。
    """
    _require_radial(m)

    def violation(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, y, z = args
        return abs(prenorm(f, model, gyr(model, x, y, z)) - prenorm(f, model, z))

    def sampler(rng: np.random.Generator) -> tuple[Element, ...]:
        return m.sample(rng), m.sample(rng), m.sample(rng, bound=f.chain.r0)

    return run_properties(
        m,
        "prenorm_gyration_invariance",
        [Property("prenorm_gyration_invariance", 3, violation)],
        samples=samples,
        seed=seed,
        tol=tol,
        workers=workers,
        sampler=sampler,
    )


def subadditivity_check(
    f: DyadicFamily,
    m: GyroModel,
    *,
    samples: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
) -> CheckReport:
    """检查预范数的次可加性 N(a⊕b) ≤ N(a) + N(b) + 2^{-depth}，a, b 取自半径 r_0 的球

    右侧取不带单位元下限的网格值：a 的范数低于 r_depth 时 N(a) = 0，但理想值可接近 2^{-depth}。
    """
    _require_radial(m)

    def violation(model: GyroModel, args: tuple[Element, ...]) -> float:
        a, b = args
        lhs = prenorm(f, model, op(model, a, b))
        return max(0.0, lhs - grid_prenorm(f, model, a) - grid_prenorm(f, model, b) - f.grid_slack)

    def sampler(rng: np.random.Generator) -> tuple[Element, ...]:
        return m.sample(rng, bound=f.chain.r0), m.sample(rng, bound=f.chain.r0)

    return run_properties(
        m,
        "prenorm_subadditivity",
        [Property("prenorm_subadditivity", 2, violation)],
        samples=samples,
        seed=seed,
        tol=0.0,
        workers=workers,
        sampler=sampler,
    )


def refinement_check(
    f: DyadicFamily,
    m: GyroModel,
    coarse_depth: int,
    *,
    samples: int | None = None,
    seed: int | None = None,
    workers: int | None = None,
) -> CheckReport:
    """检查加深网格不会增大预范数：N_depth(x) ≤ N_coarse(x)

    Raises:
        InputException: coarse_depth 不在 1..depth 内
    """
    if not 1 <= coarse_depth <= f.depth:
        raise InputException(f"粗网格深度 {coarse_depth} 不在 1..{f.depth} 内")
    _require_radial(m)

    def violation(model: GyroModel, args: tuple[Element, ...]) -> float:
        (x,) = args
        t = model.norm(x)
        return max(0.0, f.prenorm_of_norm(t) - f.prenorm_of_norm(t, depth=coarse_depth))

    def sampler(rng: np.random.Generator) -> tuple[Element, ...]:
        return (m.sample(rng, bound=f.chain.r0),)

    return run_properties(
        m,
        f"prenorm_refinement({coarse_depth}->{f.depth})",
        [Property("prenorm_refinement", 1, violation)],
        samples=samples,
        seed=seed,
        tol=0.0,
        workers=workers,
        sampler=sampler,
    )


@dataclass(frozen=True, eq=False)
class MetricBall:
    """度量球 B_N(ε) = {x : N(x) < ε}"""

    family: DyadicFamily
    model: GyroModel
    eps: float

    def contains(self, x: Any) -> bool:
        return prenorm(self.family, self.model, x) < self.eps

    def __call__(self, x: Any) -> bool:
        return self.contains(x)

    def equivalent_radius(self) -> float:
        """与度量球相同的范数球半径：r_depth 表示最细邻域 U_depth，inf 表示整个定义域"""
        if self.eps > 1.0:
            return math.inf
        k = math.ceil(self.eps * self.family.scale) - 1
        if k <= 0:
            return self.family.identity_floor
        return self.family.radius(k, self.family.depth)


def metric_ball(f: DyadicFamily, m: GyroModel, eps: float) -> MetricBall:
    """度量球 B_N(ε) 的隶属谓词

    Raises:
        InputException: eps <= 0
    """
    if not eps > 0:
        raise InputException(f"度量球半径必须为正数: {eps}")
    _require_radial(m)
    return MetricBall(family=f, model=m, eps=eps)


def metric_table(f: DyadicFamily, m: GyroModel, pairs: list[tuple[Element, Element]]) -> list[dict[str, Any]]:
    """成对列出 ϱ_N(x, y) 与 ‖⊖x⊕y‖"""
    rows = []
    for x, y in pairs:
        rows.append(
            {
                "x": m.format(m.coerce(x)),
                "y": m.format(m.coerce(y)),
                "norm": m.norm(left_difference(m, x, y)),
                "rho_N": gyro_metric(f, m, x, y),
            }
        )
    return rows
