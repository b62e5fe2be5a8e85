"""
-*- coding: utf-8 -*-
@FileName: neighborhood.py
@DateTime: 2025/10/18
@Docs: 单位元处对称、陀螺不变的邻域链 - 预范数构造的输入数据

径向模型里邻域 U = {x : ‖x‖ < r} 只由半径表示。Möbius 与 Einstein 的范数满足同一条
共线加法 s⊕t = (s+t)/(1+st)，因此 U_{n+1}⊕U_{n+1} ⊆ U_n 等价于 r_{n+1}⊕r_{n+1} ≤ r_n。
"""

import itertools
import math
from collections.abc import Callable
from typing import Self

import numpy as np
from pydantic import Field, model_validator

from gyrokit.core.config import settings
from gyrokit.core.exceptions import InputException
from gyrokit.core.gyrogroup import Element, GyroModel, gyr, inv, op
from gyrokit.schemas.base import FrozenSchema
from gyrokit.schemas.report import CheckReport
from gyrokit.services.axioms import Property, run_properties
from gyrokit.utils.logger import logger

# 松弛链校验 r_{n+1}⊕r_{n+1} ≤ r_n 时允许的舍入误差
CHAIN_SLACK = 1e-12


def scalar_add[T: (float, np.ndarray)](s: T, t: T) -> T:
    """半径加法 s⊕t = (s+t)/(1+st)，对 float 与 numpy 数组逐元素给出相同的舍入"""
    return (s + t) / (1.0 + s * t)


def rapidity(r: float) -> float:
    """快度 atanh r，半径加法在快度下变为普通加法"""
    return math.atanh(r)


def half_radius(r: float) -> float:
    """满足 s⊕s = r 的唯一 s ∈ (0,1)

    闭式 s = (1-√(1-r²))/r，这里用等价形式 r/(1+√(1-r²)) 避免 r→0 时的抵消误差。

    Raises:
        InputException: r 不在 (0,1) 内
    """
    if not 0 < r < 1:
        raise InputException(f"半径必须位于 (0, 1): {r}")
    return r / (1.0 + math.sqrt((1.0 - r) * (1.0 + r)))


class GyrInvariantBall(FrozenSchema):
    """范数球 U = {x : ‖x‖ < r}，在径向模型里对称且陀螺不变"""

    radius: float = Field(gt=0, lt=1, description="半径")

    def contains(self, m: GyroModel, x: Element) -> bool:
        return m.norm(m.coerce(x)) < self.radius


class NeighborhoodChain(FrozenSchema):
    """邻域链 r_0 > r_1 > … > r_depth，满足 r_{n+1}⊕r_{n+1} ≤ r_n

    build_chain 生成紧链（等号成立）；也接受显式给出的更松的半径列表。
    """

    radii: tuple[float, ...] = Field(min_length=2, description="半径序列")

    @model_validator(mode="after")
    def validate_radii(self) -> Self:
        """校验半径范围、严格递减与倍加包含"""
        for n, r in enumerate(self.radii):
            if not 0 < r < 1:
                raise ValueError(f"r_{n} = {r} 不在 (0, 1) 内")
        for n, (r, s) in enumerate(itertools.pairwise(self.radii)):
            if not s < r:
                raise ValueError(f"半径必须严格递减: r_{n} = {r}, r_{n + 1} = {s}")
            if scalar_add(s, s) > r + CHAIN_SLACK:
                raise ValueError(f"r_{n + 1}⊕r_{n + 1} = {scalar_add(s, s)} 超过 r_{n} = {r}")
        return self

    @property
    def depth(self) -> int:
        return len(self.radii) - 1

    @property
    def r0(self) -> float:
        return self.radii[0]

    def radius(self, n: int) -> float:
        return self.radii[n]

    def ball(self, n: int) -> GyrInvariantBall:
        """第 n 个邻域 U_n"""
        return GyrInvariantBall(radius=self.radii[n])


def build_chain(r0: float, depth: int) -> NeighborhoodChain:
    """构造紧邻域链 r_{n+1} = half_radius(r_n)

    Raises:
        InputException: r0 不在 (0,1) 内或 depth 不在 1..MAX_CHAIN_DEPTH 内
    """
    if not 0 < r0 < 1:
        raise InputException(f"r0 必须位于 (0, 1): {r0}")
    if not 1 <= depth <= settings.MAX_CHAIN_DEPTH:
        raise InputException(f"链深度必须位于 1..{settings.MAX_CHAIN_DEPTH}: {depth}")

    radii = [r0]
    for _ in range(depth):
        radii.append(half_radius(radii[-1]))
    logger.debug(f"邻域链: r0={r0}, depth={depth}, r_depth={radii[-1]:.3e}")
    return NeighborhoodChain(radii=tuple(radii))


def check_gyr_invariance(
    m: GyroModel,
    ball: GyrInvariantBall,
    *,
    samples: int | None = None,
    seed: int | None = None,
    tol: float | None = None,
    workers: int | None = None,
) -> CheckReport:
    """检查 gyr[x,y](U) = U：采样 x, y 与 ‖z‖ < r 的 z，验证 ‖gyr[x,y]z‖ = ‖z‖

    范数保持同时给出两个方向的包含。有限模型穷举全部三元组。
    """

    def violation(model: GyroModel, args: tuple[Element, ...]) -> float:
        x, y, z = args
        return abs(model.norm(gyr(model, x, y, z)) - model.norm(z))

    def sampler(rng: np.random.Generator) -> tuple[Element, ...]:
        return m.sample(rng), m.sample(rng), m.sample(rng, bound=ball.radius)

    return run_properties(
        m,
        "gyr_invariance",
        [Property(f"gyr_invariance(r={ball.radius!r})", 3, violation)],
        samples=samples,
        seed=seed,
        tol=tol,
        workers=workers,
        sampler=sampler,
    )


def check_ball_sum(
    m: GyroModel,
    s: float,
    t: float,
    *,
    samples: int | None = None,
    seed: int | None = None,
    tol: float = CHAIN_SLACK,
    workers: int | None = None,
) -> CheckReport:
    """检查球和闭包：‖s 球⊕t 球‖ 不超过 s⊕t（径向隶属判定的依据）"""
    bound = scalar_add(s, t)

    def violation(model: GyroModel, args: tuple[Element, ...]) -> float:
        a, b = args
        return max(0.0, model.norm(op(model, a, b)) - bound)

    def sampler(rng: np.random.Generator) -> tuple[Element, ...]:
        return m.sample(rng, bound=s), m.sample(rng, bound=t)

    return run_properties(
        m,
        "ball_sum",
        [Property(f"ball_sum(s={s!r}, t={t!r})", 2, violation)],
        samples=samples,
        seed=seed,
        tol=tol,
        workers=workers,
        sampler=sampler,
    )


def symmetrize(m: GyroModel, predicate: Callable[[Element], bool]) -> Callable[[Element], bool]:
    """S ↦ S ∪ (⊖S) 的隶属谓词"""

    def symmetric(x: Element) -> bool:
        return predicate(x) or predicate(inv(m, x))

    return symmetric
