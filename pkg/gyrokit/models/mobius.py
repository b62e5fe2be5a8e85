"""
-*- coding: utf-8 -*-
@FileName: mobius.py
@DateTime: 2025/10/18
@Docs: Möbius 陀螺群 - 复开单位圆盘，a⊕b = (a+b)/(1+āb)
"""

import cmath
import math
import numbers
from typing import Any

import numpy as np

from gyrokit.core.config import settings
from gyrokit.core.exceptions import DomainViolationException
from gyrokit.core.gyrogroup import GyroModel


def gyration_factor(a: complex, b: complex) -> complex:
    """gyr[a,b] 的旋转因子 (1+ab̄)/(1+āb)，模为 1"""
    return (1 + a * b.conjugate()) / (1 + a.conjugate() * b)


class MobiusModel(GyroModel):
    """Möbius 圆盘模型，陀螺旋转是绕原点的旋转"""

    name = "mobius"
    is_radial = True

    def __init__(self, tolerance: float | None = None):
        self.tolerance = settings.DEFAULT_TOLERANCE if tolerance is None else tolerance

    @property
    def identity(self) -> complex:
        return 0j

    def coerce(self, a: Any) -> complex:
        if isinstance(a, bool) or not isinstance(a, numbers.Number):
            raise DomainViolationException(self.name, repr(a), message="元素必须是复数")
        z = complex(a)
        if not (cmath.isfinite(z) and abs(z) < settings.domain_bound):
            raise DomainViolationException(self.name, repr(z))
        return z

    def _op(self, a: complex, b: complex) -> complex:
        return (a + b) / (1 + a.conjugate() * b)

    def _inv(self, a: complex) -> complex:
        return -a

    def _gyr(self, a: complex, b: complex, z: complex) -> complex:
        return gyration_factor(a, b) * z

    def distance(self, a: complex, b: complex) -> float:
        return abs(a - b)

    def norm(self, a: complex) -> float:
        return abs(a)

    def sample(self, rng: np.random.Generator, bound: float | None = None) -> complex:
        bound = settings.SAMPLE_NORM_BOUND if bound is None else bound
        # 面积均匀采样
        radius = bound * math.sqrt(rng.random())
        return cmath.rect(radius, 2 * math.pi * rng.random())


def make_mobius(tolerance: float | None = None) -> MobiusModel:
    """构造 Möbius 陀螺群模型"""
    return MobiusModel(tolerance)
