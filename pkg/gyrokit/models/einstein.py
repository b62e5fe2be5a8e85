"""
-*- coding: utf-8 -*-
@FileName: einstein.py
@DateTime: 2025/10/18
@Docs: Einstein 陀螺群 - ℝ³ 开单位球上的相对论速度合成 (c=1)
"""

import math
from typing import Any

import numpy as np

from gyrokit.core.config import settings
from gyrokit.core.exceptions import DomainViolationException
from gyrokit.core.gyrogroup import GyroModel

DIMENSION = 3


def _freeze(v: np.ndarray) -> np.ndarray:
    v.setflags(write=False)
    return v


def lorentz_factor(u: np.ndarray) -> float:
    """γ_u = 1/√(1-‖u‖²)"""
    speed = float(np.linalg.norm(u))
    return 1.0 / math.sqrt((1.0 - speed) * (1.0 + speed))


class EinsteinModel(GyroModel):
    """Einstein 速度合成模型

    u⊕v = 1/(1+u·v) · (u + v/γ_u + γ_u/(1+γ_u) (u·v) u)；陀螺旋转由陀螺子恒等式导出。
    """

    name = "einstein"
    is_radial = True

    def __init__(self, tolerance: float | None = None):
        self.tolerance = settings.DEFAULT_TOLERANCE if tolerance is None else tolerance
        self._zero = _freeze(np.zeros(DIMENSION))

    @property
    def identity(self) -> np.ndarray:
        return self._zero

    def coerce(self, a: Any) -> np.ndarray:
        if isinstance(a, np.ndarray) and not a.flags.writeable and a.dtype == np.float64 and a.shape == (DIMENSION,):
            v = a
        else:
            try:
                v = _freeze(np.array(a, dtype=np.float64))
            except (TypeError, ValueError) as e:
                raise DomainViolationException(self.name, repr(a), message="元素必须是三维实向量") from e
            if v.shape != (DIMENSION,):
                raise DomainViolationException(self.name, repr(a), message="元素必须是三维实向量")
        if not (np.all(np.isfinite(v)) and float(np.linalg.norm(v)) < settings.domain_bound):
            raise DomainViolationException(self.name, self.format(v))
        return v

    def _op(self, u: np.ndarray, v: np.ndarray) -> np.ndarray:
        uv = float(np.dot(u, v))
        gamma = lorentz_factor(u)
        w = (u + v / gamma + (gamma / (1.0 + gamma)) * uv * u) / (1.0 + uv)
        return _freeze(w)

    def _inv(self, u: np.ndarray) -> np.ndarray:
        return _freeze(-u)

    def distance(self, u: np.ndarray, v: np.ndarray) -> float:
        return float(np.linalg.norm(u - v))

    def norm(self, u: np.ndarray) -> float:
        return float(np.linalg.norm(u))

    def sample(self, rng: np.random.Generator, bound: float | None = None) -> np.ndarray:
        bound = settings.SAMPLE_NORM_BOUND if bound is None else bound
        direction = rng.normal(size=DIMENSION)
        direction /= np.linalg.norm(direction)
        # 体积均匀采样
        return _freeze(bound * rng.random() ** (1.0 / DIMENSION) * direction)

    def format(self, u: np.ndarray) -> str:
        return "(" + ", ".join(repr(float(c)) for c in u) + ")"


def make_einstein(tolerance: float | None = None) -> EinsteinModel:
    """构造三维 Einstein 陀螺群模型"""
    return EinsteinModel(tolerance)
