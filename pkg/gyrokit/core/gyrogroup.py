"""
-*- coding: utf-8 -*-
@FileName: gyrogroup.py
@DateTime: 2025/10/18
@Docs: 陀螺群抽象契约 (G, ⊕, ⊖, gyr, 0) 与由其导出的运算
"""

from abc import ABC, abstractmethod
from collections.abc import Sequence
from typing import Any

import numpy as np

from gyrokit.core.exceptions import InputException, NotRadialException

# 元素的具体类型由模型决定：Möbius 为 complex，Einstein 为形如 (3,) 的只读数组，有限模型为下标 int
Element = Any


class GyroModel(ABC):
    """陀螺群模型基类

    子类实现原始运算 _op/_inv/_gyr（不做定义域校验）；对外的 op/inv/gyr 等模块函数负责校验。
    模型实例不可变，可在线程间共享。
    """

    #: 模型名称（用于报告与日志）
    name: str = "gyrogroup"
    #: 相等判定容差：有限模型为 0，连续模型为正数
    tolerance: float = 0.0
    #: 是否为有限模型（有限模型的检查是穷举的）
    is_finite: bool = False
    #: 是否带有与陀螺运算相容的范数
    is_radial: bool = False

    @property
    @abstractmethod
    def identity(self) -> Element:
        """单位元 0"""

    @abstractmethod
    def coerce(self, a: Any) -> Element:
        """把输入转换为规范元素

        Raises:
            DomainViolationException: 输入不在定义域内
        """

    @abstractmethod
    def _op(self, a: Element, b: Element) -> Element:
        """原始运算 a⊕b"""

    @abstractmethod
    def _inv(self, a: Element) -> Element:
        """原始逆元 ⊖a"""

    def _gyr(self, a: Element, b: Element, z: Element) -> Element:
        """原始陀螺旋转 gyr[a,b]z，默认由陀螺子恒等式导出"""
        return self._op(self._inv(self._op(a, b)), self._op(a, self._op(b, z)))

    @abstractmethod
    def distance(self, a: Element, b: Element) -> float:
        """两元素之间的数值差（用于违反量），有限模型为 0/1"""

    @abstractmethod
    def sample(self, rng: np.random.Generator, bound: float | None = None) -> Element:
        """随机采样一个元素

        Args:
            rng: numpy 随机数生成器
            bound: 范数上界（连续模型），为空时使用配置的采样上界
        """

    def contains(self, a: Any) -> bool:
        """判断输入是否在定义域内"""
        try:
            self.coerce(a)
        except InputException:
            return False
        return True

    def norm(self, a: Element) -> float:
        """元素范数（径向模型）"""
        raise NotRadialException(self.name)

    def elements(self) -> Sequence[Element]:
        """全部元素（仅有限模型）"""
        raise InputException(f"模型 {self.name} 不是有限模型，无法枚举元素")

    def equal(self, a: Element, b: Element) -> bool:
        """容差意义下的相等"""
        return self.distance(a, b) <= self.tolerance

    def format(self, a: Element) -> str:
        """元素的字符串表示"""
        return repr(a)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(name={self.name!r}, tolerance={self.tolerance})"


def op(m: GyroModel, a: Any, b: Any) -> Element:
    """二元运算 a⊕b

    Raises:
        DomainViolationException: 输入不在定义域内
    """
    return m._op(m.coerce(a), m.coerce(b))


def inv(m: GyroModel, a: Any) -> Element:
    """逆元 ⊖a，满足 ⊖a⊕a = 0 = a⊕(⊖a)"""
    return m._inv(m.coerce(a))


def gyr(m: GyroModel, a: Any, b: Any, z: Any) -> Element:
    """陀螺旋转 gyr[a,b]z：连续模型用闭式，有限模型用陀螺子恒等式"""
    return m._gyr(m.coerce(a), m.coerce(b), m.coerce(z))


def derived_gyr(m: GyroModel, a: Any, b: Any, z: Any) -> Element:
    """只用 ⊕ 与 ⊖ 计算 gyr[a,b]z = ⊖(a⊕b)⊕(a⊕(b⊕z))"""
    a, b, z = m.coerce(a), m.coerce(b), m.coerce(z)
    return m._op(m._inv(m._op(a, b)), m._op(a, m._op(b, z)))


def left_difference(m: GyroModel, x: Any, y: Any) -> Element:
    """左差 ⊖x⊕y（度量 ϱ_N(x, y) = N(⊖x⊕y) 的自变量）"""
    return m._op(m._inv(m.coerce(x)), m.coerce(y))


def q_map(m: GyroModel, x: Any, y: Any) -> Element:
    """差映射 q(x, y) = x⊕(⊖y)"""
    return m._op(m.coerce(x), m._inv(m.coerce(y)))
