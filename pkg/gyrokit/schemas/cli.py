"""
-*- coding: utf-8 -*-
@FileName: cli.py
@DateTime: 2025/10/18
@Docs: 命令行运行配置模式
"""

from pathlib import Path
from typing import Literal, Self

from pydantic import Field, field_validator, model_validator

from gyrokit.core.config import settings
from gyrokit.schemas.base import BaseSchema

__all__ = ["Command", "RunConfig"]

Command = Literal["verify-axioms", "validate-table", "build-metric", "sandwich", "quotient", "q-image"]

FINITE_KINDS = ("table", "group")
CONTINUOUS_MODELS = ("mobius", "einstein")


class RunConfig(BaseSchema):
    """一次命令行运行的完整配置"""

    command: Command = Field(description="子命令")
    model: str = Field(default="mobius", description="模型选择器 mobius | einstein | table:PATH | group:PATH")
    seed: int = Field(default_factory=lambda: settings.DEFAULT_SEED, ge=0, description="随机种子")
    samples: int = Field(default_factory=lambda: settings.DEFAULT_SAMPLES, ge=1, description="样本数")
    tol: float = Field(default_factory=lambda: settings.DEFAULT_TOLERANCE, gt=0, description="容差")
    workers: int = Field(default_factory=lambda: settings.DEFAULT_WORKERS, ge=1, description="并行分片数")
    out: Path | None = Field(default=None, description="报告JSON输出路径")
    csv_dir: Path | None = Field(default=None, description="CSV表输出目录")
    r0: float = Field(default=0.8, gt=0, lt=1, description="邻域链首半径")
    depth: int = Field(default=12, ge=1, description="二进族深度")
    level: int | None = Field(default=None, ge=0, description="夹逼层级，为空时检查 1..depth-1")
    sub: list[str] | None = Field(default=None, description="子集 H 的元素标签")
    pairs: list[tuple[str, str]] | None = Field(default=None, description="差映射的元素对")

    @field_validator("model")
    @classmethod
    def validate_model(cls, v: str) -> str:
        """校验模型选择器"""
        if v in CONTINUOUS_MODELS:
            return v
        kind, sep, path = v.partition(":")
        if kind not in FINITE_KINDS or not sep or not path:
            raise ValueError(f"未知模型选择器: {v}")
        return v

    @field_validator("sub", mode="before")
    @classmethod
    def split_sub(cls, v: str | list[str] | None) -> list[str] | None:
        """--sub 0,2 形式的逗号分隔标签"""
        if isinstance(v, str):
            return [label.strip() for label in v.split(",") if label.strip()]
        return v

    @field_validator("pairs", mode="before")
    @classmethod
    def split_pairs(cls, v: str | list | None) -> list | None:
        """--pairs a:b,c:d 形式的元素对"""
        if not isinstance(v, str):
            return v
        pairs = []
        for chunk in v.split(","):
            left, sep, right = chunk.partition(":")
            if not sep or not left.strip() or not right.strip():
                raise ValueError(f"元素对格式应为 a:b，实际为 {chunk!r}")
            pairs.append((left.strip(), right.strip()))
        return pairs

    @field_validator("depth")
    @classmethod
    def validate_depth(cls, v: int) -> int:
        """二进族深度不超过邻域链深度上限，超出物化层数的部分按需计算"""
        if v > settings.MAX_CHAIN_DEPTH:
            raise ValueError(f"深度不能超过 {settings.MAX_CHAIN_DEPTH}")
        return v

    @model_validator(mode="after")
    def validate_command(self) -> Self:
        """校验各子命令需要的参数"""
        if self.command in ("validate-table", "quotient") and not self.is_finite:
            raise ValueError(f"{self.command} 需要 table:PATH 或 group:PATH 模型")
        if self.command == "quotient" and not self.sub:
            raise ValueError("quotient 需要 --sub")
        if self.pairs is not None and not self.is_finite:
            raise ValueError("--pairs 只适用于有限模型")
        if self.level is not None and self.level > self.depth:
            raise ValueError(f"夹逼层级 {self.level} 超过深度 {self.depth}")
        return self

    @property
    def model_kind(self) -> str:
        return self.model.partition(":")[0]

    @property
    def model_path(self) -> Path | None:
        kind, _, path = self.model.partition(":")
        return Path(path) if kind in FINITE_KINDS else None

    @property
    def is_finite(self) -> bool:
        return self.model_kind in FINITE_KINDS
