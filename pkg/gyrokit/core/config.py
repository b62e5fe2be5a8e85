"""
-*- coding: utf-8 -*-
@FileName: config.py
@DateTime: 2025/10/18
@Docs: 应用程序配置管理
"""

from functools import lru_cache
from pathlib import Path

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from gyrokit import __version__


class Settings(BaseSettings):
    """应用程序配置类"""

    # 模型配置
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,  # 环境变量区分大小写
        extra="ignore",  # 忽略额外字段
    )

    # 应用配置
    APP_NAME: str = Field(default="gyrokit")
    APP_VERSION: str = Field(default=__version__)

    # 项目根目录
    BASE_DIR: Path = Path(__file__).parent.parent.parent

    # 日志配置
    LOG_LEVEL: str = Field(default="INFO")
    LOG_DIR: Path | None = Field(default=None, description="日志文件目录，为空时只输出到stderr")
    NO_COLOR: bool = Field(default=False, description="非空即关闭彩色输出")

    # 检查引擎默认值
    DEFAULT_SEED: int = Field(default=7)
    DEFAULT_SAMPLES: int = Field(default=10000, ge=1)
    DEFAULT_TOLERANCE: float = Field(default=1e-9)
    DEFAULT_WORKERS: int = Field(default=1)
    MAX_WITNESSES: int = Field(default=10, ge=1)

    # 连续模型的采样与定义域
    SAMPLE_NORM_BOUND: float = Field(default=0.99, description="采样点范数上界")
    BOUNDARY_MARGIN: float = Field(default=1e-12, description="范数 >= 1 - margin 视为越界")

    # 邻域链与二进族
    MAX_CHAIN_DEPTH: int = Field(default=48)
    MAX_DYADIC_DEPTH: int = Field(default=20, description="二进族物化的层数，更深的层按需计算")
    RHO_TABLE_DEPTH: int = Field(default=12)

    # 导出配置
    CSV_SIGNIFICANT_DIGITS: int = Field(default=17, ge=1, le=17)

    @field_validator("NO_COLOR", mode="before")
    @classmethod
    def assemble_no_color(cls, v: str | bool | None) -> bool:
        """NO_COLOR 约定：只要设置了非空值就关闭颜色"""
        if isinstance(v, bool):
            return v
        return bool(v and str(v).strip())

    @field_validator("DEFAULT_TOLERANCE")
    @classmethod
    def validate_tolerance(cls, v: float) -> float:
        """验证容差为正数"""
        if v <= 0:
            raise ValueError("容差必须为正数")
        return v

    @field_validator("SAMPLE_NORM_BOUND", "BOUNDARY_MARGIN")
    @classmethod
    def validate_unit_interval(cls, v: float) -> float:
        """验证取值位于 (0, 1)"""
        if not 0 < v < 1:
            raise ValueError("取值必须位于开区间 (0, 1)")
        return v

    @field_validator("DEFAULT_WORKERS", "MAX_CHAIN_DEPTH", "MAX_DYADIC_DEPTH", "RHO_TABLE_DEPTH")
    @classmethod
    def validate_positive(cls, v: int) -> int:
        """验证正整数配置"""
        if v < 1:
            raise ValueError("配置值必须为正整数")
        return v

    @property
    def domain_bound(self) -> float:
        """连续模型可接受的最大范数（不含）"""
        return 1.0 - self.BOUNDARY_MARGIN


@lru_cache
def get_settings() -> Settings:
    """
    获取应用配置的单例实例

    使用 lru_cache 确保配置只从环境变量或 .env 文件加载一次。
    """
    return Settings()


# 创建全局设置实例
settings = get_settings()
