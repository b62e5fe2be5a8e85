"""
-*- coding: utf-8 -*-
@FileName: export.py
@DateTime: 2025/10/18
@Docs: 数值表与报告导出（CSV 用 pandas，浮点数保留 17 位有效数字）
"""

from pathlib import Path
from typing import Any

import pandas as pd

from gyrokit.core.config import settings
from gyrokit.core.exceptions import InputException
from gyrokit.schemas.base import BaseSchema
from gyrokit.utils.logger import logger

RHO_TABLE_COLUMNS = ["q", "q_value", "rho"]
METRIC_TABLE_COLUMNS = ["x", "y", "norm", "rho_N"]


def write_csv(rows: list[dict[str, Any]], path: str | Path, columns: list[str]) -> Path:
    """把行字典写成 CSV

    Args:
        rows: 数据行
        path: 输出路径（父目录不存在时创建）
        columns: 列顺序

    Returns:
        写入的文件路径

    Raises:
        InputException: 文件无法写入
    """
    path = Path(path)
    df = pd.DataFrame(rows, columns=pd.Index(columns))
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        df.to_csv(
            path,
            index=False,
            encoding="utf-8",
            float_format=f"%.{settings.CSV_SIGNIFICANT_DIGITS}g",
            lineterminator="\n",
        )
    except OSError as e:
        raise InputException(f"无法写入CSV文件: {path}", detail=str(e)) from e
    logger.debug(f"已写入 {path} ({len(df)} 行)")
    return path


def dump_json(schema: BaseSchema) -> str:
    """按字段声明顺序输出缩进 JSON（不含时间戳，重复运行逐字节一致）"""
    return schema.model_dump_json(indent=2)


def write_json(schema: BaseSchema, path: str | Path) -> Path:
    """把报告写入 JSON 文件

    Raises:
        InputException: 文件无法写入
    """
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(dump_json(schema) + "\n", encoding="utf-8")
    except OSError as e:
        raise InputException(f"无法写入报告文件: {path}", detail=str(e)) from e
    return path
