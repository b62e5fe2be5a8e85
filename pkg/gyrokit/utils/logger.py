"""
-*- coding: utf-8 -*-
@FileName: logger.py
@DateTime: 2025/10/18
@Docs: 日志配置（stdout 留给报告，日志只写 stderr 与可选的日志文件）
"""

import sys
import time
from collections.abc import Callable
from functools import wraps
from typing import Any

from loguru import logger

from gyrokit.core.config import settings

LOG_FORMAT = (
    "<green>{time:YYYY-MM-DD HH:mm:ss.SSS}</green> | "
    "<level>{level: <8}</level> | "
    "<cyan>{name}</cyan>:<cyan>{function}</cyan>:<cyan>{line}</cyan> | "
    "{extra} | <level>{message}</level>"
)

# (文件名模板, 最低级别)
FILE_SINKS = (
    ("gyrokit_{time:YYYY-MM-DD}.log", "DEBUG"),
    ("gyrokit_error_{time:YYYY-MM-DD}.log", "ERROR"),
)


def setup_logger() -> None:
    """配置日志系统：stderr 一个处理器，LOG_DIR 设置时追加按日轮转的文件处理器"""
    logger.remove()
    logger.add(sys.stderr, format=LOG_FORMAT, level=settings.LOG_LEVEL, colorize=not settings.NO_COLOR)

    if settings.LOG_DIR is None:
        return
    settings.LOG_DIR.mkdir(parents=True, exist_ok=True)
    for pattern, level in FILE_SINKS:
        logger.add(
            settings.LOG_DIR / pattern,
            format=LOG_FORMAT,
            level=level,
            rotation="00:00",
            retention="30 days",
            compression="zip",
            encoding="utf-8",
            enqueue=True,
        )


def log_function_calls(*, include_args: bool = False) -> Callable:
    """命令调用日志装饰器：记录耗时，返回值带 passed 字段时一并记录

    Args:
        include_args: 是否记录函数参数
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            bound = logger.bind(command=func.__name__)
            if include_args:
                bound = bound.bind(call_args=f"args={args}, kwargs={kwargs}")
            start = time.perf_counter()
            try:
                result = func(*args, **kwargs)
            except Exception as e:
                bound.warning(f"执行失败 ({time.perf_counter() - start:.3f}s): {e}")
                raise

            passed = getattr(result, "passed", None)
            status = "" if passed is None else (" 通过" if passed else " 未通过")
            bound.debug(f"执行完成{status} ({time.perf_counter() - start:.3f}s)")
            return result

        return wrapper

    return decorator


setup_logger()

__all__ = ["logger", "log_function_calls", "setup_logger"]
