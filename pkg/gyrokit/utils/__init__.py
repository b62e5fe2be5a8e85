"""
-*- coding: utf-8 -*-
@FileName: __init__.py
@DateTime: 2025/10/18
@Docs: 实用程序模块
"""

from .logger import log_function_calls, logger

__all__ = ["logger", "log_function_calls"]
