"""
-*- coding: utf-8 -*-
@FileName: __init__.py
@DateTime: 2025/10/18
@Docs: Schemas包导出
"""

from gyrokit.schemas.base import *  # noqa: F403
from gyrokit.schemas.cli import *  # noqa: F403
from gyrokit.schemas.partition import *  # noqa: F403
from gyrokit.schemas.report import *  # noqa: F403
from gyrokit.schemas.table import *  # noqa: F403
