"""
-*- coding: utf-8 -*-
@FileName: test_config.py
@DateTime: 2025/10/18
@Docs: 配置校验的测试
"""

import pytest
from pydantic import ValidationError

from gyrokit.core.config import Settings, get_settings, settings


@pytest.mark.parametrize(("value", "expected"), [("1", True), ("", False), ("  ", False), (True, True)])
def test_no_color(value, expected):
    assert Settings(NO_COLOR=value).NO_COLOR is expected


@pytest.mark.parametrize("tol", [0.0, -1e-9])
def test_tolerance_must_be_positive(tol):
    with pytest.raises(ValidationError):
        Settings(DEFAULT_TOLERANCE=tol)


@pytest.mark.parametrize("field", ["SAMPLE_NORM_BOUND", "BOUNDARY_MARGIN"])
def test_unit_interval(field):
    with pytest.raises(ValidationError):
        Settings(**{field: 1.0})


def test_domain_bound():
    assert Settings(BOUNDARY_MARGIN=1e-6).domain_bound == pytest.approx(1 - 1e-6)


def test_singleton():
    assert get_settings() is settings
    assert settings.MAX_DYADIC_DEPTH <= settings.MAX_CHAIN_DEPTH
