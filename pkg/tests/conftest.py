"""
-*- coding: utf-8 -*-
@FileName: conftest.py
@DateTime: 2025/10/18
@Docs: 测试公共夹具 - 内置Cayley表与各模型实例
"""

from pathlib import Path

import hypothesis
import pytest

from gyrokit.models import (
    load_table,
    make_einstein,
    make_group_adapter,
    make_mobius,
    make_table_gyrogroup,
)

TABLES_DIR = Path(__file__).resolve().parent.parent / "tables"

hypothesis.settings.register_profile("default", deadline=None, max_examples=100)
hypothesis.settings.register_profile("fast", deadline=None, max_examples=20)
hypothesis.settings.load_profile("default")


@pytest.fixture(scope="session")
def tables_dir() -> Path:
    return TABLES_DIR


@pytest.fixture
def mobius():
    return make_mobius()


@pytest.fixture
def einstein():
    return make_einstein()


@pytest.fixture(scope="session")
def z4_table():
    return load_table(TABLES_DIR / "z4.json")


@pytest.fixture(scope="session")
def klein4_table():
    return load_table(TABLES_DIR / "klein4.json")


@pytest.fixture(scope="session")
def g8_table():
    return load_table(TABLES_DIR / "g8.json")


@pytest.fixture(scope="session")
def z4_group(z4_table):
    return make_group_adapter(z4_table, name="z4")


@pytest.fixture(scope="session")
def klein4_group(klein4_table):
    return make_group_adapter(klein4_table, name="klein4")


@pytest.fixture(scope="session")
def g8(g8_table):
    return make_table_gyrogroup(g8_table, name="g8")
