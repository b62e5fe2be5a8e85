"""
-*- coding: utf-8 -*-
@FileName: test_gyrogroup.py
@DateTime: 2025/10/18
@Docs: 陀螺群契约、检查引擎与报告的测试
"""

import math

import numpy as np
import pytest
from hypothesis import given
from pydantic import ValidationError

from gyrokit.core.config import settings
from gyrokit.core.exceptions import DomainViolationException, InputException, NotRadialException
from gyrokit.core.gyrogroup import derived_gyr, gyr, inv, left_difference, op, q_map
from gyrokit.models import MobiusModel, TableGyroModel
from gyrokit.schemas.report import CheckReport, Witness
from gyrokit.services.axioms import check_axioms, check_difference_identities
from gyrokit.utils.checks import ViolationTracker, merge_trackers
from gyrokit.utils.sampling import spawn_seeds, split_samples
from tests.strategies import disk_points


class ClippedSumModel(MobiusModel):
    """把 ⊕ 换成截断的普通加法，保留 Möbius 的陀螺旋转"""

    name = "clipped"

    def _op(self, a: complex, b: complex) -> complex:
        s = a + b
        if abs(s) > 0.999:
            s *= 0.999 / abs(s)
        return s


class TestDerivedOperations:
    def test_mobius_sum(self, mobius):
        assert op(mobius, 0.5, 0.5) == pytest.approx(0.8, abs=1e-15)

    def test_inverse_and_left_difference(self, mobius):
        x = 0.3 + 0.4j
        assert inv(mobius, x) == -x
        assert left_difference(mobius, x, x) == 0
        assert q_map(mobius, x, x) == 0

    def test_domain_violation(self, mobius):
        with pytest.raises(DomainViolationException):
            op(mobius, 1.0, 0.0)
        with pytest.raises(DomainViolationException):
            op(mobius, "0.5", 0.0)
        with pytest.raises(DomainViolationException):
            inv(mobius, True)

    def test_contains(self, mobius):
        assert mobius.contains(0.5j)
        assert not mobius.contains(1 - 1e-13)
        assert not mobius.contains(complex(math.nan, 0))

    @given(disk_points, disk_points, disk_points)
    def test_gyrator_identity_mobius(self, a, b, z):
        m = MobiusModel()
        assert abs(gyr(m, a, b, z) - derived_gyr(m, a, b, z)) <= 1e-9

    def test_non_radial_model_has_no_norm(self, g8_table):
        class PlainTable(TableGyroModel):
            is_radial = False

            def norm(self, a: int) -> float:
                return super(TableGyroModel, self).norm(a)

        with pytest.raises(NotRadialException):
            PlainTable(g8_table).norm(1)


class TestAxioms:
    def test_mobius_axioms(self, mobius):
        report = check_axioms(mobius, samples=10_000, seed=7, tol=1e-9)
        assert report.passed, report.failed_checks()
        assert report.max_violation <= 1e-9
        assert report.seed == 7
        assert {child.name for child in report.checks} >= {
            "G1_identity",
            "G2_inverse",
            "G3_left_gyroassociative",
            "G4_left_loop",
            "gyr_automorphism",
            "gyrator_identity",
        }

    def test_einstein_axioms(self, einstein):
        report = check_axioms(einstein, samples=10_000, seed=7, tol=1e-9)
        assert report.passed, report.failed_checks()

    @pytest.mark.parametrize("fixture", ["z4_group", "klein4_group", "g8"])
    def test_finite_axioms_exhaustive(self, request, fixture):
        m = request.getfixturevalue(fixture)
        report = check_axioms(m)
        assert report.passed
        assert report.max_violation == 0.0
        assert report.seed is None
        assert "gyr_bijection" in {child.name for child in report.checks}

    def test_clipped_sum_fails_left_gyroassociative_law(self):
        report = check_axioms(ClippedSumModel(), samples=2_000, seed=3)
        assert not report.passed
        assert "G3_left_gyroassociative" in report.failed_checks()
        assert report.witnesses
        assert all(w.violation > 1e-9 for w in report.witnesses)

    def test_deterministic_given_seed_and_workers(self, mobius):
        first = check_axioms(mobius, samples=1_000, seed=11, workers=3)
        second = check_axioms(mobius, samples=1_000, seed=11, workers=3)
        assert first.model_dump_json() == second.model_dump_json()


class TestDifferenceIdentities:
    @pytest.mark.parametrize("fixture", ["mobius", "einstein"])
    def test_continuous(self, request, fixture):
        m = request.getfixturevalue(fixture)
        report = check_difference_identities(m, samples=10_000, seed=7, tol=1e-9)
        assert report.passed, report.failed_checks()

    @pytest.mark.parametrize("fixture", ["z4_group", "klein4_group", "g8"])
    def test_tables_exact(self, request, fixture):
        report = check_difference_identities(request.getfixturevalue(fixture))
        assert report.passed
        assert report.max_violation == 0.0


class TestViolationTracker:
    def test_nan_counts_as_infinite(self):
        tracker = ViolationTracker("p", 1e-9)
        tracker.record(math.nan, [1, 2])
        assert tracker.max_violation == math.inf
        assert not tracker.passed
        assert tracker.witnesses[0].inputs == ["1", "2"]

    def test_witness_cap(self):
        tracker = ViolationTracker("p", 0.0, max_witnesses=3)
        for i in range(10):
            tracker.record(1.0, [i])
        report = tracker.report()
        assert report.samples == 10
        assert len(report.witnesses) == 3

    def test_record_array(self):
        tracker = ViolationTracker("p", 0.5)
        tracker.record_array(np.array([0.0, 0.7, -1.0, 0.2]), lambda i: [str(i)])
        assert tracker.samples == 4
        assert tracker.max_violation == pytest.approx(0.7)
        assert [w.inputs for w in tracker.witnesses] == [["1"]]

    def test_merge_in_order(self):
        a, b = ViolationTracker("p", 0.0), ViolationTracker("p", 0.0)
        a.record(0.0, [0])
        b.record(2.0, [1])
        merged = merge_trackers([a, b])
        assert merged.samples == 2
        assert merged.max_violation == 2.0


class TestReports:
    def test_inconsistent_report_rejected(self):
        with pytest.raises(ValidationError):
            CheckReport(name="p", passed=True, samples=1, tolerance=0.0, max_violation=1.0)
        with pytest.raises(ValidationError):
            CheckReport(
                name="p",
                passed=True,
                samples=1,
                tolerance=1.0,
                max_violation=0.0,
                witnesses=[Witness(check="p", inputs=[], violation=0.0)],
            )

    def test_aggregate(self):
        ok = ViolationTracker("a", 0.0).report()
        bad = ViolationTracker("b", 0.0)
        bad.record(1.0, ["x"])
        report = CheckReport.aggregate("all", [ok, bad.report()])
        assert not report.passed
        assert report.failed_checks() == ["b"]
        assert report.witnesses[0].check == "b"

    def test_aggregate_witness_cap_follows_settings(self, monkeypatch):
        children = []
        for name in ("a", "b", "c"):
            tracker = ViolationTracker(name, 0.0, max_witnesses=6)
            for i in range(6):
                tracker.record(1.0, [str(i)])
            children.append(tracker.report())
        monkeypatch.setattr(settings, "MAX_WITNESSES", 4)
        report = CheckReport.aggregate("all", children)
        assert len(report.witnesses) == 4
        assert CheckReport.aggregate("all", children, max_witnesses=15).witnesses[-1].check == "c"

    def test_aggregate_requires_same_tolerance(self):
        with pytest.raises(ValueError):
            CheckReport.aggregate("all", [ViolationTracker("a", 0.0).report(), ViolationTracker("b", 1.0).report()])


class TestSampling:
    def test_negative_seed(self):
        with pytest.raises(InputException):
            spawn_seeds(-1, 2)

    @pytest.mark.parametrize(("samples", "workers"), [(10, 3), (2, 5), (1000, 1)])
    def test_split_samples(self, samples, workers):
        chunks = split_samples(samples, workers)
        assert sum(chunks) == samples
        assert all(chunk > 0 for chunk in chunks)
        assert max(chunks) - min(chunks) <= 1
