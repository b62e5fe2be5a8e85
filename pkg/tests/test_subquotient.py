"""
-*- coding: utf-8 -*-
@FileName: test_subquotient.py
@DateTime: 2025/10/18
@Docs: 子陀螺群、左陪集划分、商映射与差映射像集的测试
"""

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gyrokit.core.exceptions import InputException, NotAPartitionException
from gyrokit.core.gyrogroup import op
from gyrokit.services.subquotient import (
    SubgyroCandidate,
    is_L_subgyrogroup,
    is_subgyrogroup,
    left_cosets,
    q_image,
    q_separation_check,
    quotient_map,
)


def subsets_with_identity(n: int):
    rest = range(1, n)
    for k in range(n):
        for chosen in itertools.combinations(rest, k):
            yield frozenset((0, *chosen))


g8_pairs = st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=12)


class TestCandidate:
    def test_from_labels(self, g8):
        H = SubgyroCandidate.from_labels(g8, ["0", "4"])
        assert H.elements() == (0, 4)
        assert H.contains(g8, 4)
        assert not H.contains(g8, 5)

    def test_unknown_label(self, g8):
        with pytest.raises(InputException) as exc_info:
            SubgyroCandidate.from_labels(g8, ["0", "9"])
        assert exc_info.value.exit_code == 2

    def test_labels_need_finite_model(self, mobius):
        with pytest.raises(InputException):
            SubgyroCandidate.from_labels(mobius, ["0"])

    def test_empty(self):
        with pytest.raises(InputException):
            SubgyroCandidate(members=frozenset())
        with pytest.raises(InputException):
            SubgyroCandidate()


class TestZ4:
    def test_subgroup_cosets(self, z4_group):
        H = SubgyroCandidate.from_labels(z4_group, ["0", "2"])
        assert is_subgyrogroup(z4_group, H).passed
        assert is_L_subgyrogroup(z4_group, H).passed
        partition = left_cosets(z4_group, H)
        assert partition.blocks == [[0, 2], [1, 3]]
        assert partition.representatives == [0, 1]
        assert quotient_map(partition, "3") == quotient_map(partition, 1) == 1
        assert quotient_map(partition, 2) == 0

    def test_whole_group_and_trivial(self, z4_group):
        whole = left_cosets(z4_group, SubgyroCandidate(members=frozenset(range(4))))
        assert whole.blocks == [[0, 1, 2, 3]]
        trivial = left_cosets(z4_group, SubgyroCandidate(members=frozenset({0})))
        assert trivial.blocks == [[0], [1], [2], [3]]

    def test_not_a_subgroup(self, z4_group):
        H = SubgyroCandidate(members=frozenset({0, 1}))
        report = is_subgyrogroup(z4_group, H)
        assert not report.passed
        assert "sub_op_closure" in report.failed_checks()
        assert not is_L_subgyrogroup(z4_group, H).passed
        with pytest.raises(NotAPartitionException) as exc_info:
            left_cosets(z4_group, H)
        assert exc_info.value.exit_code == 1
        assert len(exc_info.value.witness) == 3

    def test_missing_identity(self, z4_group):
        H = SubgyroCandidate(members=frozenset({1, 3}))
        assert "sub_identity" in is_subgyrogroup(z4_group, H).failed_checks()
        with pytest.raises(NotAPartitionException):
            left_cosets(z4_group, H)

    def test_quotient_map_errors(self, z4_group):
        partition = left_cosets(z4_group, SubgyroCandidate(members=frozenset({0, 2})))
        with pytest.raises(InputException):
            quotient_map(partition, "9")
        with pytest.raises(InputException):
            quotient_map(partition, 7)


class TestG8:
    @pytest.mark.parametrize(
        ("members", "blocks"),
        [
            ({0, 1}, [[0, 1], [2, 3], [4, 5], [6, 7]]),
            ({0, 4}, [[0, 4], [1, 5], [2, 6], [3, 7]]),
            ({0, 1, 2, 3}, [[0, 1, 2, 3], [4, 5, 6, 7]]),
        ],
    )
    def test_L_subgyrogroups(self, g8, members, blocks):
        H = SubgyroCandidate(members=frozenset(members))
        report = is_L_subgyrogroup(g8, H)
        assert report.passed, report.failed_checks()
        assert report.seed is None
        assert left_cosets(g8, H).blocks == blocks

    def test_subgyrogroup_that_is_not_L(self, g8):
        H = SubgyroCandidate(members=frozenset({0, 2}))
        assert is_subgyrogroup(g8, H).passed
        report = is_L_subgyrogroup(g8, H)
        assert not report.passed
        assert "L_gyration_forward" in report.failed_checks()
        with pytest.raises(NotAPartitionException) as exc_info:
            left_cosets(g8, H)
        assert exc_info.value.exit_code == 1

    def test_overlapping_cosets_are_reported(self, g8):
        with pytest.raises(NotAPartitionException) as exc_info:
            left_cosets(g8, SubgyroCandidate(members=frozenset({0, 2})))
        detail = exc_info.value.detail
        assert detail["coset_of"] == "6"
        assert detail["meets_coset_of"] == "5"
        assert detail["common_element"] == "5"

    @pytest.mark.parametrize(("fixture", "size"), [("z4_group", 4), ("klein4_group", 4), ("g8", 8)])
    def test_every_L_subgyrogroup_partitions(self, request, fixture, size):
        m = request.getfixturevalue(fixture)
        found = 0
        for members in subsets_with_identity(size):
            H = SubgyroCandidate(members=members)
            if not is_L_subgyrogroup(m, H).passed:
                continue
            found += 1
            assert is_subgyrogroup(m, H).passed
            partition = left_cosets(m, H)
            assert all(len(block) == len(members) for block in partition.blocks)
            for x, h in itertools.product(m.elements(), members):
                assert quotient_map(partition, op(m, x, h)) == quotient_map(partition, x)
        assert found >= 2

    @pytest.mark.parametrize("fixture", ["z4_group", "klein4_group"])
    def test_group_subgroups_are_L(self, request, fixture):
        m = request.getfixturevalue(fixture)
        for members in subsets_with_identity(4):
            H = SubgyroCandidate(members=members)
            assert is_subgyrogroup(m, H).passed == is_L_subgyrogroup(m, H).passed


class TestContinuous:
    def real_axis(self):
        return SubgyroCandidate.from_predicate(
            lambda z: abs(z.imag) <= 1e-12, [-0.5, -0.2, 0.0, 0.3, 0.6], name="real_axis"
        )

    def test_real_axis_is_subgyrogroup(self, mobius):
        assert is_subgyrogroup(mobius, self.real_axis()).passed

    def test_real_axis_is_not_L(self, mobius):
        report = is_L_subgyrogroup(mobius, self.real_axis(), samples=50, seed=7)
        assert not report.passed
        assert report.seed == 7

    def test_small_disk_not_closed(self, mobius):
        H = SubgyroCandidate.from_predicate(lambda z: abs(z) < 0.5, [0.0, 0.4, 0.4j])
        assert "sub_op_closure" in is_subgyrogroup(mobius, H).failed_checks()

    def test_cosets_need_finite_model(self, mobius):
        with pytest.raises(InputException):
            left_cosets(mobius, self.real_axis())


class TestQImage:
    def test_g8_pairs(self, g8):
        image = q_image(g8, [(1, 1), (6, 7)])
        assert image.elements == (0, 1)
        assert image.contains_identity
        assert image.min_norm == 0.0

    def test_empty(self, g8):
        image = q_image(g8, [])
        assert image.elements == ()
        assert not image.contains_identity
        assert image.min_norm is None

    @given(g8_pairs)
    def test_identity_iff_diagonal(self, g8, pairs):
        image = q_image(g8, pairs)
        assert image.contains_identity == any(x == y for x, y in pairs)
        assert len(set(image.elements)) == len(image.elements)

    def test_mobius(self, mobius):
        off = q_image(mobius, [(0.1, 0.2), (0.3j, 0.5)])
        assert not off.contains_identity
        assert off.min_norm > 0
        on = q_image(mobius, [(0.1, 0.2), (0.3 + 0.1j, 0.3 + 0.1j)])
        assert on.contains_identity
        assert on.min_norm == 0.0

    @pytest.mark.parametrize("fixture", ["g8", "z4_group"])
    def test_separation_finite(self, request, fixture):
        report = q_separation_check(request.getfixturevalue(fixture))
        assert report.passed
        assert report.max_violation == 0.0

    def test_separation_continuous(self, mobius, einstein):
        assert q_separation_check(mobius, samples=2_000, seed=7).passed
        assert q_separation_check(einstein, samples=2_000, seed=7).passed
