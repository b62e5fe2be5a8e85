"""
-*- coding: utf-8 -*-
@FileName: test_neighborhood.py
@DateTime: 2025/10/18
@Docs: 邻域链与陀螺不变球的测试
"""

import math

import numpy as np
import pytest
from hypothesis import given
from pydantic import ValidationError

from gyrokit.core.exceptions import InputException
from gyrokit.core.gyrogroup import op
from gyrokit.services.neighborhood import (
    GyrInvariantBall,
    NeighborhoodChain,
    build_chain,
    check_ball_sum,
    check_gyr_invariance,
    half_radius,
    rapidity,
    scalar_add,
    symmetrize,
)
from tests.strategies import radii


class TestHalfRadius:
    def test_known_values(self):
        assert half_radius(0.8) == pytest.approx(0.5, abs=1e-15)
        assert half_radius(0.5) == pytest.approx(0.2679491924, abs=1e-10)

    def test_small_radius_asymptotics(self):
        r = 1e-6
        assert half_radius(r) == pytest.approx(r / 2, rel=1e-9)

    @given(radii)
    def test_doubles_back(self, r):
        s = half_radius(r)
        assert 0 < s < r
        assert abs(scalar_add(s, s) - r) <= 1e-12

    @pytest.mark.parametrize("r", [0.0, 1.0, -0.5, 1.5])
    def test_rejects_out_of_range(self, r):
        with pytest.raises(InputException):
            half_radius(r)

    def test_scalar_add_on_arrays(self):
        values = np.array([0.1, 0.5, 0.9])
        assert np.array_equal(scalar_add(0.3, values), np.array([scalar_add(0.3, float(v)) for v in values]))


class TestChain:
    def test_build_chain(self):
        chain = build_chain(0.8, 2)
        assert chain.depth == 2
        assert chain.r0 == 0.8
        assert chain.radius(1) == pytest.approx(0.5, abs=1e-15)
        assert chain.radius(2) == pytest.approx(0.26794919, abs=1e-8)

    @pytest.mark.parametrize("r0", [0.3, 0.5, 0.8, 0.95])
    def test_depth_30(self, r0):
        chain = build_chain(r0, 30)
        for r, s in zip(chain.radii, chain.radii[1:], strict=False):
            assert s < r
            assert abs(scalar_add(s, s) - r) <= 1e-12
        assert chain.radius(30) < 1e-7
        assert build_chain(0.8, 30).radius(30) < 1e-8

    def test_rapidity_halves(self):
        chain = build_chain(0.8, 20)
        for n, r in enumerate(chain.radii):
            assert rapidity(r) == pytest.approx(rapidity(0.8) / 2**n, rel=1e-12)

    @pytest.mark.parametrize(("r0", "depth"), [(1.5, 3), (0.0, 3), (0.8, 0), (0.8, 49)])
    def test_rejects_bad_input(self, r0, depth):
        with pytest.raises(InputException):
            build_chain(r0, depth)

    def test_explicit_loose_chain(self):
        chain = NeighborhoodChain(radii=(0.8, 0.4, 0.1))
        assert chain.depth == 2
        assert chain.ball(1).radius == 0.4

    @pytest.mark.parametrize("radii_", [(0.5, 0.4), (0.5, 0.6), (0.5, 0.0), (0.8,)])
    def test_rejects_invalid_chain(self, radii_):
        with pytest.raises(ValidationError):
            NeighborhoodChain(radii=radii_)


class TestGyrInvariance:
    def test_mobius_exact(self, mobius):
        report = check_gyr_invariance(mobius, GyrInvariantBall(radius=0.5), samples=5_000, seed=7, tol=1e-12)
        assert report.passed

    def test_einstein(self, einstein):
        report = check_gyr_invariance(einstein, GyrInvariantBall(radius=0.9), samples=10_000, seed=7, tol=1e-9)
        assert report.passed

    def test_group_adapter(self, z4_group):
        report = check_gyr_invariance(z4_group, GyrInvariantBall(radius=0.5))
        assert report.passed
        assert report.max_violation == 0.0

    def test_ball_radius_range(self):
        with pytest.raises(ValidationError):
            GyrInvariantBall(radius=1.0)

    def test_ball_contains(self, mobius):
        ball = GyrInvariantBall(radius=0.5)
        assert ball.contains(mobius, 0.49j)
        assert not ball.contains(mobius, 0.5)


class TestBallSum:
    @pytest.mark.parametrize(("s", "t"), [(0.3, 0.5), (0.5, 0.5), (0.9, 0.1)])
    def test_mobius(self, mobius, s, t):
        assert check_ball_sum(mobius, s, t, samples=5_000, seed=7).passed

    def test_einstein(self, einstein):
        assert check_ball_sum(einstein, 0.6, 0.7, samples=5_000, seed=7).passed

    def test_aligned_pair_approaches_bound(self, mobius):
        s = t = 0.5 - 1e-9
        assert abs(op(mobius, s, t)) == pytest.approx(scalar_add(0.5, 0.5), abs=1e-8)


class TestSymmetrize:
    def test_ball_is_already_symmetric(self, mobius):
        ball = GyrInvariantBall(radius=0.5)
        symmetric = symmetrize(mobius, lambda x: ball.contains(mobius, x))
        rng = np.random.default_rng(1)
        for _ in range(500):
            x = mobius.sample(rng)
            assert symmetric(x) == ball.contains(mobius, x)

    def test_half_disk(self, mobius):
        symmetric = symmetrize(mobius, lambda z: z.real > 0 and abs(z) < 0.5)
        rng = np.random.default_rng(2)
        for _ in range(500):
            x = mobius.sample(rng)
            assert symmetric(x) == symmetric(-x)
        assert symmetric(-0.3)
        assert not symmetric(0.3j)

    def test_identity_only(self, mobius):
        symmetric = symmetrize(mobius, lambda z: z == 0)
        assert symmetric(0j)
        assert not symmetric(0.1)

    def test_rapidity(self):
        assert rapidity(0.5) == pytest.approx(math.atanh(0.5))
