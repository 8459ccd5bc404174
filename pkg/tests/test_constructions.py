"""Tests for configuration generators; each output is fed back to the
matching exact counter."""

from fractions import Fraction
from math import comb

import pytest

from vantage.arrangement2d import a_S
from vantage.constructions import (
    RetryBudgetExhausted,
    concyclic_equal,
    concyclic_plus_one,
    concyclic_points,
    deficit_config,
    doubled,
    doubled_free,
    equally_spaced_line,
    free_config,
    free_sum,
    gap_config_1d,
    hemisphere_witness,
    platonic,
    sphere_rectangle,
    trapezoid_gadget,
)
from vantage.formulas import (
    free_sum_increment,
    max_orderings,
    max_orderings_poly1,
    min_orderings,
    sphere_max,
    trapezoid_count,
)
from vantage.geometry import PointConfig, count_orderings_1d
from vantage.sphere import count_config

F = Fraction
SEED = 424242


class TestGap1D:
    def test_full_sweep(self):
        for n in range(3, 11):
            for k in range(min_orderings(n), max_orderings_poly1(n) + 1):
                S = gap_config_1d(n, k)
                assert S.n == n
                assert count_orderings_1d(S) == k, (n, k)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            gap_config_1d(6, 9)
        with pytest.raises(ValueError):
            gap_config_1d(6, 17)


class TestFree:
    def test_deterministic_per_seed(self):
        assert free_config(5, SEED) == free_config(5, SEED)
        assert free_config(5, SEED) != free_config(5, SEED + 1)

    def test_counts(self):
        for n in range(2, 7):
            assert a_S(free_config(n, SEED)).regions_total == max_orderings(n, 2)

    def test_sphere_counts(self):
        for n in range(2, 6):
            S = free_config(n, SEED, dim=3)
            assert S.on_sphere
            assert count_config(S).regions_total == sphere_max(n)

    def test_free_sum_law(self):
        S = free_config(3, SEED)
        T = free_config(2, SEED + 9)
        U = free_sum(S, T, SEED)
        assert (a_S(U).regions_total
                == a_S(S).regions_total + a_S(T).regions_total
                + free_sum_increment(3, 2))


class TestGadgets:
    def test_trapezoid(self):
        for k in (2, 3):
            S = trapezoid_gadget(k, SEED)
            assert a_S(S).regions_total == trapezoid_count(k)

    def test_deficit_range(self):
        for n in (6, 7):
            for k in range(1, (n - 2) // 2 + 1):
                S = deficit_config(n, k, SEED)
                assert a_S(S).regions_total == max_orderings(n, 2) - k

    def test_deficit_rejects_large_k(self):
        with pytest.raises(ValueError):
            deficit_config(6, 3, SEED)

    def test_concyclic_points_exact(self):
        pts = concyclic_points([0, 1, 3, 7], radius=F(5))
        norms = {x * x + y * y for x, y in pts}
        assert norms == {F(25)}


class TestRegularPolygons:
    def test_planar_ngon_counts(self):
        # n concurrent symmetry axes cut the plane into 2n regions
        for n in (4, 5, 6, 7):
            S = concyclic_equal(n)
            assert a_S(S).regions_total == 2 * n

    def test_rational_concyclic_is_not_minimal(self):
        # generic rational points on a circle give 2(2n-3) regions, which is
        # why the polygon coordinates need roots of unity
        pts = concyclic_points([0, 1, 2, 3, 4])
        S = PointConfig(2, pts)
        assert a_S(S).regions_total == 2 * (2 * 5 - 3)


class TestSphereConstructions:
    def test_platonic_sizes(self):
        sizes = {"tetrahedron": 4, "octahedron": 6, "cube": 8,
                 "icosahedron": 12, "dodecahedron": 20}
        for name, n in sizes.items():
            S = platonic(name)
            assert S.n == n and S.on_sphere

    def test_unknown_solid(self):
        with pytest.raises(ValueError):
            platonic("simplex")

    def test_rectangle_witness(self):
        S = sphere_rectangle()
        assert count_config(S).regions_total == 8

    def test_hemisphere_witness(self):
        S = PointConfig(3, [(F(3, 13), F(4, 13), F(12, 13)),
                            (F(-3, 13), F(4, 13), F(12, 13))], on_sphere=True)
        assert hemisphere_witness(S) is not None
        D = doubled(S)
        assert D.n == 4
        with pytest.raises(ValueError):
            doubled(D)  # antipodal pairs fit in no open hemisphere

    def test_doubled_free_census(self):
        D = doubled_free(3, SEED)
        summary = count_config(D)
        assert summary.circle_count == 9
        assert summary.regions_total == 48

    def test_concyclic_plus_one_extremes(self):
        n = 6
        for t in (n - 1, 2 * n - 5, comb(n - 1, 2)):
            S = concyclic_plus_one(n, t, SEED)
            assert count_config(S).regions_total == 2 * n * t

    def test_concyclic_plus_one_range_check(self):
        with pytest.raises(ValueError):
            concyclic_plus_one(6, 4, SEED)


class TestRetryBudget:
    def test_budget_exhaustion_raises(self):
        with pytest.raises(RetryBudgetExhausted):
            free_config(5, SEED, attempts=0)

    def test_line_embedding(self):
        S = equally_spaced_line(5)
        assert S.dimension == 2
        assert a_S(S).regions_total == 8
