"""Tests for configurations, orderings, weights, and 1-D combinatorics."""

import random
from fractions import Fraction

import pytest

from vantage.geometry import (
    Ordering,
    PointConfig,
    Weights,
    config_from_text,
    config_to_text,
    count_orderings_1d,
    distinct_midpoints_1d,
    distinct_pairwise_sums,
    ordering_from_vantage,
    ordering_weighted,
    weighted_squared_distance,
    weighted_transform,
)

F = Fraction


def line(*xs):
    return PointConfig(1, [(F(x),) for x in xs])


class TestPointConfig:
    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            PointConfig(2, [(F(0), F(0)), (F(0), F(0))])

    def test_rejects_bad_dimension(self):
        with pytest.raises(ValueError):
            PointConfig(4, [(F(0),) * 4])

    def test_sphere_norm_check(self):
        with pytest.raises(ValueError):
            PointConfig(3, [(F(1), F(0), F(0)), (F(2), F(0), F(0))],
                        on_sphere=True)

    def test_one_based_indexing(self):
        S = line(5, 7, 9)
        assert S.point(1) == (F(5),)
        assert S.point(3) == (F(9),)


class TestOrdering:
    def test_examples(self):
        S = line(1, 2, 3)
        assert ordering_from_vantage(S, (F(0),)) == Ordering.strict((1, 2, 3))
        o = ordering_from_vantage(S, (F(3, 2),))
        assert o.tie_groups == ((1, 2), (3,))
        assert not o.is_strict

    def test_planar_example(self):
        S = PointConfig(2, [(F(0), F(0)), (F(4), F(0)), (F(0), F(3))])
        o = ordering_from_vantage(S, (F(1), F(1)))
        assert o.ranks == (1, 3, 2)

    def test_scale_translation_invariance(self):
        rng = random.Random(2)
        for _ in range(100):
            n = rng.randint(2, 6)
            pts = {(F(rng.randint(-20, 20)), F(rng.randint(-20, 20)))
                   for _ in range(n)}
            S = PointConfig(2, sorted(pts))
            V = (F(rng.randint(-20, 20)), F(rng.randint(-20, 20)))
            lam = F(rng.randint(1, 9), rng.randint(1, 9))
            t = (F(rng.randint(-9, 9)), F(rng.randint(-9, 9)))
            moved = S.scale(lam).translate(t)
            Vm = tuple(lam * v + ti for v, ti in zip(V, t))
            assert ordering_from_vantage(S, V) == ordering_from_vantage(moved, Vm)

    def test_invalid_ordering_rejected(self):
        with pytest.raises(ValueError):
            Ordering((1, 1), ((1,), (1,)))


class TestWeighted:
    def test_identity_weights(self):
        S = PointConfig(2, [(F(1), F(2)), (F(2), F(1)), (F(5), F(0))])
        w = Weights((F(1), F(1)))
        V = (F(0), F(1))
        assert ordering_weighted(S, V, w) == ordering_from_vantage(S, V)

    def test_motivating_case(self):
        # with weights (2, 1) the origin prefers (1,2) over (2,1)
        S = PointConfig(2, [(F(1), F(2)), (F(2), F(1))])
        o = ordering_weighted(S, (F(0), F(0)), Weights((F(2), F(1))))
        assert o.ranks == (1, 2)
        assert weighted_squared_distance((F(1), F(2)), (F(0), F(0)),
                                         Weights((F(2), F(1)))) == 8

    def test_transform_scaling(self):
        S = PointConfig(2, [(F(1), F(2)), (F(2), F(1))])
        T = weighted_transform(S, Weights((F(2), F(1))))
        assert T.points == ((F(2), F(2)), (F(4), F(1)))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            Weights((F(0), F(1)))


class TestMidpoints1D:
    def test_examples(self):
        assert distinct_midpoints_1d(line(1, 2, 3, 4, 5)) == 7
        assert distinct_midpoints_1d(line(1, 2, 4, 5)) == 5
        assert distinct_midpoints_1d(line(1, 2, 4, 8)) == 6
        assert count_orderings_1d(line(1, 2, 4, 5)) == 6

    def test_bounds_random(self):
        rng = random.Random(9)
        for _ in range(300):
            n = rng.randint(2, 9)
            xs = set()
            while len(xs) < n:
                xs.add(F(rng.randint(-50, 50), rng.randint(1, 6)))
            c = count_orderings_1d(line(*sorted(xs)))
            assert 2 * n - 2 <= c <= (n * n - n + 2) // 2

    def test_minimum_rigidity(self):
        # for n >= 5 a minimal midpoint count forces equal gaps (at n = 3
        # every configuration has 3 midpoints, at n = 4 witnesses like
        # {1,2,4,5} break the rule)
        rng = random.Random(5)
        for _ in range(2000):
            n = rng.choice((5, 6, 7))
            xs = sorted(rng.sample(range(0, 3 * n), n))
            if distinct_midpoints_1d(line(*xs)) == 2 * n - 3:
                gaps = {xs[i + 1] - xs[i] for i in range(n - 1)}
                assert len(gaps) == 1, xs

    def test_pairwise_sums(self):
        assert distinct_pairwise_sums([1, 2, 3, 4]) == 5
        assert distinct_pairwise_sums([1, 2, 4, 8]) == 6
        assert distinct_pairwise_sums(list(range(1, 11))) == 17
        with pytest.raises(ValueError):
            distinct_pairwise_sums([1, 1, 2])


class TestConfigIO:
    def test_round_trip_rational(self):
        S = PointConfig(2, [(F(1, 3), F(-2)), (F(0), F(5, 7))])
        assert config_from_text(config_to_text(S)) == S

    def test_round_trip_sphere(self):
        S = PointConfig(3, [(F(3, 13), F(4, 13), F(12, 13)),
                            (F(-3, 13), F(4, 13), F(12, 13))], on_sphere=True)
        T = config_from_text(config_to_text(S))
        assert T == S and T.on_sphere

    def test_round_trip_quadratic(self):
        from vantage.exactnum import QuadExt

        q = QuadExt(F(1, 2), F(1, 2), 5)
        S = PointConfig(2, [(q, F(0)), (F(1), q)])
        assert config_from_text(config_to_text(S)) == S

    def test_malformed_rejected(self):
        with pytest.raises(ValueError):
            config_from_text("")
        with pytest.raises(ValueError):
            config_from_text("dim=2 sphere=0\n1 2\n")
        with pytest.raises(ValueError):
            config_from_text("dim=2 field=Q sphere=0\n1\n")
