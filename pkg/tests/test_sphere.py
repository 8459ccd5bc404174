"""Tests for great-circle arrangements and the plane-to-sphere translation."""

import random
from fractions import Fraction

import pytest

from vantage.constructions import (
    concyclic_equal_sphere,
    free_config,
    platonic,
    random_hemisphere_point,
)
from vantage.geometry import PointConfig
from vantage.seeding import stable_rng
from vantage.sphere import (
    GreatCircle,
    count_config,
    count_sphere_regions,
    great_circles,
    has_parallel_bisectors,
    plane_to_sphere_count,
    sphere_min,
)

F = Fraction


def euler_regions(circles):
    """Independent oracle via Euler's formula V - E + F = 2."""
    from vantage.sphere import _cross

    circles = list(dict.fromkeys(circles))
    if not circles:
        return 1
    verts = {}
    for i in range(len(circles)):
        for j in range(i + 1, len(circles)):
            axis = _cross(circles[i].normal, circles[j].normal)
            key = GreatCircle.canonical(axis)
            verts.setdefault(key, set()).update((i, j))
    if not verts:
        return 2  # a single circle
    V = 2 * len(verts)
    E = sum(2 * len(inc) for inc in verts.values())
    return E - V + 2


class TestGreatCircle:
    def test_sign_and_scale_canonical(self):
        assert GreatCircle.canonical((F(2), F(-4), F(0))) \
            == GreatCircle.canonical((-1, 2, 0))

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            GreatCircle.canonical((0, 0, 0))


class TestCounts:
    def test_small_cases(self):
        mk = GreatCircle.canonical
        assert count_sphere_regions([]).regions_total == 1
        assert count_sphere_regions([mk((1, 0, 0))]).regions_total == 2
        # two distinct great circles always cross: 4 regions
        assert count_sphere_regions([mk((1, 0, 0)), mk((0, 1, 0))]).regions_total == 4
        # three coordinate planes: octants
        assert count_sphere_regions(
            [mk((1, 0, 0)), mk((0, 1, 0)), mk((0, 0, 1))]).regions_total == 8

    def test_against_euler_oracle(self):
        rng = random.Random(6)
        for _ in range(200):
            k = rng.randint(1, 6)
            circles = [GreatCircle.canonical(
                (rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-4, 4)))
                for _ in range(k)
                ]
            circles = [c for c in circles if any(c.normal)]
            if not circles:
                continue
            assert (count_sphere_regions(circles).regions_total
                    == euler_regions(circles))

    def test_platonic_against_euler(self):
        for name in ("tetrahedron", "cube", "icosahedron", "dodecahedron"):
            circles = great_circles(platonic(name))
            assert (count_sphere_regions(circles).regions_total
                    == euler_regions(circles))

    def test_parity(self):
        rng = stable_rng("sphere-parity", 1)
        for _ in range(40):
            n = rng.randint(2, 6)
            pts = set()
            while len(pts) < n:
                pts.add(random_hemisphere_point(rng))
            S = PointConfig(3, sorted(pts), on_sphere=True)
            assert count_config(S).regions_total % 2 == 0

    def test_requires_sphere_flag(self):
        with pytest.raises(ValueError):
            great_circles(PointConfig(3, [(F(1), F(0), F(0)),
                                          (F(0), F(1), F(0))]))


class TestTranslation:
    def test_projection_agreement(self):
        rng = stable_rng("translation-test", 3)
        done = 0
        while done < 20:
            n = rng.randint(3, 6)
            pts = set()
            while len(pts) < n:
                pts.add(random_hemisphere_point(rng, denom=200))
            S = PointConfig(3, sorted(pts), on_sphere=True)
            flat = PointConfig(2, [(x / z, y / z) for x, y, z in S.points])
            if has_parallel_bisectors(flat):
                continue
            assert plane_to_sphere_count(flat) == count_config(S).regions_total
            done += 1

    def test_parallel_rejected(self):
        collinear = PointConfig(2, [(F(1), F(0)), (F(2), F(0)), (F(3), F(0))])
        assert has_parallel_bisectors(collinear)
        with pytest.raises(ValueError):
            plane_to_sphere_count(collinear)

    def test_square_has_no_parallel_bisectors(self):
        # the unit square's parallel sides share coinciding (not merely
        # parallel) bisectors: 4 distinct concurrent lines, 8 regions
        square = PointConfig(2, [(F(0), F(0)), (F(1), F(0)),
                                 (F(0), F(1)), (F(1), F(1))])
        assert not has_parallel_bisectors(square)
        from vantage.arrangement2d import a_S

        assert a_S(square).regions_total == 8

    def test_coinciding_bisector_example(self):
        # four concyclic points with one coinciding bisector pair plus a
        # generic fifth point: 34 planar regions, 16 bounded, so the sphere
        # picture has 34 + 16 = 50 regions
        from vantage.arrangement2d import a_S
        from vantage.constructions import concyclic_points

        rng = stable_rng("fig-example", 0)
        trapezoid = None
        for _ in range(200):
            angles = sorted(rng.sample(range(1, 12), 2))
            a, b = angles
            pts = concyclic_points([0, a, b, a + b], radius=F(5))
            fifth = (F(rng.randint(-20, 20), 4), F(rng.randint(-20, 20), 4))
            if fifth in pts:
                continue
            S = PointConfig(2, pts + [fifth])
            summary = a_S(S)
            if (summary.line_count == 9 and summary.raw_pair_count == 10
                    and not has_parallel_bisectors(S)
                    and summary.regions_total == 34):
                trapezoid = (S, summary)
                break
        assert trapezoid is not None
        S, summary = trapezoid
        assert summary.regions_bounded == 16
        assert plane_to_sphere_count(S) == 50


class TestMinimum:
    def test_witnesses(self):
        for n in (4, 5, 6):
            value, witnesses = sphere_min(n)
            assert value == 2 * n
            for W in witnesses:
                assert count_config(W).regions_total == value

    def test_equator_polygon(self):
        assert count_config(concyclic_equal_sphere(7)).regions_total == 14

    def test_free_above_minimum(self):
        S = free_config(4, 99, dim=3)
        assert count_config(S).regions_total == 24 > 8
