"""Tests for bisector arrangements and exact region counting."""

import random
from fractions import Fraction

import pytest

from vantage.arrangement2d import (
    Line,
    a_S,
    bisector_line,
    bisector_lines,
    count_regions,
    verify_free,
)
from vantage.exactnum import QuadExt
from vantage.geometry import PointConfig

F = Fraction


def incremental_regions(lines):
    """Independent oracle: insert lines one at a time; each new line adds
    1 + (number of distinct intersection points with earlier lines)."""
    total = 1
    placed = []
    for ln in lines:
        pts = set()
        for old in placed:
            det = ln.a * old.b - old.a * ln.b
            if det:
                x = F(ln.c * old.b - old.c * ln.b, det) if isinstance(det, int) \
                    else (ln.c * old.b - old.c * ln.b) / det
                y = F(ln.a * old.c - old.a * ln.c, det) if isinstance(det, int) \
                    else (ln.a * old.c - old.a * ln.c) / det
                pts.add((x, y))
        total += 1 + len(pts)
        placed.append(ln)
    return total


def random_lines(rng, count, force_structure=True):
    lines = {}
    while len(lines) < count:
        style = rng.random() if force_structure else 1.0
        if style < 0.3 and lines:
            # force a parallel to an existing line
            base = rng.choice(list(lines))
            c = rng.randint(-9, 9)
            try:
                lines.setdefault(Line.canonical(base.a, base.b, c), None)
            except ValueError:
                pass
            continue
        if style < 0.5 and len(lines) >= 2:
            # force a concurrence through an existing intersection point
            l1, l2 = rng.sample(list(lines), 2)
            det = l1.a * l2.b - l2.a * l1.b
            if det:
                x = F(l1.c * l2.b - l2.c * l1.b, det)
                y = F(l1.a * l2.c - l2.a * l1.c, det)
                a, b = rng.randint(-5, 5), rng.randint(-5, 5)
                if (a, b) != (0, 0):
                    lines.setdefault(Line.canonical(a, b, a * x + b * y), None)
            continue
        a, b, c = (rng.randint(-9, 9) for _ in range(3))
        if (a, b) != (0, 0):
            lines.setdefault(Line.canonical(a, b, c), None)
    return list(lines)


class TestLineCanonical:
    def test_primitive_integer(self):
        assert Line.canonical(F(2), F(4), F(6)) == Line.canonical(1, 2, 3)
        assert Line.canonical(-2, -4, -6) == Line.canonical(1, 2, 3)

    def test_fractions_cleared(self):
        assert Line.canonical(F(1, 2), F(1, 3), F(1, 6)).is_integer

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            Line.canonical(0, 0, 1)

    def test_hidden_rational_direction(self):
        # an irrational common factor must not hide a rational line
        r5 = QuadExt(F(0), F(1), 5)
        assert Line.canonical(r5, 2 * r5, 3 * r5) == Line.canonical(1, 2, 3)

    def test_direction_class_parallel(self):
        l1 = Line.canonical(2, 4, 1)
        l2 = Line.canonical(3, 6, 7)
        assert l1.direction_class() == l2.direction_class()
        assert l1 != l2


class TestBisectors:
    def test_vertical_bisector(self):
        ln = bisector_line((F(0), F(0)), (F(2), F(0)))
        assert ln == Line.canonical(1, 0, 1)
        assert ln.contains(F(1), F(17))

    def test_coincident_rejected(self):
        with pytest.raises(ValueError):
            bisector_line((F(1), F(1)), (F(1), F(1)))

    def test_dedup_coinciding(self):
        # isosceles trapezoid: two parallel chords share one bisector
        S = PointConfig(2, [(F(-2), F(0)), (F(2), F(0)),
                            (F(-1), F(3)), (F(1), F(3))])
        lines = bisector_lines(S)
        assert len(lines) == 5
        assert a_S(S).raw_pair_count == 6


class TestCountRegions:
    def test_small_hand_counts(self):
        mk = Line.canonical
        assert count_regions([]).regions_total == 1
        assert count_regions([mk(1, 0, 0)]).regions_total == 2
        # two parallels: 3 strips, all unbounded
        s = count_regions([mk(1, 0, 0), mk(1, 0, 1)])
        assert (s.regions_total, s.regions_unbounded) == (3, 3)
        # crossing pair
        s = count_regions([mk(1, 0, 0), mk(0, 1, 0)])
        assert (s.regions_total, s.regions_bounded) == (4, 0)
        # triangle: one bounded region
        s = count_regions([mk(1, 0, 0), mk(0, 1, 0), mk(1, 1, 3)])
        assert (s.regions_total, s.regions_bounded, s.regions_unbounded) == (7, 1, 6)
        # concurrent triple: no bounded region
        s = count_regions([mk(1, 0, 0), mk(0, 1, 0), mk(1, 1, 0)])
        assert (s.regions_total, s.regions_bounded) == (6, 0)

    def test_against_incremental_oracle(self):
        rng = random.Random(13)
        for _ in range(1000):
            lines = random_lines(rng, rng.randint(1, 7))
            assert count_regions(lines).regions_total == incremental_regions(lines)

    def test_field_mode_matches_integer_mode(self):
        # the same rational arrangement pushed through the field path
        rng = random.Random(4)
        for _ in range(50):
            lines = random_lines(rng, rng.randint(2, 5))
            as_field = [Line(QuadExt(F(ln.a), F(0), 2),
                             QuadExt(F(ln.b), F(0), 2),
                             QuadExt(F(ln.c), F(0), 2)) for ln in lines]
            assert (count_regions(as_field).regions_total
                    == count_regions(lines).regions_total)


class TestConfigCounts:
    def test_spec_worked_example(self):
        S = PointConfig(2, [(F(0), F(0)), (F(4), F(0)), (F(0), F(3))])
        assert a_S(S).regions_total == 6

    def test_bounds_random(self):
        rng = random.Random(21)
        for _ in range(200):
            n = rng.randint(2, 7)
            pts = set()
            while len(pts) < n:
                pts.add((F(rng.randint(-30, 30)), F(rng.randint(-30, 30))))
            S = PointConfig(2, sorted(pts))
            c = a_S(S).regions_total
            assert 2 * n - 2 <= c <= (3 * n**4 - 10 * n**3 + 21 * n**2
                                      - 14 * n + 24) // 24

    def test_collinear_only_at_minimum(self):
        rng = random.Random(22)
        hits = 0
        for _ in range(400):
            n = rng.randint(3, 6)
            pts = set()
            while len(pts) < n:
                pts.add((F(rng.randint(-8, 8)), F(rng.randint(-8, 8))))
            pts = sorted(pts)
            S = PointConfig(2, pts)
            if a_S(S).regions_total == 2 * n - 2:
                hits += 1
                (x0, y0), (x1, y1) = pts[0], pts[1]
                assert all((x1 - x0) * (y - y0) == (y1 - y0) * (x - x0)
                           for x, y in pts)
        assert hits > 0  # the sampler does land on collinear sets

    def test_unbounded_equals_2l_without_parallels(self):
        rng = random.Random(31)
        for _ in range(100):
            n = rng.randint(3, 6)
            pts = set()
            while len(pts) < n:
                pts.add((F(rng.randint(-40, 40)), F(rng.randint(-40, 40))))
            summary = a_S(PointConfig(2, sorted(pts)))
            if summary.direction_class_count == summary.line_count:
                assert summary.regions_unbounded == 2 * summary.line_count

    def test_verify_free(self):
        from vantage.constructions import free_config

        assert verify_free(free_config(4, 3))
        S = PointConfig(2, [(F(i), F(0)) for i in range(4)])
        assert not verify_free(S)
