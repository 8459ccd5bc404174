"""Perpendicular-bisector line arrangements and exact region counting.

The number of strict vantage orderings of a planar configuration equals the
number of regions cut out by the distinct perpendicular bisectors of its
point pairs.  Regions are counted combinatorially from the vertex census:

    regions_total = 1 + L + sum over vertices p of (m_p - 1)

where L is the number of distinct lines and m_p the number of lines through
vertex p.  Unbounded regions number 2L when at least two direction classes
exist, and L + 1 when all lines are parallel.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, List, Tuple

from .exactnum import as_rational, normalize_int_tuple
from .geometry import PointConfig


def _integer_triple(fa: Fraction, fb: Fraction, fc: Fraction):
    mult = 1
    for f in (fa, fb, fc):
        mult = mult * f.denominator // gcd(mult, f.denominator)
    return normalize_int_tuple((int(fa * mult), int(fb * mult), int(fc * mult)))


@dataclass(frozen=True)
class Line:
    """The line Ax + By = C in canonical form.

    Rational lines are stored as primitive integer triples with the first
    nonzero of (A, B) positive; lines over a field extension are scaled so
    the first nonzero of (A, B) is 1.  Either way the representation is
    unique per geometric line, so equal lines dedupe in sets.
    """

    a: object
    b: object
    c: object

    @staticmethod
    def canonical(a, b, c) -> "Line":
        if (not a) and (not b):
            raise ValueError("degenerate line: A = B = 0")
        rats = [as_rational(v) for v in (a, b, c)]
        if None not in rats:
            return Line(*_integer_triple(*rats))
        lead = a if a else b
        inv = Fraction(1) / lead if isinstance(lead, (int, Fraction)) else lead.inverse()
        scaled = (a * inv, b * inv, c * inv)
        rats = [as_rational(v) for v in scaled]
        # an irrational common factor can hide a rational line; after the
        # leading-one scaling that case surfaces and reroutes
        if None not in rats:
            return Line(*_integer_triple(*rats))
        return Line(*scaled)

    @property
    def is_integer(self) -> bool:
        return isinstance(self.a, int)

    def direction_class(self):
        """A canonical key shared exactly by parallel lines."""
        ra, rb = as_rational(self.a), as_rational(self.b)
        if ra is not None and rb is not None:
            mult = ra.denominator * rb.denominator // gcd(ra.denominator,
                                                          rb.denominator)
            return normalize_int_tuple((int(ra * mult), int(rb * mult)))
        return (self.a, self.b)

    def contains(self, x, y) -> bool:
        return self.a * x + self.b * y - self.c == 0


@dataclass(frozen=True)
class ArrangementSummary:
    line_count: int
    direction_class_count: int
    vertex_census: Tuple[Tuple[object, int], ...]
    regions_total: int
    regions_bounded: int
    regions_unbounded: int
    raw_pair_count: int = 0

    @property
    def multiplicity_histogram(self) -> Dict[int, int]:
        hist: Dict[int, int] = {}
        for _, m in self.vertex_census:
            hist[m] = hist.get(m, 0) + 1
        return hist


def bisector_line(p, q) -> Line:
    """Perpendicular bisector of two distinct points, as the locus
    (Q - P) . X = (|Q|^2 - |P|^2) / 2."""
    if tuple(p) == tuple(q):
        raise ValueError("coincident points have no bisector")
    a = q[0] - p[0]
    b = q[1] - p[1]
    c = (q[0] * q[0] - p[0] * p[0] + q[1] * q[1] - p[1] * p[1]) / 2
    return Line.canonical(a, b, c)


def bisector_lines(S: PointConfig) -> List[Line]:
    """Distinct canonical bisectors over all point pairs of a planar
    configuration, in first-seen order."""
    if S.dimension != 2:
        raise ValueError("requires a planar configuration")
    seen = {}
    for i in range(S.n):
        for j in range(i + 1, S.n):
            ln = bisector_line(S.points[i], S.points[j])
            seen.setdefault(ln, None)
    return list(seen)


def _intersect_integer(l1: Line, l2: Line):
    det = l1.a * l2.b - l2.a * l1.b
    if det == 0:
        return None
    xn = l1.c * l2.b - l2.c * l1.b
    yn = l1.a * l2.c - l2.a * l1.c
    if det < 0:
        xn, yn, det = -xn, -yn, -det
    g = gcd(gcd(abs(xn), abs(yn)), det)
    return (xn // g, yn // g, det // g)


def _intersect_field(l1: Line, l2: Line):
    det = l1.a * l2.b - l2.a * l1.b
    if not det:
        return None
    if isinstance(det, int):
        det = Fraction(det)
    x = (l1.c * l2.b - l2.c * l1.b) / det
    y = (l1.a * l2.c - l2.a * l1.c) / det
    # keep rational-valued coordinates as plain Fractions so vertices found
    # through different line pairs merge under one key
    rx, ry = as_rational(x), as_rational(y)
    return (rx if rx is not None else x, ry if ry is not None else y)


def count_regions(lines: Iterable[Line]) -> ArrangementSummary:
    """Exact region counts of a set of distinct lines from its vertex census."""
    lines = list(dict.fromkeys(lines))
    L = len(lines)
    directions = {ln.direction_class() for ln in lines}
    D = len(directions)
    integer_mode = all(ln.is_integer for ln in lines)
    intersect = _intersect_integer if integer_mode else _intersect_field

    incident: Dict[object, set] = {}
    for i in range(L):
        for j in range(i + 1, L):
            pt = intersect(lines[i], lines[j])
            if pt is None:
                continue
            inc = incident.setdefault(pt, set())
            inc.add(i)
            inc.add(j)

    census = tuple((pt, len(inc)) for pt, inc in incident.items())
    total = 1 + L + sum(m - 1 for _, m in census)
    if L == 0:
        unbounded = 1
    elif D >= 2:
        unbounded = 2 * L
    else:
        unbounded = L + 1
    return ArrangementSummary(
        line_count=L,
        direction_class_count=D,
        vertex_census=census,
        regions_total=total,
        regions_bounded=total - unbounded,
        regions_unbounded=unbounded,
    )


def a_S(S: PointConfig) -> ArrangementSummary:
    """Region summary of the bisector arrangement: regions_total is the
    number of strict single-vantage orderings of S."""
    lines = bisector_lines(S)
    summary = count_regions(lines)
    raw = S.n * (S.n - 1) // 2
    return ArrangementSummary(
        line_count=summary.line_count,
        direction_class_count=summary.direction_class_count,
        vertex_census=summary.vertex_census,
        regions_total=summary.regions_total,
        regions_bounded=summary.regions_bounded,
        regions_unbounded=summary.regions_unbounded,
        raw_pair_count=raw,
    )


def count_orderings_2d(S: PointConfig) -> int:
    return a_S(S).regions_total


def verify_free(S: PointConfig) -> bool:
    """True iff the configuration achieves the maximum count for its size."""
    from .formulas import max_orderings

    return a_S(S).regions_total == max_orderings(S.n, 2)
