"""Region counting for arrangements of bisecting great circles on the sphere.

For points on a sphere centered at the origin, the perpendicular bisector
plane of P and Q passes through the origin with normal P - Q, so the whole
computation is central-arrangement combinatorics on normal vectors: no
trigonometry, only exact ring operations and equality tests.

Regions satisfy  total = 2 + sum over vertices v of (m_v - 1),  where the
sum runs over both antipodes of every intersection direction and m_v is the
number of circles through v; a single circle gives 2 regions and an empty
arrangement 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, Iterable, List, Tuple

from .exactnum import as_rational, normalize_int_tuple
from .geometry import PointConfig


def _integer_tuple(fs):
    mult = 1
    for f in fs:
        mult = mult * f.denominator // gcd(mult, f.denominator)
    return normalize_int_tuple(tuple(int(f * mult) for f in fs))


@dataclass(frozen=True)
class GreatCircle:
    """A great circle stored by a canonical normal direction.

    The normal is defined up to nonzero scale (either sign); rational
    normals canonicalize to a primitive integer tuple with positive leading
    entry, field normals by scaling the first nonzero entry to 1.
    """

    normal: tuple

    @staticmethod
    def canonical(v: tuple) -> "GreatCircle":
        if all(not c for c in v):
            raise ValueError("zero normal")
        rats = [as_rational(c) for c in v]
        if None not in rats:
            return GreatCircle(_integer_tuple(rats))
        lead = next(c for c in v if c)
        inv = Fraction(1) / lead if isinstance(lead, (int, Fraction)) else lead.inverse()
        scaled = tuple(c * inv for c in v)
        rats = [as_rational(c) for c in scaled]
        # rational direction hidden behind an irrational common factor
        if None not in rats:
            return GreatCircle(_integer_tuple(rats))
        return GreatCircle(scaled)


@dataclass(frozen=True)
class SphereSummary:
    circle_count: int
    vertex_census: Tuple[Tuple[object, int], ...]
    regions_total: int

    @property
    def multiplicity_histogram(self) -> Dict[int, int]:
        """Histogram over vertex-line multiplicities m; each entry counts
        both antipodal vertices of the intersection direction."""
        hist: Dict[int, int] = {}
        for _, m in self.vertex_census:
            hist[m] = hist.get(m, 0) + 2
        return hist


def great_circles(S: PointConfig) -> List[GreatCircle]:
    """Distinct bisecting great circles of all point pairs."""
    if not S.on_sphere:
        raise ValueError("requires an on-sphere configuration")
    seen = {}
    for i in range(S.n):
        for j in range(i + 1, S.n):
            normal = tuple(a - b for a, b in zip(S.points[i], S.points[j]))
            seen.setdefault(GreatCircle.canonical(normal), None)
    return list(seen)


def _cross(u: tuple, v: tuple) -> tuple:
    return (u[1] * v[2] - u[2] * v[1],
            u[2] * v[0] - u[0] * v[2],
            u[0] * v[1] - u[1] * v[0])


def _multiplicity_from_pairs(c: int) -> int:
    """Recover m from c = m(m-1)/2 pairs of circles sharing a vertex."""
    m = (1 + isqrt(1 + 8 * c)) // 2
    if m * (m - 1) != 2 * c:
        raise AssertionError("inconsistent pair count in vertex census")
    return m


def count_sphere_regions(circles: Iterable[GreatCircle]) -> SphereSummary:
    """Exact region count of distinct great circles from the census of
    their pairwise intersection directions."""
    circles = list(dict.fromkeys(circles))
    L = len(circles)
    if L == 0:
        return SphereSummary(0, (), 1)
    pair_groups: Dict[object, int] = {}
    for i in range(L):
        for j in range(i + 1, L):
            axis = _cross(circles[i].normal, circles[j].normal)
            key = GreatCircle.canonical(axis)
            pair_groups[key] = pair_groups.get(key, 0) + 1
    census = tuple((key.normal, _multiplicity_from_pairs(c))
                   for key, c in pair_groups.items())
    # each intersection direction contributes two antipodal vertices
    total = 2 + 2 * sum(m - 1 for _, m in census)
    return SphereSummary(L, census, total)


def count_config(S: PointConfig) -> SphereSummary:
    return count_sphere_regions(great_circles(S))


def has_parallel_bisectors(S: PointConfig) -> bool:
    """True iff two distinct perpendicular bisectors of the planar
    configuration share a direction."""
    from .arrangement2d import a_S

    summary = a_S(S)
    return summary.direction_class_count < summary.line_count


def plane_to_sphere_count(S: PointConfig) -> int:
    """Region count obtained by centrally projecting a planar arrangement
    onto the sphere: u + 2b with (u, b) the planar unbounded/bounded counts.
    Requires that no two bisectors are parallel."""
    from .arrangement2d import a_S

    summary = a_S(S)
    if summary.direction_class_count < summary.line_count:
        raise ValueError("parallel bisectors present; translation does not apply")
    return summary.regions_unbounded + 2 * summary.regions_bounded


def sphere_min(n: int):
    """The minimum sphere count 2n for n >= 4, with concyclic witnesses
    (plus the rectangle witness when n = 4)."""
    from .constructions import concyclic_equal_sphere, sphere_rectangle
    from .formulas import sphere_min as sphere_min_value

    value = sphere_min_value(n)
    witnesses = [concyclic_equal_sphere(n)]
    if n == 4:
        witnesses.append(sphere_rectangle())
    return value, witnesses
