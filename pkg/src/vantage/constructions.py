"""Generators for every named configuration the counters are tested against.

All randomized generators are rejection-sampled: a candidate is accepted
only when the exact counter reproduces the target value, so genericity is
certified by the count itself rather than by floating-point heuristics.
Every generator is a deterministic function of (parameters, seed).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence, Tuple

from .arrangement2d import a_S
from .exactnum import CyclotomicField, QuadExt
from .formulas import (
    circle_gadget_count,
    free_sum_increment,
    max_orderings,
    max_orderings_poly1,
    min_orderings,
    parallel_gadget_polynomial,
    sphere_doubled_census,
    sphere_doubled_count,
    sphere_max,
    trapezoid_count,
)
from .geometry import PointConfig
from .seeding import stable_rng


class RetryBudgetExhausted(RuntimeError):
    """A randomized generator failed to hit its target count in the
    allotted number of attempts."""


DEFAULT_ATTEMPTS = 100


# ---------------------------------------------------------------------------
# 1-D configurations
# ---------------------------------------------------------------------------


def equally_spaced_line(n: int, dim: int = 2) -> PointConfig:
    """The points 1..n, on the line (dim=1) or embedded on the x-axis."""
    if n < 1:
        raise ValueError("need n >= 1")
    if dim == 1:
        return PointConfig(1, [(Fraction(i),) for i in range(1, n + 1)])
    return PointConfig(2, [(Fraction(i), Fraction(0)) for i in range(1, n + 1)])


def gap_config_1d(n: int, k: int) -> PointConfig:
    """A 1-D configuration of n points whose midpoints cut the line into
    exactly k intervals, for any k between 2n-2 and (n^2-n+2)/2.

    Round m keeps 1..(n-m), places (n-m+1)+t, then the powers
    2^(n-m+2), ..., 2^n; consecutive rounds tile the whole range of k.
    """
    lo, hi = min_orderings(n), max_orderings_poly1(n)
    if not lo <= k <= hi:
        raise ValueError(f"k={k} outside [{lo}, {hi}] for n={n}")
    if k == lo:
        return equally_spaced_line(n, dim=1)
    for m in range(1, n - 2):
        b_m = (m * m + 3 * m - 2) // 2
        c_m = (m * m + 5 * m + 4) // 2
        start = (m + 1) * n - b_m
        end = (m + 2) * n - c_m
        if start <= k <= end:
            t = k - start + 1
            values = list(range(1, n - m + 1))
            values.append(n - m + 1 + t)
            values.extend(2**e for e in range(n - m + 2, n + 1))
            return PointConfig(1, [(Fraction(v),) for v in values])
    raise AssertionError(f"round table failed to cover k={k} for n={n}")


# ---------------------------------------------------------------------------
# Random rational helpers
# ---------------------------------------------------------------------------


def _random_point(rng: random.Random, box: int = 10**6) -> tuple:
    return (Fraction(rng.randint(-box, box)), Fraction(rng.randint(-box, box)))


def pythagorean_rotation(rng: random.Random) -> Tuple[Fraction, Fraction]:
    """Exact (cos, sin) of a nonzero rational rotation angle."""
    m = rng.randint(2, 40)
    k = rng.randint(1, m - 1)
    h = m * m + k * k
    return Fraction(m * m - k * k, h), Fraction(2 * m * k, h)


def _rotate(p: tuple, cs: Tuple[Fraction, Fraction]) -> tuple:
    c, s = cs
    return (c * p[0] - s * p[1], s * p[0] + c * p[1])


def random_sphere_point(rng: random.Random, spread: int = 50,
                        denom: int = 8) -> tuple:
    """A rational point on the unit sphere via stereographic parameters."""
    a = Fraction(rng.randint(-spread, spread), rng.randint(1, denom))
    b = Fraction(rng.randint(-spread, spread), rng.randint(1, denom))
    h = 1 + a * a + b * b
    return (2 * a / h, 2 * b / h, (1 - a * a - b * b) / h)


def random_hemisphere_point(rng: random.Random, denom: int = 40) -> tuple:
    """A rational unit-sphere point with z > 0 (parameters inside the
    unit disc)."""
    while True:
        a = Fraction(rng.randint(-denom + 1, denom - 1), denom)
        b = Fraction(rng.randint(-denom + 1, denom - 1), denom)
        if a * a + b * b < 1:
            h = 1 + a * a + b * b
            return (2 * a / h, 2 * b / h, (1 - a * a - b * b) / h)


# ---------------------------------------------------------------------------
# Free configurations and free sums
# ---------------------------------------------------------------------------


def free_config(n: int, seed: int, dim: int = 2,
                attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """A random configuration certified to achieve the maximum count:
    M(n, 2) in the plane, or the sphere maximum for dim=3."""
    from .sphere import count_config as sphere_count

    rng = stable_rng("free", n, seed, dim)
    for _ in range(attempts):
        if dim == 2:
            pts = {_random_point(rng) for _ in range(n)}
            if len(pts) < n:
                continue
            S = PointConfig(2, sorted(pts))
            if a_S(S).regions_total == max_orderings(n, 2):
                return S
        elif dim == 3:
            pts = {random_sphere_point(rng) for _ in range(n)}
            if len(pts) < n:
                continue
            S = PointConfig(3, sorted(pts), on_sphere=True)
            if sphere_count(S).regions_total == sphere_max(n):
                return S
        else:
            raise ValueError("dim must be 2 or 3")
    raise RetryBudgetExhausted(f"no free witness for n={n} in {attempts} tries")


def free_sum(S: PointConfig, T: PointConfig, seed: int,
             attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """Merge two planar configurations freely: T is rotated by a random
    rational angle and translated until the merged count equals
    a_S + a_T + g(|S|, |T|)."""
    target = (a_S(S).regions_total + a_S(T).regions_total
              + free_sum_increment(S.n, T.n))
    rng = stable_rng("freesum", S.points, T.points, seed)
    for _ in range(attempts):
        cs = pythagorean_rotation(rng)
        shift = _random_point(rng, box=10**7)
        moved = [tuple(a + b for a, b in zip(_rotate(p, cs), shift))
                 for p in T.points]
        pts = list(S.points) + moved
        if len(set(pts)) < len(pts):
            continue
        U = PointConfig(2, pts)
        if a_S(U).regions_total == target:
            return U
    raise RetryBudgetExhausted("free merge failed to reach target count")


# ---------------------------------------------------------------------------
# Planar gadgets
# ---------------------------------------------------------------------------


def trapezoid_gadget(k: int, seed: int,
                     attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """2k points with the k-1 forced parallelisms P1P2 || P3P4,
    P1P3 || P5P6, ..., P1Pk || P(2k-1)P(2k); count M(2k) - k + 1."""
    if k < 1:
        raise ValueError("need k >= 1")
    if k == 1:
        return free_config(2, seed)
    rng = stable_rng("trapezoid", k, seed)
    target = trapezoid_count(k)
    for _ in range(attempts):
        pts: List[tuple] = [_random_point(rng), _random_point(rng)]
        ok = True
        for j in range(2, k + 1):
            base = _random_point(rng)
            t = Fraction(rng.randint(1, 400), rng.randint(1, 20))
            if rng.random() < 0.5:
                t = -t
            direction = tuple(a - b for a, b in zip(pts[j - 1], pts[0]))
            mate = tuple(a + t * d for a, d in zip(base, direction))
            pts.extend([base, mate])
            if direction == (0, 0):
                ok = False
        if not ok or len(set(pts)) < 2 * k:
            continue
        S = PointConfig(2, pts)
        if a_S(S).regions_total == target:
            return S
    raise RetryBudgetExhausted(f"trapezoid gadget k={k} failed")


def deficit_config(n: int, k: int, seed: int,
                   attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """n planar points counting exactly M(n) - k, built by freely summing a
    (2k+2)-point trapezoid gadget with n - 2k - 2 free points.  Needs
    k <= (n - 2) / 2."""
    if k < 0 or 2 * k + 2 > n:
        raise ValueError("need 0 <= k <= (n - 2) / 2")
    if k == 0:
        return free_config(n, seed, attempts=attempts)
    gadget = trapezoid_gadget(k + 1, seed, attempts)
    rest = n - 2 * k - 2
    if rest == 0:
        return gadget
    return free_sum(gadget, free_config(rest, seed + 1, attempts=attempts),
                    seed, attempts)


def parallel_lines_gadget(m: int, k: int, l: int, seed: int,
                          attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """m free points plus l pairwise non-parallel lines carrying k collinear
    points each; count given by parallel_gadget_polynomial."""
    target = parallel_gadget_polynomial(k, l, m)
    rng = stable_rng("parlines", m, k, l, seed)
    for _ in range(attempts):
        pts: List[tuple] = []
        dirs = set()
        for _ in range(l):
            d = (Fraction(rng.randint(-50, 50)), Fraction(rng.randint(-50, 50)))
            if d == (0, 0):
                break
            dirs.add(d)
            base = _random_point(rng)
            params = rng.sample(range(-500, 500), k)
            pts.extend(tuple(b + s * dc for b, dc in zip(base, d))
                       for s in params)
        if len(dirs) < l:
            continue
        pts.extend(_random_point(rng) for _ in range(m))
        if len(set(pts)) < m + k * l:
            continue
        S = PointConfig(2, pts)
        if a_S(S).regions_total == target:
            return S
    raise RetryBudgetExhausted(f"parallel-lines gadget ({m},{k},{l}) failed")


def grid_lines(k: int, l: int, seed: int = 0) -> PointConfig:
    """The bare l-line pattern with k points per line and no free points."""
    return parallel_lines_gadget(0, k, l, seed)


def concyclic_points(angles: Sequence[int], center: tuple = (0, 0),
                     radius: Fraction = Fraction(1),
                     rotation: Optional[Tuple[Fraction, Fraction]] = None,
                     rng: Optional[random.Random] = None) -> List[tuple]:
    """Rational circle points at integer multiples of one rational-cosine
    angle.  The angle is chosen small enough that pairwise angle sums do not
    wrap around the circle, so distinct integer sums give distinct bisector
    directions."""
    amax = max(angles)
    if rotation is None:
        # cos = (m^2-1)/(m^2+1) with m large makes the base angle ~ 2/m;
        # amax * angle < pi guarantees no wraparound of pairwise sums
        m = max(3, amax + 2)
        rotation = (Fraction(m * m - 1, m * m + 1), Fraction(2 * m, m * m + 1))
    pts = []
    for a in sorted(angles):
        v = (radius, Fraction(0))
        for _ in range(a):
            v = _rotate(v, rotation)
        pts.append((center[0] + v[0], center[1] + v[1]))
    return pts


def circle_gadget(n: int, k: int, seed: int,
                  attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """k concyclic points (all bisectors distinct, concurrent at the center)
    merged freely with n - k free points; count M(n) - M(k) + k(k-1)."""
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    target = circle_gadget_count(n, k)
    rng = stable_rng("circle", n, k, seed)
    for _ in range(attempts):
        angles = rng.sample(range(0, 6 * k), k)
        circle = concyclic_points(angles, center=_random_point(rng, box=1000),
                                  radius=Fraction(rng.randint(1, 50)))
        pts = circle + [_random_point(rng) for _ in range(n - k)]
        if len(set(pts)) < n:
            continue
        S = PointConfig(2, pts)
        if a_S(S).regions_total == target:
            return S
    raise RetryBudgetExhausted(f"circle gadget (n={n}, k={k}) failed")


# ---------------------------------------------------------------------------
# Regular polygons
# ---------------------------------------------------------------------------


def regular_polygon_vertices(n: int) -> List[tuple]:
    """Exact (cos, sin) vertex coordinates of the regular n-gon: rational
    for n = 4, otherwise over the cyclotomic field of order lcm(n, 4)."""
    if n < 3:
        raise ValueError("need n >= 3")
    if n == 4:
        one, zero = Fraction(1), Fraction(0)
        return [(one, zero), (zero, one), (-one, zero), (zero, -one)]
    field = CyclotomicField(lcm(n, 4))
    return [field.unit_point(j, n) for j in range(n)]


def concyclic_equal(n: int) -> PointConfig:
    """The planar regular n-gon with exact coordinates."""
    return PointConfig(2, regular_polygon_vertices(n))


def concyclic_equal_sphere(n: int) -> PointConfig:
    """The regular n-gon on the equator of the unit sphere."""
    pts = regular_polygon_vertices(n)
    if n == 4:
        zero = Fraction(0)
    else:
        zero = CyclotomicField(lcm(n, 4)).zero()
    return PointConfig(3, [(c, s, zero) for c, s in pts], on_sphere=True)


def sphere_rectangle() -> PointConfig:
    """A non-square rectangle on a circle of the unit sphere; the n = 4
    minimal witness with 8 regions."""
    pts = [(Fraction(sx * 3, 13), Fraction(sy * 4, 13), Fraction(12, 13))
           for sx in (1, -1) for sy in (1, -1)]
    return PointConfig(3, pts, on_sphere=True)


# ---------------------------------------------------------------------------
# Spherical configurations
# ---------------------------------------------------------------------------

_PHI = QuadExt(Fraction(1, 2), Fraction(1, 2), 5)


def _cyclic(v: tuple) -> List[tuple]:
    return [v, (v[2], v[0], v[1]), (v[1], v[2], v[0])]


def platonic(name: str) -> PointConfig:
    """Vertices of a Platonic solid with exact coordinates; the icosahedron
    and dodecahedron live over the quadratic field with sqrt(5)."""
    name = name.lower()
    one, zero = Fraction(1), Fraction(0)
    if name == "tetrahedron":
        pts = [(one, one, one), (one, -one, -one),
               (-one, one, -one), (-one, -one, one)]
    elif name == "octahedron":
        pts = [(s * one, zero, zero) for s in (1, -1)]
        pts += [(zero, s * one, zero) for s in (1, -1)]
        pts += [(zero, zero, s * one) for s in (1, -1)]
    elif name == "cube":
        pts = [(sx * one, sy * one, sz * one)
               for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
    elif name == "icosahedron":
        q0 = QuadExt(Fraction(0), Fraction(0), 5)
        q1 = QuadExt(Fraction(1), Fraction(0), 5)
        pts = []
        for s1 in (1, -1):
            for s2 in (1, -1):
                pts.extend(_cyclic((q0, s1 * q1, s2 * _PHI)))
    elif name == "dodecahedron":
        q0 = QuadExt(Fraction(0), Fraction(0), 5)
        q1 = QuadExt(Fraction(1), Fraction(0), 5)
        inv_phi = q1 / _PHI
        pts = [(sx * q1, sy * q1, sz * q1)
               for sx in (1, -1) for sy in (1, -1) for sz in (1, -1)]
        for s1 in (1, -1):
            for s2 in (1, -1):
                pts.extend(_cyclic((q0, s1 * inv_phi, s2 * _PHI)))
    else:
        raise ValueError(f"unknown solid {name!r}")
    return PointConfig(3, pts, on_sphere=True)


PLATONIC_NAMES = ("tetrahedron", "octahedron", "cube",
                  "icosahedron", "dodecahedron")


def hemisphere_witness(S: PointConfig):
    """A vector w with w . P > 0 for every point, certifying that the
    configuration lies in an open hemisphere; None if no candidate works.

    Candidates: coordinate axes, the coordinate sum of the points, and
    normals of point triples (both signs).
    """

    def dot(u, p):
        return u[0] * p[0] + u[1] * p[1] + u[2] * p[2]

    cands = [(1, 0, 0), (0, 1, 0), (0, 0, 1),
             (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    total = tuple(sum(p[i] for p in S.points) for i in range(3))
    cands.append(total)
    for w in cands:
        if all(dot(w, p) > 0 for p in S.points):
            return w
    return None


def doubled(S: PointConfig) -> PointConfig:
    """S together with all its antipodes; S must lie in an open hemisphere."""
    if not S.on_sphere:
        raise ValueError("doubling requires an on-sphere configuration")
    if hemisphere_witness(S) is None:
        raise ValueError("configuration is not certified inside an open hemisphere")
    pts = list(S.points) + [tuple(-c for c in p) for p in S.points]
    return PointConfig(3, pts, on_sphere=True)


def doubled_free(n: int, seed: int,
                 attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """A doubled configuration of n free hemisphere points: exactly n^2
    distinct bisecting great circles and the closed-form region count with
    the full vertex-degree census."""
    from .sphere import count_config as sphere_count

    rng = stable_rng("doubled", n, seed)
    target = sphere_doubled_count(n)
    v4, v6, v8 = sphere_doubled_census(n)
    for _ in range(attempts):
        pts = {random_hemisphere_point(rng) for _ in range(n)}
        if len(pts) < n:
            continue
        D = doubled(PointConfig(3, sorted(pts), on_sphere=True))
        summary = sphere_count(D)
        hist = summary.multiplicity_histogram
        if (summary.circle_count == n * n
                and summary.regions_total == target
                and hist.get(2, 0) == v4
                and hist.get(3, 0) == v6
                and hist.get(4, 0) == v8):
            return D
    raise RetryBudgetExhausted(f"doubled free configuration n={n} failed")


def concyclic_plus_one(n: int, t: int, seed: int,
                       attempts: int = DEFAULT_ATTEMPTS) -> PointConfig:
    """n - 1 concyclic sphere points whose bisectors give t great circles,
    plus one generic point; total region count exactly 2nt.

    For t below 2n - 5 the concyclic part is a contiguous block of a regular
    t-gon (angle sums wrap around, collapsing bisectors); for larger t it
    uses integer angle multiples taken from a 1-D gap construction, whose
    pairwise sums have exactly t distinct values.
    """
    from .sphere import count_config as sphere_count

    if n < 5:
        raise ValueError("need n >= 5")
    if not n - 1 <= t <= (n - 1) * (n - 2) // 2:
        raise ValueError("t out of range")
    rng = stable_rng("concyclicplus", n, t, seed)
    r, z0 = Fraction(3, 5), Fraction(4, 5)

    if t >= 2 * n - 5:
        values = [int(p[0]) for p in gap_config_1d(n - 1, t + 1).points]
        base = concyclic_points(values, radius=r)
        ring = [(x, y, z0) for x, y in base]
        field = None
    else:
        field = CyclotomicField(lcm(t, 4))
        ring = []
        for j in range(n - 1):
            c, s = field.unit_point(j, t)
            ring.append((c * r, s * r, field.from_rational(z0)))

    target = 2 * n * t
    for _ in range(attempts):
        extra = random_sphere_point(rng)
        if field is not None:
            extra = tuple(field.from_rational(x) for x in extra)
        pts = ring + [extra]
        if len(set(pts)) < n:
            continue
        S = PointConfig(3, pts, on_sphere=True)
        if sphere_count(S).regions_total == target:
            return S
    raise RetryBudgetExhausted(f"concyclic-plus-one (n={n}, t={t}) failed")
