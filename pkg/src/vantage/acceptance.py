"""The one-shot verification suite: ten numbered criteria, each with its
stated tolerance (exact unless noted) and time budget.

Each criterion function raises AssertionError on failure; run_all collects
results and prints one PASS/FAIL line per criterion.  The same functions
back tests/test_acceptance.py and the CLI `verify` subcommand.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional

from . import arrangement2d, constructions, formulas, geometry, search, sphere, twovantage
from .geometry import PointConfig, Weights
from .seeding import stable_rng

DEFAULT_SEED = 20240801


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    elapsed: float
    budget: float


def criterion_1():
    """Maximum formulas: closed-form table values and polynomial identity."""
    expected = {3: 6, 4: 18, 5: 46, 6: 101, 7: 197, 8: 351}
    for n, M in expected.items():
        assert formulas.max_orderings(n, 2) == M, f"M({n},2) != {M}"
    for n in range(1, 31):
        assert formulas.max_orderings(n, 2) == formulas.max_orderings_poly2(n), \
            f"degree-4 polynomial deviates from the Stirling sum at n={n}"
    return "Max row (6,18,46,101,197,351) and polynomial identity for n<=30"


def criterion_2():
    """Free witnesses achieve the planar maximum for n = 3..7."""
    for n in range(3, 8):
        S = constructions.free_config(n, DEFAULT_SEED)
        got = arrangement2d.a_S(S).regions_total
        assert got == formulas.max_orderings(n, 2), f"n={n}: {got}"
    return "free witnesses for n=3..7 count to M(n,2)"


def criterion_3():
    """Minimum 2n-2, the exceptional n=4 witness, and strictness off the line."""
    for n in range(2, 13):
        S = constructions.equally_spaced_line(n)
        got = arrangement2d.a_S(S).regions_total
        assert got == 2 * n - 2, f"equally spaced n={n}: {got}"
    W = PointConfig(2, [(Fraction(x), Fraction(0)) for x in (1, 2, 4, 5)])
    assert arrangement2d.a_S(W).regions_total == 6, "witness {1,2,4,5}"
    rng = stable_rng("criterion3", DEFAULT_SEED)
    checked = 0
    while checked < 500:
        n = rng.randint(3, 7)
        pts = {(Fraction(rng.randint(-30, 30)), Fraction(rng.randint(-30, 30)))
               for _ in range(n)}
        if len(pts) < n:
            continue
        pts = sorted(pts)
        (x0, y0), (x1, y1) = pts[0], pts[1]
        if all((x1 - x0) * (y - y0) == (y1 - y0) * (x - x0) for x, y in pts):
            continue  # collinear sample; the bound is not strict there
        got = arrangement2d.a_S(PointConfig(2, pts)).regions_total
        assert got > 2 * n - 2, f"non-collinear {pts}: {got}"
        checked += 1
    return "2n-2 for n=2..12, {1,2,4,5} -> 6, 500 non-collinear samples strict"


def criterion_4():
    """1-D gap filling: every interval count in range, by midpoint census."""
    for n in range(6, 11):
        lo, hi = 2 * n - 2, (n * n - n + 2) // 2
        for k in range(lo, hi + 1):
            S = constructions.gap_config_1d(n, k)
            got = geometry.distinct_midpoints_1d(S) + 1
            assert got == k, f"n={n} k={k}: oracle {got}"
    return "full sweep k in [2n-2,(n^2-n+2)/2] for n=6..10 vs midpoint oracle"


def criterion_5():
    """Free-sum increment: measured merges and the closed-form identity."""
    rng = stable_rng("criterion5", DEFAULT_SEED)
    for trial in range(100):
        s = rng.randint(1, 4)
        t = rng.randint(1, 4)
        S = constructions.free_config(s, DEFAULT_SEED + trial)
        T = constructions.free_config(t, DEFAULT_SEED + 1000 + trial)
        U = constructions.free_sum(S, T, trial)
        got = arrangement2d.a_S(U).regions_total
        want = (arrangement2d.a_S(S).regions_total
                + arrangement2d.a_S(T).regions_total
                + formulas.free_sum_increment(s, t))
        assert got == want, f"trial {trial} ({s},{t}): {got} != {want}"
    for n in range(2, 13):
        for k in range(1, n):
            assert (formulas.max_orderings(k, 2) + formulas.max_orderings(n - k, 2)
                    + formulas.free_sum_increment(k, n - k)
                    == formulas.max_orderings(n, 2)), f"identity ({k},{n})"
    return "100 random free merges exact; M(k)+M(n-k)+g = M(n) for n<=12"


def criterion_6():
    """Gadget counts: trapezoid, near-maximum free sums, parallel lines, circle."""
    for k in range(2, 5):
        S = constructions.trapezoid_gadget(k, DEFAULT_SEED)
        got = arrangement2d.a_S(S).regions_total
        assert got == formulas.trapezoid_count(k), f"trapezoid k={k}: {got}"
    for n in range(4, 11):
        for k in range(1, (n - 2) // 2 + 1):
            S = constructions.deficit_config(n, k, DEFAULT_SEED)
            got = arrangement2d.a_S(S).regions_total
            assert got == formulas.max_orderings(n, 2) - k, \
                f"deficit n={n} k={k}: {got}"
    for k in (2, 3):
        for l in (1, 2):
            for m in range(0, 4):
                want = formulas.parallel_gadget_polynomial(k, l, m)
                assert want == formulas.parallel_gadget_poly_expanded(k, l, m), \
                    f"polynomial forms disagree at ({k},{l},{m})"
                if l == 1:
                    n = m + k
                    assert want == formulas.max_orderings(n, 2) - formulas.stirling1(k, k - 2), \
                        f"single-line closed form at ({k},{m})"
                S = constructions.parallel_lines_gadget(m, k, l, DEFAULT_SEED)
                got = arrangement2d.a_S(S).regions_total
                assert got == want, f"parallel ({m},{k},{l}): {got} != {want}"
    for n in range(3, 8):
        for k in range(2, n + 1):
            S = constructions.circle_gadget(n, k, DEFAULT_SEED)
            got = arrangement2d.a_S(S).regions_total
            assert got == formulas.circle_gadget_count(n, k), \
                f"circle n={n} k={k}: {got}"
    return "trapezoid k=2..4, deficits n<=10, parallel-lines forms, circle n<=7"


def criterion_7():
    """Sphere: Platonic counts, maxima, doubled census, plane-to-sphere
    translation, parity, concyclic minima."""
    platonic_expected = {"tetrahedron": 24, "octahedron": 48, "cube": 96,
                         "icosahedron": 240, "dodecahedron": 240}
    evens = []
    platonic_failures = []
    for name, want in platonic_expected.items():
        got = sphere.count_config(constructions.platonic(name)).regions_total
        evens.append(got)
        if got != want:
            platonic_failures.append(f"{name}: computed {got}, table says {want}")
    for n, want in zip((4, 6, 8, 12, 20), (24, 172, 646, 3852, 33632)):
        assert formulas.sphere_max(n) == want, f"sphere max formula n={n}"
    for n in range(2, 6):
        S = constructions.free_config(n, DEFAULT_SEED, dim=3)
        got = sphere.count_config(S).regions_total
        evens.append(got)
        assert got == formulas.sphere_max(n), f"sphere free witness n={n}: {got}"
    for n in range(3, 6):
        D = constructions.doubled_free(n, DEFAULT_SEED)
        summary = sphere.count_config(D)
        evens.append(summary.regions_total)
        v4, v6, v8 = formulas.sphere_doubled_census(n)
        hist = summary.multiplicity_histogram
        assert summary.circle_count == n * n, f"doubled n={n}: circles"
        assert summary.regions_total == formulas.sphere_doubled_count(n)
        assert (hist.get(2, 0), hist.get(3, 0), hist.get(4, 0)) == (v4, v6, v8), \
            f"doubled census n={n}: {hist}"
        assert summary.regions_total == 2 + v4 + 2 * v6 + 3 * v8
    rng = stable_rng("criterion7", DEFAULT_SEED)
    done = 0
    spread = 6
    while done < 50:
        n = rng.randint(3, 6)
        pts = {constructions.random_hemisphere_point(rng, denom=40 * spread)
               for _ in range(n)}
        if len(pts) < n:
            continue
        Ssph = PointConfig(3, sorted(pts), on_sphere=True)
        flat = PointConfig(2, [(x / z, y / z) for x, y, z in Ssph.points])
        if sphere.has_parallel_bisectors(flat):
            continue
        direct = sphere.count_config(Ssph).regions_total
        evens.append(direct)
        translated = sphere.plane_to_sphere_count(flat)
        assert direct == translated, \
            f"translation mismatch n={n}: sphere {direct}, u+2b {translated}"
        done += 1
    for n in range(4, 9):
        got = sphere.count_config(constructions.concyclic_equal_sphere(n)).regions_total
        evens.append(got)
        assert got == 2 * n, f"equally spaced concyclic n={n}: {got}"
    rect = sphere.count_config(constructions.sphere_rectangle()).regions_total
    evens.append(rect)
    assert rect == 8, f"rectangle witness: {rect}"
    assert all(v % 2 == 0 for v in evens), "odd spherical count observed"
    # The published table's dodecahedron entry (240) assumes only the 15
    # mirror planes and 10 antipodal circles occur as bisectors; the five
    # inscribed cubes contribute 30 more, and both the census counter and an
    # independent Euler-formula count give 1680.  Reported honestly as a
    # failure against the published value.
    assert not platonic_failures, (
        "all other sphere checks pass (maxima, doubled census, u+2b x50, "
        "parity, 2n minima), but " + "; ".join(platonic_failures)
        + " [55 distinct circles: 15 mirrors + 10 antipodal + 30 from "
        "inscribed cubes; independent Euler count concurs; published value "
        "unattainable by a correct counter]")
    return "Platonic 24/48/96/240/240, maxima, doubled census, u+2b x50, parity, 2n minima"


def criterion_8():
    """Achievability search at desk budget."""
    run3 = search.search_achievable(3, 2000, DEFAULT_SEED)
    assert set(run3.achieved) == {4, 6}, f"n=3: {sorted(run3.achieved)}"
    run4 = search.search_achievable(4, 20000, DEFAULT_SEED)
    want4 = set(range(6, 19)) - {9, 11, 13, 14, 15}
    assert set(run4.achieved) == want4, f"n=4: {sorted(run4.achieved)}"
    run5 = search.search_achievable(5, 78000, DEFAULT_SEED)
    frac = len(run5.achieved) / (46 - 8 + 1)
    assert frac >= 0.61, f"n=5 coverage {frac:.3f} < 0.61 ({sorted(run5.achieved)})"
    for run in (run3, run4, run5):
        for k, S in run.achieved.items():
            assert arrangement2d.a_S(S).regions_total == k, "witness reverify"
    return (f"n=3 exact, n=4 exact, n=5 coverage {100 * frac:.1f}%"
            " >= 61%, all witnesses reverified")


def criterion_9():
    """Two vantage points: 1-D reduction, tie classification, collinear
    sampling versus the closed-form bounds."""
    rng = stable_rng("criterion9", DEFAULT_SEED)
    done = 0
    while done < 10**4:
        n = rng.randint(2, 8)
        xs = {Fraction(rng.randint(-60, 60), rng.randint(1, 4)) for _ in range(n)}
        if len(xs) < n:
            continue
        S = PointConfig(1, [(x,) for x in sorted(xs)])
        vp = twovantage.VantagePair(
            (Fraction(rng.randint(-80, 80), rng.randint(1, 4)),),
            (Fraction(rng.randint(-80, 80), rng.randint(1, 4)),))
        two = twovantage.ordering_two_vantage(S, vp)
        if not two.is_strict:
            continue
        V = twovantage.reduce_to_single_1d(S, vp)
        one = geometry.ordering_from_vantage(S, V)
        assert one == two, f"reduction mismatch: {S.points} {vp}"
        done += 1
    grid = [Fraction(v, 2) for v in range(0, 17)]
    for pi in grid:
        for pj in grid:
            if pj <= pi:
                continue
            for v1 in grid:
                for v2 in grid:
                    if v2 <= v1 or {pi, pj} & {v1, v2}:
                        continue
                    tie = twovantage.has_tie_1d(pi, pj, v1, v2)
                    cls = twovantage.classify_tie_1d(pi, pj, v1, v2)
                    assert tie == (cls != "none"), \
                        f"tie law fails at {(pi, pj, v1, v2)}: {tie} vs {cls}"
    table5 = {4: 8, 5: 16, 6: 30, 7: 54, 8: 94}
    details = []
    for n, b_n in table5.items():
        S = constructions.equally_spaced_line(n)
        run = twovantage.sample_two_vantage_orderings(
            S, budget=10**6, seed=DEFAULT_SEED, target=b_n)
        count = len(run.found)
        assert count == b_n, f"n={n}: sampled {count}, want {b_n}"
        assert count <= 2 ** (n - 1) and count <= formulas.velo_bound(n)
        for perm in run.found:
            o = geometry.Ordering.strict(perm)
            assert twovantage.contiguity_check(o), f"contiguity {perm}"
            assert twovantage.is_velo_valid(twovantage.updown(o)), f"velo {perm}"
        details.append(f"b_{n}={count}@{run.samples_used}")
    cn = [formulas.velo_bound(n) for n in range(2, 11)]
    assert cn == [2, 4, 8, 16, 30, 54, 94, 160, 268], f"c_n row: {cn}"
    return "reduction x10^4, tie grid, " + ", ".join(details) + ", c_n row"


def criterion_10():
    """Weighted preferences: transform equivalence and the bisector line."""
    rng = stable_rng("criterion10", DEFAULT_SEED)
    for trial in range(1000):
        n = rng.randint(2, 6)
        pts = {(Fraction(rng.randint(-20, 20)), Fraction(rng.randint(-20, 20)))
               for _ in range(n)}
        S = PointConfig(2, sorted(pts))
        V = (Fraction(rng.randint(-20, 20)), Fraction(rng.randint(-20, 20)))
        w = Weights((Fraction(rng.randint(1, 9), rng.randint(1, 4)),
                     Fraction(rng.randint(1, 9), rng.randint(1, 4))))
        via_transform = geometry.ordering_weighted(S, V, w)
        direct = geometry._ordering_by_keys(
            [geometry.weighted_squared_distance(p, V, w) for p in S.points])
        assert via_transform == direct, f"trial {trial}"
    for trial in range(200):
        pi = (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
        pj = (Fraction(rng.randint(-9, 9)), Fraction(rng.randint(-9, 9)))
        if pi == pj:
            continue
        w = Weights((Fraction(rng.randint(1, 9)), Fraction(rng.randint(1, 9))))
        line = geometry.bisector_line_weighted(pi, pj, w)
        wx, wy = w.values
        ti = (wx * pi[0], wy * pi[1])
        tj = (wx * pj[0], wy * pj[1])
        plain = arrangement2d.bisector_line(ti, tj)
        pulled = arrangement2d.Line.canonical(plain.a * wx, plain.b * wy, plain.c)
        assert line == pulled, f"line pullback {pi} {pj} {w}"
        dx, dy = pj[0] - pi[0], pj[1] - pi[1]
        if wx != wy and dx != 0 and dy != 0:
            cross = line.a * dy - line.b * dx
            assert cross != 0, f"unexpectedly perpendicular at {pi} {pj} {w}"
    return "10^3 transform equivalences, bisector pullback, non-perpendicular slopes"


CRITERIA: List[tuple] = [
    (1, "maximum formulas", criterion_1, 1.0),
    (2, "free witnesses", criterion_2, 30.0),
    (3, "minimum configurations", criterion_3, 60.0),
    (4, "1-D gap filling", criterion_4, 10.0),
    (5, "free-sum lemma", criterion_5, 120.0),
    (6, "gadget counts", criterion_6, 300.0),
    (7, "sphere counts", criterion_7, 300.0),
    (8, "achievability search", criterion_8, 900.0),
    (9, "two vantage points", criterion_9, 1800.0),
    (10, "weighted preferences", criterion_10, 10.0),
]


def run_criterion(number: int) -> CriterionResult:
    for num, name, fn, budget in CRITERIA:
        if num == number:
            start = time.monotonic()
            try:
                detail = fn()
                passed = True
            except AssertionError as exc:
                detail = str(exc)
                passed = False
            elapsed = time.monotonic() - start
            if passed and elapsed > budget:
                passed = False
                detail += f" [exceeded {budget:.0f}s budget]"
            return CriterionResult(num, name, passed, detail, elapsed, budget)
    raise ValueError(f"no criterion {number}")


def run_all(numbers: Optional[List[int]] = None,
            printer: Callable[[str], None] = print) -> List[CriterionResult]:
    results = []
    for num, name, _, _ in CRITERIA:
        if numbers and num not in numbers:
            continue
        res = run_criterion(num)
        status = "PASS" if res.passed else "FAIL"
        printer(f"[{status}] criterion {res.number} ({res.name}): "
                f"{res.detail} ({res.elapsed:.1f}s / budget {res.budget:.0f}s)")
        results.append(res)
    return results
