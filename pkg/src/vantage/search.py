"""Seeded randomized search for achievable planar region counts.

The search combines deterministic structured candidates (collinear rows,
gadgets, free sums) with seed-block randomized sampling.  Blocks are merged
in index order, so the result depends only on (n, budget, seed), never on
scheduling or worker count.  Every achieved value is stored with a witness
configuration that re-verifies under the exact counter.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .arrangement2d import a_S
from .constructions import (
    RetryBudgetExhausted,
    concyclic_equal,
    concyclic_points,
    deficit_config,
    free_config,
    free_sum,
    gap_config_1d,
    trapezoid_gadget,
    circle_gadget,
    parallel_lines_gadget,
)
from .formulas import max_orderings, max_orderings_poly1, min_orderings
from .geometry import PointConfig, config_from_text, config_to_text
from .seeding import stable_rng

BLOCK_SIZE = 1000
DENOM_BOUND = 64


@dataclass
class SearchRun:
    n: int
    budget: int
    seed: int
    achieved: Dict[int, PointConfig] = field(default_factory=dict)
    samples_used: int = 0
    elapsed: float = 0.0

    def record(self, S: PointConfig, count: Optional[int] = None) -> int:
        k = count if count is not None else a_S(S).regions_total
        self.achieved.setdefault(k, S)
        return k


def _structured_candidates(n: int, seed: int) -> List[PointConfig]:
    """Deterministic candidates covering both closed-form ranges: the full
    collinear band and the near-maximum band, plus every gadget that fits."""
    out: List[PointConfig] = []
    for k in range(min_orderings(n), max_orderings_poly1(n) + 1):
        pts = [(p[0], Fraction(0)) for p in gap_config_1d(n, k).points]
        out.append(PointConfig(2, pts))
    if n == 4:
        out.append(concyclic_equal(4))

    def attempt(fn, *args, **kwargs):
        try:
            out.append(fn(*args, **kwargs))
        except RetryBudgetExhausted:
            pass

    attempt(free_config, n, seed)
    for k in range(1, (n - 2) // 2 + 1):
        attempt(deficit_config, n, k, seed)
    if n % 2 == 0:
        attempt(trapezoid_gadget, n // 2, seed)
    for k in range(3, n + 1):
        attempt(circle_gadget, n, k, seed)
    for k in range(2, n + 1):
        for l in range(1, n // k + 1):
            attempt(parallel_lines_gadget, n - k * l, k, l, seed)
    # collinear block merged freely with a free remainder
    for j in range(2, n):
        rest = n - j
        for k in range(min_orderings(j) if j > 1 else 1,
                       max_orderings_poly1(j) + 1):
            pts = [(p[0], Fraction(0)) for p in gap_config_1d(j, k).points]
            try:
                S = PointConfig(2, pts)
                T = free_config(rest, seed) if rest > 1 else PointConfig(
                    2, [(Fraction(0), Fraction(0))])
                out.append(free_sum(S, T, seed))
            except RetryBudgetExhausted:
                pass
    return out


def _random_config(rng, n: int) -> Optional[PointConfig]:
    """A random small configuration; small boxes make the coincidences that
    produce intermediate counts."""
    style = rng.random()
    pts = set()
    if style < 0.55:
        box = rng.randint(2, 4 + 2 * n)
        denom = rng.choice((1, 1, 2, 3, 4, DENOM_BOUND))
        for _ in range(n):
            pts.add((Fraction(rng.randint(-box, box), rng.randint(1, denom)),
                     Fraction(rng.randint(-box, box), rng.randint(1, denom))))
    elif style < 0.8:
        # a collinear block plus loose points
        j = rng.randint(2, n)
        box = rng.randint(3, 3 * n)
        xs = rng.sample(range(-box, box + 1), j)
        d = (Fraction(rng.randint(-4, 4)), Fraction(rng.randint(-4, 4)))
        if d == (0, 0):
            d = (Fraction(1), Fraction(0))
        base = (Fraction(rng.randint(-box, box)), Fraction(rng.randint(-box, box)))
        for x in xs:
            pts.add((base[0] + x * d[0], base[1] + x * d[1]))
        for _ in range(n - j):
            pts.add((Fraction(rng.randint(-box, box)),
                     Fraction(rng.randint(-box, box))))
    else:
        # a concyclic block plus loose points
        j = rng.randint(3, n)
        angles = rng.sample(range(0, 5 * n), j)
        for p in concyclic_points(angles, radius=Fraction(rng.randint(1, 6))):
            pts.add(p)
        box = rng.randint(3, 3 * n)
        for _ in range(n - j):
            pts.add((Fraction(rng.randint(-box, box)),
                     Fraction(rng.randint(-box, box))))
    if len(pts) != n:
        return None
    return PointConfig(2, sorted(pts))


def _mutate(rng, S: PointConfig) -> Optional[PointConfig]:
    """Move one point of a witness a little; nearby configurations often
    land on neighbouring counts."""
    pts = list(S.points)
    i = rng.randrange(len(pts))
    denom = rng.choice((1, 2, 4, 8))
    dx = Fraction(rng.randint(-3, 3), denom)
    dy = Fraction(rng.randint(-3, 3), denom)
    pts[i] = (pts[i][0] + dx, pts[i][1] + dy)
    if len(set(pts)) != len(pts):
        return None
    return PointConfig(2, pts)


def _run_block(n: int, seed: int, block: int, count: int,
               pool: Tuple[str, ...]) -> Dict[int, str]:
    """One deterministic random block; returns achieved count -> config
    text.  The pool of earlier witnesses feeds the mutation phase."""
    rng = stable_rng("search", n, seed, block)
    witnesses = [config_from_text(t) for t in pool]
    out: Dict[int, str] = {}
    lo, hi = min_orderings(n), max_orderings(n, 2)
    for i in range(count):
        if witnesses and i % 3 == 2:
            S = _mutate(rng, rng.choice(witnesses))
        else:
            S = _random_config(rng, n)
        if S is None:
            continue
        k = a_S(S).regions_total
        if not lo <= k <= hi:
            raise AssertionError(f"count {k} outside proven bounds for n={n}")
        if k not in out:
            out[k] = config_to_text(S)
            witnesses.append(S)
    return out


def search_achievable(n: int, budget: int, seed: int,
                      jobs: int = 1) -> SearchRun:
    """Search for achievable region counts of n-point planar configurations
    with the given random-sample budget."""
    if n < 3:
        raise ValueError("need n >= 3")
    start = time.monotonic()
    run = SearchRun(n=n, budget=budget, seed=seed)
    for S in _structured_candidates(n, seed):
        run.record(S)
    blocks = []
    used = 0
    idx = 0
    while used < budget:
        size = min(BLOCK_SIZE, budget - used)
        blocks.append((idx, size))
        used += size
        idx += 1
    pool_snapshot = tuple(config_to_text(S) for S in run.achieved.values())
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            futures = [ex.submit(_run_block, n, seed, b, size, pool_snapshot)
                       for b, size in blocks]
            results = [f.result() for f in futures]
    else:
        results = [_run_block(n, seed, b, size, pool_snapshot)
                   for b, size in blocks]
    for res in results:
        for k, text in res.items():
            run.achieved.setdefault(k, config_from_text(text))
    run.samples_used = used
    run.elapsed = time.monotonic() - start
    return run


def coverage_report(run: SearchRun):
    """(min, max, percentage-of-range) of the achieved counts."""
    if not run.achieved:
        raise ValueError("empty search run")
    lo, hi = min_orderings(run.n), max_orderings(run.n, 2)
    keys = sorted(run.achieved)
    pct = 100.0 * len(keys) / (hi - lo + 1)
    return keys[0], keys[-1], f"{pct:.2f}%"


def write_witness_store(run: SearchRun, path: str) -> None:
    with open(path, "a", encoding="utf-8") as fh:
        for k in sorted(run.achieved):
            rec = {
                "n": run.n,
                "k": k,
                "seed": run.seed,
                "config": config_to_text(run.achieved[k]),
            }
            fh.write(json.dumps(rec) + "\n")


def load_witness_store(path: str) -> List[dict]:
    with open(path, "r", encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def verify_witness_store(path: str) -> List[dict]:
    """Recount every stored witness; returns the list of mismatching
    records (empty for a sound store)."""
    bad = []
    for rec in load_witness_store(path):
        S = config_from_text(rec["config"])
        actual = a_S(S).regions_total
        if S.n != rec["n"] or actual != rec["k"]:
            bad.append({**rec, "actual": actual})
    return bad


def store_report(path: str) -> str:
    """Aligned min/max/coverage rows regenerated from a witness store."""
    by_n: Dict[int, set] = {}
    for rec in load_witness_store(path):
        by_n.setdefault(rec["n"], set()).add(rec["k"])
    lines = ["  n      min      max    coverage"]
    for n in sorted(by_n):
        lo, hi = min_orderings(n), max_orderings(n, 2)
        ks = by_n[n]
        pct = 100.0 * len(ks) / (hi - lo + 1)
        lines.append(f"{n:>3} {min(ks):>8} {max(ks):>8} {pct:>10.2f}%")
    return "\n".join(lines)
