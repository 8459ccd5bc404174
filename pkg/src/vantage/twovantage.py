"""Orderings induced by the sum of distances to two vantage points.

Comparisons of sqrt-sum distances are exact (no epsilon thresholds); the
planar sampler uses floating point only to propose a candidate permutation,
which is then confirmed or rejected by exact comparisons before it counts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .exactnum import cmp_sqrt_sum
from .geometry import Ordering, PointConfig, squared_distance
from .seeding import stable_rng


@dataclass(frozen=True)
class VantagePair:
    v1: tuple
    v2: tuple

    @property
    def coincident(self) -> bool:
        return self.v1 == self.v2


def _tie_groups_from_sorted(indices: List[int], cmp) -> Ordering:
    blocks: List[List[int]] = []
    for idx in indices:
        if blocks and cmp(blocks[-1][-1], idx) == 0:
            blocks[-1].append(idx)
        else:
            blocks.append([idx])
    ranks = tuple(i for b in blocks for i in b)
    return Ordering(ranks, tuple(tuple(b) for b in blocks))


def ordering_two_vantage(S: PointConfig, vp: VantagePair) -> Ordering:
    """Rank points by d(V1, P) + d(V2, P) with exact comparisons."""
    v1, v2 = tuple(vp.v1), tuple(vp.v2)
    if len(v1) != S.dimension or len(v2) != S.dimension:
        raise ValueError("vantage dimension mismatch")
    if S.dimension == 1:
        # absolute values are rational; no square roots needed
        keys = [abs(p[0] - v1[0]) + abs(p[0] - v2[0]) for p in S.points]
        from .geometry import _ordering_by_keys

        return _ordering_by_keys(keys)
    d1 = [squared_distance(p, v1) for p in S.points]
    d2 = [squared_distance(p, v2) for p in S.points]

    def cmp(i: int, j: int) -> int:
        return cmp_sqrt_sum(d1[i - 1], d2[i - 1], d1[j - 1], d2[j - 1])

    indices = sorted(range(1, S.n + 1), key=cmp_to_key(cmp))
    return _tie_groups_from_sorted(indices, cmp)


def classify_tie_1d(p_i, p_j, v1, v2) -> str:
    """How a tie between two line points arises for vantage points V1, V2:
    'containment' when both points lie strictly between the vantages (each
    sum equals the vantage distance), 'midpoint' when the points straddle
    the vantages with coinciding midpoints, 'none' otherwise."""
    a, b = sorted((Fraction(p_i), Fraction(p_j)))
    w1, w2 = sorted((Fraction(v1), Fraction(v2)))
    if w1 < a and b < w2:
        return "containment"
    if a < w1 and w2 < b and a + b == w1 + w2:
        return "midpoint"
    return "none"


def has_tie_1d(p_i, p_j, v1, v2) -> bool:
    si = abs(p_i - v1) + abs(p_i - v2)
    sj = abs(p_j - v1) + abs(p_j - v2)
    return si == sj


def reduce_to_single_1d(S: PointConfig, vp: VantagePair):
    """The single vantage point (V1 + V2) / 2, valid whenever the
    two-vantage ordering is tie-free; the orderings then coincide."""
    if S.dimension != 1:
        raise ValueError("requires a 1-D configuration")
    ordering = ordering_two_vantage(S, vp)
    if not ordering.is_strict:
        raise ValueError("ties present; reduction hypothesis violated")
    return ((vp.v1[0] + vp.v2[0]) / 2,)


# ---------------------------------------------------------------------------
# Up-down sequences and structural checks for collinear configurations
# ---------------------------------------------------------------------------


def updown(o: Ordering) -> Tuple[int, ...]:
    """Binary increase/decrease pattern of line positions along a strict
    ordering (points indexed by their position on the line)."""
    if not o.is_strict:
        raise ValueError("up-down sequence requires a strict ordering")
    r = o.ranks
    return tuple(1 if r[i + 1] > r[i] else 0 for i in range(len(r) - 1))


def _runs(seq: Sequence[int]) -> List[Tuple[int, int]]:
    runs = []
    for bit in seq:
        if runs and runs[-1][0] == bit:
            runs[-1] = (bit, runs[-1][1] + 1)
        else:
            runs.append((bit, 1))
    return runs


def is_velo_valid(seq: Sequence[int]) -> bool:
    """True unless a doubled 0-run and a doubled 1-run both occur away from
    the ends of the sequence."""
    runs = _runs(seq)
    interior = runs[1:-1]
    has00 = any(bit == 0 and length >= 2 for bit, length in interior)
    has11 = any(bit == 1 and length >= 2 for bit, length in interior)
    return not (has00 and has11)


def contiguity_check(o: Ordering) -> bool:
    """True iff every prefix of the ordering is a contiguous index block."""
    if not o.is_strict:
        raise ValueError("requires a strict ordering")
    lo = hi = o.ranks[0]
    for idx in o.ranks[1:]:
        if idx == lo - 1:
            lo = idx
        elif idx == hi + 1:
            hi = idx
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# Sampling distinct two-vantage orderings in the plane
# ---------------------------------------------------------------------------


@dataclass
class TwoVantageRun:
    n: int
    seed: int
    budget: int
    samples_used: int
    found: Dict[Tuple[int, ...], VantagePair]

    @property
    def orderings(self) -> Set[Tuple[int, ...]]:
        return set(self.found)


def _float_points(S: PointConfig) -> List[Tuple[float, float]]:
    return [(float(p[0]), float(p[1])) for p in S.points]


def _exact_confirm(S: PointConfig, v1: tuple, v2: tuple,
                   perm: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """Exact adjacent-pair verification of a float-proposed permutation.
    Returns the confirmed strict permutation, or None on a tie or when the
    full exact ordering disagrees with a strict float ordering."""
    d1 = [squared_distance(p, v1) for p in S.points]
    d2 = [squared_distance(p, v2) for p in S.points]
    clean = True
    for a, b in zip(perm, perm[1:]):
        c = cmp_sqrt_sum(d1[a - 1], d2[a - 1], d1[b - 1], d2[b - 1])
        if c == 0:
            return None
        if c > 0:
            clean = False
            break
    if clean:
        return perm
    ordering = ordering_two_vantage(S, VantagePair(v1, v2))
    return ordering.ranks if ordering.is_strict else None


def _sample_block(S: PointConfig, seed: int, block: int, count: int,
                  known: Set[Tuple[int, ...]]) -> Dict[Tuple[int, ...], VantagePair]:
    """One deterministic sampling block.  Draws stratified float vantage
    pairs, plus local refinements around fresh discoveries, and confirms
    candidate permutations exactly."""
    rng = stable_rng("twovantage", S.points, seed, block)
    fpts = _float_points(S)
    n = S.n
    xs = [p[0] for p in fpts]
    lo, hi = min(xs), max(xs)
    span = max(hi - lo, 1.0)
    found: Dict[Tuple[int, ...], VantagePair] = {}
    pending: List[Tuple[float, float, float, float]] = []

    def propose(x1, y1, x2, y2):
        sums = []
        for (px, py) in fpts:
            sums.append(math.sqrt((px - x1) ** 2 + (py - y1) ** 2)
                        + math.sqrt((px - x2) ** 2 + (py - y2) ** 2))
        perm = tuple(sorted(range(1, n + 1), key=lambda i: sums[i - 1]))
        if perm in known or perm in found:
            return
        v1 = (Fraction(x1), Fraction(y1))
        v2 = (Fraction(x2), Fraction(y2))
        confirmed = _exact_confirm(S, v1, v2, perm)
        if confirmed is None or confirmed in known or confirmed in found:
            return
        found[confirmed] = VantagePair(v1, v2)
        pending.append((x1, y1, x2, y2))

    def random_coord():
        x = lo + (rng.random() * 3 - 1) * span
        mag = 10.0 ** rng.uniform(-3, 1.2)
        y = mag * span * (1 if rng.random() < 0.5 else -1)
        if rng.random() < 0.25:
            y = 0.0 if rng.random() < 0.5 else y * 1e-3
        return x, y

    for _ in range(count):
        x1, y1 = random_coord()
        x2, y2 = random_coord()
        propose(x1, y1, x2, y2)
        while pending:
            bx1, by1, bx2, by2 = pending.pop()
            for _ in range(30):
                scale = 10.0 ** rng.uniform(-6, 0)
                propose(bx1 + rng.gauss(0, scale * span),
                        by1 + rng.gauss(0, scale * span),
                        bx2 + rng.gauss(0, scale * span),
                        by2 + rng.gauss(0, scale * span))
    return found


def sample_two_vantage_orderings(S: PointConfig, budget: int, seed: int,
                                 block_size: int = 500,
                                 target: Optional[int] = None) -> TwoVantageRun:
    """Distinct strict two-vantage orderings observed over sampled vantage
    pairs: a deterministic-per-seed lower bound on the true count.

    Work is partitioned into fixed seed blocks merged in order, so the
    result does not depend on scheduling; an optional target stops after
    the first block that reaches it.
    """
    if S.dimension != 2:
        raise ValueError("sampler requires a planar configuration")
    found: Dict[Tuple[int, ...], VantagePair] = {}
    used = 0
    block = 0
    while used < budget:
        count = min(block_size, budget - used)
        new = _sample_block(S, seed, block, count, set(found))
        for perm, vp in new.items():
            found.setdefault(perm, vp)
        used += count
        block += 1
        if target is not None and len(found) >= target:
            break
    return TwoVantageRun(S.n, seed, budget, used, found)
