"""Point configurations, vantage orderings, and 1-D midpoint combinatorics.

A configuration is an ordered list of points with exact coordinates in
dimension 1, 2, or 3 (optionally constrained to a sphere about the origin).
Orderings rank points by distance from a vantage point; ties are kept as
explicit blocks rather than broken arbitrarily.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .exactnum import CycloNum, QuadExt, format_scalar, parse_scalar


def squared_distance(p: Sequence, q: Sequence):
    total = None
    for a, b in zip(p, q):
        d = a - b
        term = d * d
        total = term if total is None else total + term
    return total


def _norm2(p: Sequence):
    return squared_distance(p, tuple(0 * c for c in p))


@dataclass(frozen=True)
class PointConfig:
    """An ordered list of distinct points with exact coordinates.

    Indices are 1-based everywhere in the public interface, matching the
    usual P_1, ..., P_n naming.
    """

    dimension: int
    points: Tuple[tuple, ...]
    on_sphere: bool = False

    def __post_init__(self):
        if self.dimension not in (1, 2, 3):
            raise ValueError("dimension must be 1, 2, or 3")
        object.__setattr__(self, "points", tuple(tuple(p) for p in self.points))
        for p in self.points:
            if len(p) != self.dimension:
                raise ValueError("point arity does not match dimension")
        if len(set(self.points)) != len(self.points):
            raise ValueError("points must be distinct")
        if self.on_sphere:
            if self.dimension != 3:
                raise ValueError("on_sphere requires dimension 3")
            norms = {_norm2(p) for p in self.points}
            if len(norms) > 1:
                raise ValueError("on_sphere requires all points at equal norm")

    @property
    def n(self) -> int:
        return len(self.points)

    def point(self, index: int) -> tuple:
        """The point with 1-based index."""
        return self.points[index - 1]

    def translate(self, offset: Sequence) -> "PointConfig":
        pts = [tuple(a + b for a, b in zip(p, offset)) for p in self.points]
        return PointConfig(self.dimension, pts, False)

    def scale(self, factor) -> "PointConfig":
        pts = [tuple(factor * a for a in p) for p in self.points]
        return PointConfig(self.dimension, pts, self.on_sphere)


@dataclass(frozen=True)
class Ordering:
    """Point indices from nearest to farthest, with tie blocks.

    ranks is a permutation of 1..n.  tie_groups partitions ranks into
    consecutive blocks of equal distance; all-singleton blocks mean the
    ordering is strict.
    """

    ranks: Tuple[int, ...]
    tie_groups: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.ranks)
        if sorted(self.ranks) != list(range(1, n + 1)):
            raise ValueError("ranks must be a permutation of 1..n")
        flat = [i for block in self.tie_groups for i in block]
        if flat != list(self.ranks):
            raise ValueError("tie_groups must partition ranks in order")

    @property
    def is_strict(self) -> bool:
        return all(len(b) == 1 for b in self.tie_groups)

    @staticmethod
    def strict(ranks: Sequence[int]) -> "Ordering":
        return Ordering(tuple(ranks), tuple((i,) for i in ranks))


@dataclass(frozen=True)
class Weights:
    """Per-axis positive weights for the weighted distance d_w."""

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(Fraction(v) if isinstance(v, int) else v for v in self.values)
        object.__setattr__(self, "values", vals)
        if any(v <= 0 for v in vals):
            raise ValueError("weights must be positive")


def _ordering_by_keys(keys) -> Ordering:
    """Group 1-based indices into tie blocks by exact key equality."""
    groups = {}
    order = []
    for idx, key in enumerate(keys, start=1):
        if key not in groups:
            groups[key] = []
            order.append(key)
        groups[key].append(idx)
    # exact subtraction-based sort would need order comparisons; keys here
    # are rationals or QuadExt values, both of which are totally ordered
    order.sort()
    blocks = tuple(tuple(groups[k]) for k in order)
    ranks = tuple(i for b in blocks for i in b)
    return Ordering(ranks, blocks)


def ordering_from_vantage(S: PointConfig, V: Sequence) -> Ordering:
    """Rank the points of S by squared distance from the vantage point V."""
    V = tuple(V)
    if len(V) != S.dimension:
        raise ValueError("vantage point dimension mismatch")
    return _ordering_by_keys([squared_distance(p, V) for p in S.points])


def weighted_transform(S: PointConfig, w: Weights) -> PointConfig:
    """Scale each axis by its weight; ordering by d_w of the original equals
    plain ordering of the transformed configuration."""
    if len(w.values) != S.dimension:
        raise ValueError("weight count must equal dimension")
    pts = [tuple(wk * xk for wk, xk in zip(w.values, p)) for p in S.points]
    return PointConfig(S.dimension, pts, False)


def weighted_point(V: Sequence, w: Weights) -> tuple:
    return tuple(wk * xk for wk, xk in zip(w.values, V))


def weighted_squared_distance(p: Sequence, q: Sequence, w: Weights):
    total = None
    for wk, a, b in zip(w.values, p, q):
        d = a - b
        term = wk * wk * d * d
        total = term if total is None else total + term
    return total


def ordering_weighted(S: PointConfig, V: Sequence, w: Weights) -> Ordering:
    """Rank by the weighted distance d_w, via the axis-scaling equivalence."""
    return ordering_from_vantage(weighted_transform(S, w), weighted_point(V, w))


def bisector_line_weighted(p_i: Sequence, p_j: Sequence, w: Weights):
    """The planar locus of vantage points weighted-equidistant from two points.

    Coefficients are (wx^2 (xj - xi), wy^2 (yj - yi)) with right-hand side
    (wx^2 (xj^2 - xi^2) + wy^2 (yj^2 - yi^2)) / 2.  With unit weights this
    is the perpendicular bisector.
    """
    from .arrangement2d import Line

    if tuple(p_i) == tuple(p_j):
        raise ValueError("coincident points have no bisector")
    wx, wy = w.values
    (xi, yi), (xj, yj) = p_i, p_j
    a = wx * wx * (xj - xi)
    b = wy * wy * (yj - yi)
    c = (wx * wx * (xj * xj - xi * xi) + wy * wy * (yj * yj - yi * yi)) / 2
    return Line.canonical(a, b, c)


def distinct_midpoints_1d(S: PointConfig) -> int:
    """Number of distinct midpoints (a_i + a_j)/2 over pairs; the ordering
    count for one vantage point on the line is this plus one."""
    if S.dimension != 1:
        raise ValueError("requires a 1-D configuration")
    xs = [p[0] for p in S.points]
    mids = {(xs[i] + xs[j]) / 2 for i in range(len(xs)) for j in range(i + 1, len(xs))}
    return len(mids)


def count_orderings_1d(S: PointConfig) -> int:
    return distinct_midpoints_1d(S) + 1


def distinct_pairwise_sums(values: Sequence[int]) -> int:
    """Size of the restricted sumset {a_i + a_j : i < j}."""
    vals = list(values)
    if len(set(vals)) != len(vals):
        raise ValueError("elements must be distinct")
    sums = {vals[i] + vals[j] for i in range(len(vals)) for j in range(i + 1, len(vals))}
    return len(sums)


# ---------------------------------------------------------------------------
# Configuration file format
# ---------------------------------------------------------------------------
#
# Header line:  dim=<1|2|3> field=<Q|Q(sqrtD)> sphere=<0|1>
# Body: one point per line, whitespace-separated exact scalars
# ("p/q" for rationals, "a+b√D" for quadratic values).


def config_to_text(S: PointConfig) -> str:
    d = None
    for p in S.points:
        for x in p:
            if isinstance(x, QuadExt) and x.b != 0:
                d = x.D
            if isinstance(x, CycloNum):
                raise ValueError("cyclotomic configurations are not serializable")
    fieldtag = "Q" if d is None else f"Q(sqrt{d})"
    lines = [f"dim={S.dimension} field={fieldtag} sphere={1 if S.on_sphere else 0}"]
    for p in S.points:
        lines.append(" ".join(format_scalar(x) for x in p))
    return "\n".join(lines) + "\n"


def config_from_text(text: str) -> PointConfig:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty configuration file")
    header = dict(item.split("=", 1) for item in lines[0].split())
    try:
        dim = int(header["dim"])
        fieldtag = header["field"]
        sphere = header["sphere"] == "1"
    except KeyError as exc:
        raise ValueError(f"malformed header: missing {exc}")
    field_spec = None
    if fieldtag.startswith("Q(sqrt"):
        field_spec = int(fieldtag[len("Q(sqrt"):].rstrip(")"))
    elif fieldtag != "Q":
        raise ValueError(f"unknown field tag {fieldtag!r}")
    points = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != dim:
            raise ValueError(f"expected {dim} scalars per line, got {len(parts)}")
        points.append(tuple(parse_scalar(t, field_spec) for t in parts))
    return PointConfig(dim, points, sphere)


def write_config(S: PointConfig, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(config_to_text(S))


def read_config(path) -> PointConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return config_from_text(fh.read())
