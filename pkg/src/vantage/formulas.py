"""Closed-form counting formulas and the integer sequences behind them.

Everything returns exact integers; polynomial divisions are checked to have
zero remainder so a mistyped coefficient fails loudly instead of silently
truncating.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb


def exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


@lru_cache(maxsize=None)
def stirling1(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind: permutations of n
    elements with exactly k cycles."""
    if k <= 0 or k > n:
        return 1 if n == 0 and k == 0 else 0
    if n == 0:
        return 0
    return stirling1(n - 1, k - 1) + (n - 1) * stirling1(n - 1, k)


@lru_cache(maxsize=None)
def fib(k: int) -> int:
    """Fibonacci numbers with F_1 = F_2 = 1."""
    if k <= 0:
        return 0
    if k <= 2:
        return 1
    return fib(k - 1) + fib(k - 2)


def max_orderings(n: int, d: int) -> int:
    """M(n, d): the maximum number of single-vantage orderings of n points
    in dimension d, as a sum of Stirling numbers."""
    if n < 1 or d < 0:
        raise ValueError("need n >= 1 and d >= 0")
    return sum(stirling1(n, n - i) for i in range(min(d, n - 1) + 1))


def max_orderings_poly2(n: int) -> int:
    """Degree-4 polynomial form of M(n, 2)."""
    return exact_div(3 * n**4 - 10 * n**3 + 21 * n**2 - 14 * n + 24, 24)


def max_orderings_poly1(n: int) -> int:
    """Closed form of M(n, 1) = (n^2 - n + 2) / 2."""
    return exact_div(n * n - n + 2, 2)


def min_orderings(n: int) -> int:
    """m(n, d) = 2n - 2, independent of the dimension."""
    if n < 2:
        raise ValueError("minimum is defined for n >= 2")
    return 2 * n - 2


def free_sum_increment(s: int, t: int) -> int:
    """g(s, t): extra regions created when an s-point and a t-point planar
    configuration are merged freely."""
    if s < 1 or t < 1:
        raise ValueError("need s, t >= 1")
    num = (3 * s**2 * t**2 + 2 * s**3 * t - 5 * s**2 * t
           + 2 * s * t**3 - 5 * s * t**2 + 7 * s * t - 4)
    return exact_div(num, 4)


def trapezoid_count(k: int) -> int:
    """Count for the 2k-point gadget with k - 1 forced parallel pairs."""
    if k < 1:
        raise ValueError("need k >= 1")
    return max_orderings(2 * k, 2) - k + 1


def parallel_gadget_polynomial(k: int, l: int, m: int) -> int:
    """Count for m free points plus l parallel lines of k collinear points
    each (n = m + k*l), as the explicit degree-4 polynomial in n.

    The arrangement loses l * s(k, k-2) degree-3 concurrences relative to a
    free configuration of the same size, where s(k, k-2) = 2C(k,3) + 3C(k,4).
    """
    if k < 2 or l < 1 or m < 0:
        raise ValueError("need k >= 2, l >= 1, m >= 0")
    n = m + k * l
    return max_orderings(n, 2) - l * (2 * comb(k, 3) + 3 * comb(k, 4))


def parallel_gadget_poly_expanded(k: int, l: int, m: int) -> int:
    """Fully expanded degree-4 form of the parallel-lines count; kept as an
    independent transcription so tests can cross-check the factored form."""
    num = (18 * k**2 * l**2 * m**2 + 12 * k**3 * l**3 * m - 30 * k**2 * l**2 * m
           + 3 * k**4 * l**4 - 10 * k**3 * l**3 + 21 * k**2 * l**2
           - 3 * k**4 * l + 10 * k**3 * l - 9 * k**2 * l
           + 12 * k * l * m**3 - 30 * k * l * m**2 + 42 * k * l * m - 12 * k * l
           + 3 * m**4 - 10 * m**3 + 21 * m**2 - 14 * m + 24)
    return exact_div(num, 24)


def parallel_gadget_count(n: int, k: int, l: int) -> int:
    """Same count addressed by total size n; requires n - k*l >= 0."""
    m = n - k * l
    if m < 0:
        raise ValueError(f"inconsistent parameters: n={n} < k*l={k * l}")
    return parallel_gadget_polynomial(k, l, m)


def circle_gadget_count(n: int, k: int) -> int:
    """Count for k concyclic points (distinct bisectors) among n total."""
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    return max_orderings(n, 2) - max_orderings(k, 2) + k * (k - 1)


def sphere_max(n: int) -> int:
    """Maximum number of regions of the bisecting great circles of n points
    on the sphere."""
    return exact_div(3 * n**4 - 10 * n**3 + 9 * n**2 - 2 * n + 24, 12)


def sphere_min(n: int) -> int:
    """Minimum number of regions for n >= 4 spherical points: 2n."""
    if n < 4:
        raise ValueError("closed-form minimum applies for n >= 4")
    return 2 * n


def sphere_doubled_count(n: int) -> int:
    """Region count of the doubled configuration S plus its antipodes, for
    n freely placed hemisphere points."""
    return exact_div(3 * n**4 - 4 * n**3 + n + 6, 3)


def sphere_doubled_census(n: int):
    """Vertex-degree census (v4, v6, v8) of the doubled free arrangement."""
    v4 = 24 * comb(n, 4) + 12 * comb(n, 3)
    v6 = 8 * comb(n, 3)
    v8 = 2 * comb(n, 2)
    return v4, v6, v8


def line_regions(k: int) -> int:
    """L(k) = (k^2 + k + 2) / 2: regions of k lines in general position."""
    if k < 0:
        raise ValueError("need k >= 0")
    return exact_div(k * k + k + 2, 2)


def ratio_to_free(n: int) -> Fraction:
    """M(n, 2) over the general-position count L(C(n, 2)); tends to 1."""
    return Fraction(max_orderings(n, 2), line_regions(comb(n, 2)))


def velo_bound(n: int) -> int:
    """c_n = 2(F_{n+2} - n): binary sequences of length n - 1 where interior
    double-0 and double-1 runs never coexist."""
    if n < 1:
        raise ValueError("need n >= 1")
    return 2 * (fib(n + 2) - n)


FORMULA_REGISTRY = {
    "max": (max_orderings, 2),
    "max-poly2": (max_orderings_poly2, 1),
    "min": (min_orderings, 1),
    "stirling": (stirling1, 2),
    "free-sum-increment": (free_sum_increment, 2),
    "trapezoid": (trapezoid_count, 1),
    "parallel-gadget": (parallel_gadget_count, 3),
    "circle-gadget": (circle_gadget_count, 2),
    "sphere-max": (sphere_max, 1),
    "sphere-min": (sphere_min, 1),
    "sphere-doubled": (sphere_doubled_count, 1),
    "line-regions": (line_regions, 1),
    "velo-bound": (velo_bound, 1),
    "fib": (fib, 1),
}


def formula_table() -> str:
    """Aligned text tables of the min/max rows and sphere columns."""
    out = []
    ns = list(range(3, 9))
    out.append("Planar single-vantage counts")
    out.append("n     " + "".join(f"{n:>8}" for n in ns))
    out.append("Min   " + "".join(f"{min_orderings(n):>8}" for n in ns))
    out.append("Max   " + "".join(f"{max_orderings(n, 2):>8}" for n in ns))
    out.append("")
    solids = [("tetrahedron", 4), ("octahedron", 6), ("cube", 8),
              ("icosahedron", 12), ("dodecahedron", 20)]
    out.append("Sphere counts")
    out.append("n     " + "".join(f"{n:>8}" for _, n in solids))
    out.append("Min   " + "".join(f"{sphere_min(n):>8}" for _, n in solids))
    out.append("Max   " + "".join(f"{sphere_max(n):>8}" for _, n in solids))
    out.append("")
    ns2 = list(range(2, 11))
    out.append("Collinear equally spaced, two vantage points: c_n bound")
    out.append("n     " + "".join(f"{n:>8}" for n in ns2))
    out.append("c_n   " + "".join(f"{velo_bound(n):>8}" for n in ns2))
    return "\n".join(out)
