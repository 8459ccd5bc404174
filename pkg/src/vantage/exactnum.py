"""Exact scalar arithmetic with decidable sign.

Three scalar backends are used throughout the package:

* ``fractions.Fraction`` for rational coordinates,
* ``QuadExt`` for values a + b*sqrt(D) in a real quadratic extension,
* ``CycloNum`` (elements of ``CyclotomicField``) for exact coordinates of
  regular polygons that do not fit in any quadratic field.

All three are immutable, hashable and support field arithmetic, so the
region-counting code is generic over them.  Order comparisons are available
for Fraction and QuadExt; cyclotomic elements only support exact equality,
which is all the counting pipeline needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Union

RationalLike = Union[int, Fraction]


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected a rational value, got {type(x).__name__}")


def sign_fraction(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def is_square_free(d: int) -> bool:
    if d < 1:
        return False
    k = 2
    while k * k <= d:
        if d % (k * k) == 0:
            return False
        k += 1
    return True


@dataclass(frozen=True)
class QuadExt:
    """The real number a + b*sqrt(D) with rational a, b and square-free D >= 2.

    A value with b == 0 compares equal to (and hashes like) the plain
    rational a, so rationals and QuadExt values mix safely in one container.
    """

    a: Fraction
    b: Fraction
    D: int

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))
        if not is_square_free(self.D) or self.D < 2:
            raise ValueError(f"D must be square-free and >= 2, got {self.D}")

    # -- coercion ---------------------------------------------------------

    def _lift(self, other) -> "QuadExt":
        if isinstance(other, QuadExt):
            if other.D != self.D and other.b != 0 and self.b != 0:
                raise ValueError("mixed radicals: cannot combine sqrt(%d) and sqrt(%d)"
                                 % (self.D, other.D))
            if other.D != self.D:
                # one side is actually rational; re-tag it
                if other.b == 0:
                    return QuadExt(other.a, Fraction(0), self.D)
                return other
            return other
        return QuadExt(_as_fraction(other), Fraction(0), self.D)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        d = self.D if self.b != 0 or o.b == 0 else o.D
        return QuadExt(self.a + o.a, self.b + o.b, d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.D)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        d = self.D if self.b != 0 or o.b == 0 else o.D
        return QuadExt(self.a * o.a + self.b * o.b * d,
                       self.a * o.b + self.b * o.a, d)

    __rmul__ = __mul__

    def inverse(self) -> "QuadExt":
        n = self.a * self.a - self.b * self.b * self.D
        if n == 0:
            if self.a == 0 and self.b == 0:
                raise ZeroDivisionError("division by zero")
            raise ZeroDivisionError("norm is zero; D is not square-free?")
        return QuadExt(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    # -- sign and order ---------------------------------------------------

    def sign(self) -> int:
        return sign_quad(self)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadExt):
            if self.D != other.D:
                return self.b == 0 and other.b == 0 and self.a == other.a
            return self.a == other.a and self.b == other.b
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, sqrt{self.D})"


def sign_quad(x: QuadExt) -> int:
    """Exact sign of a + b*sqrt(D), by case analysis on the signs of a, b."""
    sa = sign_fraction(x.a)
    sb = sign_fraction(x.b)
    if sb == 0:
        return sa
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # opposite signs: compare a^2 against b^2 * D
    t = sign_fraction(x.a * x.a - x.b * x.b * x.D)
    if t == 0:
        return 0
    # |a| > |b|sqrt(D) iff t > 0, and then the sign of a wins
    return sa if t > 0 else sb


def cmp_sqrt_sum(a, b, c, d) -> int:
    """Exact sign of (sqrt(a) + sqrt(b)) - (sqrt(c) + sqrt(d)).

    All inputs must be non-negative rationals.  Works by repeated squaring
    with explicit sign bookkeeping; no floating point is involved.
    """
    a, b, c, d = (_as_fraction(v) for v in (a, b, c, d))
    if min(a, b, c, d) < 0:
        raise ValueError("cmp_sqrt_sum requires non-negative inputs")
    # Both sides are >= 0, so comparing them is the same as comparing their
    # squares: (a + b + 2 sqrt(ab)) vs (c + d + 2 sqrt(cd)).
    delta = (a + b) - (c + d)
    u = a * b
    v = c * d
    t = sign_fraction(u - v)  # sign of 2 sqrt(u) - 2 sqrt(v)
    sd = sign_fraction(delta)
    if sd == 0:
        return t
    if t == 0 or t == sd:
        return sd
    # delta and the radical difference have opposite signs; compare their
    # magnitudes: delta^2 vs 4(u + v) - 8 sqrt(uv).
    e = delta * delta - 4 * (u + v)
    if e >= 0:
        mag = 1 if (e > 0 or u * v > 0) else 0
    else:
        mag = sign_fraction(64 * u * v - e * e)
    return sd * mag if mag != 0 else 0


# ---------------------------------------------------------------------------
# Cyclotomic field arithmetic (for exact regular-polygon coordinates)
# ---------------------------------------------------------------------------


def _poly_divmod(num: list, den: list):
    """Divide polynomials with Fraction coefficients (lowest degree first)."""
    num = [Fraction(x) for x in num]
    out = [Fraction(0)] * (len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) < len(den):
            break
        shift = len(num) - len(den)
        q = num[-1] / den[-1]
        out[shift] = q
        for i, dc in enumerate(den):
            num[shift + i] -= q * dc
        num.pop()
    while num and num[-1] == 0:
        num.pop()
    return out, num


def cyclotomic_polynomial(n: int) -> list:
    """Coefficients of the n-th cyclotomic polynomial, lowest degree first."""
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]  # x^n - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = _poly_divmod(poly, cyclotomic_polynomial(d))
            assert not r, "cyclotomic division must be exact"
            poly = q
    return poly


class CyclotomicField:
    """The field Q(zeta_N), with elements stored as coefficient tuples
    modulo the N-th cyclotomic polynomial."""

    def __init__(self, N: int):
        if N < 1:
            raise ValueError("N must be positive")
        self.N = N
        self.modulus = cyclotomic_polynomial(N)
        self.degree = len(self.modulus) - 1
        # reduction table: x^(degree + i) mod Phi_N for i = 0..degree-2
        self._red = []
        cur = [-c / self.modulus[-1] for c in self.modulus[:-1]]
        for _ in range(self.degree - 1):
            self._red.append(tuple(cur))
            nxt = [Fraction(0)] + cur[:-1]
            top = cur[-1]
            if top != 0:
                for j in range(self.degree):
                    nxt[j] += top * self._red[0][j]
            cur = nxt

    def __eq__(self, other):
        return isinstance(other, CyclotomicField) and other.N == self.N

    def __hash__(self):
        return hash(("cyclo", self.N))

    def __repr__(self):
        return f"CyclotomicField({self.N})"

    def element(self, coeffs) -> "CycloNum":
        c = [Fraction(x) for x in coeffs]
        if len(c) > self.degree:
            raise ValueError("coefficient vector too long")
        c += [Fraction(0)] * (self.degree - len(c))
        return CycloNum(self, tuple(c))

    def zero(self) -> "CycloNum":
        return self.element([])

    def one(self) -> "CycloNum":
        return self.element([1])

    def from_rational(self, x) -> "CycloNum":
        return self.element([_as_fraction(x)])

    def zeta(self, power: int = 1) -> "CycloNum":
        power %= self.N
        out = self.one()
        base = self.element([0, 1])
        for _ in range(power):
            out = out * base
        return out

    def imag_unit(self) -> "CycloNum":
        if self.N % 4 != 0:
            raise ValueError("i is not in Q(zeta_%d)" % self.N)
        return self.zeta(self.N // 4)

    def unit_point(self, a: int, m: int):
        """Exact (cos, sin) of the angle 2*pi*a/m, as field elements.

        Requires lcm(m, 4) to divide N.
        """
        if self.N % m != 0 or self.N % 4 != 0:
            raise ValueError("need lcm(m,4) | N for unit_point")
        z = self.zeta(a * self.N // m)
        zbar = self.zeta(-a * self.N // m)
        two = self.from_rational(2)
        cos = (z + zbar) / two
        sin = (z - zbar) / (two * self.imag_unit())
        return cos, sin

    def _reduce(self, conv: list) -> tuple:
        d = self.degree
        out = list(conv[:d]) + [Fraction(0)] * max(0, d - len(conv))
        for i in range(d, len(conv)):
            if conv[i] != 0:
                row = self._red[i - d]
                ci = conv[i]
                for j in range(d):
                    out[j] += ci * row[j]
        return tuple(out)


class CycloNum:
    """An element of a CyclotomicField; immutable and hashable."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: CyclotomicField, coeffs: tuple):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    def _lift(self, other) -> "CycloNum":
        if isinstance(other, CycloNum):
            if other.field != self.field:
                raise ValueError("elements of different cyclotomic fields")
            return other
        return self.field.from_rational(other)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._lift(other)
        return CycloNum(self.field, tuple(x + y for x, y in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycloNum(self.field, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        a, b = self.coeffs, o.coeffs
        conv = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        conv[i + j] += x * y
        return CycloNum(self.field, self.field._reduce(conv))

    __rmul__ = __mul__

    def inverse(self) -> "CycloNum":
        if self.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        # extended Euclid over Q[x] against the cyclotomic modulus
        r0 = list(self.field.modulus)
        r1 = list(self.coeffs)
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            q, r = _poly_divmod(r0, r1)
            if not r:
                break
            s = [Fraction(0)] * max(len(s0), len(q) + len(s1) - 1)
            for i, c in enumerate(s0):
                s[i] += c
            for i, qc in enumerate(q):
                if qc:
                    for j, sc in enumerate(s1):
                        s[i + j] -= qc * sc
            while s and s[-1] == 0:
                s.pop()
            r0, r1, s0, s1 = r1, r, s1, s
        lead = r1[-1]
        inv = [c / lead for c in s1]
        return CycloNum(self.field, self.field._reduce(inv))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.field.from_rational(other)
        if not isinstance(other, CycloNum):
            return NotImplemented
        if other.field != self.field:
            return False
        return self.coeffs == other.coeffs

    def __hash__(self):
        # rational-valued elements hash like their Fraction value so mixed
        # containers merge them correctly
        if self._hash is None:
            if all(c == 0 for c in self.coeffs[1:]):
                self._hash = hash(self.coeffs[0] if self.coeffs else 0)
            else:
                self._hash = hash((self.field.N, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"CycloNum({self.field.N}, {list(self.coeffs)})"


# ---------------------------------------------------------------------------
# Serialization: "p/q" for rationals, "a+b√D" for quadratic values
# ---------------------------------------------------------------------------


def format_scalar(x) -> str:
    if isinstance(x, int):
        x = Fraction(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, QuadExt):
        if x.b >= 0:
            return f"{x.a}+{x.b}√{x.D}"
        return f"{x.a}-{-x.b}√{x.D}"
    if isinstance(x, CycloNum):
        return ",".join(str(c) for c in x.coeffs)
    raise TypeError(f"cannot serialize scalar of type {type(x).__name__}")


def parse_scalar(text: str, field=None):
    """Inverse of format_scalar.  `field` selects the scalar backend: None or
    'Q' for rationals, an integer D for QuadExt, a CyclotomicField instance
    for cyclotomic coefficients."""
    text = text.strip()
    if isinstance(field, CyclotomicField):
        return field.element([Fraction(t) for t in text.split(",")])
    if "√" in text:
        body, dpart = text.rsplit("√", 1)
        d = int(dpart)
        # split body into a and signed b at the last +/- that is not a
        # leading sign or part of a fraction
        for i in range(len(body) - 1, 0, -1):
            if body[i] in "+-" and body[i - 1] not in "+-/":
                a = Fraction(body[:i])
                b = Fraction(body[i:].replace("+", "", 1)) if body[i] == "+" else -Fraction(body[i + 1:])
                break
        else:
            raise ValueError(f"malformed quadratic scalar: {text!r}")
        return QuadExt(a, b, d)
    value = Fraction(text)
    if isinstance(field, int):
        return QuadExt(value, Fraction(0), field)
    return value


def as_rational(x):
    """The Fraction value of x when x is rational-valued, else None.

    Recognizes plain rationals, QuadExt values with zero radical part, and
    cyclotomic elements with only a constant coefficient.
    """
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Fraction):
        return x
    if isinstance(x, QuadExt):
        return x.a if x.b == 0 else None
    if isinstance(x, CycloNum):
        if all(c == 0 for c in x.coeffs[1:]):
            return x.coeffs[0] if x.coeffs else Fraction(0)
        return None
    return None


def scale_to_integers(rows):
    """Clear denominators: map rows of Fractions to rows of ints by one
    common positive factor.  Used to put rational configurations in the fast
    integer path of the counters."""
    from math import lcm

    denom = 1
    for row in rows:
        for x in row:
            denom = lcm(denom, _as_fraction(x).denominator)
    return [tuple(int(x * denom) for x in row) for row in rows]


def normalize_int_tuple(t):
    """Divide an integer tuple by its gcd and fix the sign of the first
    nonzero entry to be positive; the canonical representative of a ray."""
    g = 0
    for x in t:
        g = gcd(g, x)
    if g == 0:
        return t
    t = tuple(x // g for x in t)
    for x in t:
        if x != 0:
            return t if x > 0 else tuple(-y for y in t)
    return t
