"""Exact rational arithmetic and dense univariate polynomials.

Rationals are :class:`fractions.Fraction` values, which are always kept in
lowest terms with a positive denominator.  :class:`Poly` is an immutable dense
polynomial over the rationals; real-root questions are decided with Sturm
chains so no floating point is ever involved.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Sequence, Union

from .errors import (
    DuplicateAbscissa,
    InexactDivision,
    NonpositiveLeadingCoefficient,
    ZeroPolynomial,
)

Rat = Fraction
Number = Union[int, Fraction]

__all__ = [
    "Rat",
    "Poly",
    "ZeroPolynomial",
    "DuplicateAbscissa",
    "NonpositiveLeadingCoefficient",
    "InexactDivision",
    "as_rat",
    "interpolate",
    "poly_gcd",
    "squarefree_part",
    "sturm_chain",
    "sign_variations",
    "count_real_roots",
    "is_real_rooted",
    "isolate_real_roots",
    "positivity_tail_bound",
    "largest_real_root_upper",
    "binomial_poly",
]


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot convert {value!r} to an exact rational")


class Poly:
    """Dense polynomial with exact rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are stripped,
    so the zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Number) -> "Poly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots: Iterable[Number], lead: Number = 1) -> "Poly":
        p = cls.const(lead)
        for r in roots:
            p = p * cls((-as_rat(r), 1))
        return p

    # -- basic accessors ---------------------------------------------------

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def coefficient_list(self, length: int | None = None) -> list[Fraction]:
        cs = list(self.coeffs)
        if length is not None:
            cs += [Fraction(0)] * (length - len(cs))
        return cs

    # -- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Poly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, c):
        c = as_rat(c)
        return Poly(a / c for a in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.coeffs == Poly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        return f"Poly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first_body = terms[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly(), self
        quot = [Fraction(0)] * (dq + 1)
        lead = other.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            quot[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return Poly(quot), Poly(rem[: len(other.coeffs) - 1])

    def __mod__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "Poly") -> "Poly":
        return self.divmod(other)[0]

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if r:
            raise InexactDivision(f"{other} does not divide {self}")
        return q

    # -- transforms ----------------------------------------------------------

    def derivative(self) -> "Poly":
        return Poly(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c: Number) -> "Poly":
        """Return ``p(x + c)``."""
        return self.compose(Poly((c, 1)))

    def scale(self, c: Number) -> "Poly":
        """Return ``p(c * x)``."""
        c = as_rat(c)
        return Poly(a * c**i for i, a in enumerate(self.coeffs))

    def reverse(self, n: int | None = None) -> "Poly":
        """Return ``x**n * p(1/x)`` (``n`` defaults to the degree)."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise ValueError("reversal length below degree")
        return Poly(self.coefficient_list(n + 1)[::-1])

    def monic(self) -> "Poly":
        return self / self.lc

    def primitive(self) -> "Poly":
        """Integer polynomial with coprime coefficients and the same sign pattern.

        Only ever multiplies by a positive rational, so signs at every point
        are preserved (this is what makes it safe inside Sturm chains).
        """
        if not self.coeffs:
            return self
        den = reduce(lcm, (c.denominator for c in self.coeffs), 1)
        ints = [c.numerator * (den // c.denominator) for c in self.coeffs]
        g = reduce(gcd, ints, 0)
        return Poly(Fraction(v // g) for v in ints)

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.coeffs)


def binomial_poly(shift: int, k: int) -> Poly:
    """The polynomial ``binom(x + shift, k)`` in ``x``."""
    p = Poly.const(1)
    for i in range(k):
        p = p * Poly((shift - i, 1))
    fact = 1
    for i in range(2, k + 1):
        fact *= i
    return p / fact


def interpolate(points: Sequence[tuple]) -> Poly:
    """Lagrange interpolation through ``(x, y)`` pairs, exactly.

    Uses Newton divided differences, which is the same polynomial as the
    Lagrange form but cheaper to build.
    """
    if not points:
        raise ValueError("need at least one point")
    xs = [as_rat(x) for x, _ in points]
    ys = [as_rat(y) for _, y in points]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("abscissae must be distinct")
    n = len(xs)
    table = list(ys)
    newton = [table[0]]
    for level in range(1, n):
        table = [
            (table[i + 1] - table[i]) / (xs[i + level] - xs[i])
            for i in range(n - level)
        ]
        newton.append(table[0])
    result = Poly.const(newton[-1])
    for k in range(n - 2, -1, -1):
        result = result * Poly((-xs[k], 1)) + newton[k]
    return result


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd (the gcd of two zero polynomials is zero)."""
    while b:
        a, b = b, a % b
    return a.monic() if a else a


def squarefree_part(p: Poly) -> Poly:
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    if p.degree == 0:
        return Poly.const(1)
    g = poly_gcd(p, p.derivative())
    return p.exact_div(g).monic()


def sturm_chain(p: Poly) -> list[Poly]:
    """Sturm sequence p, p', -rem(...), ... with content normalisation."""
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    chain = [p.primitive()]
    d = p.derivative()
    if d.is_zero():
        return chain
    chain.append(d.primitive())
    while True:
        r = chain[-2] % chain[-1]
        if r.is_zero():
            return chain
        chain.append((-r).primitive())


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def sign_variations(values: Iterable) -> int:
    signs = [s for s in (_sign(v) for v in values) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _variations_at(chain: list[Poly], x) -> int:
    if x == float("inf") or x == float("-inf"):
        pos = x > 0
        vals = [
            q.lc if (pos or q.degree % 2 == 0) else -q.lc for q in chain
        ]
        return sign_variations(vals)
    return sign_variations(q(x) for q in chain)


def count_real_roots(p: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of ``p`` in ``(lo, hi]``.

    ``None`` bounds mean -inf / +inf.
    """
    chain = sturm_chain(p)
    a = float("-inf") if lo is None else as_rat(lo)
    b = float("inf") if hi is None else as_rat(hi)
    return _variations_at(chain, a) - _variations_at(chain, b)


def is_real_rooted(p: Poly) -> bool:
    """True iff every complex root of ``p`` is real (decided by Sturm).

    A nonzero constant has no roots and is real-rooted vacuously.
    """
    if p.is_zero():
        raise ZeroPolynomial("real-rootedness of the zero polynomial")
    sf = squarefree_part(p)
    if sf.degree == 0:
        return True
    return count_real_roots(sf) == sf.degree


def _cauchy_bound(p: Poly) -> Fraction:
    lead = p.lc
    return 1 + max((abs(c / lead) for c in p.coeffs[:-1]), default=Fraction(0))


def isolate_real_roots(p: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint intervals ``(lo, hi]``, each holding exactly one distinct real root.

    Intervals are returned in increasing order.
    """
    sf = squarefree_part(p)
    if sf.degree == 0:
        return []
    chain = sturm_chain(sf)
    bound = _cauchy_bound(sf)

    def count(a, b):
        return _variations_at(chain, a) - _variations_at(chain, b)

    out = []
    stack = [(-bound, bound)]
    while stack:
        a, b = stack.pop()
        n = count(a, b)
        if n == 0:
            continue
        if n == 1:
            out.append((a, b))
            continue
        # split at a non-root so the halves stay clean half-open intervals
        for num, den in ((1, 2), (3, 7), (4, 7), (2, 5), (3, 5)):
            mid = a + (b - a) * num / den
            if sf(mid) != 0:
                break
        stack.append((a, mid))
        stack.append((mid, b))
    out.sort()
    return out


def positivity_tail_bound(p: Poly) -> Fraction:
    """Cauchy bound N with p(x) > 0 for every real x >= N."""
    if p.is_zero():
        raise ZeroPolynomial("tail bound of the zero polynomial")
    if p.lc <= 0:
        raise NonpositiveLeadingCoefficient(f"leading coefficient {p.lc} <= 0")
    return _cauchy_bound(p)


def largest_real_root_upper(p: Poly) -> Fraction | None:
    """Rational upper end of the isolating interval of the largest real root.

    Returns ``None`` when ``p`` has no real roots.  Every real root of ``p``
    is at most the returned value.
    """
    ivs = isolate_real_roots(p)
    if not ivs:
        return None
    return ivs[-1][1]
