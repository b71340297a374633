"""Polynomial-level Ehrhart transforms and inequality diagnostics.

Everything here works on :class:`~ehrhart_lab.numkernel.Poly` values or
coefficient sequences; no geometry is involved.  Boolean questions return a
:class:`Verdict`, whose ``witness`` pins down a concrete violation whenever
the answer is negative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadParameter,
    NonpositiveEvaluation,
    NonpositiveLeadingCoefficient,
    NotPalindromic,
    ZeroPolynomial,
)
from .lattice import det_bareiss
from .numkernel import (
    Poly,
    as_rat,
    binomial_poly,
    is_real_rooted,
    isolate_real_roots,
    positivity_tail_bound,
)


# ---------------------------------------------------------------------------
# value types


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: dict | None = None
    detail: str = ""

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        out: dict = {"ok": self.ok}
        if self.witness is not None:
            out["witness"] = _jsonable(self.witness)
        if self.detail:
            out["detail"] = self.detail
        return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, Verdict):
        return x.to_json()
    return x


def _norm(c) -> Fraction | int:
    c = as_rat(c)
    return c.numerator if c.denominator == 1 else c


@dataclass(frozen=True)
class HStarVector:
    """Coefficients ``h_0..h_d`` of an h*-polynomial in dimension ``d``."""

    h: tuple
    d: int

    def __post_init__(self):
        if self.d < 0:
            raise BadParameter("dimension must be non-negative")
        vals = [as_rat(x) for x in self.h]
        while len(vals) > self.d + 1 and vals[-1] == 0:
            vals.pop()
        if len(vals) > self.d + 1:
            raise BadParameter(f"h* has degree above the dimension {self.d}")
        if any(v < 0 for v in vals):
            raise BadParameter("h*-vectors have non-negative entries")
        vals += [Fraction(0)] * (self.d + 1 - len(vals))
        object.__setattr__(self, "h", tuple(_norm(v) for v in vals))

    @classmethod
    def from_poly(cls, p: Poly, d: int | None = None) -> "HStarVector":
        return cls(tuple(p.coeffs) or (0,), p.degree if d is None else d)

    @property
    def s(self) -> int:
        nz = [i for i, v in enumerate(self.h) if v != 0]
        return nz[-1] if nz else -1

    @property
    def codegree(self) -> int:
        return self.d + 1 - self.s

    @property
    def poly(self) -> Poly:
        return Poly(self.h)

    @property
    def head(self) -> tuple:
        """Entries up to the degree ``s``."""
        return self.h[: self.s + 1]

    def __getitem__(self, i):
        return self.h[i] if 0 <= i < len(self.h) else 0

    def __len__(self):
        return len(self.h)

    def __iter__(self):
        return iter(self.h)


def as_hstar(h, d: int | None = None) -> HStarVector:
    if isinstance(h, HStarVector):
        return h
    if isinstance(h, Poly):
        return HStarVector.from_poly(h, d)
    vals = list(h)
    return HStarVector(tuple(vals), len(vals) - 1 if d is None else d)


@dataclass(frozen=True)
class GammaVector:
    gamma: tuple
    degree: int

    @property
    def is_positive(self) -> bool:
        return all(g >= 0 for g in self.gamma)

    def reconstruct(self) -> Poly:
        out = Poly()
        for j, g in enumerate(self.gamma):
            out = out + Poly.x() ** j * Poly((1, 1)) ** (self.degree - 2 * j) * g
        return out


@dataclass(frozen=True)
class MagicExpansion:
    a: tuple
    d: int

    @property
    def is_positive(self) -> bool:
        return all(x >= 0 for x in self.a)

    def reconstruct(self) -> Poly:
        out = Poly()
        for i, ai in enumerate(self.a):
            out = out + Poly.x() ** i * Poly((1, 1)) ** (self.d - i) * ai
        return out


@dataclass(frozen=True)
class KVector:
    a: tuple
    d: int
    sign_pattern_ok: bool
    identity_ok: bool

    @property
    def magnitudes(self) -> tuple:
        return tuple(abs(x) for x in self.a)

    def reconstruct(self) -> Poly:
        out = Poly()
        for j, aj in enumerate(self.a):
            out = out + binomial_poly(j, j) * aj
        return out


# ---------------------------------------------------------------------------
# basis changes


def _require_nonzero(p: Poly, what: str):
    if p.is_zero():
        raise ZeroPolynomial(f"{what} of the zero polynomial")


def hstar_from_poly(f: Poly, D: int | None = None) -> Poly:
    """Numerator ``W`` of ``sum_m f(m) x^m = W(x) / (1-x)^(D+1)``.

    ``D`` defaults to ``deg f``; a larger ``D`` is allowed (the numerator then
    picks up the factor ``(1-x)^(D - deg f)``).
    """
    _require_nonzero(f, "h*-transform")
    if D is None:
        D = f.degree
    if D < f.degree:
        raise BadParameter("D must be at least the degree")
    h: list[Fraction] = []
    for m in range(D + 1):
        val = f(Fraction(m))
        for i, hi in enumerate(h):
            val -= hi * comb(m + D - i, D)
        h.append(val)
    return Poly(h)


def hstar_to_ehrhart(h) -> Poly:
    """``sum_j h_j binom(x + d - j, d)`` for an h*-vector of dimension ``d``."""
    hv = as_hstar(h)
    out = Poly()
    for j, hj in enumerate(hv.h):
        if hj:
            out = out + binomial_poly(hv.d - j, hv.d) * hj
    return out


def gamma_vector(h) -> GammaVector:
    """Expansion ``h(x) = sum_j gamma_j x^j (x+1)^(s-2j)`` of a palindromic h."""
    hv = as_hstar(h)
    c = [as_rat(x) for x in hv.head]
    s = len(c) - 1
    if c != c[::-1]:
        raise NotPalindromic(f"{[str(x) for x in c]} is not palindromic")
    gam: list[Fraction] = []
    for k in range(s // 2 + 1):
        val = c[k]
        for j, g in enumerate(gam):
            val -= g * comb(s - 2 * j, k - j)
        gam.append(val)
    return GammaVector(tuple(_norm(g) for g in gam), s)


def is_gamma_positive(h) -> Verdict:
    try:
        g = gamma_vector(h)
    except NotPalindromic:
        return Verdict(False, {"reason": "not palindromic"})
    for j, x in enumerate(g.gamma):
        if x < 0:
            return Verdict(False, {"index": j, "gamma": x})
    return Verdict(True)


def magic_expansion(E: Poly, d: int | None = None) -> MagicExpansion:
    """Coefficients ``a`` with ``E = sum_i a_i x^i (1+x)^(d-i)``."""
    _require_nonzero(E, "magic expansion")
    if d is None:
        d = E.degree
    a: list[Fraction] = []
    for k in range(d + 1):
        val = E[k]
        for i, ai in enumerate(a):
            val -= ai * comb(d - i, k - i)
        a.append(val)
    return MagicExpansion(tuple(_norm(x) for x in a), d)


def k_vector(E: Poly, d: int | None = None) -> KVector:
    """Coefficients ``a`` with ``E = sum_j a_j binom(x + j, j)``.

    ``binom(x+j, j)`` vanishes at ``x = -m`` for ``1 <= m <= j``, so the
    evaluations ``E(-1), E(-2), ...`` determine ``a`` by a triangular solve.
    """
    _require_nonzero(E, "K-vector")
    if d is None:
        d = E.degree
    a: list[Fraction] = []
    for m in range(1, d + 2):
        val = E(Fraction(-m))
        for j, aj in enumerate(a):
            val -= aj * _binom_at(j - m, j)
        a.append(val / _binom_at(-1, m - 1))
    signed = [(-1) ** (d - j) * x for j, x in enumerate(a)]
    hstar = hstar_from_poly(E, d)
    shifted = hstar.shift(1).coefficient_list(d + 1)
    identity_ok = signed == shifted[::-1]
    return KVector(tuple(_norm(x) for x in a), d, all(x >= 0 for x in signed), identity_ok)


def _binom_at(top: int, k: int) -> Fraction:
    """binom(top, k) for arbitrary integer top (generalised binomial)."""
    num = 1
    for i in range(k):
        num *= top - i
    den = 1
    for i in range(2, k + 1):
        den *= i
    return Fraction(num, den)


# ---------------------------------------------------------------------------
# sequence properties


def _seq(c) -> list[Fraction]:
    if isinstance(c, HStarVector):
        return [as_rat(x) for x in c.head]
    if isinstance(c, Poly):
        return list(c.coeffs)
    return [as_rat(x) for x in c]


def is_unimodal(c) -> Verdict:
    """Rises weakly then falls weakly.  The witness is the first valley index."""
    v = _seq(c)
    if not v:
        raise ValueError("empty sequence")
    i = 0
    while i + 1 < len(v) and v[i] <= v[i + 1]:
        i += 1
    while i + 1 < len(v) and v[i] >= v[i + 1]:
        i += 1
    if i + 1 >= len(v):
        return Verdict(True)
    return Verdict(False, {"index": i, "value": _norm(v[i])})


def is_log_concave(c) -> Verdict:
    """Strict convention: every entry positive and ``a_i^2 >= a_{i-1} a_{i+1}``."""
    v = _seq(c)
    if not v:
        raise ValueError("empty sequence")
    for i, x in enumerate(v):
        if x <= 0:
            return Verdict(False, {"index": i, "reason": "nonpositive entry", "value": _norm(x)})
    for i in range(1, len(v) - 1):
        lhs, rhs = v[i] * v[i], v[i - 1] * v[i + 1]
        if lhs < rhs:
            return Verdict(False, {"index": i, "lhs": _norm(lhs), "rhs": _norm(rhs)})
    return Verdict(True)


def is_weakly_log_concave(c) -> Verdict:
    """Lenient variant: non-negative entries, zeros allowed."""
    v = _seq(c)
    for i, x in enumerate(v):
        if x < 0:
            return Verdict(False, {"index": i, "reason": "negative entry", "value": _norm(x)})
    for i in range(1, len(v) - 1):
        lhs, rhs = v[i] * v[i], v[i - 1] * v[i + 1]
        if lhs < rhs:
            return Verdict(False, {"index": i, "lhs": _norm(lhs), "rhs": _norm(rhs)})
    return Verdict(True)


def is_palindromic(h) -> bool:
    v = _seq(h)
    while v and v[-1] == 0:
        v.pop()
    return v == v[::-1]


def has_no_internal_zeros(c) -> bool:
    v = _seq(c)
    nz = [i for i, x in enumerate(v) if x != 0]
    return not nz or all(v[i] != 0 for i in range(nz[0], nz[-1] + 1))


def is_ehrhart_positive(E: Poly) -> Verdict:
    for i, c in enumerate(E.coeffs):
        if c < 0:
            return Verdict(False, {"index": i, "coefficient": _norm(c)})
    return Verdict(True)


# ---------------------------------------------------------------------------
# Toeplitz minors


def _compositions(total_max: int):
    """All compositions (tuples of positive ints) with sum <= total_max."""

    def rec(prefix, remaining):
        for part in range(1, remaining + 1):
            comp = prefix + (part,)
            yield comp
            yield from rec(comp, remaining - part)

    yield from rec((), total_max)


def toeplitz_minor(h, comp: Sequence[int]) -> int | Fraction:
    v = _seq(h)

    def entry(r, c):
        k = c - r
        return v[k] if 0 <= k < len(v) else 0

    rows, cols = [0], []
    acc = 0
    for part in comp:
        acc += part
        cols.append(acc)
        rows.append(acc)
    rows = rows[:-1]
    mat = [[entry(r, c) for c in cols] for r in rows]
    if all(isinstance(x, int) or x.denominator == 1 for row in mat for x in row):
        return det_bareiss([[int(x) for x in row] for row in mat])
    # rational input: scale to integers first
    from math import lcm

    den = 1
    for row in mat:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    scaled = [[int(Fraction(x) * den) for x in row] for row in mat]
    return Fraction(det_bareiss(scaled), den ** len(mat))


def toeplitz_minor_check(h, max_total: int | None = None) -> Verdict:
    hv = as_hstar(h)
    if max_total is None:
        max_total = hv.d
    if max_total > hv.d:
        raise BadParameter("max_total may not exceed the dimension")
    checked = 0
    for comp in _compositions(max_total):
        checked += 1
        det = toeplitz_minor(hv.h, comp)
        if det < 0:
            return Verdict(False, {"composition": list(comp), "determinant": _norm(det)})
    return Verdict(True, None, f"{checked} minors checked")


# ---------------------------------------------------------------------------
# general battery


def general_inequality_battery(h) -> Verdict:
    """The five classical linear inequality families for h*-vectors.

    The witness maps each family name to its own verdict.  Window terms of
    the last family that fall below index 0 are counted as zero and listed
    under ``out_of_range_terms``.
    """
    hv = as_hstar(h)
    d, s = hv.d, hv.s
    H = lambda i: hv[i] if 0 <= i <= d else 0  # noqa: E731
    fam: dict[str, Verdict] = {}

    bad = None
    for i in range(2, d // 2 + 1):
        lhs = sum(H(j) for j in range(2, i + 1))
        rhs = sum(H(j) for j in range(d - i + 1, d))
        if lhs < rhs:
            bad = {"i": i, "lhs": lhs, "rhs": rhs}
            break
    fam["hibi_partial_sums"] = Verdict(bad is None, bad)

    bad = None
    for i in range(0, s // 2 + 1):
        lhs = sum(H(j) for j in range(0, i + 1))
        rhs = sum(H(s - j) for j in range(0, i + 1))
        if lhs > rhs:
            bad = {"i": i, "lhs": lhs, "rhs": rhs}
            break
    fam["stanley_partial_sums"] = Verdict(bad is None, bad)

    if s == d:
        bad = None
        for i in range(1, d):
            if H(1) > H(i):
                bad = {"i": i, "h1": H(1), "hi": H(i)}
                break
        fam["hibi_lower_bound"] = Verdict(bad is None, bad)
    else:
        fam["hibi_lower_bound"] = Verdict(True, None, "not applicable (s < d)")

    if s <= d - 1:
        bad = None
        flagged = []
        for i in range(1, d):
            lo = i - (d - s)
            if lo < 0:
                flagged.append(i)
            rhs = sum(H(j) for j in range(max(lo, 0), i + 1))
            lhs = H(0) + H(1)
            if lhs > rhs:
                bad = {"i": i, "lhs": lhs, "rhs": rhs}
                break
        detail = ""
        w = bad
        if flagged:
            detail = "negative window indices treated as zero"
            w = dict(bad or {})
            w["out_of_range_terms"] = flagged
        fam["stapledon"] = Verdict(bad is None, w, detail)
    else:
        fam["stapledon"] = Verdict(True, None, "not applicable (s = d)")

    fam["h1_ge_hd"] = Verdict(H(1) >= H(d), None if H(1) >= H(d) else {"h1": H(1), "hd": H(d)})

    ok = all(v.ok for v in fam.values())
    return Verdict(ok, {k: v for k, v in fam.items()})


# ---------------------------------------------------------------------------
# Ehrhart-series checks


def _second_difference(E: Poly) -> Poly:
    """g(x) = E(x)^2 - E(x-1) E(x+1)."""
    return E * E - E.shift(-1) * E.shift(1)


def _certified_upper(g: Poly) -> Fraction:
    """Some N with g(x) > 0 for every real x >= N (g has positive leading coefficient)."""
    cauchy = positivity_tail_bound(g)
    ivs = isolate_real_roots(g)
    if not ivs:
        return Fraction(0)
    # every real root lies at or below the top isolating interval's upper end
    return min(cauchy, ivs[-1][1])


def series_log_concavity(E: Poly) -> Verdict:
    """Decide log-concavity of ``E(0), E(1), E(2), ...`` exactly.

    Beyond the certified bound ``g(x) = E(x)^2 - E(x-1)E(x+1)`` is positive,
    so only finitely many integers need checking.
    """
    _require_nonzero(E, "series log-concavity")
    if E.lc <= 0:
        raise NonpositiveLeadingCoefficient(f"leading coefficient {E.lc} is not positive")
    g = _second_difference(E)
    if g.is_zero():
        N = 0
    elif g.lc <= 0:
        raise NonpositiveLeadingCoefficient("second difference has nonpositive leading coefficient")
    else:
        bound = _certified_upper(g)
        N = max(0, -(-bound.numerator // bound.denominator))
    top = max(N, 1)
    for m in range(0, top + 2):
        if E(m) <= 0:
            raise NonpositiveEvaluation(f"E({m}) = {E(m)} is not positive")
    for m in range(1, top + 1):
        lhs, rhs = E(m) ** 2, E(m - 1) * E(m + 1)
        if lhs < rhs:
            return Verdict(False, {"m": m, "lhs": _norm(lhs), "rhs": _norm(rhs)})
    return Verdict(True, None, f"checked 1 <= m <= {top}")


def series_violations(E: Poly, upto: int) -> list[int]:
    """Every m in 1..upto with E(m)^2 < E(m-1) E(m+1)."""
    return [m for m in range(1, upto + 1) if E(m) ** 2 < E(m - 1) * E(m + 1)]


def negative_evaluation_log_concavity(E: Poly, d: int | None = None) -> Verdict:
    """Log-concavity of ``|E(-l)|, |E(-l-1)|, ...`` where l is the codegree."""
    _require_nonzero(E, "negative-evaluation log-concavity")
    if d is None:
        d = E.degree
    s = hstar_from_poly(E, d).degree
    ell = d + 1 - s
    for m in range(1, ell):
        if E(-m) != 0:
            return Verdict(False, {"m": m, "reason": "codegree zero missing", "value": _norm(E(-m))})
    g = _second_difference(E).scale(-1)
    if g.is_zero():
        N = ell + 1
    elif g.lc <= 0:
        raise NonpositiveLeadingCoefficient("second difference has nonpositive leading coefficient")
    else:
        bound = _certified_upper(g)
        N = max(ell + 1, -(-bound.numerator // bound.denominator))
    b = {m: abs(E(-m)) for m in range(ell, N + 2)}
    for m in range(ell, N + 2):
        if b[m] <= 0:
            return Verdict(False, {"m": m, "reason": "nonpositive entry", "value": _norm(b[m])})
    for m in range(ell + 1, N + 1):
        lhs, rhs = b[m] ** 2, b[m - 1] * b[m + 1]
        if lhs < rhs:
            return Verdict(False, {"m": m, "lhs": _norm(lhs), "rhs": _norm(rhs)})
    return Verdict(True, None, f"codegree {ell}; checked {ell + 1} <= m <= {N}")


# ---------------------------------------------------------------------------
# roots on lines and circles


def _complex_substitute(E: Poly, re: Poly, im: Poly) -> tuple[Poly, Poly]:
    """Real and imaginary parts of E(re(y) + i im(y)) for real-coefficient E."""
    A, B = Poly(), Poly()
    for c in reversed(E.coeffs):
        A, B = A * re - B * im + c, A * im + B * re
    return A, B


def cl_check(E: Poly) -> Verdict:
    """All complex roots of E on the line Re(z) = -1/2, decided exactly.

    With x = -1/2 + iy, ``N(y) = A(y)^2 + B(y)^2`` vanishes at real y exactly
    at roots on the line, and every other root of E turns into a pair of
    non-real roots of N.  So the answer is ``is_real_rooted(N)``.
    """
    _require_nonzero(E, "critical-line check")
    if E.degree == 0:
        return Verdict(True, None, "constant")
    A, B = _complex_substitute(E, Poly.const(Fraction(-1, 2)), Poly.x())
    N = A * A + B * B
    if is_real_rooted(N):
        return Verdict(True)
    off = [iv for iv in isolate_real_roots(E) if not (iv[0] < Fraction(-1, 2) <= iv[1])]
    w = {"degree_of_N": N.degree}
    if off:
        w["real_root_off_line_in"] = [list(iv) for iv in off[:3]]
    return Verdict(False, w)


def roots_on_unit_circle(h: Poly) -> bool:
    """True iff every complex root of h has modulus one (Cayley transform test)."""
    _require_nonzero(h, "unit-circle check")
    n = h.degree
    if n == 0:
        return True
    # Q(y) = sum h_k (1+iy)^k (1-iy)^(n-k), split into real and imaginary parts
    re_p, im_p = [Poly.const(1)], [Poly()]
    re_m, im_m = [Poly.const(1)], [Poly()]
    y = Poly.x()
    for _ in range(n):
        a, b = re_p[-1], im_p[-1]
        re_p.append(a - b * y)
        im_p.append(a * y + b)
        a, b = re_m[-1], im_m[-1]
        re_m.append(a + b * y)
        im_m.append(b - a * y)
    A, B = Poly(), Poly()
    for k, hk in enumerate(h.coeffs):
        if not hk:
            continue
        ra, ia = re_p[k], im_p[k]
        rb, ib = re_m[n - k], im_m[n - k]
        A = A + (ra * rb - ia * ib) * hk
        B = B + (ra * ib + ia * rb) * hk
    N = A * A + B * B
    if N.degree <= 0:
        return True
    return is_real_rooted(N)


def hurwitz_implies_positive(E: Poly) -> Verdict:
    """CL-ness forces non-negative coefficients; report both verdicts."""
    cl = cl_check(E)
    pos = is_ehrhart_positive(E)
    ok = (not cl.ok) or pos.ok
    return Verdict(ok, {"cl": cl.ok, "nonnegative": pos.ok})


# ---------------------------------------------------------------------------
# aggregate report


@dataclass
class DiagnosticsReport:
    verdicts: dict = field(default_factory=dict)
    implication_failures: list = field(default_factory=list)

    def __getitem__(self, key):
        return self.verdicts[key]

    def __contains__(self, key):
        return key in self.verdicts

    def to_json(self) -> dict:
        return {
            "verdicts": {k: v.to_json() for k, v in self.verdicts.items()},
            "implication_failures": list(self.implication_failures),
        }

    @classmethod
    def from_json(cls, doc: dict) -> "DiagnosticsReport":
        vs = {}
        for k, v in doc["verdicts"].items():
            vs[k] = Verdict(v["ok"], v.get("witness"), v.get("detail", ""))
        return cls(vs, list(doc.get("implication_failures", [])))


ALL_GROUPS = ("hstar", "series", "cl", "magic", "toeplitz", "negative")


def full_diagnostics(E: Poly, d: int | None = None, groups: Iterable[str] | None = None) -> DiagnosticsReport:
    """Run the checker battery on an Ehrhart-shaped polynomial (E(0) = 1)."""
    _require_nonzero(E, "diagnostics")
    if d is None:
        d = E.degree
    groups = set(ALL_GROUPS if groups is None else groups)
    hp = hstar_from_poly(E, d)
    rep = DiagnosticsReport()
    V = rep.verdicts
    nonneg = all(c >= 0 for c in hp.coeffs)
    V["hstar_nonnegative"] = Verdict(nonneg)
    hv = HStarVector.from_poly(hp, d) if nonneg else None
    head = list(hp.coeffs)
    V["ehrhart_positive"] = is_ehrhart_positive(E)
    if "hstar" in groups:
        V["hstar_unimodal"] = is_unimodal(head)
        V["hstar_log_concave"] = is_log_concave(head)
        V["hstar_real_rooted"] = Verdict(is_real_rooted(hp))
        V["hstar_palindromic"] = Verdict(is_palindromic(head))
        V["hstar_gamma_positive"] = is_gamma_positive(head) if V["hstar_palindromic"].ok else Verdict(
            False, {"reason": "not palindromic"}
        )
        V["ehrhart_real_rooted"] = Verdict(is_real_rooted(E))
        if hv is not None:
            V["inequality_battery"] = general_inequality_battery(hv)
    if "toeplitz" in groups and hv is not None:
        V["toeplitz_minors"] = toeplitz_minor_check(hv)
    if "magic" in groups:
        mg = magic_expansion(E, d)
        V["magic_positive"] = Verdict(mg.is_positive, None if mg.is_positive else {"a": list(mg.a)})
    if "cl" in groups:
        V["critical_line"] = cl_check(E)
        V["hstar_roots_on_unit_circle"] = Verdict(roots_on_unit_circle(hp))
        V["hurwitz_consistency"] = hurwitz_implies_positive(E)
    if "series" in groups:
        V["series_log_concave"] = series_log_concavity(E)
    if "negative" in groups:
        V["negative_evaluation_log_concave"] = negative_evaluation_log_concavity(E, d)
    rep.implication_failures = _implication_failures(V, hp.degree == d)
    return rep


def _implication_failures(V: dict, full_degree: bool) -> list[str]:
    out = []

    def has(k):
        return k in V

    if has("hstar_real_rooted") and has("hstar_log_concave") and V["hstar_nonnegative"].ok:
        if V["hstar_real_rooted"].ok and not V["hstar_log_concave"].ok:
            out.append("real-rooted h* with positive coefficients must be log-concave")
    if has("hstar_log_concave") and has("hstar_unimodal"):
        if V["hstar_log_concave"].ok and not V["hstar_unimodal"].ok:
            out.append("log-concave h* must be unimodal")
    if has("hstar_palindromic") and has("hstar_real_rooted") and V["hstar_nonnegative"].ok:
        if V["hstar_palindromic"].ok and V["hstar_real_rooted"].ok and not V["hstar_gamma_positive"].ok:
            out.append("palindromic real-rooted h* must be gamma-positive")
    if has("hstar_log_concave") and V["hstar_log_concave"].ok:
        if has("series_log_concave") and not V["series_log_concave"].ok:
            out.append("log-concave h* must give a log-concave Ehrhart series")
        if has("negative_evaluation_log_concave") and not V["negative_evaluation_log_concave"].ok:
            out.append("log-concave h* must give log-concave negative evaluations")
    if has("magic_positive") and V["magic_positive"].ok:
        if not V["ehrhart_positive"].ok:
            out.append("magic positivity must give Ehrhart positivity")
        if has("hstar_real_rooted") and not V["hstar_real_rooted"].ok:
            out.append("magic positivity must give a real-rooted h*")
    if has("ehrhart_real_rooted") and V["ehrhart_real_rooted"].ok and V["ehrhart_positive"].ok:
        if has("hstar_real_rooted") and not V["hstar_real_rooted"].ok:
            out.append("positive real-rooted E must give a real-rooted h*")
    if has("hstar_roots_on_unit_circle") and V["hstar_roots_on_unit_circle"].ok and full_degree:
        if not V["critical_line"].ok:
            out.append("h* roots on the unit circle must give CL")
    if has("hurwitz_consistency") and not V["hurwitz_consistency"].ok:
        out.append("CL must give non-negative Ehrhart coefficients")
    return out
