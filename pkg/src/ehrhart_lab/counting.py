"""Exact lattice-point counting and the Ehrhart data built on it.

Counting works in the local coordinates of a polytope's affine frame.  For
each k the projection onto the first k coordinates is computed once (as the
hull of the projected vertices), and the enumeration fixes one coordinate
per level, taking its range from the facets of the matching projection.  At
the last level the fibre is an interval and is counted without visiting its
points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from typing import Optional

from . import lattice as L
from .config import DEFAULT_COUNT_BUDGET, DEFAULT_IDP_BUDGET, budget
from .errors import NotASimplex, NoUniqueInteriorPoint, ScaleLimit
from .geometry import LatticePolytope, affine_lattice_basis, facets_of_full_dim
from .numkernel import Poly, interpolate
from .polyform import HStarVector, Verdict, hstar_from_poly, is_palindromic


# ---------------------------------------------------------------------------
# slab recursion


def _levels(P: LatticePolytope):
    """Per-level bound data: for level k a list of (a_k, a_prefix, b)."""
    cached = getattr(P, "_slab_levels", None)
    if cached is not None:
        return cached
    r = P.dim
    levels = []
    for k in range(1, r + 1):
        if k == r:
            facets = P.local_facets
        else:
            proj = sorted(set(v[:k] for v in P.local_vertices))
            facets = facets_of_full_dim(proj)
        rows = [(a[k - 1], a[: k - 1], b) for a, b in facets if a[k - 1] != 0]
        levels.append(rows)
    P._slab_levels = levels
    return levels


def _bounds(rows, prefix, m, strict):
    lo = hi = None
    off = 1 if strict else 0
    for ak, ap, b in rows:
        rhs = m * b - off
        for c, y in zip(ap, prefix):
            rhs -= c * y
        if ak > 0:
            v = rhs // ak
            if hi is None or v < hi:
                hi = v
        else:
            v = -(rhs // -ak)
            if lo is None or v > lo:
                lo = v
    return lo, hi


def _walk(P: LatticePolytope, m: int, strict: bool, collect: bool):
    r = P.dim
    if r == 0:
        return [()] if collect else 1
    if m == 0 and not strict:
        return [(0,) * r] if collect else 1
    levels = _levels(P)
    limit = budget(DEFAULT_COUNT_BUDGET)
    visited = 0
    total = 0
    found = []
    stack = [()]
    while stack:
        prefix = stack.pop()
        k = len(prefix)
        lo, hi = _bounds(levels[k], prefix, m, strict)
        if lo is None or hi is None or lo > hi:
            continue
        if k == r - 1:
            if collect:
                found.extend(prefix + (y,) for y in range(lo, hi + 1))
            total += hi - lo + 1
            continue
        visited += hi - lo + 1
        if visited > limit:
            raise ScaleLimit(f"enumeration exceeded the budget of {limit} nodes")
        for y in range(hi, lo - 1, -1):
            stack.append(prefix + (y,))
    return sorted(found) if collect else total


def count(P: LatticePolytope, m: int = 1, strict: bool = False) -> int:
    """Lattice points in ``mP`` (relative interior when ``strict``)."""
    if m < 0:
        raise ValueError("dilation factor must be non-negative")
    return _walk(P, m, strict, collect=False)


def local_lattice_points(P: LatticePolytope, m: int = 1, strict: bool = False) -> list[tuple[int, ...]]:
    return _walk(P, m, strict, collect=True)


def lattice_points(P: LatticePolytope, m: int = 1, strict: bool = False) -> list[tuple[int, ...]]:
    """Ambient lattice points of ``mP``, sorted."""
    return sorted(P.frame.to_ambient(y, m) for y in local_lattice_points(P, m, strict))


# ---------------------------------------------------------------------------
# Ehrhart data


@dataclass
class EhrhartProfile:
    E: Poly
    hstar: HStarVector
    d: int
    counts: list
    lam: Optional[int]
    check_count: Optional[int] = None

    @property
    def s(self) -> int:
        return self.hstar.s

    @property
    def codegree(self) -> int:
        return self.d + 1 - self.s

    def to_json(self) -> dict:
        return {
            "E": [str(c) for c in self.E.coeffs],
            "hstar": [str(x) for x in self.hstar.h],
            "d": self.d,
            "s": self.s,
            "codegree": self.codegree,
            "lambda": self.lam if self.lam is not None else f"none <= {self.d + 1}",
            "counts": list(self.counts),
            "check_count": self.check_count,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "EhrhartProfile":
        lam = doc.get("lambda")
        return cls(
            E=Poly(Fraction(c) for c in doc["E"]),
            hstar=HStarVector(tuple(Fraction(x) for x in doc["hstar"]), doc["d"]),
            d=doc["d"],
            counts=list(doc["counts"]),
            lam=lam if isinstance(lam, int) else None,
            check_count=doc.get("check_count"),
        )

    def __eq__(self, other):
        if not isinstance(other, EhrhartProfile):
            return NotImplemented
        return self.to_json() == other.to_json()


def ehrhart(P: LatticePolytope, lam: bool = True) -> EhrhartProfile:
    """Ehrhart polynomial and h*-vector of P, relative to the lattice of aff(P)."""
    d = P.dim
    counts = [count(P, m) for m in range(d + 1)]
    E = interpolate([(m, c) for m, c in enumerate(counts)])
    check = count(P, d + 1)
    if E(d + 1) != check:
        raise RuntimeError(f"count at m={d + 1} is {check}, interpolation predicts {E(d + 1)}")
    h = HStarVector.from_poly(hstar_from_poly(E, d), d)
    first = None
    if lam:
        for m in range(1, d + 2):
            if count(P, m, strict=True) > 0:
                first = m
                break
    return EhrhartProfile(E, h, d, counts, first, check)


def simplex_hstar(S: LatticePolytope) -> HStarVector:
    """h* of a lattice simplex from the fundamental parallelepiped of its cone.

    The lifted vertices ``(v, 1)`` generate a full-rank sublattice of
    ``Z^(d+1)``; the Smith normal form gives coset representatives, and each
    one's height in the half-open parallelepiped is the sum of the fractional
    parts of its barycentric coordinates.
    """
    if not S.is_simplex:
        raise NotASimplex(f"{len(S.vertices)} vertices in dimension {S.dim}")
    d = S.dim
    M = [list(v) + [1] for v in S.local_vertices]
    _, snf, V = L.smith_normal_form(M)
    Vinv = L.unimodular_inverse(V)
    D, N = L.adjugate_scaled_inverse(M)
    divs = [snf[i][i] for i in range(d + 1)]
    gens = []
    for i, s in enumerate(divs):
        if s > 1:
            w = [x % D for x in L.vecmat(Vinv[i], N)]
            gens.append((s, w))
    h = [0] * (d + 1)
    for t in _cartesian(*[range(s) for s, _ in gens]):
        res = [0] * (d + 1)
        for ti, (_, w) in zip(t, gens):
            if ti:
                res = [a + ti * b for a, b in zip(res, w)]
        height = sum(x % D for x in res)
        h[height // D] += 1
    return HStarVector(tuple(h), d)


def reciprocity_check(P: LatticePolytope, M: int, profile: EhrhartProfile | None = None) -> Verdict:
    """``(-1)^d E(-m)`` equals the interior count of ``mP`` for m = 1..M."""
    prof = profile or ehrhart(P, lam=False)
    sign = -1 if prof.d % 2 else 1
    for m in range(1, M + 1):
        lhs = sign * prof.E(-m)
        rhs = count(P, m, strict=True)
        if lhs != rhs:
            return Verdict(False, {"m": m, "polynomial": lhs, "count": rhs})
    return Verdict(True)


# ---------------------------------------------------------------------------
# lattice properties


def is_spanning(P: LatticePolytope) -> bool:
    pts = local_lattice_points(P)
    alb = affine_lattice_basis(pts)
    return alb.rank == P.dim and alb.is_saturated


def is_idp(P: LatticePolytope) -> Verdict:
    """Integer decomposition property, checked for dilates 2..max(2, d-1)."""
    d = P.dim
    if d == 0:
        return Verdict(True)
    limit = budget(DEFAULT_IDP_BUDGET)
    S1 = local_lattice_points(P)
    Sk = set(S1)
    for k in range(2, max(2, d - 1) + 1):
        if len(Sk) * len(S1) > limit:
            raise ScaleLimit(f"IDP check needs {len(Sk) * len(S1)} sums, budget is {limit}")
        Sk = {tuple(a + b for a, b in zip(u, v)) for u in Sk for v in S1}
        target = local_lattice_points(P, k)
        if len(target) > limit:
            raise ScaleLimit(f"{k}P has {len(target)} lattice points, budget is {limit}")
        missing = [y for y in target if y not in Sk]
        if missing:
            pt = P.frame.to_ambient(missing[0], k)
            return Verdict(False, {"k": k, "point": list(pt), "undecomposable": len(missing)})
    return Verdict(True)


def interior_point(P: LatticePolytope) -> tuple[int, ...]:
    """The unique relative-interior lattice point of P."""
    pts = local_lattice_points(P, 1, strict=True)
    if len(pts) != 1:
        raise NoUniqueInteriorPoint(f"P has {len(pts)} interior lattice points")
    return P.frame.to_ambient(pts[0])


def is_reflexive(P: LatticePolytope) -> bool:
    """One interior lattice point, and every facet at lattice distance one from it."""
    pts = local_lattice_points(P, 1, strict=True)
    if len(pts) != 1 or P.dim == 0:
        return False
    y0 = pts[0]
    return all(b - L.dot(a, y0) == 1 for a, b in P.local_facets)


def gorenstein_via_hstar(profile: EhrhartProfile) -> bool:
    return is_palindromic(profile.hstar)
