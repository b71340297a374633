"""Constructors for the polytope families and explicit fixtures we care about.

Besides the geometric families this module holds polynomial-only fixtures
(Payne's reflexive family, the type-B transform) and a registry of named
vertex matrices together with their expected Ehrhart data.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .config import DEFAULT_EXTENSION_BUDGET, budget
from .errors import (
    BadParameter,
    DegreeTooLarge,
    EmptyGraph,
    NotFullRankData,
    TooManyLinearExtensions,
)
from .geometry import LatticePolytope, free_sum
from .numkernel import Poly
from .polyform import HStarVector


# ---------------------------------------------------------------------------
# simplices and friends


def reeve(q: int) -> LatticePolytope:
    if q < 0:
        raise BadParameter("q must be non-negative")
    return LatticePolytope([(0, 0, 0), (1, 0, 0), (0, 1, 0), (1, q, q + 1)], name=f"reeve:{q}")


def generalized_reeve(q: int, k: int) -> LatticePolytope:
    """conv{0, e_1..e_{d-1}, (1^(k-1), q^(k-1), q+1)} with d = 2k - 1."""
    if q < 0 or k < 2:
        raise BadParameter("need q >= 0 and k >= 2")
    d = 2 * k - 1
    pts = [tuple([0] * d)]
    for i in range(d - 1):
        e = [0] * d
        e[i] = 1
        pts.append(tuple(e))
    pts.append(tuple([1] * (k - 1) + [q] * (k - 1) + [q + 1]))
    return LatticePolytope(pts, name=f"generalized_reeve:{q},{k}")


def _unit(n: int, i: int, scale: int = 1) -> tuple[int, ...]:
    e = [0] * n
    e[i] = scale
    return tuple(e)


def standard_simplex(d: int) -> LatticePolytope:
    if d < 0:
        raise BadParameter("d must be non-negative")
    return LatticePolytope([tuple([0] * d)] + [_unit(d, i) for i in range(d)], name=f"simplex:{d}")


def standard_reflexive_simplex(d: int) -> LatticePolytope:
    """conv(e_1, ..., e_d, -(e_1 + ... + e_d))."""
    if d < 1:
        raise BadParameter("d must be >= 1")
    pts = [_unit(d, i) for i in range(d)] + [tuple([-1] * d)]
    return LatticePolytope(pts, name=f"reflexive_simplex:{d}")


def cross_polytope(d: int) -> LatticePolytope:
    if d < 1:
        raise BadParameter("d must be >= 1")
    pts = [_unit(d, i, s) for i in range(d) for s in (1, -1)]
    return LatticePolytope(pts, name=f"cross:{d}")


def cube(d: int, side: int = 1) -> LatticePolytope:
    """[0, side]^d."""
    if d < 1 or side < 1:
        raise BadParameter("need d >= 1 and side >= 1")
    pts = [tuple(side * ((mask >> i) & 1) for i in range(d)) for mask in range(2**d)]
    return LatticePolytope(pts, name=f"cube:{d},{side}")


def box(sides: Sequence[int]) -> LatticePolytope:
    """Rectangular prism prod [0, c_i]."""
    if not sides or any(c < 1 for c in sides):
        raise BadParameter("sides must be positive")
    d = len(sides)
    pts = [tuple(sides[i] * ((mask >> i) & 1) for i in range(d)) for mask in range(2**d)]
    return LatticePolytope(pts, name="box:" + ",".join(map(str, sides)))


def hypersimplex(k: int, n: int) -> LatticePolytope:
    if not 1 <= k <= n - 1:
        raise BadParameter("need 1 <= k <= n - 1")
    pts = []
    for ones in combinations(range(n), k):
        v = [0] * n
        for i in ones:
            v[i] = 1
        pts.append(tuple(v))
    return LatticePolytope(pts, name=f"hypersimplex:{k},{n}")


def free_sum_reeve(params: Sequence[tuple[int, int]]) -> LatticePolytope:
    """Free sum of generalized Reeve simplices R_{m_i, n_i}."""
    return free_sum([generalized_reeve(m, n) for m, n in params])


def free_sum_scheme(k: int) -> list[tuple[int, int]]:
    """Parameters (m_i, n_i) for the free-sum construction with k failures.

    n_1 = 3k - 2, n_i = n_1 + 3(i - 1), and each m_i is the least positive
    integer making E(n_i - 1)^2 - E(n_i - 2) E(n_i) negative.
    """
    if k < 1:
        raise BadParameter("k must be positive")
    n1 = 3 * k - 2
    ns = [n1 + 3 * i for i in range(k)]
    return free_sum_parameters(ns)


def free_sum_parameters(ns: Sequence[int]) -> list[tuple[int, int]]:
    """Least m_i (in order) giving a series violation at n_i - 1."""
    ns = list(ns)
    if not ns or min(ns) < 2:
        raise BadParameter("generalized Reeve simplices need n_i >= 2")
    if len(ns) >= 2 and not (all(a < b for a, b in zip(ns, ns[1:])) and ns[-1] < ns[0] + ns[1]):
        raise BadParameter("need n_1 < ... < n_k < n_1 + n_2")
    d = sum(2 * n - 1 for n in ns)
    ms: list[int] = []

    def E(x, extra):
        # truncated evaluation, exact for x <= n_k
        val = comb(x + d, d)
        for m, n in zip(ms + [extra], ns):
            if x - n >= 0:
                val += m * comb(x + d - n, d)
        return val

    for n in ns:
        # the expression is affine in m_i with slope -E(n-2); solve directly
        base = E(n - 1, 0) ** 2 - E(n - 2, 0) * E(n, 0)
        slope = E(n - 2, 0)
        m = max(1, base // slope + 1)
        ms.append(m)
    return list(zip(ms, ns))


def free_sum_truncated_ehrhart(params: Sequence[tuple[int, int]]) -> tuple[Poly, int]:
    """E from the h* prefix 1 + sum m_i x^{n_i}; exact at integers <= n_k."""
    from .polyform import hstar_to_ehrhart

    d = sum(2 * n - 1 for _, n in params)
    h = [0] * (d + 1)
    h[0] = 1
    for m, n in params:
        h[n] += m
    return hstar_to_ehrhart(HStarVector(tuple(h), d)), d


# ---------------------------------------------------------------------------
# posets


@dataclass(frozen=True)
class Poset:
    """Elements 1..n with cover relations (a, b) meaning a is covered by b."""

    n: int
    covers: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for a, b in self.covers:
            if not (1 <= a <= self.n and 1 <= b <= self.n) or a == b:
                raise BadParameter(f"bad cover ({a}, {b})")
        object.__setattr__(self, "covers", tuple(sorted(set(self.covers))))
        up = self.up_closure()
        for a in range(1, self.n + 1):
            if a in up[a]:
                raise BadParameter("cover relations contain a cycle")
        for a, b in self.covers:
            # irredundant: b must not be reachable from a through another cover
            for c in self._succ()[a]:
                if c != b and b in up[c]:
                    raise BadParameter(f"cover ({a}, {b}) is implied by transitivity")

    def _succ(self) -> dict[int, list[int]]:
        succ: dict[int, list[int]] = {i: [] for i in range(1, self.n + 1)}
        for a, b in self.covers:
            succ[a].append(b)
        return succ

    def up_closure(self) -> dict[int, set[int]]:
        """For each element the set of elements strictly above it."""
        succ = self._succ()
        out: dict[int, set[int]] = {}

        def visit(a, stack):
            if a in out:
                return out[a]
            if a in stack:
                return {a}
            stack.add(a)
            acc: set[int] = set()
            for b in succ[a]:
                acc.add(b)
                acc |= visit(b, stack)
            stack.discard(a)
            out[a] = acc
            return acc

        for a in range(1, self.n + 1):
            visit(a, set())
        return out

    def is_naturally_labelled(self) -> bool:
        return all(a < b for a, b in self.covers)

    def to_json(self) -> dict:
        return {"n": self.n, "covers": [list(c) for c in self.covers]}

    @classmethod
    def from_json(cls, doc: dict) -> "Poset":
        return cls(int(doc["n"]), tuple(tuple(c) for c in doc["covers"]))


def chain(n: int) -> Poset:
    return Poset(n, tuple((i, i + 1) for i in range(1, n)))


def antichain(n: int) -> Poset:
    return Poset(n, ())


def fan_poset(n: int) -> Poset:
    """One bottom element (labelled 1) covered by n others."""
    if n < 1:
        raise BadParameter("n must be >= 1")
    return Poset(n + 1, tuple((1, j) for j in range(2, n + 2)))


STEMBRIDGE_COVERS = (
    (1, 3), (1, 12), (2, 3), (2, 4), (3, 5), (3, 14), (4, 5), (4, 6), (5, 7),
    (5, 16), (6, 7), (6, 8), (7, 9), (8, 9), (8, 10), (9, 11), (10, 11),
    (10, 12), (11, 13), (12, 13), (12, 14), (13, 15), (14, 16), (14, 17),
    (15, 17),
)


def stembridge_poset() -> Poset:
    return Poset(17, STEMBRIDGE_COVERS)


def filters(P: Poset) -> list[frozenset[int]]:
    """All up-closed subsets."""
    up = P.up_closure()
    elems = list(range(1, P.n + 1))
    out = []

    def rec(i, chosen: frozenset, excluded: frozenset):
        if i == len(elems):
            out.append(chosen)
            return
        a = elems[i]
        if a in chosen or a in excluded:
            rec(i + 1, chosen, excluded)
            return
        # exclude a: nothing below a may be chosen later; mark elements below
        below = frozenset(b for b in elems if a in up[b])
        rec(i + 1, chosen, excluded | {a} | below)
        # include a: everything above comes along
        rec(i + 1, chosen | {a} | up[a], excluded)

    rec(0, frozenset(), frozenset())
    return sorted(set(out), key=lambda s: sorted(s))


def order_polytope(P: Poset) -> LatticePolytope:
    """{x in [0,1]^n : x_a <= x_b for a < b}; vertices are filter indicators."""
    pts = []
    for F in filters(P):
        pts.append(tuple(1 if i in F else 0 for i in range(1, P.n + 1)))
    return LatticePolytope(pts, name=f"order_polytope:{P.n}")


def linear_extensions(P: Poset, limit: int | None = None):
    """Yield linear extensions as tuples, depth first over minimal elements."""
    if limit is None:
        limit = budget(DEFAULT_EXTENSION_BUDGET)
    succ = P._succ()
    indeg = [0] * (P.n + 1)
    for _, b in P.covers:
        indeg[b] += 1
    seq: list[int] = []
    produced = 0

    def rec():
        nonlocal produced
        if len(seq) == P.n:
            produced += 1
            if produced > limit:
                raise TooManyLinearExtensions(f"more than {limit} linear extensions")
            yield tuple(seq)
            return
        for a in range(1, P.n + 1):
            if indeg[a] == 0 and a not in placed:
                placed.add(a)
                seq.append(a)
                for b in succ[a]:
                    indeg[b] -= 1
                yield from rec()
                for b in succ[a]:
                    indeg[b] += 1
                seq.pop()
                placed.discard(a)

    placed: set[int] = set()
    yield from rec()


def order_polytope_hstar(P: Poset, limit: int | None = None) -> HStarVector:
    """Descent generating polynomial over linear extensions (naturally labelled P)."""
    if not P.is_naturally_labelled():
        raise BadParameter("poset must be naturally labelled")
    if limit is None:
        limit = budget(DEFAULT_EXTENSION_BUDGET)
    h = [0] * (P.n + 1)
    succ = P._succ()
    indeg = [0] * (P.n + 1)
    for _, b in P.covers:
        indeg[b] += 1
    # iterative DFS with descent count carried along; memoised on (placed set, last)
    memo: dict[tuple[int, int], list[int]] = {}
    full = (1 << (P.n + 1)) - 2
    preds = [0] * (P.n + 1)
    for a, b in P.covers:
        preds[b] |= 1 << a

    def count_from(mask: int, last: int) -> list[int]:
        key = (mask, last)
        if key in memo:
            return memo[key]
        if mask == full:
            res = [1]
        else:
            res = []
            for a in range(1, P.n + 1):
                bit = 1 << a
                if mask & bit or preds[a] & ~mask:
                    continue
                sub = count_from(mask | bit, a)
                shift = 1 if last > a else 0
                if len(res) < len(sub) + shift:
                    res.extend([0] * (len(sub) + shift - len(res)))
                for i, v in enumerate(sub):
                    res[i + shift] += v
        memo[key] = res
        return res

    total = count_from(0, 0)
    if sum(total) > limit:
        raise TooManyLinearExtensions(f"{sum(total)} linear extensions exceed the budget {limit}")
    for i, v in enumerate(total):
        h[i] += v
    return HStarVector(tuple(h), P.n)


def descent_polynomial_by_listing(P: Poset, limit: int | None = None) -> HStarVector:
    """Same as :func:`order_polytope_hstar` but by listing every extension."""
    h = [0] * (P.n + 1)
    for ext in linear_extensions(P, limit):
        h[sum(1 for a, b in zip(ext, ext[1:]) if a > b)] += 1
    return HStarVector(tuple(h), P.n)


def fan_ehrhart(n: int) -> Poly:
    """E of the order polytope of fan_poset(n), i.e. sum_{j<=m} (j+1)^n, as a polynomial.

    Interpolated through n + 2 exact values of the partial sums.
    """
    from .numkernel import interpolate

    pts = []
    acc = 0
    for m in range(n + 2):
        acc += (m + 1) ** n
        pts.append((m, acc))
    return interpolate(pts)


# ---------------------------------------------------------------------------
# graphs


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        norm = set()
        for a, b in self.edges:
            if a == b:
                raise BadParameter("loops are not allowed")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise BadParameter(f"edge ({a}, {b}) out of range")
            e = (min(a, b), max(a, b))
            if e in norm:
                raise BadParameter(f"repeated edge {e}")
            norm.add(e)
        object.__setattr__(self, "edges", tuple(sorted(norm)))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    @classmethod
    def from_json(cls, doc: dict) -> "Graph":
        return cls(int(doc["n"]), tuple(tuple(e) for e in doc["edges"]))


def complete_graph(n: int) -> Graph:
    return Graph(n, tuple(combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(1, n)))


def cycle_graph(n: int) -> Graph:
    return Graph(n, tuple((i, i % n + 1) for i in range(1, n + 1)))


def edge_polytope(G: Graph) -> LatticePolytope:
    if not G.edges:
        raise EmptyGraph("graph has no edges")
    pts = []
    for a, b in G.edges:
        v = [0] * G.n
        v[a - 1] += 1
        v[b - 1] += 1
        pts.append(tuple(v))
    return LatticePolytope(pts, name="edge_polytope")


def symmetric_edge_polytope(G: Graph) -> LatticePolytope:
    if not G.edges:
        raise EmptyGraph("graph has no edges")
    pts = []
    for a, b in G.edges:
        v = [0] * G.n
        v[a - 1], v[b - 1] = 1, -1
        pts.append(tuple(v))
        pts.append(tuple(-x for x in v))
    return LatticePolytope(pts, name="symmetric_edge_polytope")


# ---------------------------------------------------------------------------
# polynomial-only families


def type_b_transform(h: Poly, n: int) -> Poly:
    """(x+1)^n h(4x/(x+1)^2) = sum_i h_i 4^i x^i (x+1)^(n-2i)."""
    if 2 * h.degree > n:
        raise DegreeTooLarge(f"degree {h.degree} is too large for n = {n}")
    x1 = Poly((1, 1))
    out = Poly()
    for i, hi in enumerate(h.coeffs):
        if hi:
            out = out + Poly.x() ** i * x1 ** (n - 2 * i) * (hi * 4**i)
    return out


def payne_hstar(b: int, k: int, r: int) -> Poly:
    """sum_{i<=k+r} x^i * sum_{j<b} x^(kj)."""
    if b < 3 or r < 0 or k < r + 2:
        raise BadParameter("need b >= 3, r >= 0 and k >= r + 2")
    left = Poly([1] * (k + r + 1))
    right = [0] * (k * (b - 1) + 1)
    for j in range(b):
        right[k * j] = 1
    return left * Poly(right)


def wagner_f() -> Poly:
    return Poly([1, Fraction(217, 60), Fraction(-5, 24), Fraction(67, 24), Fraction(-7, 24), Fraction(11, 120)])


def wagner_g() -> Poly:
    return Poly([1, Fraction(101, 30), Fraction(1, 4), Fraction(61, 24), Fraction(-1, 4), Fraction(11, 120)])


def payne_d7() -> Poly:
    return Poly([1, 2, 6, 5, 5, 6, 2, 1])


def payne_d11() -> Poly:
    return Poly([1, 1, 4, 6, 4, 6, 6, 4, 6, 4, 1, 1])


# ---------------------------------------------------------------------------
# registry


def from_matrix(columns_matrix: Sequence[Sequence[int]], name: str | None = None,
                dim: int | None = None) -> LatticePolytope:
    """Polytope whose candidate vertices are the columns of the given matrix."""
    rows = [list(r) for r in columns_matrix]
    if not rows or any(len(r) != len(rows[0]) for r in rows):
        raise BadParameter("matrix rows must have equal length")
    cols = [tuple(r[j] for r in rows) for j in range(len(rows[0]))]
    P = LatticePolytope(cols, name=name)
    if dim is not None and P.dim != dim:
        raise NotFullRankData(f"{name or 'matrix'}: stated dimension {dim}, actual {P.dim}")
    return P


@dataclass(frozen=True)
class Fixture:
    name: str
    matrix: tuple
    dim: int
    hstar: tuple | None = None
    ehrhart: tuple | None = None
    family: str = "registry"

    def polytope(self) -> LatticePolytope:
        return from_matrix(self.matrix, self.name, self.dim)


def _F(s):
    return Fraction(s)


REGISTRY: dict[str, Fixture] = {}


def _register(fx: Fixture):
    REGISTRY[fx.name] = fx


_register(Fixture(
    "spanning_nonunimodal_5simplex",
    ((0, 1, 0, 0, 0, 5),
     (0, 0, 1, 0, 0, 5),
     (0, 0, 0, 1, 0, 5),
     (0, 0, 0, 0, 1, 5),
     (0, 0, 0, 0, 0, 8)),
    5, hstar=(1, 1, 2, 1, 2, 1),
))
_register(Fixture(
    "very_ample_balletti",
    ((0, 1, 0, 0, 1, 0, 1, 1),
     (0, 0, 1, 0, 0, 1, 1, 1),
     (0, 0, 0, 1, 1, 1, 16, 17)),
    3, hstar=(1, 4, 17, 0),
))
_register(Fixture(
    "reflexive_6simplex_payne",
    ((1, 0, 0, 0, 0, 0, -1),
     (0, 1, 0, 0, 0, 0, -1),
     (0, 0, 1, 0, 0, 0, -1),
     (0, 0, 0, 1, 0, 0, -1),
     (0, 0, 0, 0, 1, 0, -1),
     (0, 0, 0, 0, 0, 1, -3)),
    6, hstar=(1, 1, 2, 1, 2, 1, 1),
))
_register(Fixture(
    "gorenstein_gamma_not_lc",
    ((1, 0, 0, 1, -9),
     (0, 1, 0, 1, -5),
     (0, 0, 1, 1, -3),
     (0, 0, 0, 2, -2)),
    4, hstar=(1, 4, 22, 4, 1),
))
_register(Fixture(
    "cl_4dim",
    ((1, 0, 0, 0, -1),
     (0, 1, 0, 0, -1),
     (0, 0, 1, 0, -1),
     (0, 0, 0, 1, -2)),
    4, hstar=(1, 1, 2, 1, 1),
))
_register(Fixture(
    "cl_5dim",
    ((1, 0, 0, 0, 0, -1),
     (0, 1, 0, 0, 0, -1),
     (0, 0, 1, 0, 0, -1),
     (0, 0, 0, 1, 0, -2),
     (0, 0, 0, 0, 1, -2)),
    5, hstar=(1, 1, 2, 2, 1, 1),
))
_register(Fixture(
    "minkowski_P",
    ((0, 1, 0, 0, 0),
     (0, 0, 1, 0, 0),
     (0, 0, 0, 1, 0),
     (0, 0, 0, 0, 2)),
    4, hstar=(1, 1, 0, 0, 0), family="minkowski",
))
_register(Fixture(
    "minkowski_Q",
    ((0, -2),
     (0, -2),
     (0, -2),
     (0, -2)),
    1, hstar=(1, 1), family="minkowski",
))
_register(Fixture(
    "series_unimodal_counterexample",
    ((1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0),
     (1, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0),
     (0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0),
     (0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0, 0),
     (0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1),
     (0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 1, 1),
     (111, 112, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1)),
    5, hstar=(1, 6, 6, 113, 0, 0),
    ehrhart=(_F(1), _F("139/20"), _F("33/8"), _F(-2), _F("7/8"), _F("21/20")),
))
_register(Fixture(
    "ehrpos_not_series_lc",
    ((0, 1, 0, 0, 1),
     (0, 0, 1, 0, 1),
     (0, 0, 0, 1, -13)),
    3, ehrhart=(_F(1), _F("1/6"), _F("3/2"), _F("7/3")),
))
_register(Fixture(
    "negative_eval_4simplex",
    ((1, 0, 0, 1, -2),
     (0, 1, 0, 2, -3),
     (0, 0, 1, 3, -4),
     (0, 0, 0, 5, -5)),
    4, ehrhart=(_F(1), _F("5/12"), _F("35/24"), _F("25/12"), _F("25/24")),
))

MINKOWSKI_SUM_HSTAR = (1, 13, 20, 20, 4)


def registry(name: str) -> LatticePolytope:
    try:
        fx = REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown registry fixture {name!r}; known: {sorted(REGISTRY)}") from None
    return fx.polytope()


def minkowski_pair() -> tuple[LatticePolytope, LatticePolytope]:
    return registry("minkowski_P"), registry("minkowski_Q")


# ---------------------------------------------------------------------------
# inline family grammar


def _ints(args: Iterable[str]) -> list[int]:
    out = []
    for a in args:
        a = a.strip()
        if not a:
            continue
        out.append(int(a))
    return out


FAMILIES = {
    "reeve": (reeve, 1),
    "generalized_reeve": (generalized_reeve, 2),
    "simplex": (standard_simplex, 1),
    "reflexive_simplex": (standard_reflexive_simplex, 1),
    "cross": (cross_polytope, 1),
    "cube": (cube, (1, 2)),
    "box": (lambda *cs: box(cs), None),
    "hypersimplex": (hypersimplex, 2),
    "free_sum_reeve": (None, None),
    "fan": (lambda n: order_polytope(fan_poset(n)), 1),
    "chain": (lambda n: order_polytope(chain(n)), 1),
    "antichain": (lambda n: order_polytope(antichain(n)), 1),
}


def from_spec(text: str) -> LatticePolytope:
    """Parse ``name:arg,arg`` (e.g. ``reeve:12``, ``cube:3,1``, ``registry:cl_4dim``)."""
    name, _, rest = text.partition(":")
    name = name.strip()
    if name == "registry":
        return registry(rest.strip())
    if name == "free_sum_reeve":
        vals = _ints(rest.split(","))
        if len(vals) % 2 or not vals:
            raise BadParameter("free_sum_reeve takes pairs m,n,...")
        return free_sum_reeve(list(zip(vals[::2], vals[1::2])))
    if name not in FAMILIES:
        raise BadParameter(f"unknown family {name!r}")
    fn, arity = FAMILIES[name]
    try:
        args = _ints(rest.split(",")) if rest else []
    except ValueError as exc:
        raise BadParameter(f"non-integer argument in {text!r}") from exc
    if arity is not None:
        allowed = arity if isinstance(arity, tuple) else (arity,)
        if len(args) not in allowed:
            raise BadParameter(f"{name} takes {arity} argument(s), got {len(args)}")
    elif not args:
        raise BadParameter(f"{name} needs arguments")
    return fn(*args)
