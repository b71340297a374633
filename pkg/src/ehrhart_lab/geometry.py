"""Lattice polytopes: exact dual description and the usual combinators.

A polytope is stored by its (irredundant, sorted) integer vertices.  At
construction we also fix an *affine frame*: a lattice point ``p0`` of the
affine hull and a unimodular change of coordinates under which the lattice
``aff(P) ∩ Z^n`` becomes ``Z^r``.  All counting happens in those local
coordinates, so polytopes that are not full-dimensional get their Ehrhart
data relative to the lattice of their affine hull.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterable, Sequence

from . import lattice as L
from .errors import AmbientMismatch, DimensionTooLarge, OriginNotVertex

Point = tuple[int, ...]

# Above this dimension only simplices are accepted; the double description
# of a simplex is a single matrix inverse, anything else gets expensive.
MAX_GENERAL_DIM = 12


# ---------------------------------------------------------------------------
# double description


def extreme_rays(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Extreme rays of the pointed cone ``{x : A x <= 0}``.

    Returns the rays as primitive integer vectors together with bitmasks of
    the rows each ray makes tight.  ``A`` must have full column rank.
    """
    if not rows:
        raise ValueError("empty constraint system")
    n = len(rows[0])
    basis = L.independent_rows(rows)
    if len(basis) < n:
        raise ValueError("cone is not pointed")
    inv = L.inverse([rows[i] for i in basis])
    rays: list[list[int]] = []
    zeros: list[int] = []
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    for j, bi in enumerate(basis):
        rays.append(L.integerize([-inv[k][j] for k in range(n)]))
        zeros.append(all_basis & ~(1 << bi))
    in_basis = set(basis)
    for i, a in enumerate(rows):
        if i in in_basis:
            continue
        vals = [L.dot(a, r) for r in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        if not pos:
            # redundant row; still record which rays it touches
            zeros = [z | (1 << i) if vals[k] == 0 else z for k, z in enumerate(zeros)]
            continue
        neg = [k for k, v in enumerate(vals) if v < 0]
        new_rays, new_zeros = [], []
        for p in pos:
            for q in neg:
                common = zeros[p] & zeros[q]
                if common.bit_count() < n - 2:
                    continue
                adjacent = True
                for k in range(len(rays)):
                    if k != p and k != q and zeros[k] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                w = [vals[p] * y - vals[q] * x for x, y in zip(rays[p], rays[q])]
                new_rays.append(L.primitive(w))
                new_zeros.append(common | (1 << i))
        keep = [k for k, v in enumerate(vals) if v <= 0]
        rays = [rays[k] for k in keep] + new_rays
        zeros = [zeros[k] | (1 << i) if vals[k] == 0 else zeros[k] for k in keep] + new_zeros
    return rays, zeros


def facets_of_full_dim(points: Sequence[Sequence[int]]) -> list[tuple[tuple[int, ...], int]]:
    """Facet inequalities ``a . y <= b`` of a full-dimensional point set in Z^r.

    Normals are primitive integer vectors; the list is sorted.
    """
    pts = [list(p) for p in points]
    r = len(pts[0])
    if r == 0:
        return []
    rays, _ = extreme_rays([p + [-1] for p in pts])
    out = set()
    for ray in rays:
        a = ray[:r]
        b = ray[r]
        g = L.primitive(a)
        if not any(g):
            continue  # the trivial inequality 0 <= b cannot occur for bounded sets
        scale = next(x // y for x, y in zip(a, g) if y)
        out.add((tuple(g), b // scale))
    return sorted(out)


# ---------------------------------------------------------------------------
# affine lattices


@dataclass(frozen=True)
class AffineLatticeBasis:
    """Smith-normal-form data for the affine lattice spanned by a point set.

    ``origin`` is the first point.  ``saturated_basis`` is a basis of
    ``aff(points) ∩ Z^n`` (as translated to ``origin``); ``basis`` spans the
    sublattice generated by the differences themselves, and ``divisors`` are
    the elementary divisors relating the two (all 1 iff they coincide).
    """

    origin: Point
    rank: int
    divisors: tuple[int, ...]
    basis: tuple[Point, ...]
    saturated_basis: tuple[Point, ...]
    V: tuple[Point, ...]
    Vinv: tuple[Point, ...]

    @property
    def index(self) -> int:
        out = 1
        for d in self.divisors:
            out *= d
        return out

    @property
    def is_saturated(self) -> bool:
        return all(d == 1 for d in self.divisors)


def affine_lattice_basis(points: Iterable[Sequence[int]]) -> AffineLatticeBasis:
    pts = [L.as_int_vector(p) for p in points]
    if not pts:
        raise ValueError("need at least one point")
    n = len(pts[0])
    p0 = pts[0]
    diffs = [[a - b for a, b in zip(p, p0)] for p in pts[1:]]
    diffs = [d for d in diffs if any(d)]
    if not diffs:
        eye = tuple(tuple(r) for r in L.identity(n))
        return AffineLatticeBasis(p0, 0, (), (), (), eye, eye)
    _, s, v = L.smith_normal_form(diffs)
    divs = [s[i][i] for i in range(min(len(s), n)) if s[i][i]]
    r = len(divs)
    vinv = L.unimodular_inverse(v)
    sat = tuple(tuple(vinv[i]) for i in range(r))
    gen = tuple(tuple(divs[i] * x for x in vinv[i]) for i in range(r))
    return AffineLatticeBasis(
        p0,
        r,
        tuple(divs),
        gen,
        sat,
        tuple(tuple(row) for row in v),
        tuple(tuple(row) for row in vinv),
    )


class AffineFrame:
    """Unimodular local coordinates on ``aff(P) ∩ Z^n``.

    ``y = ((x - origin) V)[:r]`` and ``x = origin + y * basis``.  For
    full-dimensional input the frame is the identity so local and ambient
    coordinates agree.
    """

    __slots__ = ("origin", "rank", "n", "V", "basis", "equations")

    def __init__(self, points: Sequence[Point]):
        n = len(points[0])
        alb = affine_lattice_basis(points)
        self.n = n
        self.rank = alb.rank
        if alb.rank == n:
            self.origin = (0,) * n
            self.V = tuple(tuple(r) for r in L.identity(n))
            self.basis = self.V
            self.equations: tuple[tuple[Point, int], ...] = ()
            return
        self.origin = alb.origin
        self.V = alb.V
        self.basis = alb.saturated_basis
        # affine hull: (x - origin) . V[:, j] == 0 for j >= r, canonicalised by rref
        normals = [[self.V[i][j] for i in range(n)] for j in range(alb.rank, n)]
        red, _ = L.rref(normals)
        eqs = []
        for row in red:
            a = tuple(L.integerize(row))
            eqs.append((a, L.dot(a, self.origin)))
        self.equations = tuple(sorted(eqs))

    def to_local(self, x: Sequence[int]) -> Point:
        d = [a - b for a, b in zip(x, self.origin)]
        z = L.vecmat(d, self.V)
        return tuple(z[: self.rank])

    def to_ambient(self, y: Sequence[int], m: int = 1) -> Point:
        """Ambient point for local coordinates ``y`` of the dilate ``m P``."""
        out = [m * o for o in self.origin]
        for c, row in zip(y, self.basis):
            if c:
                out = [a + c * b for a, b in zip(out, row)]
        return tuple(out)

    def ambient_normal(self, a: Sequence[int]) -> Point:
        """Ambient normal ``V_r a`` of a local inequality ``a . y <= b``."""
        r = self.rank
        return tuple(sum(self.V[i][j] * a[j] for j in range(r)) for i in range(self.n))


# ---------------------------------------------------------------------------
# polytopes


@dataclass(frozen=True)
class HalfspaceRep:
    """``a . x <= b`` for every inequality and ``a . x == b`` for every equation."""

    inequalities: tuple[tuple[Point, int], ...]
    equations: tuple[tuple[Point, int], ...] = ()

    def contains(self, x: Sequence, m: int = 1, strict: bool = False) -> bool:
        for a, b in self.equations:
            if L.dot(a, x) != m * b:
                return False
        if strict:
            return all(L.dot(a, x) < m * b for a, b in self.inequalities)
        return all(L.dot(a, x) <= m * b for a, b in self.inequalities)

    def to_json(self) -> dict:
        return {
            "inequalities": [[list(a), b] for a, b in self.inequalities],
            "equations": [[list(a), b] for a, b in self.equations],
        }


def _dedupe(points) -> list[Point]:
    return sorted(set(L.as_int_vector(p) for p in points))


class LatticePolytope:
    """Convex hull of finitely many integer points.

    Construction drops non-vertices, fixes an affine frame and computes the
    facet description once; instances are treated as immutable afterwards.
    """

    def __init__(self, points: Iterable[Sequence[int]], name: str | None = None):
        pts = _dedupe(points)
        if not pts:
            raise ValueError("a polytope needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise AmbientMismatch("points of different lengths")
        self.name = name
        self.ambient_dim = n
        if len(pts) > MAX_GENERAL_DIM + 2:
            # cheap rank test first, before any Smith normal form on many points
            r = len(L.independent_rows([[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]))
            if r > MAX_GENERAL_DIM and len(pts) > r + 1:
                raise DimensionTooLarge(f"dimension {r} with {len(pts)} points is beyond desk scale")
        self.frame = AffineFrame(pts)
        self.dim = self.frame.rank
        local = [self.frame.to_local(p) for p in pts]
        facets = facets_of_full_dim(local) if self.dim > 0 else []
        keep = [i for i, y in enumerate(local) if _is_vertex(y, facets, self.dim)]
        self.vertices: tuple[Point, ...] = tuple(pts[i] for i in keep)
        self.local_vertices: tuple[Point, ...] = tuple(local[i] for i in keep)
        self.local_facets = tuple(facets)
        self.hrep = HalfspaceRep(
            tuple(
                sorted(
                    (self.frame.ambient_normal(a), b + L.dot(self.frame.ambient_normal(a), self.frame.origin))
                    for a, b in facets
                )
            ),
            self.frame.equations,
        )

    # -- basic data ----------------------------------------------------------

    def __repr__(self):
        label = f" {self.name}" if self.name else ""
        return f"<LatticePolytope{label} dim={self.dim} n={self.ambient_dim} vertices={len(self.vertices)}>"

    def __eq__(self, other):
        return isinstance(other, LatticePolytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.dim + 1

    @property
    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, point: Sequence[int], strict: bool = False, m: int = 1) -> bool:
        return self.hrep.contains(L.as_int_vector(point) if not _has_fraction(point) else point, m, strict)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ambient_dim": self.ambient_dim,
            "vertices": [list(v) for v in self.vertices],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "LatticePolytope":
        verts = doc["vertices"]
        n = doc.get("ambient_dim")
        if n is not None and any(len(v) != n for v in verts):
            raise AmbientMismatch("vertex length disagrees with ambient_dim")
        return cls(verts, name=doc.get("name"))


def _has_fraction(point) -> bool:
    return any(isinstance(x, Fraction) for x in point)


def _is_vertex(y, facets, r) -> bool:
    if r == 0:
        return True
    tight = [list(a) for a, b in facets if L.dot(a, y) == b]
    return len(tight) >= r and L.rank(tight) == r


def dual_description(vertices: Iterable[Sequence[int]]) -> HalfspaceRep:
    return LatticePolytope(vertices).hrep


def vertices_from_hrep(hrep: HalfspaceRep, n: int) -> list[Point]:
    """Vertices of a bounded H-polytope, by double description on its homogenisation.

    Used to check that facet enumeration can be inverted.
    """
    rows = []
    for a, b in hrep.inequalities:
        rows.append(list(a) + [-b])
    for a, b in hrep.equations:
        rows.append(list(a) + [-b])
        rows.append([-x for x in a] + [b])
    rows.append([0] * n + [-1])  # t >= 0
    rays, _ = extreme_rays(rows)
    out = []
    for ray in rays:
        t = ray[n]
        if t <= 0:
            continue
        pt = [Fraction(x, t) for x in ray[:n]]
        out.append(tuple(int(x) if x.denominator == 1 else x for x in pt))
    return sorted(out)


# ---------------------------------------------------------------------------
# combinators


def dilate(P: LatticePolytope, m: int) -> LatticePolytope:
    if m < 1:
        raise ValueError("dilation factor must be >= 1")
    return LatticePolytope([[m * x for x in v] for v in P.vertices], name=P.name and f"{m}*{P.name}")


def translate(P: LatticePolytope, shift: Sequence[int]) -> LatticePolytope:
    if len(shift) != P.ambient_dim:
        raise AmbientMismatch("translation vector has the wrong length")
    return LatticePolytope([[a + b for a, b in zip(v, shift)] for v in P.vertices], name=P.name)


def translate_to_origin(P: LatticePolytope, vertex: Sequence[int] | None = None) -> LatticePolytope:
    """Translate so that ``vertex`` (default: the smallest vertex) sits at the origin."""
    v = P.vertices[0] if vertex is None else L.as_int_vector(vertex)
    if v not in P.vertices:
        raise ValueError("not a vertex")
    return translate(P, [-x for x in v])


def product(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    return LatticePolytope([tuple(a) + tuple(b) for a, b in _cartesian(P.vertices, Q.vertices)])


def pyramid(P: LatticePolytope) -> LatticePolytope:
    pts = [tuple(v) + (0,) for v in P.vertices]
    pts.append((0,) * P.ambient_dim + (1,))
    return LatticePolytope(pts)


def free_sum(Ps: Sequence[LatticePolytope]) -> LatticePolytope:
    if not Ps:
        raise ValueError("free sum of nothing")
    for P in Ps:
        if (0,) * P.ambient_dim not in P.vertices:
            raise OriginNotVertex(f"origin is not a vertex of {P!r}")
    total = sum(P.ambient_dim for P in Ps)
    pts = []
    offset = 0
    for P in Ps:
        for v in P.vertices:
            pt = [0] * total
            pt[offset : offset + P.ambient_dim] = v
            pts.append(tuple(pt))
        offset += P.ambient_dim
    return LatticePolytope(pts)


def minkowski_sum(P: LatticePolytope, Q: LatticePolytope) -> LatticePolytope:
    if P.ambient_dim != Q.ambient_dim:
        raise AmbientMismatch("Minkowski summands live in different spaces")
    return LatticePolytope([tuple(a + b for a, b in zip(u, v)) for u in P.vertices for v in Q.vertices])


def contains(P: LatticePolytope, point: Sequence[int], strict: bool = False, m: int = 1) -> bool:
    return P.contains(point, strict=strict, m=m)
