import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ehrhart_lab import lattice as L
from ehrhart_lab import zoo
from ehrhart_lab.errors import AmbientMismatch, DimensionTooLarge, OriginNotVertex
from ehrhart_lab.geometry import (
    LatticePolytope,
    affine_lattice_basis,
    contains,
    dilate,
    dual_description,
    extreme_rays,
    free_sum,
    minkowski_sum,
    product,
    pyramid,
    translate,
    translate_to_origin,
    vertices_from_hrep,
)


def brute_facets(points):
    """Facets of a full-dimensional point set by trying every hyperplane through r points."""
    pts = [tuple(p) for p in points]
    r = len(pts[0])
    out = set()
    for combo in itertools.combinations(pts, r):
        diffs = [[a - b for a, b in zip(p, combo[0])] for p in combo[1:]]
        if r > 1 and L.rank(diffs) < r - 1:
            continue
        # normal = kernel of the difference matrix
        if r == 1:
            normals = [(1,), (-1,)]
        else:
            cof = []
            for j in range(r):
                minor = [[row[k] for k in range(r) if k != j] for row in diffs]
                cof.append((-1) ** j * L.det_bareiss(minor))
            normals = [tuple(L.primitive(cof)), tuple(L.primitive([-c for c in cof]))]
        for a in normals:
            b = L.dot(a, combo[0])
            if all(L.dot(a, p) <= b for p in pts):
                tight = [p for p in pts if L.dot(a, p) == b]
                if len(tight) >= r and L.rank([[x - y for x, y in zip(p, tight[0])] for p in tight[1:]] or [[0] * r]) == r - 1:
                    out.add((a, b))
    return sorted(out)


def brute_vertices(points):
    pts = sorted(set(map(tuple, points)))
    verts = []
    for p in pts:
        rest = [q for q in pts if q != p]
        if not rest:
            verts.append(p)
            continue
        if L.rank([[x - y for x, y in zip(q, rest[0])] for q in rest[1:]] or [[0]]) < len(p):
            # rest is lower-dimensional: p is a vertex unless it lies in conv(rest) (cannot, p is off the flat)
            verts.append(p)
            continue
        if any(L.dot(a, p) > b for a, b in brute_facets(rest)):
            verts.append(p)
    return verts


points3 = st.lists(st.tuples(*[st.integers(-3, 3)] * 3), min_size=5, max_size=9)
points2 = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=9)


def test_unit_square_and_cube():
    P = LatticePolytope([(0, 0), (1, 0), (0, 1), (1, 1), (0, 0)])
    assert P.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    assert set(P.hrep.inequalities) == {((-1, 0), 0), ((0, -1), 0), ((1, 0), 1), ((0, 1), 1)}
    C = zoo.cube(3)
    assert len(C.vertices) == 8 and len(C.hrep.inequalities) == 6


def test_interior_point_dropped():
    P = LatticePolytope([(0, 0), (2, 0), (0, 2), (1, 1), (2, 2), (1, 0)])
    assert P.vertices == ((0, 0), (0, 2), (2, 0), (2, 2))


@given(points3)
@settings(max_examples=60, deadline=None)
def test_facets_match_brute_force_3d(pts):
    P = LatticePolytope(pts)
    if P.dim < 3:
        return
    assert sorted(P.hrep.inequalities) == brute_facets(P.vertices)
    assert list(P.vertices) == brute_vertices(pts)


@given(points2)
@settings(max_examples=80, deadline=None)
def test_facets_match_brute_force_2d(pts):
    P = LatticePolytope(pts)
    if P.dim < 2:
        return
    assert sorted(P.hrep.inequalities) == brute_facets(P.vertices)
    assert list(P.vertices) == brute_vertices(pts)


@given(points3)
@settings(max_examples=40, deadline=None)
def test_vertices_from_hrep_inverts(pts):
    P = LatticePolytope(pts)
    assert vertices_from_hrep(P.hrep, P.ambient_dim) == list(P.vertices)
    assert dual_description(P.vertices) == P.hrep


def test_extreme_rays_of_orthant():
    rays, masks = extreme_rays([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])
    assert sorted(map(tuple, rays)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert len(masks) == 3


def test_lower_dimensional_frame():
    H = zoo.hypersimplex(2, 4)
    assert H.dim == 3 and H.ambient_dim == 4
    assert H.hrep.equations == (((1, 1, 1, 1), 2),)
    for v in H.vertices:
        assert H.frame.to_ambient(H.frame.to_local(v)) == v
    assert H.contains((1, 1, 0, 0)) and not H.contains((1, 1, 1, 0))
    assert not H.contains((1, 1, 0, 0), strict=True)


def test_segment_in_plane():
    S = LatticePolytope([(0, 0), (2, 4)])
    assert S.dim == 1
    assert S.contains((1, 2)) and not S.contains((1, 1))


def test_affine_lattice_basis():
    alb = affine_lattice_basis([(0, 0), (2, 0), (0, 2)])
    assert alb.rank == 2 and alb.divisors == (2, 2) and alb.index == 4
    alb = affine_lattice_basis([(1, 1), (2, 1), (1, 2)])
    assert alb.is_saturated
    pts = [(0, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    alb = affine_lattice_basis(pts)
    assert alb.rank == 3 and alb.index == 2


def test_dimension_limit():
    with pytest.raises(DimensionTooLarge):
        zoo.cube(13)
    S = zoo.standard_simplex(15)
    assert S.dim == 15 and S.is_simplex


def test_json_round_trip():
    P = zoo.reeve(3)
    Q = LatticePolytope.from_json(P.to_json())
    assert Q == P and Q.hrep == P.hrep
    with pytest.raises(AmbientMismatch):
        LatticePolytope.from_json({"vertices": [[0, 0], [1]], "ambient_dim": 2})


def test_combinators():
    seg = LatticePolytope([(0,), (1,)])
    sq = product(seg, seg)
    assert sq.vertices == ((0, 0), (0, 1), (1, 0), (1, 1))
    pyr = pyramid(sq)
    assert pyr.dim == 3 and len(pyr.vertices) == 5
    assert dilate(sq, 3).vertices[-1] == (3, 3)
    assert translate(sq, (1, -1)).vertices[0] == (1, -1)
    assert translate_to_origin(translate(sq, (5, 5))).vertices[0] == (0, 0)
    with pytest.raises(AmbientMismatch):
        translate(sq, (1,))
    with pytest.raises(AmbientMismatch):
        minkowski_sum(sq, seg)


def test_free_sum():
    seg = LatticePolytope([(0,), (1,)])
    T = free_sum([seg, seg])
    assert T.vertices == ((0, 0), (0, 1), (1, 0))
    with pytest.raises(OriginNotVertex):
        free_sum([LatticePolytope([(-1,), (1,)]), seg])
    R = zoo.free_sum_reeve([(37, 2), (250, 3)])
    assert R.dim == 8 and R.is_simplex


@given(st.lists(points2, min_size=3, max_size=3))
@settings(max_examples=30, deadline=None)
def test_minkowski_commutative_associative(ps):
    P, Q, R = (LatticePolytope(p) for p in ps)
    assert minkowski_sum(P, Q) == minkowski_sum(Q, P)
    assert minkowski_sum(minkowski_sum(P, Q), R) == minkowski_sum(P, minkowski_sum(Q, R))


@given(points3, st.data())
@settings(max_examples=40, deadline=None)
def test_convex_combinations_are_contained(pts, data):
    P = LatticePolytope(pts)
    ws = data.draw(st.lists(st.integers(0, 5), min_size=len(P.vertices), max_size=len(P.vertices)))
    if not any(ws):
        return
    tot = sum(ws)
    x = tuple(Fraction(sum(w * v[i] for w, v in zip(ws, P.vertices)), tot) for i in range(3))
    assert contains(P, x)
    for v in P.vertices:
        assert P.contains(v)
        # a point is its own relative interior
        assert P.contains(v, strict=True) == (P.dim == 0)


def test_dilate_membership():
    rng = random.Random(5)
    P = zoo.reeve(2)
    for _ in range(200):
        x = tuple(rng.randint(-1, 7) for _ in range(3))
        assert P.contains(x, m=3) == dilate(P, 3).contains(x)
