import itertools
import random
from fractions import Fraction
from math import comb

import numpy as np
import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from ehrhart_lab import zoo
from ehrhart_lab.errors import (
    BadParameter,
    NonpositiveEvaluation,
    NonpositiveLeadingCoefficient,
    NotPalindromic,
    ZeroPolynomial,
)
from ehrhart_lab.numkernel import Poly, is_real_rooted
from ehrhart_lab.polyform import (
    DiagnosticsReport,
    HStarVector,
    Verdict,
    cl_check,
    full_diagnostics,
    gamma_vector,
    general_inequality_battery,
    has_no_internal_zeros,
    hstar_from_poly,
    hstar_to_ehrhart,
    hurwitz_implies_positive,
    is_ehrhart_positive,
    is_gamma_positive,
    is_log_concave,
    is_palindromic,
    is_unimodal,
    is_weakly_log_concave,
    k_vector,
    magic_expansion,
    negative_evaluation_log_concavity,
    roots_on_unit_circle,
    series_log_concavity,
    series_violations,
    toeplitz_minor,
    toeplitz_minor_check,
)

X = sympy.Symbol("x")
hvecs = st.integers(0, 7).flatmap(lambda d: st.lists(st.integers(0, 25), min_size=d, max_size=d).map(lambda t: [1] + t))


def reeve_E(q):
    return Poly([1, Fraction(11 - q, 6), 1, Fraction(q + 1, 6)])


def series_oracle(E: Poly, D: int) -> list[Fraction]:
    """Numerator coefficients from a sympy series expansion of the Ehrhart series."""
    N = D + 2
    s = sum(sympy.Rational(str(E(m))) * X**m for m in range(N + 1))
    num = sympy.expand(sympy.series(s * (1 - X) ** (D + 1), X, 0, N + 1).removeO())
    return [Fraction(str(num.coeff(X, i))) for i in range(D + 1)]


# ---------------------------------------------------------------------------
# h* transform


def test_hstar_examples():
    assert hstar_from_poly(reeve_E(1)).coeffs == (1, 0, 1)
    assert hstar_from_poly(Poly([1, 1])) == Poly([1])
    assert hstar_from_poly(Poly([1, 2, 1])) == Poly([1, 1])  # unit square
    with pytest.raises(ZeroPolynomial):
        hstar_from_poly(Poly())
    with pytest.raises(BadParameter):
        hstar_from_poly(Poly([1, 1, 1]), 1)


@given(hvecs)
@settings(max_examples=60, deadline=None)
def test_hstar_from_poly_matches_series_oracle(h):
    d = len(h) - 1
    E = hstar_to_ehrhart(h)
    want = series_oracle(E, d)
    got = hstar_from_poly(E, d).coefficient_list(d + 1)
    assert got == want == [Fraction(x) for x in h]


def test_hstar_with_larger_D():
    E = Poly([1, 1])
    assert hstar_from_poly(E, 2) == Poly([1, -1])


def test_hstar_vector_validation():
    with pytest.raises(BadParameter):
        HStarVector((1, -1), 1)
    with pytest.raises(BadParameter):
        HStarVector((1, 1, 1), 1)
    h = HStarVector((1, 0, 12), 3)
    assert h.h == (1, 0, 12, 0) and h.s == 2 and h.codegree == 2 and h.head == (1, 0, 12)


def test_round_trip_500_random():
    rng = random.Random(11)
    for _ in range(500):
        d = rng.randint(0, 9)
        h = [rng.randint(0, 50) for _ in range(d + 1)]
        h[0] = 1
        assert hstar_from_poly(hstar_to_ehrhart(h), d).coefficient_list(d + 1) == h


# ---------------------------------------------------------------------------
# other expansions


def test_gamma_examples():
    assert gamma_vector([1, 4, 22, 4, 1]).gamma == (1, 0, 16)
    with pytest.raises(NotPalindromic):
        gamma_vector([1, 2, 3])
    assert not is_gamma_positive([1, 2, 3]).ok
    assert not is_gamma_positive([1, 1, 1]).ok  # gamma = (1, -1)


@given(st.integers(0, 8), st.data())
def test_gamma_reconstructs(s, data):
    half = data.draw(st.lists(st.integers(0, 30), min_size=s // 2 + 1, max_size=s // 2 + 1))
    c = half + half[: (s + 1) // 2][::-1]
    assume(c[0] != 0)
    g = gamma_vector(c)
    assert g.reconstruct() == Poly(c)


def test_magic_examples():
    cube = Poly([1, 1]) ** 3
    m = magic_expansion(cube, 3)
    assert m.a == (1, 0, 0, 0) and m.is_positive
    assert not magic_expansion(reeve_E(12)).is_positive


@given(hvecs)
def test_magic_and_k_reconstruct(h):
    E = hstar_to_ehrhart(h)
    d = len(h) - 1
    assert magic_expansion(E, d).reconstruct() == E
    kv = k_vector(E, d)
    assert kv.reconstruct() == E
    assert kv.identity_ok
    assert kv.sign_pattern_ok


def test_k_vector_reeve():
    kv = k_vector(reeve_E(1), 3)
    assert kv.magnitudes == (0, 1, 2, 2)
    assert kv.sign_pattern_ok and kv.identity_ok


# ---------------------------------------------------------------------------
# sequence predicates


def test_unimodal_and_log_concave_examples():
    assert is_unimodal([1, 3, 3, 1]).ok
    v = is_unimodal([1, 1, 2, 1, 2, 1])
    assert not v.ok and v.witness["index"] == 3
    assert is_log_concave([1, 2, 1]).ok
    assert not is_log_concave([1, 0, 1]).ok
    assert is_weakly_log_concave([0, 1, 2]).ok
    assert not is_weakly_log_concave([1, 0, 1]).ok
    assert not is_log_concave([1, 4, 17]).ok
    assert not has_no_internal_zeros([1, 0, 2])
    assert has_no_internal_zeros([0, 1, 2, 0])
    assert is_palindromic([1, 4, 22, 4, 1, 0])
    with pytest.raises(ValueError):
        is_unimodal([])


@given(st.lists(st.integers(0, 20), min_size=1, max_size=10))
def test_log_concave_implies_unimodal(c):
    if is_log_concave(c).ok:
        assert is_unimodal(c).ok


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=5))
def test_real_rooted_positive_is_log_concave(roots):
    p = Poly.from_roots([-abs(r) - 1 for r in roots])
    assert is_real_rooted(p)
    assert is_log_concave(p).ok


def test_ehrhart_positive():
    assert is_ehrhart_positive(reeve_E(1)).ok
    v = is_ehrhart_positive(reeve_E(12))
    assert not v.ok and v.witness["index"] == 1


# ---------------------------------------------------------------------------
# Toeplitz minors


def test_toeplitz_example():
    v = toeplitz_minor_check([1, 4, 17])
    assert not v.ok
    assert v.witness == {"composition": [1, 1], "determinant": -1}


def test_toeplitz_two_by_two_formula():
    h = [1, 3, 5, 2]
    for i in range(1, 4):
        for j in range(1, 4 - i + 1):
            Hi = h[i] if i < len(h) else 0
            Hj = h[j] if j < len(h) else 0
            Hij = h[i + j] if i + j < len(h) else 0
            assert toeplitz_minor(h, (i, j)) == Hi * Hj - Hij


def test_toeplitz_reflexive_simplex_against_sympy():
    h = [1] * 6
    assert toeplitz_minor_check(h).ok
    for comp in [(1, 1, 1), (2, 1, 2), (1, 2), (5,)]:
        rows, cols, acc = [0], [], 0
        for p in comp:
            acc += p
            rows.append(acc)
            cols.append(acc)
        M = sympy.Matrix([[h[c - r] if 0 <= c - r < 6 else 0 for c in cols] for r in rows[:-1]])
        assert toeplitz_minor(h, comp) == M.det() >= 0


# ---------------------------------------------------------------------------
# battery


def test_battery_families_present():
    v = general_inequality_battery(HStarVector((1, 0, 12, 0), 3))
    assert set(v.witness) == {"hibi_partial_sums", "stanley_partial_sums", "hibi_lower_bound", "stapledon", "h1_ge_hd"}
    assert v.ok


def test_battery_out_of_range_flagged():
    v = general_inequality_battery(HStarVector((1, 1, 0, 0), 3))
    st_ = v.witness["stapledon"]
    assert st_.witness and st_.witness["out_of_range_terms"]
    assert "treated as zero" in st_.detail


def test_battery_detects_violation():
    v = general_inequality_battery(HStarVector((1, 1, 1, 5), 3))
    assert not v.ok
    assert not v.witness["h1_ge_hd"].ok


# ---------------------------------------------------------------------------
# series checks


def test_series_examples():
    assert series_log_concavity(reeve_E(1)).ok
    E = Poly([1, Fraction(139, 20), Fraction(33, 8), -2, Fraction(7, 8), Fraction(21, 20)])
    v = series_log_concavity(E)
    assert v.witness == {"m": 2, "lhs": 3969, "rhs": 3972}
    E = Poly([1, Fraction(1, 6), Fraction(3, 2), Fraction(7, 3)])
    v = series_log_concavity(E)
    assert v.witness == {"m": 1, "lhs": 25, "rhs": 26}
    with pytest.raises(NonpositiveLeadingCoefficient):
        series_log_concavity(Poly([1, -1]))
    with pytest.raises(NonpositiveEvaluation):
        series_log_concavity(Poly([-5, 0, 1]))


@given(hvecs)
@settings(max_examples=60, deadline=None)
def test_series_verdict_matches_long_scan(h):
    assume(len(h) >= 2)
    E = hstar_to_ehrhart(h)
    v = series_log_concavity(E)
    scan = series_violations(E, 200)
    assert v.ok == (not scan)
    if not v.ok:
        assert v.witness["m"] == scan[0]


def test_negative_evaluation_example():
    E = Poly([1, Fraction(5, 12), Fraction(35, 24), Fraction(25, 12), Fraction(25, 24)])
    v = negative_evaluation_log_concavity(E, 4)
    assert v.witness == {"m": 2, "lhs": 36, "rhs": 41}
    assert negative_evaluation_log_concavity(reeve_E(1), 3).ok


def test_free_sum_scheme_violations():
    params = zoo.free_sum_scheme(2)
    assert [n for _, n in params] == [4, 7]
    E, d = zoo.free_sum_truncated_ehrhart(params)
    assert d == 20
    # the h* prefix is only known through degree n_k = 7, so E is exact for m <= 7
    bad = series_violations(E, 6)
    assert {3, 6} <= set(bad)
    assert bad == [3, 4, 6]


# ---------------------------------------------------------------------------
# root location


def numeric_roots(p: Poly):
    return np.roots([float(c) for c in reversed(p.coeffs)])


def test_cl_examples():
    for d in range(1, 7):
        assert cl_check(Poly([1, 2]) ** d).ok
    assert not cl_check(reeve_E(1)).ok
    assert cl_check(Poly([1])).ok
    v = hurwitz_implies_positive(Poly([1, 2]) ** 3)
    assert v.ok and v.witness == {"cl": True, "nonnegative": True}


@given(st.lists(st.fractions(min_value=-3, max_value=3, max_denominator=4), min_size=1, max_size=3),
       st.lists(st.fractions(min_value=-2, max_value=2, max_denominator=4), max_size=2))
def test_cl_against_constructed_roots(ys, reals):
    # (x + 1/2)^2 + y^2 puts a pair on the line; real roots elsewhere break it
    p = Poly.const(1)
    for y in ys:
        p = p * Poly([Fraction(1, 4) + y * y, 1, 1])
    for r in reals:
        p = p * Poly([-r, 1])
    on_line = all(r == Fraction(-1, 2) for r in reals)
    assert cl_check(p).ok == on_line


@given(st.lists(st.integers(-6, 6), min_size=2, max_size=7))
@settings(max_examples=150)
def test_cl_against_numpy(cs):
    p = Poly(cs)
    assume(p.degree >= 1)
    rts = numeric_roots(p)
    dev = np.abs(rts.real + 0.5)
    assume(all(v < 1e-9 or v > 1e-3 for v in dev))
    assert cl_check(p).ok == bool(np.all(dev < 1e-6))


def test_unit_circle_examples():
    assert roots_on_unit_circle(Poly([1, 1, 1, 1, 1]))
    assert roots_on_unit_circle(Poly([1, 2, 6, 5, 5, 6, 2, 1])) == bool(
        np.all(np.abs(np.abs(numeric_roots(zoo.payne_d7())) - 1) < 1e-6))
    assert not roots_on_unit_circle(Poly([1, 3, 1]))


@given(st.lists(st.integers(-5, 5), min_size=2, max_size=7))
@settings(max_examples=150)
def test_unit_circle_against_numpy(cs):
    p = Poly(cs)
    assume(p.degree >= 1 and p.coeffs[0] != 0)
    mod = np.abs(np.abs(numeric_roots(p)) - 1)
    assume(all(v < 1e-9 or v > 1e-3 for v in mod))
    assert roots_on_unit_circle(p) == bool(np.all(mod < 1e-6))


# ---------------------------------------------------------------------------
# aggregate report


def test_full_diagnostics_round_trip():
    rep = full_diagnostics(reeve_E(12), 3)
    assert not rep["ehrhart_positive"].ok
    assert rep["hstar_nonnegative"].ok
    doc = rep.to_json()
    again = DiagnosticsReport.from_json(doc)
    assert again.to_json() == doc
    assert rep.implication_failures == []


def test_implication_chain_on_fixture_corpus():
    polys = [reeve_E(q) for q in (1, 2, 12, 34)]
    polys += [hstar_to_ehrhart(h) for h in ([1, 4, 22, 4, 1], [1, 1, 2, 1, 2, 1], [1, 6, 6, 113, 0, 0],
                                            [1, 1, 1, 1, 1], [1, 13, 20, 20, 4])]
    polys += [hstar_to_ehrhart(list(zoo.payne_d7().coeffs)), hstar_to_ehrhart(list(zoo.payne_d11().coeffs))]
    polys += [Poly([1, 1]) ** 3, Poly([1, 1]) * Poly([1, 2]) * Poly([1, 3])]
    for E in polys:
        rep = full_diagnostics(E)
        assert rep.implication_failures == [], (E, rep.implication_failures)


def test_diagnostics_groups():
    rep = full_diagnostics(reeve_E(1), 3, groups=["cl"])
    assert "critical_line" in rep and "series_log_concave" not in rep
    assert Verdict(True).to_json() == {"ok": True}
    assert Verdict(False, {"x": Fraction(1, 2)}).to_json() == {"ok": False, "witness": {"x": "1/2"}}


def test_type_b_palindromic_random():
    rng = random.Random(3)
    for _ in range(100):
        k = rng.randint(0, 4)
        h = Poly([rng.randint(0, 9) for _ in range(k)] + [rng.randint(1, 9)])
        n = 2 * h.degree + rng.randint(0, 3)
        B = zoo.type_b_transform(h, n)
        assert B.coefficient_list(n + 1) == B.coefficient_list(n + 1)[::-1]
        # direct evaluation of (x+1)^n h(4x/(x+1)^2)
        for x in (Fraction(1), Fraction(2), Fraction(1, 3)):
            assert B(x) == (x + 1) ** n * h(4 * x / (x + 1) ** 2)
