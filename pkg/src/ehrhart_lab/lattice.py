"""Integer and rational matrix helpers: Bareiss determinants, exact Gaussian
elimination and the Smith normal form with transformation matrices.

Matrices are lists of rows.  Nothing here knows about polytopes.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(m):
    return [list(col) for col in zip(*m)]


def matmul(a, b):
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def vecmat(v, m):
    """Row vector times matrix."""
    if not m:
        return []
    return [sum(v[i] * m[i][j] for i in range(len(v))) for j in range(len(m[0]))]


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def primitive(v):
    """Divide an integer vector by the gcd of its entries (zero stays zero)."""
    g = reduce(gcd, (abs(x) for x in v), 0)
    if g <= 1:
        return list(v)
    return [x // g for x in v]


def integerize(v):
    """Scale a rational vector by a positive factor to a primitive integer vector."""
    fr = [Fraction(x) for x in v]
    den = reduce(lcm, (x.denominator for x in fr), 1)
    return primitive([int(x * den) for x in fr])


def det_bareiss(m) -> int:
    """Exact determinant of a square integer matrix (fraction-free elimination)."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def rref(m):
    """Reduced row echelon form over Q; returns (rows, pivot_columns)."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a[:r], pivots


def rank(m) -> int:
    if not m or not m[0]:
        return 0
    return len(rref(m)[1])


def inverse(m):
    """Exact rational inverse of a square matrix (ValueError if singular)."""
    n = len(m)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m)]
    red, piv = rref(aug)
    if piv[:n] != list(range(n)) or len(red) < n:
        raise ValueError("singular matrix")
    return [row[n:] for row in red]


def independent_rows(m) -> list[int]:
    """Indices of a maximal linearly independent subset of rows, greedily."""
    chosen: list[int] = []
    basis: list[list[Fraction]] = []
    pivcols: list[int] = []
    for idx, row in enumerate(m):
        v = [Fraction(x) for x in row]
        for b, pc in zip(basis, pivcols):
            if v[pc]:
                f = v[pc]
                v = [x - f * y for x, y in zip(v, b)]
        pc = next((j for j, x in enumerate(v) if x), None)
        if pc is None:
            continue
        inv = 1 / v[pc]
        v = [x * inv for x in v]
        # keep the basis fully reduced so later rows reduce in one pass
        for k, b in enumerate(basis):
            if b[pc]:
                f = b[pc]
                basis[k] = [x - f * y for x, y in zip(b, v)]
        basis.append(v)
        pivcols.append(pc)
        chosen.append(idx)
        if len(chosen) == len(v):
            break
    return chosen


def smith_normal_form(m):
    """Smith normal form of an integer matrix.

    Returns ``(U, S, V)`` with ``U * m * V == S``, ``U`` and ``V`` unimodular and
    ``S`` diagonal with non-negative entries, each dividing the next.
    """
    rows = len(m)
    cols = len(m[0]) if rows else 0
    a = [list(map(int, row)) for row in m]
    u = identity(rows)
    v = identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):  # row_dst += f * row_src
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):  # col_dst += f * col_src
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        best = None
        for i in range(t, rows):
            for j in range(t, cols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: fold an offending row into the pivot row
            bad = None
            for i in range(t + 1, rows):
                for j in range(t + 1, cols):
                    if a[i][j] % a[t][t]:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is None:
                break
            add_row(t, bad, 1)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return u, a, v


def elementary_divisors(m) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    if not m or not m[0]:
        return []
    _, s, _ = smith_normal_form(m)
    return [s[i][i] for i in range(min(len(s), len(s[0]))) if s[i][i]]


def unimodular_inverse(v):
    """Inverse of a unimodular integer matrix, as integers."""
    inv = inverse(v)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append([int(x) for x in row])
    return out


def adjugate_scaled_inverse(m):
    """Return ``(D, N)`` with ``D = |det m|`` and ``N = D * m^-1`` an integer matrix."""
    d = abs(det_bareiss(m))
    if d == 0:
        raise ValueError("singular matrix")
    inv = inverse(m)
    return d, [[int(x * d) for x in row] for row in inv]


def as_int_vector(v: Sequence) -> tuple[int, ...]:
    out = []
    for x in v:
        if isinstance(x, bool):
            raise TypeError("booleans are not lattice coordinates")
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise ValueError(f"non-integer coordinate {x}")
            x = x.numerator
        if not isinstance(x, int):
            if hasattr(x, "__index__"):
                x = x.__index__()
            else:
                raise TypeError(f"non-integer coordinate {x!r}")
        out.append(x)
    return tuple(out)
