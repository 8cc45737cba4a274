"""Small exact linear algebra over Q, Z and GF(2)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def frac_matrix(rows) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def det(m) -> Fraction:
    a = frac_matrix(m)
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def inverse(m) -> Matrix:
    a = frac_matrix(m)
    n = len(a)
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def matmul(a, b) -> Matrix:
    bt = list(zip(*b))
    return [[sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def gram_of(basis, scale=1) -> Matrix:
    scale = Fraction(scale)
    return [[scale * sum((Fraction(x) * y for x, y in zip(u, v)), Fraction(0)) for v in basis] for u in basis]


def quadratic_decomposition(gram) -> Matrix:
    """Completed-square form of a positive definite Gram matrix.

    Returns ``q`` with ``x^T G x = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2``.
    Raises ``ValueError`` if the form is not positive definite.
    """
    n = len(gram)
    q = frac_matrix(gram)
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    return q


def hermite_basis(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form: a basis of the Z-span of integer ``rows``."""
    a = [list(map(int, r)) for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    out = []
    r0 = 0
    for col in range(ncols):
        # Euclid on column entries below r0
        while True:
            nz = [r for r in range(r0, len(a)) if a[r][col]]
            if not nz:
                break
            piv = min(nz, key=lambda r: abs(a[r][col]))
            a[r0], a[piv] = a[piv], a[r0]
            done = True
            for r in range(r0 + 1, len(a)):
                if a[r][col]:
                    f = a[r][col] // a[r0][col]
                    a[r] = [x - f * y for x, y in zip(a[r], a[r0])]
                    if a[r][col]:
                        done = False
            if done:
                break
        if r0 < len(a) and a[r0][col]:
            if a[r0][col] < 0:
                a[r0] = [-x for x in a[r0]]
            for r in range(r0):
                f = a[r][col] // a[r0][col]
                if f:
                    a[r] = [x - f * y for x, y in zip(a[r], a[r0])]
            r0 += 1
    out = [row for row in a[:r0] if any(row)]
    return out


def gf2_rref(rows: Sequence[Sequence[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form over GF(2); returns (nonzero rows, pivot columns)."""
    a = [[x & 1 for x in r] for r in rows]
    ncols = len(a[0]) if a else 0
    pivots = []
    r0 = 0
    for col in range(ncols):
        piv = next((r for r in range(r0, len(a)) if a[r][col]), None)
        if piv is None:
            continue
        a[r0], a[piv] = a[piv], a[r0]
        for r in range(len(a)):
            if r != r0 and a[r][col]:
                a[r] = [x ^ y for x, y in zip(a[r], a[r0])]
        pivots.append(col)
        r0 += 1
    return a[:r0], pivots


def gf2_solve(rows: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[int]:
    """One solution ``v`` of ``rows · v = rhs`` over GF(2); ``ValueError`` if none exists."""
    ncols = len(rows[0]) if rows else 0
    aug = [[x & 1 for x in r] + [b & 1] for r, b in zip(rows, rhs)]
    red, pivots = gf2_rref(aug)
    if ncols in pivots:
        raise ValueError("inconsistent linear system over GF(2)")
    v = [0] * ncols
    for row, col in zip(red, pivots):
        v[col] = row[-1]
    return v
