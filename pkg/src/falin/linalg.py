"""Dense exact linear algebra over the rationals.

Everything is a list of lists of Fraction.  Sizes here are the algebra
rank (a handful), so plain Gaussian elimination is the right tool; there
is no pivoting strategy beyond "first nonzero".
"""

from __future__ import annotations

from fractions import Fraction

from .errors import SingularMatrix

Matrix = "list[list[Fraction]]"
Vector = "list[Fraction]"


def frac_matrix(rows) -> list:
    return [[Fraction(x) for x in row] for row in rows]


def identity(n: int) -> list:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def rref(rows, ncols=None):
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = m[r][c]
        m[r] = [x / inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def kernel_basis(rows, ncols: int) -> list:
    """Basis of the right kernel, one vector per free column.

    Free variables are set to 1 in increasing column order, which makes the
    basis canonical.
    """
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -reduced[r][free]
        basis.append(v)
    return basis


def solve_particular(a, b):
    """One solution of A x = b with free variables at 0, or None if inconsistent."""
    if not a:
        return [] if not any(b) else None
    ncols = len(a[0])
    aug = [row + [rhs] for row, rhs in zip(a, b)]
    reduced, pivots = rref(aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = reduced[r][ncols]
    return x


def det(a) -> Fraction:
    n = len(a)
    m = [list(r) for r in a]
    result = Fraction(1)
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != c:
            m[c], m[pivot_row] = m[pivot_row], m[c]
            result = -result
        result *= m[c][c]
        inv = m[c][c]
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] / inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


def int_det(a) -> int:
    value = det(frac_matrix(a))
    assert value.denominator == 1
    return value.numerator


def inverse(a) -> list:
    n = len(a)
    aug = [list(row) + ident_row
           for row, ident_row in zip(a, identity(n))]
    reduced, pivots = rref(aug, 2 * n)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return [row[n:] for row in reduced]
