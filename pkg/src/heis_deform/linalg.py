"""Small dense linear algebra over Fractions or floats (2x2 and 3x3)."""
from __future__ import annotations

from fractions import Fraction

from .scalar import DEFAULT_TOL, is_exact, is_zero

Matrix = tuple  # tuple of row tuples


class SingularMatrixError(ValueError):
    pass


def mat(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def det2(M) -> object:
    (p, q), (r, s) = M
    return p * s - q * r


def trace(M):
    return sum(M[i][i] for i in range(len(M)))


def add(M, N) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(M, N))


def sub(M, N) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(M, N))


def scale(s, M) -> Matrix:
    return tuple(tuple(s * x for x in r) for r in M)


def matmul(M, N) -> Matrix:
    cols = list(zip(*N))
    return tuple(tuple(sum(x * y for x, y in zip(r, c)) for c in cols) for r in M)


def matvec(M, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(r, v)) for r in M)


def identity(n: int, exact: bool = True) -> Matrix:
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def inv2(M, tol: float = DEFAULT_TOL) -> Matrix:
    (p, q), (r, s) = M
    d = p * s - q * r
    if is_zero(d, tol):
        raise SingularMatrixError("matrix is singular")
    return ((s / d, -q / d), (-r / d, p / d))


def solve2(M, rhs, tol: float = DEFAULT_TOL) -> tuple:
    return matvec(inv2(M, tol), rhs)


def nullspace(M, tol: float = DEFAULT_TOL) -> list:
    """Basis of the right kernel of ``M`` via reduced row echelon form.

    Exact entries give an exact basis.  For floats, partial pivoting is used
    and pivots with magnitude ``<= tol`` count as zero.
    """
    rows = [list(r) for r in M]
    n_rows, n_cols = len(rows), len(rows[0])
    exact = all(is_exact(x) for r in rows for x in r)
    if exact:
        rows = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        if exact:
            piv = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        else:
            piv = max(range(r, n_rows), key=lambda i: abs(rows[i][c]))
            if abs(rows[piv][c]) <= tol:
                piv = None
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    basis = []
    for free in (c for c in range(n_cols) if c not in pivots):
        v = [zero] * n_cols
        v[free] = one
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(tuple(v))
    return basis
