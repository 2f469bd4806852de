"""Small exact linear algebra helpers over the rationals.

Everything in this package is decided by integer data, so we do all rank
and nullspace computations with Fraction arithmetic.  No floating point
anywhere: a wrong sign in a single matrix entry would silently corrupt
the stability checks downstream.
"""

from __future__ import annotations

from fractions import Fraction


def _echelon(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Row-reduce in place, returning (reduced rows, pivot column indices)."""
    mat = [list(r) for r in rows]
    pivots: list[int] = []
    ncols = len(mat[0]) if mat else 0
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat, pivots


def rank(rows: list[list[int | Fraction]]) -> int:
    if not rows:
        return 0
    frows = [[Fraction(x) for x in row] for row in rows]
    _, pivots = _echelon(frows)
    return len(pivots)


def nullspace(rows: list[list[int | Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of {x : Mx = 0} for the matrix with the given rows.

    An empty row list means no constraints: the full standard basis comes
    back.  Basis vectors are the usual free-column parametrization from
    the reduced echelon form.
    """
    if not rows:
        return [
            [Fraction(1 if i == j else 0) for i in range(ncols)]
            for j in range(ncols)
        ]
    frows = [[Fraction(x) for x in row] for row in rows]
    mat, pivots = _echelon(frows)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * ncols
        vec[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][fc]
        basis.append(vec)
    return basis
