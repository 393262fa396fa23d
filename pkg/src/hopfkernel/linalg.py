"""Exact Gaussian elimination over Scalar entries.

Matrices are lists of rows.  Everything here is small (a few hundred rows at
most), so plain row reduction is fine.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .scalars import Field, Scalar

Matrix = List[List[Scalar]]


def rref(field: Field, rows: Sequence[Sequence[Scalar]]) -> Tuple[Matrix, List[int]]:
    """Reduced row echelon form and pivot columns."""
    mat = [list(r) for r in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c]:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pv = mat[r][c]
        if not pv.is_one():
            inv = pv.inv()
            mat[r] = [x * inv if x else x for x in mat[r]]
        prow = mat[r]
        for i in range(len(mat)):
            if i != r:
                f = mat[i][c]
                if f:
                    mat[i] = [x - f * y if y else x for x, y in zip(mat[i], prow)]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(field: Field, rows: Sequence[Sequence[Scalar]]) -> int:
    return len(rref(field, rows)[1])


def nullspace(field: Field, rows: Sequence[Sequence[Scalar]], ncols: Optional[int] = None) -> Matrix:
    """Basis of {v : A v = 0}, one vector per free column."""
    if not rows:
        if ncols is None:
            raise ValueError("ncols needed for an empty matrix")
        return [[field.one if i == j else field.zero for i in range(ncols)] for j in range(ncols)]
    ncols = len(rows[0])
    red, piv = rref(field, rows)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for i, pc in enumerate(piv):
            v[pc] = -red[i][fcol]
        basis.append(v)
    return basis


def determinant(field: Field, rows: Sequence[Sequence[Scalar]]) -> Scalar:
    mat = [list(r) for r in rows]
    n = len(mat)
    det = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if mat[i][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            mat[c], mat[piv] = mat[piv], mat[c]
            det = -det
        pv = mat[c][c]
        det = det * pv
        inv = pv.inv()
        for i in range(c + 1, n):
            f = mat[i][c]
            if f:
                f = f * inv
                mat[i] = [x - f * y if y else x for x, y in zip(mat[i], mat[c])]
    return det


def inverse(field: Field, rows: Sequence[Sequence[Scalar]]) -> Optional[Matrix]:
    n = len(rows)
    aug = [list(r) + [field.one if i == j else field.zero for j in range(n)] for i, r in enumerate(rows)]
    red, piv = rref(field, aug)
    if piv[:n] != list(range(n)) or len(piv) < n:
        return None
    return [row[n:] for row in red]


def row_space_basis(field: Field, rows: Sequence[Sequence[Scalar]]) -> Matrix:
    return rref(field, rows)[0]


def matmul(field: Field, a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    out = []
    for row in a:
        acc = [field.zero] * cols
        for k in range(inner):
            x = row[k]
            if x:
                bk = b[k]
                for j in range(cols):
                    y = bk[j]
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def in_span(field: Field, basis: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    if not any(v):
        return True
    if not basis:
        return False
    return rank(field, list(basis) + [list(v)]) == rank(field, basis)
