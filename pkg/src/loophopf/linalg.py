"""Dense Gaussian elimination over GF(p^k), on lists of field codes.

Matrices are lists of rows.  Sizes here stay in the hundreds, so plain
Python lists beat any conversion overhead.
"""

from __future__ import annotations

from .errors import InvalidInputError, NotInvertibleError
from .scalars import GF


def identity(N: int) -> list[list[int]]:
    return [[1 if r == c else 0 for c in range(N)] for r in range(N)]


def matmul(fld: GF, A: list[list[int]], B: list[list[int]]) -> list[list[int]]:
    add, mul = fld.add, fld.mul
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        acc = [0] * cols
        for j, a in enumerate(row):
            if a:
                for c, b in enumerate(B[j]):
                    if b:
                        acc[c] = add(acc[c], mul(a, b))
        out.append(acc)
    return out


def row_reduce(fld: GF, M: list[list[int]]) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form and the pivot columns."""
    add, mul, neg, inv = fld.add, fld.mul, fld.neg, fld.inv
    R = [list(r) for r in M]
    pivots: list[int] = []
    ncols = len(R[0]) if R else 0
    row = 0
    for col in range(ncols):
        piv = next((r for r in range(row, len(R)) if R[r][col]), None)
        if piv is None:
            continue
        R[row], R[piv] = R[piv], R[row]
        s = inv(R[row][col])
        R[row] = [mul(s, v) for v in R[row]]
        for r in range(len(R)):
            if r != row and R[r][col]:
                f = neg(R[r][col])
                R[r] = [add(v, mul(f, w)) if w else v for v, w in zip(R[r], R[row])]
        pivots.append(col)
        row += 1
        if row == len(R):
            break
    return R, pivots


def rank(fld: GF, M: list[list[int]]) -> int:
    if not M:
        return 0
    return len(row_reduce(fld, M)[1])


def nullspace(fld: GF, M: list[list[int]], ncols: int) -> list[list[int]]:
    """Basis of ``{x : M x = 0}`` for a matrix with ``ncols`` columns."""
    if not M:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    R, pivots = row_reduce(fld, M)
    neg = fld.neg
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for r, pc in enumerate(pivots):
            x[pc] = neg(R[r][f])
        basis.append(x)
    return basis


def inverse(fld: GF, M: list[list[int]]) -> list[list[int]]:
    N = len(M)
    if any(len(r) != N for r in M):
        raise InvalidInputError("matrix must be square")
    aug = [list(r) + e for r, e in zip(M, identity(N))]
    R, pivots = row_reduce(fld, aug)
    if pivots[:N] != list(range(N)):
        raise NotInvertibleError("singular matrix")
    return [r[N:] for r in R]
