"""Row reduction and rank over GF(q), on int64 index matrices.

Prime fields run vectorised modular elimination; extension fields fall back
to row-at-a-time elimination through the field's array ops.  Matrices at the
scales used here (a few hundred rows) are cheap either way.
"""

from __future__ import annotations

import numpy as np

from .finite_field import FiniteField


def row_reduce(mat: np.ndarray, field: FiniteField):
    """Reduced row-echelon form; returns (nonzero rows, pivot columns)."""
    A = np.array(mat, dtype=np.int64)
    if A.ndim != 2:
        raise ValueError("need a 2-d matrix")
    rows, cols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        idx = np.nonzero(A[r:, c])[0]
        if len(idx) == 0:
            continue
        piv = r + int(idx[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        if field.e == 1:
            p = field.p
            A[r] = (A[r] * field.inv(int(A[r, c]))) % p
            other = np.nonzero(A[:, c])[0]
            other = other[other != r]
            if len(other):
                A[other] = (A[other] - np.outer(A[other, c], A[r])) % p
        else:
            A[r] = field.mul_arr(A[r], field.inv(int(A[r, c])))
            other = np.nonzero(A[:, c])[0]
            other = other[other != r]
            if len(other):
                scaled = field.mul_arr(A[other, c][:, None], A[r][None, :])
                A[other] = field.sub_arr(A[other], scaled)
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(mat: np.ndarray, field: FiniteField) -> int:
    return row_reduce(mat, field)[0].shape[0]
