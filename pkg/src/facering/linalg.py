"""Dense exact Gaussian elimination: rank, kernel, image, solve.

All routines are deterministic (first nonzero entry is the pivot), so
identical inputs always produce identical reduced forms.  Matrices are
numpy arrays produced by :meth:`facering.fields.FieldSpec.matrix`.
"""

from __future__ import annotations

import numpy as np

from .errors import LinAlgError
from .fields import FieldSpec


def _coerce(mat, field: FieldSpec) -> np.ndarray:
    if isinstance(mat, np.ndarray) and mat.dtype == (np.int64 if field.is_prime_field else object):
        return mat
    return field.matrix(mat)


def row_reduce(mat, field: FieldSpec, limit_cols: int | None = None):
    """Reduced row echelon form, in full.

    Returns ``(reduced, pivots)``: ``reduced`` has the same shape as the
    input, with pivot rows first (rows ``len(pivots):`` are zero in the
    pivot-searchable columns).  ``limit_cols`` restricts pivot search to the
    first columns, which is how augmented systems are solved.
    """
    a = field.reduce(_coerce(mat, field).copy())
    m, n = a.shape
    stop = n if limit_cols is None else limit_cols
    pivots: list[int] = []
    r = 0
    for c in range(stop):
        if r == m:
            break
        below = np.nonzero(a[r:, c])[0]
        if below.size == 0:
            continue
        pr = r + int(below[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        inv = field.inverse(a[r, c])
        a[r] = field.reduce(a[r] * inv)
        rows = np.nonzero(a[:, c])[0]
        rows = rows[rows != r]
        if rows.size:
            # Rank-1 update keeps every intermediate below p**2: int64-safe.
            a[rows] = field.reduce(a[rows] - np.outer(a[rows, c], a[r]))
        pivots.append(c)
        r += 1
    return a, pivots


def rref_rows(mat, field: FieldSpec):
    """Like :func:`row_reduce` but returns only the nonzero (pivot) rows."""
    a, pivots = row_reduce(mat, field)
    return a[: len(pivots)], pivots


def rank(mat, field: FieldSpec) -> int:
    """Exact rank over the field."""
    a = _coerce(mat, field)
    if a.size == 0:
        return 0
    return len(row_reduce(a, field)[1])


def kernel_basis(mat, field: FieldSpec) -> np.ndarray:
    """Columns spanning the null space (zero-width matrix when injective)."""
    a = _coerce(mat, field)
    m, n = a.shape
    if n == 0:
        return field.zeros((0, 0))
    if m == 0:
        return field.matrix(np.eye(n, dtype=np.int64))
    rref, pivots = rref_rows(a, field)
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    out = field.zeros((n, len(free)))
    for j, c in enumerate(free):
        out[c, j] = 1
        for k, pc in enumerate(pivots):
            out[pc, j] = -rref[k, c]
    return field.reduce(out)


def image_basis(mat, field: FieldSpec) -> np.ndarray:
    """Columns of the original matrix at the pivot positions."""
    a = _coerce(mat, field)
    if a.size == 0:
        return a.reshape(a.shape[0], 0)
    _, pivots = row_reduce(a, field)
    return a[:, pivots]


def quotient_dim(ambient_dim: int, mat, field: FieldSpec) -> int:
    """Dimension of the ambient space modulo the column span of ``mat``."""
    return ambient_dim - rank(mat, field)


def nullity(mat, field: FieldSpec) -> int:
    a = _coerce(mat, field)
    return a.shape[1] - rank(a, field)


def solve(a, b, field: FieldSpec) -> np.ndarray:
    """Solve ``a @ x = b`` column-wise (``b`` may have several columns).

    Free variables are set to zero.  Raises :class:`LinAlgError` when the
    system is inconsistent.
    """
    a = _coerce(a, field)
    b = _coerce(b, field)
    if b.ndim == 1:
        b = b[:, None]
    m, n = a.shape
    aug = np.concatenate([a, b], axis=1) if n else b.copy()
    reduced, pivots = row_reduce(aug, field, limit_cols=n)
    leftover = reduced[len(pivots):, n:]
    if leftover.size and np.any(leftover != 0):
        raise LinAlgError("inconsistent linear system")
    x = field.zeros((n, b.shape[1]))
    for k, c in enumerate(pivots):
        x[c] = reduced[k, n:]
    return x


def reduce_mod_rowspace(vectors: np.ndarray, rref: np.ndarray, pivots, field: FieldSpec) -> np.ndarray:
    """Canonical representatives of the rows of ``vectors`` modulo the row
    space spanned by ``(rref, pivots)``.

    Pivot-by-pivot rank-1 updates; never forms a full matrix product, so the
    prime-field path stays inside int64.
    """
    w = vectors.copy()
    for k, c in enumerate(pivots):
        coef = w[:, c]
        hit = np.nonzero(coef)[0]
        if hit.size:
            w[hit] = field.reduce(w[hit] - np.outer(coef[hit], rref[k]))
    return w
