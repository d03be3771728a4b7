"""Dense linear algebra over GF(q^2) on numpy arrays of element codes.

Products go through the field's multiplication table.  Sums along an axis
are taken digit-wise mod p, since adding in a polynomial basis is
coordinate-wise addition over GF(p).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from .field import FieldContext


@lru_cache(maxsize=None)
def _digits(ctx: FieldContext) -> tuple[np.ndarray, np.ndarray]:
    codes = np.arange(ctx.order)
    weights = ctx.p ** np.arange(ctx.degree)
    digits = (codes[:, None] // weights[None, :]) % ctx.p
    return digits, weights


def field_sum(ctx: FieldContext, arr: np.ndarray, axis: int = -1) -> np.ndarray:
    """Field sum of element codes along ``axis``."""
    arr = np.asarray(arr, dtype=np.int64)
    if ctx.p == 2:
        return np.bitwise_xor.reduce(arr, axis=axis)
    digits, weights = _digits(ctx)
    summed = digits[arr].sum(axis=axis if axis >= 0 else axis - 1) % ctx.p
    return summed @ weights


def matmul(ctx: FieldContext, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    vec = b.ndim == 1
    if vec:
        b = b[:, None]
    prod = ctx.np_mul[a[:, :, None], b[None, :, :]]
    out = field_sum(ctx, prod, axis=1)
    return out[:, 0] if vec else out


def rref(ctx: FieldContext, m: np.ndarray) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = np.array(m, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError("expected a matrix")
    rows, cols = a.shape
    mul, sub, inv = ctx.np_mul, ctx.np_sub, ctx.np_inv
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        a[r] = mul[inv[a[r, c]], a[r]]
        f = a[:, c].copy()
        f[r] = 0
        hit = np.flatnonzero(f)
        if hit.size:
            a[hit] = sub[a[hit], mul[f[hit][:, None], a[r][None, :]]]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(ctx: FieldContext, m: np.ndarray) -> int:
    m = np.asarray(m)
    if m.size == 0:
        return 0
    return len(rref(ctx, m)[1])


def nullspace(ctx: FieldContext, m: np.ndarray) -> np.ndarray:
    """Basis of ``{v : m v = 0}`` as the rows of a (k x cols) array."""
    m = np.asarray(m, dtype=np.int64)
    rows, cols = m.shape
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    r, pivots = rref(ctx, m)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    neg = np.array(ctx.neg_table, dtype=np.int64)
    for i, f in enumerate(free):
        basis[i, f] = 1
        for j, pc in enumerate(pivots):
            basis[i, pc] = neg[r[j, f]]
    return basis


def combine(ctx: FieldContext, coeffs: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """sum_i coeffs[i] * vectors[i]."""
    coeffs = np.asarray(coeffs, dtype=np.int64)
    vectors = np.asarray(vectors, dtype=np.int64)
    return field_sum(ctx, ctx.np_mul[coeffs[:, None], vectors], axis=0)
