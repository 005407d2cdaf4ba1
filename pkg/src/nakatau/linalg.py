"""Exact linear algebra over a prime field on integer numpy arrays."""

from __future__ import annotations

import os

import numpy as np

DEFAULT_PRIME = 2


def field_prime() -> int:
    """Prime used by the matrix oracle; overridable with NAKA_TAU_FIELD."""
    raw = os.environ.get("NAKA_TAU_FIELD", "")
    if not raw.strip():
        return DEFAULT_PRIME
    p = int(raw)
    if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
        raise ValueError(f"NAKA_TAU_FIELD must be a prime, got {raw!r}")
    return p


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=np.int64)


def rref(mat: np.ndarray, p: int):
    """Reduced row echelon form mod ``p``; returns ``(R, pivot_columns)``."""
    R = np.array(mat, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        inv = pow(int(R[r, c]), -1, p)
        R[r] = (R[r] * inv) % p
        col = R[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            R[nzr] = (R[nzr] - np.outer(col[nzr], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return len(rref(mat, p)[1])


def nullspace(mat: np.ndarray, p: int) -> np.ndarray:
    """Basis of ``{x : mat x = 0}`` as the columns of the returned array."""
    rows, cols = mat.shape
    if cols == 0:
        return zeros(0, 0)
    if rows == 0:
        return np.eye(cols, dtype=np.int64)
    R, pivots = rref(mat, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = zeros(cols, len(free))
    for j, f in enumerate(free):
        basis[f, j] = 1
        for i, pc in enumerate(pivots):
            basis[pc, j] = (-R[i, f]) % p
    return basis


def column_space(mat: np.ndarray, p: int) -> np.ndarray:
    """Independent columns spanning the column space of ``mat``."""
    if mat.size == 0:
        return zeros(mat.shape[0], 0)
    _, pivots = rref(mat, p)
    return np.array(mat[:, pivots], dtype=np.int64) % p


def annihilator(mat: np.ndarray, p: int) -> np.ndarray:
    """Rows ``Q`` with ``ker Q = column space of mat``."""
    return nullspace(np.asarray(mat).T, p).T


def solve(mat: np.ndarray, rhs: np.ndarray, p: int):
    """One solution ``X`` of ``mat X = rhs`` or ``None`` if inconsistent."""
    mat = np.asarray(mat, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64)
    vec = rhs.ndim == 1
    if vec:
        rhs = rhs.reshape(-1, 1)
    rows, cols = mat.shape
    if rows == 0:
        out = zeros(cols, rhs.shape[1])
        return out[:, 0] if vec else out
    aug = np.concatenate([mat % p, rhs % p], axis=1)
    R, pivots = rref(aug, p)
    if any(pc >= cols for pc in pivots):
        return None
    out = zeros(cols, rhs.shape[1])
    for i, pc in enumerate(pivots):
        out[pc] = R[i, cols:]
    return out[:, 0] if vec else out


def right_inverse(mat: np.ndarray, p: int) -> np.ndarray:
    """``S`` with ``mat S = I`` for a full-row-rank ``mat``."""
    rows = mat.shape[0]
    out = solve(mat, np.eye(rows, dtype=np.int64), p)
    if out is None:
        raise ValueError("matrix does not have full row rank")
    return out


def in_span(basis: np.ndarray, vec: np.ndarray, p: int) -> bool:
    if basis.shape[1] == 0:
        return not np.any(np.asarray(vec) % p)
    return solve(basis, vec, p) is not None


def matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    if a.shape[1] == 0 or b.shape[0] == 0:
        return zeros(a.shape[0], b.shape[1])
    return (a @ b) % p
