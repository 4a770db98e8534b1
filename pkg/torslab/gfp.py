"""
Dense GF(p) linear algebra on numpy int64 arrays.

Row reduction, rank, nullspace and column-space complements over a small
prime field. Everything is exact; entries are kept reduced mod p.
"""

from __future__ import annotations

from typing import List, Tuple

import numpy as np


def as_mod(M, p: int) -> np.ndarray:
    return np.asarray(M, dtype=np.int64) % p


def row_echelon(M, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row-echelon form of M over GF(p) and its pivot columns."""
    R = as_mod(M, p).copy()
    if R.ndim != 2 or 0 in R.shape:
        return R.reshape(R.shape if R.ndim == 2 else (0, 0)), []
    m, n = R.shape
    pivots: List[int] = []
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.flatnonzero(R[row:, col])
        if len(nz) == 0:
            continue
        found = row + int(nz[0])
        if found != row:
            R[[row, found]] = R[[found, row]]
        inv = pow(int(R[row, col]), p - 2, p)
        R[row] = (R[row] * inv) % p
        for r in range(m):
            if r != row and R[r, col]:
                R[r] = (R[r] - R[r, col] * R[row]) % p
        pivots.append(col)
        row += 1
    return R, pivots


def rank(M, p: int) -> int:
    M = np.asarray(M)
    if M.ndim != 2 or 0 in M.shape:
        return 0
    return len(row_echelon(M, p)[1])


def nullspace(M, p: int, ncols: int | None = None) -> np.ndarray:
    """Basis of {x : M x = 0} as the rows of the returned array."""
    M = np.asarray(M, dtype=np.int64)
    n = M.shape[1] if M.ndim == 2 else (ncols or 0)
    if M.ndim != 2 or M.size == 0:
        return np.eye(n, dtype=np.int64)
    R, pivots = row_echelon(M, p)
    free = [c for c in range(n) if c not in pivots]
    basis = np.zeros((len(free), n), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for r, pc in enumerate(pivots):
            basis[k, pc] = (-R[r, f]) % p
    return basis


def row_space_basis(M, p: int) -> np.ndarray:
    M = np.asarray(M, dtype=np.int64)
    if M.ndim != 2 or 0 in M.shape:
        return np.zeros((0, M.shape[1] if M.ndim == 2 else 0), dtype=np.int64)
    R, pivots = row_echelon(M, p)
    return R[:len(pivots)]


def complement_basis(sub: np.ndarray, space: np.ndarray, p: int) -> np.ndarray:
    """Rows of `space` extending a basis of row-span(sub) to one of row-span(sub + space)."""
    width = space.shape[1] if space.ndim == 2 else sub.shape[1]
    chosen = as_mod(sub, p).reshape(-1, width)
    current = rank(chosen, p)
    out = []
    for v in as_mod(space, p).reshape(-1, width):
        trial = np.vstack([chosen, v[None, :]])
        r = rank(trial, p)
        if r > current:
            chosen, current = trial, r
            out.append(v)
    return np.array(out, dtype=np.int64).reshape(len(out), width)


def matmul(A, B, p: int) -> np.ndarray:
    A = np.asarray(A, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    return (A @ B) % p
