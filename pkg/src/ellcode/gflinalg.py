"""Exact linear algebra over a FiniteField, numpy-backed.

Matrices over F_{p^m} are int64 arrays with the coefficient axis last:
shape (rows, cols, m), entries canonical in [0, p).  Products accumulate
polynomial convolutions in plain int64 (no overflow at desk scale) and
fold back through the modulus with one matrix product.
"""

from __future__ import annotations

import numpy as np

from ellcode.fields import FiniteField


def _red_matrix(K: FiniteField) -> np.ndarray:
    """(m-1) x m matrix whose row t is x^(m+t) mod modulus."""
    m = K.degree
    if m == 1:
        return np.zeros((0, 1), dtype=np.int64)
    return np.array([K._xpow[m + t] for t in range(m - 1)], dtype=np.int64)


def fold(K: FiniteField, Z: np.ndarray) -> np.ndarray:
    """Reduce (..., 2m-1) convolution output to canonical (..., m)."""
    m = K.degree
    if m == 1:
        return Z % K.p
    low = Z[..., :m]
    high = Z[..., m:]
    return (low + high @ _red_matrix(K)) % K.p


def to_array(K: FiniteField, rows) -> np.ndarray:
    """Rows of element tuples -> (r, c, m) array (or (c, m) for one row)."""
    return np.array(rows, dtype=np.int64)


def zeros(K: FiniteField, *shape) -> np.ndarray:
    return np.zeros(shape + (K.degree,), dtype=np.int64)


def eye(K: FiniteField, n: int) -> np.ndarray:
    out = zeros(K, n, n)
    out[np.arange(n), np.arange(n)] = np.array(K.one, dtype=np.int64)
    return out


def entry(A: np.ndarray, i: int, j: int) -> tuple:
    return tuple(int(v) for v in A[i, j])


def row_tuples(A: np.ndarray) -> list:
    if A.ndim == 2:
        return [tuple(int(v) for v in row) for row in A]
    return [[tuple(int(v) for v in e) for e in row] for row in A]


def conv_matmul(K: FiniteField, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """(r,k,m) @ (k,c,m) -> (r,c,m) over the field."""
    m = K.degree
    r, k = A.shape[0], A.shape[1]
    c = B.shape[1]
    Z = np.zeros((r, c, 2 * m - 1), dtype=np.int64)
    for i in range(m):
        Ai = A[:, :, i]
        for j in range(m):
            Z[:, :, i + j] += Ai @ B[:, :, j]
    return fold(K, Z)


def matvec(K: FiniteField, A: np.ndarray, v: np.ndarray) -> np.ndarray:
    return conv_matmul(K, A, v[:, None, :])[:, 0, :]


def vecmat(K: FiniteField, v: np.ndarray, A: np.ndarray) -> np.ndarray:
    return conv_matmul(K, v[None, :, :], A)[0]


def scalar_matrix(K: FiniteField, s) -> np.ndarray:
    """m x m matrix of multiplication by s acting on coefficient row vectors."""
    m = K.degree
    rows = []
    for j in range(m):
        basis = tuple(1 if i == j else 0 for i in range(m))
        rows.append(K.mul(basis, tuple(s)))
    return np.array(rows, dtype=np.int64)


def scale(K: FiniteField, A: np.ndarray, s) -> np.ndarray:
    """Multiply every entry of A by the scalar s."""
    return (A @ scalar_matrix(K, s)) % K.p


def star(K: FiniteField, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Coordinate-wise product of two vectors of field elements."""
    m = K.degree
    n = u.shape[0]
    Z = np.zeros((n, 2 * m - 1), dtype=np.int64)
    for i in range(m):
        for j in range(m):
            Z[:, i + j] += u[:, i] * v[:, j]
    return fold(K, Z)


def dot(K: FiniteField, u: np.ndarray, v: np.ndarray) -> tuple:
    """Sum_i u_i v_i as an element tuple."""
    m = K.degree
    Z = np.zeros(2 * m - 1, dtype=np.int64)
    for i in range(m):
        for j in range(m):
            Z[i + j] += int(np.dot(u[:, i], v[:, j]))
    return tuple(int(x) for x in fold(K, Z))


def _eliminate(K: FiniteField, A: np.ndarray, factors: np.ndarray, pivot_row: np.ndarray):
    """A -= outer_conv(factors, pivot_row), in place semantics via return."""
    m = K.degree
    r = factors.shape[0]
    c = pivot_row.shape[0]
    Z = np.zeros((r, c, 2 * m - 1), dtype=np.int64)
    for i in range(m):
        Z[:, :, i : i + m] += factors[:, i, None, None] * pivot_row[None, :, :]
    return (A - fold(K, Z)) % K.p


def rref(K: FiniteField, A: np.ndarray):
    """Reduced row echelon form; returns (R, pivot_columns)."""
    R = A.copy() % K.p
    rows, cols = R.shape[0], R.shape[1]
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(R[r:, c].any(axis=1))[0]
        if nz.size == 0:
            continue
        sel = r + int(nz[0])
        if sel != r:
            R[[r, sel]] = R[[sel, r]]
        inv = K.inv(entry(R, r, c))
        R[r] = scale(K, R[r], inv)
        others = [i for i in range(rows) if i != r and R[i, c].any()]
        if others:
            R[others] = _eliminate(K, R[others], R[others, c], R[r])
        pivots.append(c)
        r += 1
    return R, pivots


def rank(K: FiniteField, A: np.ndarray) -> int:
    return len(rref(K, A)[1])


def nullspace(K: FiniteField, A: np.ndarray) -> np.ndarray:
    """Basis of the right null space, rows in canonical (free-column) order."""
    R, pivots = rref(K, A)
    cols = A.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = zeros(K, len(free), cols)
    for bi, fc in enumerate(free):
        basis[bi, fc] = np.array(K.one, dtype=np.int64)
        for ri, pc in enumerate(pivots):
            basis[bi, pc] = np.array(K.neg(entry(R, ri, fc)), dtype=np.int64)
    return basis


def solve(K: FiniteField, A: np.ndarray, b: np.ndarray):
    """Solve A x = b; returns (x, unique_flag) or None if inconsistent.

    When the system is underdetermined the particular solution with zero
    free variables is returned with unique_flag False.
    """
    aug = np.concatenate([A, b[:, None, :]], axis=1)
    R, pivots = rref(K, aug)
    cols = A.shape[1]
    if cols in pivots:
        return None
    x = zeros(K, cols)
    for ri, pc in enumerate(pivots):
        x[pc] = R[ri, cols]
    return x, len(pivots) == cols


def inv_matrix(K: FiniteField, A: np.ndarray) -> np.ndarray | None:
    """Inverse of a square matrix, or None if singular."""
    n = A.shape[0]
    aug = np.concatenate([A, eye(K, n)], axis=1)
    R, pivots = rref(K, aug)
    if pivots != list(range(n)):
        return None
    return R[:, n:]
