"""Dense linear algebra over the prime field Z_p.

Matrices are numpy integer arrays with entries reduced mod p.  These
routines back independence checks, span comparisons, dual bases and the
canonicalization row operations; p is always small (<= 61), so plain
Gaussian elimination is all that is needed.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError


def _as_matrix(mat, p: int) -> np.ndarray:
    a = np.array(mat, dtype=np.int64) % p
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return a


def rref(mat, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p.

    Returns (R, pivot_columns).  R has the same shape as the input;
    zero rows sink to the bottom.
    """
    a = _as_matrix(mat, p).copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * pow(int(a[r, c]), -1, p)) % p
        for j in range(rows):
            if j != r and a[j, c]:
                a[j] = (a[j] - a[j, c] * a[r]) % p
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat, p: int) -> int:
    return len(rref(mat, p)[1])


def inv(mat, p: int) -> np.ndarray:
    """Inverse of a square matrix mod p (DomainError if singular)."""
    a = _as_matrix(mat, p)
    n = a.shape[0]
    if a.shape != (n, n):
        raise DomainError(f"matrix is not square: {a.shape}")
    aug = np.hstack([a, np.eye(n, dtype=np.int64)])
    red, pivots = rref(aug, p)
    if pivots[:n] != list(range(n)):
        raise DomainError("matrix is singular mod %d" % p)
    return red[:, n:]


def solve(a, b, p: int) -> np.ndarray:
    """Solve a @ x = b mod p for square invertible a."""
    return (inv(a, p) @ (np.asarray(b, dtype=np.int64) % p)) % p


def nullspace(mat, p: int) -> np.ndarray:
    """Basis of the right kernel mod p, one vector per row (may be empty)."""
    a = _as_matrix(mat, p)
    red, pivots = rref(a, p)
    cols = a.shape[1]
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for i, fc in enumerate(free):
        basis[i, fc] = 1
        for r, pc in enumerate(pivots):
            basis[i, pc] = (-red[r, fc]) % p
    return basis


def reduce_against(vec, red: np.ndarray, pivots: list[int], p: int) -> np.ndarray:
    """Residual of vec after elimination by an RREF basis.

    Zero residual means vec lies in the row span of the basis.
    """
    v = np.array(vec, dtype=np.int64) % p
    for r, c in enumerate(pivots):
        if v[c]:
            v = (v - v[c] * red[r]) % p
    return v


def in_row_span(vec, mat, p: int) -> bool:
    red, pivots = rref(mat, p)
    return not np.any(reduce_against(vec, red, pivots, p))


def same_row_span(a, b, p: int) -> bool:
    """True when the two matrices generate identical row spaces mod p."""
    a = _as_matrix(a, p)
    b = _as_matrix(b, p)
    ra, rb = rank(a, p), rank(b, p)
    if ra != rb:
        return False
    return rank(np.vstack([a, b]), p) == ra
