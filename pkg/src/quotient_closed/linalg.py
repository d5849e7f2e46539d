"""Exact linear algebra over a prime field F_p on int64 numpy arrays."""
from __future__ import annotations

import numpy as np


def inv_mod(x: int, p: int) -> int:
    return pow(int(x), p - 2, p)


def rref(m: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row-echelon form (zero rows dropped) and pivot columns."""
    a = np.array(m, dtype=np.int64) % p
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = (a[r] * inv_mod(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            a[nzr] = (a[nzr] - np.outer(col[nzr], a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(m: np.ndarray, p: int) -> int:
    if m.size == 0:
        return 0
    return len(rref(m, p)[1])


def nullspace(m: np.ndarray, p: int, ncols: int | None = None) -> np.ndarray:
    """Rows spanning ``{x : m x = 0}``."""
    ncols = m.shape[1] if ncols is None else ncols
    if m.size == 0:
        return np.eye(ncols, dtype=np.int64)
    r, pivots = rref(m, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = np.zeros((len(free), ncols), dtype=np.int64)
    for t, f in enumerate(free):
        basis[t, f] = 1
        for row, pc in enumerate(pivots):
            basis[t, pc] = (-r[row, f]) % p
    return basis


def matpow(a: np.ndarray, e: int, p: int) -> np.ndarray:
    result = np.eye(a.shape[0], dtype=np.int64)
    base = a % p
    while e:
        if e & 1:
            result = (result @ base) % p
        base = (base @ base) % p
        e >>= 1
    return result


def inverse(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    r, pivots = rref(np.hstack([a % p, np.eye(n, dtype=np.int64)]), p)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular mod p")
    return r[:, n:]


class Subspace:
    """Row space of a matrix over F_p, kept in reduced row-echelon form."""

    def __init__(self, rows, dim: int, p: int):
        self.ambient = dim
        self.p = p
        m = np.array(rows, dtype=np.int64).reshape(-1, dim) if len(rows) else np.zeros((0, dim), dtype=np.int64)
        self.basis, self.pivots = rref(m, p)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    def key(self) -> bytes:
        return self.basis.tobytes() + bytes(str(self.basis.shape), "ascii")

    def reduce(self, v: np.ndarray) -> np.ndarray:
        v = np.array(v, dtype=np.int64) % self.p
        for row, c in zip(self.basis, self.pivots):
            if v[c]:
                v = (v - v[c] * row) % self.p
        return v

    def contains(self, v) -> bool:
        return not self.reduce(v).any()

    def coords(self, v) -> np.ndarray:
        """Coordinates of ``v`` in the echelon basis; raises if ``v`` is outside."""
        v = np.array(v, dtype=np.int64) % self.p
        c = v[self.pivots] if self.pivots else np.zeros(0, dtype=np.int64)
        if ((c @ self.basis) % self.p != v).any():
            raise ValueError("vector not in subspace")
        return c

    def contains_space(self, other: "Subspace") -> bool:
        return all(self.contains(r) for r in other.basis)

    def __eq__(self, other):
        return (isinstance(other, Subspace) and self.basis.shape == other.basis.shape
                and (self.basis == other.basis).all())

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(np.vstack([self.basis, other.basis]), self.ambient, self.p)
