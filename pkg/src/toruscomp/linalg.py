"""Dense exact linear algebra over F_q.

Entries live in a numpy array: int64 when every product of two reduced
entries fits (q < 2**31), Python ints in an object array otherwise.
"""

from dataclasses import dataclass

import numpy as np

from .errors import NonInvertible
from .ffield import FieldCtx


def _dtype(q):
    return np.int64 if q < 1 << 31 else object


@dataclass(frozen=True, eq=False)
class Matrix:
    ctx: FieldCtx
    entries: np.ndarray

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        arr = np.zeros((len(rows), cols), dtype=_dtype(ctx.q))
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                arr[i, j] = int(v) % ctx.q
        return cls(ctx, arr)

    @classmethod
    def from_columns(cls, ctx: FieldCtx, columns, rows=None):
        m = cls.from_rows(ctx, columns, rows)
        return cls(ctx, m.entries.T.copy())

    @classmethod
    def identity(cls, ctx: FieldCtx, n):
        return cls(ctx, np.eye(n, dtype=_dtype(ctx.q)))

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    def tolist(self):
        return [[int(v) for v in row] for row in self.entries]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.ctx == other.ctx
            and self.entries.shape == other.entries.shape
            and self.tolist() == other.tolist()
        )

    def __matmul__(self, other):
        q = self.ctx.q
        if isinstance(other, Matrix):
            return Matrix(self.ctx, _matmul(self.entries, other.entries, q))
        vec = np.array([int(v) % q for v in other], dtype=self.entries.dtype)
        return tuple(int(v) for v in _matmul(self.entries, vec[:, None], q)[:, 0])


def _matmul(a, b, q):
    if a.dtype == object or a.shape[1] * (q - 1) ** 2 >= 1 << 63:
        return (a.astype(object) @ b.astype(object)) % q
    return (a @ b) % q


def rref_array(a: np.ndarray, q: int):
    """Row reduce a copy of ``a``; returns (reduced array, pivot columns)."""
    a = a.copy()
    nrows, ncols = a.shape
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            a[[r, p]] = a[[p, r]]
        inv = pow(int(a[r, c]), -1, q)
        a[r] = a[r] * inv % q
        col = a[:, c].copy()
        col[r] = 0
        if col.any():
            a = (a - np.outer(col, a[r])) % q
        pivots.append(c)
        r += 1
    return a, pivots


def rref(m: Matrix):
    """Reduced row echelon form with leftmost-column, topmost-row pivoting.

    Returns ``(reduced, pivot_columns, rank)``.
    """
    a, pivots = rref_array(m.entries, m.ctx.q)
    return Matrix(m.ctx, a), pivots, len(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[2]


def kernel_from_rref(a, pivots, q):
    ncols = a.shape[1]
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        w = [0] * ncols
        w[f] = 1
        for i, pc in enumerate(pivots):
            w[pc] = -int(a[i, f]) % q
        basis.append(tuple(w))
    return basis


def kernel_basis(m: Matrix) -> list:
    """Basis of {w : m w = 0}, one vector per free column of the rref.

    Each vector has a 1 in its free column and 0 in the other free columns.
    """
    a, pivots = rref_array(m.entries, m.ctx.q)
    return kernel_from_rref(a, pivots, m.ctx.q)


def inverse(m: Matrix) -> Matrix:
    n = m.rows
    if m.cols != n:
        raise NonInvertible("matrix is not square")
    aug = np.concatenate([m.entries, np.eye(n, dtype=m.entries.dtype)], axis=1)
    red, pivots = rref_array(aug, m.ctx.q)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise NonInvertible("matrix is singular")
    return Matrix(m.ctx, red[:, n:].copy())


def solve(m: Matrix, rhs) -> tuple:
    """One solution of m w = rhs (free variables set to 0)."""
    q = m.ctx.q
    col = np.array([[int(v) % q] for v in rhs], dtype=m.entries.dtype)
    red, pivots = rref_array(np.concatenate([m.entries, col], axis=1), q)
    if m.cols in pivots:
        raise NonInvertible("system is inconsistent")
    w = [0] * m.cols
    for i, pc in enumerate(pivots):
        w[pc] = int(red[i, -1])
    return tuple(w)
