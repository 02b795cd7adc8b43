"""The algebra A (x) B = F_q[T,S]/(f_A(T), f_B(S)) and its isomorphism with F_{q^ab}.

A tensor element is a tuple of ``a*b`` ints; the coefficient of T^i S^j sits
at index ``i + a*j``.
"""

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import CoprimeViolation, NonInvertible, ZeroInverse
from .ffield import ExtFieldCtx, find_root, irreducible_gen
from .linalg import Matrix, _dtype, inverse, rank

A_SIDE = "A"
B_SIDE = "B"


@dataclass(frozen=True, eq=False)
class TensorCtx:
    ctxA: ExtFieldCtx
    ctxB: ExtFieldCtx
    big: ExtFieldCtx
    rootA: tuple
    rootB: tuple

    def __post_init__(self):
        a, b = self.ctxA.degree, self.ctxB.degree
        if gcd(a, b) != 1:
            raise CoprimeViolation(f"gcd({a}, {b}) != 1")
        if not (self.ctxA.base == self.ctxB.base == self.big.base):
            raise ValueError("factors must share the base field")
        if self.big.degree != a * b:
            raise ValueError("big field must have degree a*b")
        if not self.big.is_zero(self.big.eval_poly(self.ctxA.modulus, self.rootA)):
            raise ValueError("rootA is not a root of f_A")
        if not self.big.is_zero(self.big.eval_poly(self.ctxB.modulus, self.rootB)):
            raise ValueError("rootB is not a root of f_B")
        big = self.big
        powA = [big.one]
        for _ in range(a - 1):
            powA.append(big.mul(powA[-1], self.rootA))
        powB = [big.one]
        for _ in range(b - 1):
            powB.append(big.mul(powB[-1], self.rootB))
        columns = [big.mul(powA[i], powB[j]) for j in range(b) for i in range(a)]
        table = Matrix.from_columns(self.base, columns, a * b)
        if rank(table) != a * b:
            raise NonInvertible("basis image table is singular")
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "table_inv", inverse(table))
        dt = _dtype(self.q)
        object.__setattr__(self, "_fA", np.array(self.ctxA.modulus[:a], dtype=dt))
        object.__setattr__(self, "_fB", np.array(self.ctxB.modulus[:b], dtype=dt))

    @property
    def base(self):
        return self.ctxA.base

    @property
    def q(self):
        return self.ctxA.q

    @property
    def a(self):
        return self.ctxA.degree

    @property
    def b(self):
        return self.ctxB.degree

    @property
    def dim(self):
        return self.a * self.b

    @property
    def one(self):
        return (1,) + (0,) * (self.dim - 1)

    @property
    def zero(self):
        return (0,) * self.dim

    def validate(self, z) -> tuple:
        z = tuple(int(c) for c in z)
        if len(z) != self.dim or any(not 0 <= c < self.q for c in z):
            raise ValueError(f"not a tensor element of length {self.dim}")
        return z

    def monomial(self, i, j):
        z = [0] * self.dim
        z[i + self.a * j] = 1
        return tuple(z)

    def is_zero(self, z):
        return not any(z)

    def random(self, stream):
        return tuple(stream.below(self.q) for _ in range(self.dim))

    def random_unit(self, stream):
        while True:
            z = self.random(stream)
            if any(z):
                return z

    def units(self):
        """Every nonzero element, in lexicographic order."""
        it = self.big.elements()
        next(it)
        return (tuple(z) for z in it)

    # -- ring structure ------------------------------------------------------

    def mul(self, z, w):
        """Bivariate product reduced by f_A(T) and f_B(S)."""
        a, b, q = self.a, self.b, self.q
        fA, fB = self.ctxA.modulus, self.ctxB.modulus
        prod = [[0] * (2 * a - 1) for _ in range(2 * b - 1)]
        for k, zk in enumerate(z):
            if not zk:
                continue
            i1, j1 = k % a, k // a
            for l, wl in enumerate(w):
                if wl:
                    prod[j1 + l // a][i1 + l % a] += zk * wl
        for row in prod:
            for d in range(2 * a - 2, a - 1, -1):
                top = row[d] % q
                if top:
                    for i in range(a):
                        row[d - a + i] -= top * fA[i]
        for d in range(2 * b - 2, b - 1, -1):
            top = [c % q for c in prod[d][:a]]
            if any(top):
                for j in range(b):
                    fj = fB[j]
                    if fj:
                        tgt = prod[d - b + j]
                        for i in range(a):
                            tgt[i] -= top[i] * fj
        return tuple(prod[j][i] % q for j in range(b) for i in range(a))

    def add(self, z, w):
        return tuple((s + t) % self.q for s, t in zip(z, w))

    def scale(self, c, z):
        return tuple(c * s % self.q for s in z)

    def to_big(self, z):
        return self.table @ z

    def from_big(self, w):
        return self.table_inv @ w

    def inv(self, z):
        if self.is_zero(z):
            raise ZeroInverse("0 is not a unit")
        return self.from_big(self.big.inv(self.to_big(z)))

    def pow(self, z, e):
        return self.from_big(self.big.pow(self.to_big(z), e))

    def embed(self, side, x):
        """Image of x in A (x) B under x -> x (x) 1 (A side) or 1 (x) x (B side)."""
        z = [0] * self.dim
        if side == A_SIDE:
            for i, c in enumerate(self.ctxA.validate(x)):
                z[i] = c
        elif side == B_SIDE:
            for j, c in enumerate(self.ctxB.validate(x)):
                z[self.a * j] = c
        else:
            raise ValueError(f"unknown side {side!r}")
        return tuple(z)

    def mul_matrix(self, t) -> np.ndarray:
        """Matrix of z -> z*t in the monomial basis (column i + a*j is T^i S^j t)."""
        a, b, q = self.a, self.b, self.q
        cur = np.array(t, dtype=_dtype(q)).reshape(b, a)
        cols = np.empty((b, a, b, a), dtype=cur.dtype)
        row_start = cur
        for j in range(b):
            if j:
                row_start = self._times_S(row_start)
            c = row_start
            for i in range(a):
                if i:
                    c = self._times_T(c)
                cols[j, i] = c
        return cols.reshape(a * b, a * b).T.copy()

    def _times_T(self, arr):
        top = arr[:, -1].copy()
        out = np.zeros_like(arr)
        out[:, 1:] = arr[:, :-1]
        return (out - np.outer(top, self._fA)) % self.q

    def _times_S(self, arr):
        top = arr[-1, :].copy()
        out = np.zeros_like(arr)
        out[1:, :] = arr[:-1, :]
        return (out - np.outer(self._fB, top)) % self.q


def tensor_ctx_new(ctxA: ExtFieldCtx, ctxB: ExtFieldCtx, seed: bytes) -> TensorCtx:
    """Build the big field of degree ab from the seed and embed both factors."""
    a, b = ctxA.degree, ctxB.degree
    if gcd(a, b) != 1:
        raise CoprimeViolation(f"gcd({a}, {b}) != 1")
    base = ctxA.base
    big = ExtFieldCtx(base, irreducible_gen(base, a * b, seed + b"/big"))
    rootA = find_root(big, ctxA.modulus, seed)
    rootB = find_root(big, ctxB.modulus, seed)
    return TensorCtx(ctxA, ctxB, big, rootA, rootB)


def tensor_mul(ctx: TensorCtx, z, w):
    return ctx.mul(z, w)


def tensor_inv(ctx: TensorCtx, z):
    return ctx.inv(z)


def to_big(ctx: TensorCtx, z):
    return ctx.to_big(z)


def from_big(ctx: TensorCtx, w):
    return ctx.from_big(w)


def embed(ctx: TensorCtx, side, x):
    return ctx.embed(side, x)
