"""Compression of A (x) B units through the map (x, y) -> x / y.

Given ``t``, solve ``x = y t`` with ``x`` in V (x) B and ``y`` in A (x) U, where
V = span(1, T, ..., T^(v-1)) and U = span(1, S, ..., S^(u-1)) and
``u a + v b = a b + 1``. The system has ``ab`` equations in ``ab + 1``
unknowns, so generically its kernel is a single line.

Coordinate layouts:

* ``x`` is ``v`` blocks of ``b`` coordinates; block ``i`` is the B-element
  multiplying T^i, so coordinate ``i*b + j`` is the T^i S^j coefficient.
* ``y`` is ``u`` blocks of ``a`` coordinates; block ``j`` is the A-element
  multiplying S^j, so coordinate ``j*a + i`` is the T^i S^j coefficient.

At the coset level block 0 of each part is scaled to 1 (over B for ``x``,
over A for ``y``) and dropped.
"""

from dataclasses import dataclass

import numpy as np

from .drbg import SeedStream
from .errors import CoprimeViolation, MalformedPayload, NonInvertible, OutOfGoodLocus
from .ffield import ExtFieldCtx, FieldCtx, irreducible_gen
from .linalg import _dtype, kernel_from_rref, rref_array
from .talgebra import A_SIDE, B_SIDE, TensorCtx, tensor_ctx_new

DEFAULT_RETRIES = 64


def bezout_uv(a: int, b: int):
    """The unique (u, v) with u*a + v*b = a*b + 1, 0 < u <= b, 0 < v <= a."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    if b == 1:
        # a*1 + v*1 = a + 1
        return 1, 1
    try:
        u = pow(a, -1, b)
    except ValueError:
        raise CoprimeViolation(f"gcd({a}, {b}) != 1") from None
    u = u or b
    v, rem = divmod(a * b + 1 - u * a, b)
    assert rem == 0 and 0 < v <= a
    return u, v


@dataclass(frozen=True, eq=False)
class TorusParams:
    ctx: TensorCtx
    u: int
    v: int

    def __post_init__(self):
        a, b = self.ctx.a, self.ctx.b
        if self.u * a + self.v * b != a * b + 1 or not (0 < self.u <= b and 0 < self.v <= a):
            raise ValueError(f"(u, v) = ({self.u}, {self.v}) invalid for (a, b) = ({a}, {b})")
        x_idx = [i + a * j for i in range(self.v) for j in range(b)]
        y_idx = [i + a * j for j in range(self.u) for i in range(a)]
        object.__setattr__(self, "_x_idx", np.array(x_idx))
        object.__setattr__(self, "_y_idx", np.array(y_idx))

    @classmethod
    def from_ctx(cls, ctx: TensorCtx):
        return cls(ctx, *bezout_uv(ctx.a, ctx.b))

    @property
    def q(self):
        return self.ctx.q

    @property
    def a(self):
        return self.ctx.a

    @property
    def b(self):
        return self.ctx.b

    @property
    def x_len(self):
        return self.v * self.b

    @property
    def y_len(self):
        return self.u * self.a

    @property
    def coset_len(self):
        return (self.v - 1) * self.b + (self.u - 1) * self.a

    def lift_x(self, x):
        z = [0] * self.ctx.dim
        for k, c in zip(self._x_idx, x):
            z[k] = c
        return tuple(z)

    def lift_y(self, y):
        z = [0] * self.ctx.dim
        for k, c in zip(self._y_idx, y):
            z[k] = c
        return tuple(z)


def make_params(q: int, a: int, b: int, seed: bytes) -> TorusParams:
    from math import gcd

    base = FieldCtx(q)
    if gcd(a, b) != 1:
        raise CoprimeViolation(f"gcd({a}, {b}) != 1")
    ctxA = ExtFieldCtx(base, irreducible_gen(base, a, seed + b"/A"))
    ctxB = ExtFieldCtx(base, irreducible_gen(base, b, seed + b"/B"))
    return TorusParams.from_ctx(tensor_ctx_new(ctxA, ctxB, seed))


@dataclass(frozen=True)
class CompressedPgl:
    x: tuple
    y: tuple


@dataclass(frozen=True)
class CompressedCoset:
    xr: tuple
    yr: tuple

    @property
    def coords(self):
        return self.xr + self.yr

    def encode(self) -> str:
        return ",".join(str(c) for c in self.coords)

    @classmethod
    def decode(cls, p: TorusParams, text: str):
        coords = parse_vector(text, p.coset_len, p.q)
        k = (p.v - 1) * p.b
        return cls(coords[:k], coords[k:])


def parse_vector(text: str, length: int, q: int) -> tuple:
    text = text.strip()
    try:
        coords = tuple(int(s) for s in text.split(",")) if text else ()
    except ValueError:
        raise MalformedPayload(f"not a comma-separated integer vector: {text!r}") from None
    if len(coords) != length:
        raise MalformedPayload(f"expected {length} coordinates, got {len(coords)}")
    if any(not 0 <= c < q for c in coords):
        raise MalformedPayload("coordinate out of range [0, q)")
    return coords


def _normalize(vec, q):
    lead = next(c for c in vec if c)
    inv = pow(lead, -1, q)
    return tuple(c * inv % q for c in vec)


def fiber_system(p: TorusParams, t) -> np.ndarray:
    """Matrix of (x, y) -> x - y t on (V (x) B) + (A (x) U), shape ab x (ab+1)."""
    q, n = p.q, p.ctx.dim
    m = np.zeros((n, p.x_len + p.y_len), dtype=_dtype(q))
    m[p._x_idx, np.arange(p.x_len)] = 1
    mt = p.ctx.mul_matrix(t)
    m[:, p.x_len :] = (-mt[:, p._y_idx]) % q
    return m


def fiber_kernel(p: TorusParams, t) -> list:
    a, pivots = rref_array(fiber_system(p, t), p.q)
    return kernel_from_rref(a, pivots, p.q)


def compress_pgl(p: TorusParams, t) -> CompressedPgl:
    """Projective pair (x, y) with x = y t, each scaled so its first nonzero entry is 1."""
    t = p.ctx.validate(t)
    if p.ctx.is_zero(t):
        raise NonInvertible("0 is not a unit")
    kernel = fiber_kernel(p, t)
    if len(kernel) != 1:
        raise OutOfGoodLocus(f"fiber kernel has dimension {len(kernel)}", len(kernel))
    w = kernel[0]
    x, y = w[: p.x_len], w[p.x_len :]
    if not any(x) or not any(y):
        raise OutOfGoodLocus("kernel vector has a zero part", 1)
    return CompressedPgl(_normalize(x, p.q), _normalize(y, p.q))


def decompress(p: TorusParams, c: CompressedPgl):
    """x * y^-1 in A (x) B."""
    if len(c.x) != p.x_len or len(c.y) != p.y_len:
        raise MalformedPayload("compressed pair has the wrong shape")
    y = p.lift_y(c.y)
    if p.ctx.is_zero(y):
        raise NonInvertible("y is not a unit")
    return p.ctx.mul(p.lift_x(c.x), p.ctx.inv(y))


def _blocks(vec, size):
    return [tuple(vec[k : k + size]) for k in range(0, len(vec), size)]


def compress_coset(p: TorusParams, t) -> CompressedCoset:
    """Canonical payload of the coset t H, of length ab + 1 - a - b."""
    c = compress_pgl(p, t)
    ctxA, ctxB = p.ctx.ctxA, p.ctx.ctxB
    xb = _blocks(c.x, p.b)
    ya = _blocks(c.y, p.a)
    if ctxB.is_zero(xb[0]) or ctxA.is_zero(ya[0]):
        raise OutOfGoodLocus("leading component is not invertible", 1)
    xi = ctxB.inv(xb[0])
    yi = ctxA.inv(ya[0])
    xr = tuple(v for blk in xb[1:] for v in ctxB.mul(blk, xi))
    yr = tuple(v for blk in ya[1:] for v in ctxA.mul(blk, yi))
    return CompressedCoset(xr, yr)


def reinflate(p: TorusParams, c: CompressedCoset) -> CompressedPgl:
    """Put the unit leading components back in front of a coset payload."""
    if len(c.xr) != (p.v - 1) * p.b or len(c.yr) != (p.u - 1) * p.a:
        raise MalformedPayload("coset payload has the wrong shape")
    return CompressedPgl(p.ctx.ctxB.one + tuple(c.xr), p.ctx.ctxA.one + tuple(c.yr))


def decompress_coset(p: TorusParams, c: CompressedCoset):
    return decompress(p, reinflate(p, c))


def translate(p: TorusParams, t, alpha, beta):
    """(alpha (x) beta) * t for alpha in A, beta in B."""
    h = p.ctx.mul(p.ctx.embed(A_SIDE, alpha), p.ctx.embed(B_SIDE, beta))
    return p.ctx.mul(h, t)


def rerandomize(p: TorusParams, t, seed: bytes):
    stream = SeedStream(seed, "rerandomize")
    alpha = p.ctx.ctxA.random_unit(stream)
    beta = p.ctx.ctxB.random_unit(stream)
    return translate(p, t, alpha, beta)


def compress_coset_retrying(p: TorusParams, t, retries: int = DEFAULT_RETRIES, seed: bytes = b""):
    """compress_coset, retried on H-translates of t drawn from the seed.

    The fiber kernel dimension and the leading components are constant on
    each coset of H, so a retry cannot rescue an element whose coset lies
    outside the good locus; the loop only bounds the work in that case.
    """
    try:
        return compress_coset(p, t)
    except OutOfGoodLocus as exc:
        last = exc
    for k in range(retries):
        try:
            return compress_coset(p, rerandomize(p, t, seed + k.to_bytes(4, "big")))
        except OutOfGoodLocus as exc:
            last = exc
    raise OutOfGoodLocus(f"no compressible translate after {retries} retries: {last}", last.kernel_dim)
