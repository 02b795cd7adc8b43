"""Line-oriented ``key=value`` parameter files and ``TCQ1`` payloads."""

from dataclasses import dataclass

from .birational import TorusParams, bezout_uv, compress_coset, decompress_coset, make_params
from .drbg import SeedStream
from .errors import FactorizationError, MalformedPayload, OutOfGoodLocus, TorusError
from .ffield import ExtFieldCtx, FieldCtx
from .ntheory import factorize, is_prime
from .quotient import coset_order, orders
from .talgebra import TensorCtx

VERSION = "TCQ1"
KEYS = ("version", "q", "a", "b", "seed", "fA", "fB", "fBig", "rootA", "rootB", "u", "v", "generator")
MAX_GENERATOR_ATTEMPTS = 10_000


def encode_vector(vec) -> str:
    return ",".join(str(int(c)) for c in vec)


def decode_vector(text: str, length=None) -> tuple:
    text = text.strip()
    try:
        vec = tuple(int(s) for s in text.split(",")) if text else ()
    except ValueError:
        raise MalformedPayload(f"bad vector {text!r}") from None
    if length is not None and len(vec) != length:
        raise MalformedPayload(f"expected {length} entries, got {len(vec)}")
    return vec


@dataclass(frozen=True)
class ParamFile:
    q: int
    a: int
    b: int
    seed: str
    fA: tuple
    fB: tuple
    fBig: tuple
    rootA: tuple
    rootB: tuple
    u: int
    v: int
    generator: tuple

    def dumps(self) -> str:
        vals = {
            "version": VERSION,
            "q": str(self.q),
            "a": str(self.a),
            "b": str(self.b),
            "seed": self.seed,
            "fA": encode_vector(self.fA),
            "fB": encode_vector(self.fB),
            "fBig": encode_vector(self.fBig),
            "rootA": encode_vector(self.rootA),
            "rootB": encode_vector(self.rootB),
            "u": str(self.u),
            "v": str(self.v),
            "generator": encode_vector(self.generator),
        }
        return "".join(f"{k}={vals[k]}\n" for k in KEYS)

    @classmethod
    def loads(cls, text: str) -> "ParamFile":
        vals = {}
        for line in text.splitlines():
            if not line.strip():
                continue
            key, sep, value = line.partition("=")
            key = key.strip()
            if not sep or key not in KEYS:
                raise MalformedPayload(f"unknown or malformed line {line!r}")
            if key in vals:
                raise MalformedPayload(f"duplicate key {key!r}")
            vals[key] = value.strip()
        missing = [k for k in KEYS if k not in vals]
        if missing:
            raise MalformedPayload(f"missing keys: {', '.join(missing)}")
        if vals["version"] != VERSION:
            raise MalformedPayload(f"unsupported version {vals['version']!r}")
        try:
            q, a, b, u, v = (int(vals[k]) for k in ("q", "a", "b", "u", "v"))
            bytes.fromhex(vals["seed"])
        except ValueError:
            raise MalformedPayload("non-numeric scalar field or bad seed") from None
        return cls(
            q=q,
            a=a,
            b=b,
            seed=vals["seed"],
            fA=decode_vector(vals["fA"], a + 1),
            fB=decode_vector(vals["fB"], b + 1),
            fBig=decode_vector(vals["fBig"], a * b + 1),
            rootA=decode_vector(vals["rootA"], a * b),
            rootB=decode_vector(vals["rootB"], a * b),
            u=u,
            v=v,
            generator=decode_vector(vals["generator"], a * b),
        )

    def torus_params(self) -> TorusParams:
        """Rebuild the parameters from stored data, re-verifying every invariant."""
        try:
            base = FieldCtx(self.q)
            ctx = TensorCtx(
                ExtFieldCtx(base, self.fA),
                ExtFieldCtx(base, self.fB),
                ExtFieldCtx(base, self.fBig),
                self.rootA,
                self.rootB,
            )
            p = TorusParams(ctx, self.u, self.v)
            ctx.validate(self.generator)
        except TorusError:
            raise
        except ValueError as exc:
            raise MalformedPayload(f"inconsistent parameter file: {exc}") from None
        return p


def qorder_primes(q_order: int, factorization=None) -> list:
    """Distinct prime divisors of |Q|, from a user hint or by factoring."""
    if q_order == 1:
        return []
    if factorization is None:
        return list(factorize(q_order))
    rest = q_order
    primes = []
    for r in sorted(set(factorization)):
        if not is_prime(r) or rest % r:
            raise FactorizationError(f"{r} is not a prime divisor of {q_order}")
        while rest % r == 0:
            rest //= r
        primes.append(r)
    if rest != 1:
        if not is_prime(rest):
            raise FactorizationError(f"unfactored cofactor {rest}")
        primes.append(rest)
    return sorted(primes)


def find_generator(p: TorusParams, seed: bytes, primes) -> tuple:
    """Canonical representative of a compressible coset generating Q."""
    o = orders(p.q, p.a, p.b)
    stream = SeedStream(seed, "generator")
    for _ in range(MAX_GENERATOR_ATTEMPTS):
        t = p.ctx.random_unit(stream)
        if coset_order(p.ctx, t, primes) != o.q_order:
            continue
        try:
            c = compress_coset(p, t)
        except OutOfGoodLocus:
            continue
        return decompress_coset(p, c)
    raise OutOfGoodLocus("no compressible generator found")


def generate(q: int, a: int, b: int, seed_hex: str, factorization=None) -> ParamFile:
    try:
        seed = bytes.fromhex(seed_hex)
    except ValueError:
        raise MalformedPayload(f"seed must be hex, got {seed_hex!r}") from None
    p = make_params(q, a, b, seed)
    primes = qorder_primes(orders(q, a, b).q_order, factorization)
    g = find_generator(p, seed, primes)
    ctx = p.ctx
    assert (p.u, p.v) == bezout_uv(a, b)
    return ParamFile(
        q=q,
        a=a,
        b=b,
        seed=seed.hex(),
        fA=ctx.ctxA.modulus,
        fB=ctx.ctxB.modulus,
        fBig=ctx.big.modulus,
        rootA=ctx.rootA,
        rootB=ctx.rootB,
        u=p.u,
        v=p.v,
        generator=g,
    )


def dump_payload(line: str) -> str:
    return f"{VERSION}\n{line}\n"


def load_payload(text: str, nlines: int = 1) -> list:
    lines = text.splitlines()
    if not lines or lines[0].strip() != VERSION:
        raise MalformedPayload(f"missing {VERSION} header")
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != nlines:
        raise MalformedPayload(f"expected {nlines} payload line(s), got {len(body)}")
    return body
