"""Diffie-Hellman over Q(A,B) with compressed public values.

Exponentiation happens on decompressed representatives in F_{q^ab}; only
messages are compressed. A demonstration of correctness and bandwidth, not a
hardened cryptosystem.
"""

from dataclasses import dataclass

from .birational import (
    DEFAULT_RETRIES,
    CompressedCoset,
    TorusParams,
    compress_coset_retrying,
    decompress_coset,
)
from .drbg import SeedStream
from .errors import OutOfGoodLocus
from .quotient import orders

MAX_KEYGEN_DRAWS = 1000


@dataclass(frozen=True)
class KeyPair:
    secret: int
    public: CompressedCoset


def coset_power(p: TorusParams, rep, e: int, retries=DEFAULT_RETRIES) -> CompressedCoset:
    return compress_coset_retrying(p, p.ctx.pow(rep, e), retries, b"dh")


def _check_secret(p, secret):
    n = orders(p.q, p.a, p.b).q_order
    if not 1 <= secret < n:
        raise ValueError(f"secret must lie in [1, {n})")


def keygen(p: TorusParams, generator, secret=None, seed=None, retries=DEFAULT_RETRIES) -> KeyPair:
    """Key pair from an explicit secret, or one drawn from ``seed``.

    Seeded draws skip secrets whose public coset is not compressible.
    """
    if secret is not None:
        _check_secret(p, secret)
        return KeyPair(secret, coset_power(p, generator, secret, retries))
    n = orders(p.q, p.a, p.b).q_order
    if n < 2:
        raise ValueError("Q is trivial; no secrets available")
    stream = SeedStream(seed or b"", "dh-secret")
    for _ in range(MAX_KEYGEN_DRAWS):
        x = stream.between(1, n)
        try:
            return KeyPair(x, coset_power(p, generator, x, retries))
        except OutOfGoodLocus:
            continue
    raise OutOfGoodLocus("no compressible public value found")


def derive(p: TorusParams, secret: int, peer: CompressedCoset, retries=DEFAULT_RETRIES) -> CompressedCoset:
    _check_secret(p, secret)
    return coset_power(p, decompress_coset(p, peer), secret, retries)
