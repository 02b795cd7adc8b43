"""Seeded deterministic pseudorandom stream.

Every random choice in the package is drawn from here so results are
reproducible from (seed, label) alone.
"""

import hashlib


class SeedStream:
    """SHA-256 in counter mode, keyed by a seed and a domain label."""

    def __init__(self, seed: bytes, label: str = ""):
        if isinstance(seed, str):
            seed = seed.encode()
        self._prefix = hashlib.sha256(
            len(seed).to_bytes(4, "big") + seed + label.encode()
        ).digest()
        self._counter = 0

    def _block(self) -> bytes:
        out = hashlib.sha256(self._prefix + self._counter.to_bytes(8, "big")).digest()
        self._counter += 1
        return out

    def randbits(self, k: int) -> int:
        nbytes = (k + 7) // 8
        buf = b""
        while len(buf) < nbytes:
            buf += self._block()
        return int.from_bytes(buf[:nbytes], "big") >> (8 * nbytes - k)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) by rejection sampling."""
        if n <= 0:
            raise ValueError("upper bound must be positive")
        k = n.bit_length()
        while True:
            r = self.randbits(k)
            if r < n:
                return r

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi)."""
        return lo + self.below(hi - lo)
