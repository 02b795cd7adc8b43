"""Elementary integer number theory: primality, factoring, Moebius."""

from math import gcd, isqrt

from .errors import FactorizationError

_TRIAL_LIMIT = 1 << 20
# Deterministic for n < 3.3e24 (Sorenson and Webster), which covers 2**64.
_MR_BASES_64 = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _small_primes(limit):
    sieve = bytearray([1]) * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i in range(limit + 1) if sieve[i]]


_SMALL = None


def small_primes():
    global _SMALL
    if _SMALL is None:
        _SMALL = _small_primes(1 << 12)
    return _SMALL


def _miller_rabin(n, base):
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x in (1, n - 1):
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test.

    Exact below 2**64 (trial division under 2**20, fixed Miller-Rabin bases
    above). Larger inputs get 128 Miller-Rabin rounds with witnesses drawn
    from a stream seeded by ``n`` itself, so the answer is reproducible and
    wrong with probability below 2**-256.
    """
    if n < 2:
        return False
    for p in small_primes():
        if n == p:
            return True
        if n % p == 0:
            return False
    if n < _TRIAL_LIMIT:
        r = isqrt(n)
        for d in range(small_primes()[-1] + 2, r + 1, 2):
            if n % d == 0:
                return False
        return True
    if n < 1 << 64:
        return all(_miller_rabin(n, b) for b in _MR_BASES_64)
    from .drbg import SeedStream

    stream = SeedStream(n.to_bytes((n.bit_length() + 7) // 8, "big"), "miller-rabin")
    return all(_miller_rabin(n, stream.between(2, n - 1)) for _ in range(128))


def _brent_rho(n, c, budget):
    y, r, q, g = 2, 1, 1, 1
    m = 128
    x = ys = y
    steps = 0
    while g == 1:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            g = gcd(q, n)
            k += m
        r *= 2
        steps += r
        if steps > budget:
            return None
    if g == n:
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = gcd(abs(x - ys), n)
    return g if g != n else None


def factorize(n: int, budget: int = 1 << 22) -> dict:
    """Prime factorization ``{p: e}`` by trial division plus Brent's rho.

    Raises FactorizationError when a composite cofactor survives the
    iteration budget.
    """
    if n < 1:
        raise ValueError("n must be positive")
    out = {}
    for p in small_primes():
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        for c in range(1, 20):
            d = _brent_rho(m, c, budget)
            if d:
                stack += [d, m // d]
                break
        else:
            raise FactorizationError(f"could not factor {m} within budget")
    return dict(sorted(out.items()))


def divisors(n: int) -> list:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**k for d in out for k in range(e + 1)]
    return sorted(out)


def mobius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    r = n
    for p in factorize(n):
        r = r // p * (p - 1)
    return r
