"""Prime fields F_q and their extensions F_q[T]/(f).

Prime-field elements are plain ints in ``[0, q)``. Extension elements are
tuples of ``n`` ints, coefficient of ``T**i`` at index ``i`` (constant term
first). Polynomials are lists or tuples in the same order; the helper
functions at the bottom work over either kind of field, since both contexts
expose the same small arithmetic interface.
"""

from dataclasses import dataclass, field
from itertools import product

from .drbg import SeedStream
from .errors import NoRoot, NotPrime, ReducibleModulus, UndefinedPower, ZeroInverse
from .ntheory import is_prime

EXHAUSTIVE_ROOT_LIMIT = 1 << 12


@dataclass(frozen=True)
class FieldCtx:
    """The prime field F_q."""

    q: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2 or not is_prime(self.q):
            raise NotPrime(f"q={self.q} is not prime")

    zero = 0
    one = 1

    def __call__(self, x) -> int:
        return int(x) % self.q

    def add(self, x, y):
        return (x + y) % self.q

    def sub(self, x, y):
        return (x - y) % self.q

    def neg(self, x):
        return -x % self.q

    def mul(self, x, y):
        return x * y % self.q

    def inv(self, x):
        return fp_inv(self, x)

    def is_zero(self, x):
        return x == 0

    def random(self, stream: SeedStream) -> int:
        return stream.below(self.q)


def fp_inv(ctx: FieldCtx, x: int) -> int:
    x %= ctx.q
    if x == 0:
        raise ZeroInverse("0 has no inverse in F_q")
    return pow(x, -1, ctx.q)


@dataclass(frozen=True)
class ExtFieldCtx:
    """F_q[T]/(modulus) for a monic irreducible modulus of degree n.

    Irreducibility is verified at construction; pass ``check=False`` only
    for moduli that were already certified.
    """

    base: FieldCtx
    modulus: tuple
    check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        q = self.base.q
        mod = tuple(int(c) % q for c in self.modulus)
        object.__setattr__(self, "modulus", mod)
        if len(mod) < 2 or mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic of degree >= 1")
        if self.check and not is_irreducible(self.base, mod):
            raise ReducibleModulus(f"modulus {mod} is reducible over F_{q}")

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def q(self) -> int:
        return self.base.q

    @property
    def order(self) -> int:
        return self.base.q ** self.degree

    @property
    def zero(self):
        return (0,) * self.degree

    @property
    def one(self):
        return (1,) + (0,) * (self.degree - 1)

    @property
    def gen(self):
        """The class of T."""
        return self.element([0, 1])

    def element(self, coeffs) -> tuple:
        """Reduce an arbitrary coefficient list (any length) to an element."""
        c = [int(x) % self.q for x in coeffs]
        if len(c) > self.degree:
            c = poly_rem(self.base, c, self.modulus)
        return tuple(c) + (0,) * (self.degree - len(c))

    def scalar(self, c: int) -> tuple:
        return self.element([c])

    def validate(self, x) -> tuple:
        x = tuple(x)
        if len(x) != self.degree or any(not 0 <= c < self.q for c in x):
            raise ValueError(f"not an element of F_{self.q}^{self.degree}: {x}")
        return x

    def is_zero(self, x):
        return not any(x)

    def add(self, x, y):
        q = self.q
        return tuple((s + t) % q for s, t in zip(x, y))

    def sub(self, x, y):
        q = self.q
        return tuple((s - t) % q for s, t in zip(x, y))

    def neg(self, x):
        q = self.q
        return tuple(-s % q for s in x)

    def scale(self, c, x):
        q = self.q
        return tuple(c * s % q for s in x)

    def mul(self, x, y):
        n, q, f = self.degree, self.q, self.modulus
        prod = [0] * (2 * n - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        for k in range(2 * n - 2, n - 1, -1):
            top = prod[k] % q
            if top:
                for i in range(n):
                    prod[k - n + i] -= top * f[i]
        return tuple(c % q for c in prod[:n])

    def inv(self, x):
        """Inverse by the extended Euclidean algorithm against the modulus."""
        if self.is_zero(x):
            raise ZeroInverse("0 has no inverse")
        g, s, _ = poly_xgcd(self.base, list(x), list(self.modulus))
        # g is a nonzero constant because the modulus is irreducible
        c = fp_inv(self.base, g[0])
        return self.element([c * si for si in s])

    def pow(self, x, e: int):
        if e < 0:
            return self.pow(self.inv(x), -e)
        if e == 0:
            if self.is_zero(x):
                raise UndefinedPower("0**0 is undefined")
            return self.one
        result = None
        base = x
        while e:
            if e & 1:
                result = base if result is None else self.mul(result, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return result

    def frobenius(self, x, k: int = 1):
        return self.pow(x, self.q**k)

    def random(self, stream: SeedStream):
        return tuple(stream.below(self.q) for _ in range(self.degree))

    def random_unit(self, stream: SeedStream):
        while True:
            x = self.random(stream)
            if not self.is_zero(x):
                return x

    def elements(self):
        """All elements in lexicographic order of coefficient tuples."""
        return product(range(self.q), repeat=self.degree)

    def eval_poly(self, f, x):
        """Evaluate a polynomial with F_q coefficients at an element."""
        acc = self.zero
        for c in reversed(f):
            acc = self.add(self.mul(acc, x), self.scalar(c))
        return acc


def ext_mul(ctx: ExtFieldCtx, x, y):
    return ctx.mul(x, y)


def ext_inv(ctx: ExtFieldCtx, x):
    return ctx.inv(x)


def ext_pow(ctx: ExtFieldCtx, x, e: int):
    return ctx.pow(x, e)


# -- polynomials over a field (ints for F_q, tuples for extensions) --------


def poly_trim(F, f):
    f = list(f)
    while f and F.is_zero(f[-1]):
        f.pop()
    return f


def poly_deg(F, f):
    return len(poly_trim(F, f)) - 1


def poly_add(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [F.zero] * (n - len(f))
    g = list(g) + [F.zero] * (n - len(g))
    return poly_trim(F, [F.add(s, t) for s, t in zip(f, g)])


def poly_sub(F, f, g):
    n = max(len(f), len(g))
    f = list(f) + [F.zero] * (n - len(f))
    g = list(g) + [F.zero] * (n - len(g))
    return poly_trim(F, [F.sub(s, t) for s, t in zip(f, g)])


def poly_mul(F, f, g):
    if not f or not g:
        return []
    out = [F.zero] * (len(f) + len(g) - 1)
    for i, fi in enumerate(f):
        if F.is_zero(fi):
            continue
        for j, gj in enumerate(g):
            out[i + j] = F.add(out[i + j], F.mul(fi, gj))
    return poly_trim(F, out)


def poly_divmod(F, f, g):
    g = poly_trim(F, g)
    if not g:
        raise ZeroInverse("polynomial division by zero")
    r = poly_trim(F, f)
    dg = len(g) - 1
    lc_inv = F.inv(g[-1])
    quo = [F.zero] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        c = F.mul(r[-1], lc_inv)
        shift = len(r) - 1 - dg
        quo[shift] = c
        for i, gi in enumerate(g):
            r[shift + i] = F.sub(r[shift + i], F.mul(c, gi))
        r = poly_trim(F, r)
    return poly_trim(F, quo), r


def poly_rem(F, f, g):
    return poly_divmod(F, f, g)[1]


def poly_monic(F, f):
    f = poly_trim(F, f)
    if not f:
        return f
    c = F.inv(f[-1])
    return [F.mul(c, x) for x in f]


def poly_gcd(F, f, g):
    f, g = poly_trim(F, f), poly_trim(F, g)
    while g:
        f, g = g, poly_rem(F, f, g)
    return poly_monic(F, f)


def poly_xgcd(F, f, g):
    """Return (d, s, t) with s*f + t*g = d (d not normalized)."""
    r0, r1 = poly_trim(F, f), poly_trim(F, g)
    s0, s1 = [F.one], []
    t0, t1 = [], [F.one]
    while r1:
        quo, rem = poly_divmod(F, r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(F, s0, poly_mul(F, quo, s1))
        t0, t1 = t1, poly_sub(F, t0, poly_mul(F, quo, t1))
    return r0, s0, t0


def poly_mulmod(F, f, g, m):
    return poly_rem(F, poly_mul(F, f, g), m)


def poly_powmod(F, f, e, m):
    result = [F.one]
    base = poly_rem(F, f, m)
    while e:
        if e & 1:
            result = poly_mulmod(F, result, base, m)
        e >>= 1
        if e:
            base = poly_mulmod(F, base, base, m)
    return poly_rem(F, result, m)


# -- irreducibility and generation ------------------------------------------


def is_irreducible(base: FieldCtx, f) -> bool:
    """gcd(X^(q^d) - X, f) = 1 for every d <= n/2, with f monic of degree n."""
    f = poly_trim(base, [c % base.q for c in f])
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]
    xp = x
    for _ in range(n // 2):
        xp = poly_powmod(base, xp, base.q, f)
        if len(poly_gcd(base, poly_sub(base, xp, x), f)) > 1:
            return False
    return True


def irreducible_gen(base: FieldCtx, n: int, seed: bytes) -> tuple:
    """Seeded rejection sampling of a monic irreducible polynomial of degree n."""
    if n < 1:
        raise ValueError("degree must be positive")
    stream = SeedStream(seed, f"irreducible/{base.q}/{n}")
    while True:
        f = [stream.below(base.q) for _ in range(n)] + [1]
        if n > 1 and f[0] == 0:
            continue
        if is_irreducible(base, f):
            return tuple(f)


# -- root finding ------------------------------------------------------------


def _conjugates(big: ExtFieldCtx, r, d):
    out = [r]
    for _ in range(d - 1):
        out.append(big.pow(out[-1], big.q))
    return out


def _split_to_linear(big: ExtFieldCtx, f, stream: SeedStream):
    """Find one linear factor of f, which splits into distinct linear factors over big."""
    Q = big.order
    while len(f) > 2:
        d = len(f) - 1
        r = [big.random(stream) for _ in range(d)]
        r = poly_trim(big, r)
        if len(r) < 2:
            continue
        if big.q == 2:
            # absolute trace to F_2: r + r^2 + ... + r^(2^(m-1)) mod f
            w, acc = r, r
            for _ in range(big.degree - 1):
                w = poly_mulmod(big, w, w, f)
                acc = poly_add(big, acc, w)
            g = poly_gcd(big, f, acc)
        else:
            w = poly_powmod(big, r, (Q - 1) // 2, f)
            g = poly_gcd(big, f, poly_sub(big, w, [big.one]))
        if 1 < len(g) < len(f):
            # recurse into the smaller factor
            f = g if len(g) <= len(f) - len(g) + 1 else poly_divmod(big, f, g)[0]
            f = poly_monic(big, f)
    return big.neg(big.mul(f[0], big.inv(f[1])))


def find_root(big: ExtFieldCtx, f, seed: bytes = b"") -> tuple:
    """Root of an irreducible F_q-polynomial inside ``big``.

    Returns the lexicographically smallest root so the answer does not
    depend on the search path: an exhaustive scan for small fields, a seeded
    equal-degree split otherwise.
    """
    f = [c % big.q for c in f]
    f = poly_monic(big.base, f)
    d = len(f) - 1
    if d < 1 or big.degree % d:
        raise NoRoot(f"degree {d} does not divide {big.degree}")
    if big.order <= EXHAUSTIVE_ROOT_LIMIT:
        for x in big.elements():
            if big.is_zero(big.eval_poly(f, x)):
                return x
        raise NoRoot("polynomial has no root (is it irreducible?)")
    if d == 1:
        return big.scalar(-f[0])
    F = [big.scalar(c) for c in f]
    stream = SeedStream(seed + repr((big.modulus, tuple(f))).encode(), "find_root")
    r = _split_to_linear(big, F, stream)
    if not big.is_zero(big.eval_poly(f, r)):
        raise NoRoot("root search failed")
    return min(_conjugates(big, r, d))
