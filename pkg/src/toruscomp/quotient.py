"""The groups H(A,B), Q(A,B) = (A (x) B)^x / H and the norm-one torus T_n.

Everything here works through the cyclic group F_{q^ab}^x: H is its unique
subgroup of order (q^a - 1)(q^b - 1)/(q - 1), so membership is a single
exponentiation.
"""

from dataclasses import dataclass
from math import gcd

from .errors import CoprimeViolation, NotADivisor, ZeroInverse
from .ffield import ExtFieldCtx
from .ntheory import divisors, factorize, mobius
from .talgebra import TensorCtx


@dataclass(frozen=True)
class SubgroupOrders:
    h_order: int
    q_order: int


def orders(q: int, a: int, b: int) -> SubgroupOrders:
    if gcd(a, b) != 1:
        raise CoprimeViolation(f"gcd({a}, {b}) != 1")
    num = (q**a - 1) * (q**b - 1)
    assert num % (q - 1) == 0
    h = num // (q - 1)
    total = q ** (a * b) - 1
    assert total % h == 0
    return SubgroupOrders(h, total // h)


def _ctx(p):
    return p if isinstance(p, TensorCtx) else p.ctx


def h_membership(p, z) -> bool:
    """True iff z lies in the subgroup generated by A^x and B^x. Accepts TorusParams or TensorCtx."""
    ctx = _ctx(p)
    if ctx.is_zero(z):
        raise ZeroInverse("0 is not a unit")
    h = orders(ctx.q, ctx.a, ctx.b).h_order
    return ctx.big.pow(ctx.to_big(z), h) == ctx.big.one


def coset_eq(p, t1, t2) -> bool:
    ctx = _ctx(p)
    return h_membership(ctx, ctx.mul(t1, ctx.inv(t2)))


def coset_order(p, z, q_order_factors) -> int:
    """Order of zH in Q, given the prime divisors of |Q|."""
    ctx = _ctx(p)
    o = orders(ctx.q, ctx.a, ctx.b)
    w = ctx.big.pow(ctx.to_big(z), o.h_order)
    n = o.q_order
    for r in q_order_factors:
        while n % r == 0 and ctx.big.pow(w, n // r) == ctx.big.one:
            n //= r
    return n


def norm(big: ExtFieldCtx, d: int, z):
    """Multiplicative norm from F_{q^n} to its degree-d subfield."""
    n = big.degree
    if d < 1 or n % d:
        raise NotADivisor(f"{d} does not divide {n}")
    if big.is_zero(z):
        raise ZeroInverse("norm of 0")
    q = big.q
    w = big.pow(z, (q**n - 1) // (q**d - 1))
    assert big.pow(w, q**d) == w
    return w


def tn_membership(big: ExtFieldCtx, z) -> bool:
    """Norm-one test against every maximal proper subfield (degrees n/p, p | n)."""
    n = big.degree
    return all(norm(big, n // p, z) == big.one for p in factorize(n))


def tn_membership_all_divisors(big: ExtFieldCtx, z) -> bool:
    n = big.degree
    return all(norm(big, d, z) == big.one for d in divisors(n) if d != n)


def cyclotomic_eval(n: int, q: int) -> int:
    """Phi_n(q) as the product over d | n of (q^d - 1)^mu(n/d)."""
    if n < 1 or q < 2:
        raise ValueError("need n >= 1 and q >= 2")
    num = den = 1
    for d in divisors(n):
        mu = mobius(n // d)
        if mu == 1:
            num *= q**d - 1
        elif mu == -1:
            den *= q**d - 1
    assert num % den == 0
    return num // den
