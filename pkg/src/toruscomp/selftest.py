"""Exhaustive small-field sweeps and randomized property runs.

The report is a deterministic list of lines (no timings), so two runs with
the same level are byte-identical.
"""

from .birational import (
    compress_coset,
    compress_coset_retrying,
    compress_pgl,
    decompress,
    make_params,
    rerandomize,
)
from .dh import derive, keygen
from .drbg import SeedStream
from .errors import OutOfGoodLocus
from .ffield import ExtFieldCtx, FieldCtx, irreducible_gen
from .paramfile import find_generator, qorder_primes
from .quotient import coset_eq, cyclotomic_eval, h_membership, orders, tn_membership
from .talgebra import A_SIDE, B_SIDE

SEED = b"selftest"


def subgroup_h(p):
    """All products embed(A, alpha) * embed(B, beta), by enumeration."""
    ctx = p.ctx
    A = [x for x in ctx.ctxA.elements() if any(x)]
    B = [y for y in ctx.ctxB.elements() if any(y)]
    return {ctx.mul(ctx.embed(A_SIDE, x), ctx.embed(B_SIDE, y)) for x in A for y in B}


def coset_partition(p, units):
    classes = []
    for t in units:
        for cls in classes:
            if coset_eq(p, cls[0], t):
                cls.append(t)
                break
        else:
            classes.append([t])
    return classes


def proportional(q, z, w):
    """z == lam * w for some nonzero scalar lam."""
    k = next((i for i, c in enumerate(w) if c), None)
    if k is None:
        return False
    lam = z[k] * pow(w[k], -1, q) % q
    return lam != 0 and all(zc == lam * wc % q for zc, wc in zip(z, w))


def census(p):
    """(successes, failures, every success has x = lambda y t) over all units."""
    ctx = p.ctx
    ok = bad = 0
    exact = True
    for t in ctx.units():
        try:
            c = compress_pgl(p, t)
        except OutOfGoodLocus:
            bad += 1
            continue
        ok += 1
        x, yt = p.lift_x(c.x), ctx.mul(p.lift_y(c.y), t)
        exact &= proportional(p.q, x, yt)
    return ok, bad, exact


def tn_count(q, n, seed=SEED):
    base = FieldCtx(q)
    big = ExtFieldCtx(base, irreducible_gen(base, n, seed))
    return sum(tn_membership(big, z) for z in big.elements() if any(z))


def _small(check):
    for q, h_exp, q_exp in ((2, 21, 3), (3, 104, 7)):
        p = make_params(q, 2, 3, SEED)
        units = list(p.ctx.units())
        H = subgroup_h(p)
        o = orders(q, 2, 3)
        check(f"|H| q={q} a=2 b=3", len(H) == o.h_order == h_exp, len(H))
        check(
            f"H membership q={q}",
            all(h_membership(p, t) == (t in H) for t in units),
            sum(h_membership(p, t) for t in units),
        )
        classes = coset_partition(p, units)
        sizes = sorted({len(c) for c in classes})
        check(f"|Q| q={q} a=2 b=3", len(classes) == o.q_order == q_exp, len(classes))
        check(f"coset sizes q={q}", sizes == [h_exp], sizes)
        ok, bad, exact = census(p)
        check(f"good-locus census q={q}", exact and ok + bad == len(units), f"{ok} of {len(units)}")
        payloads = {}
        injective = True
        for cls in classes:
            seen = set()
            for t in cls:
                try:
                    seen.add(compress_coset(p, t))
                except OutOfGoodLocus:
                    pass
            for c in seen:
                injective &= c not in payloads
                payloads[c] = cls[0]
            injective &= len(seen) <= 1
        check(f"coset injectivity q={q}", injective, f"{len(payloads)} payloads")
    for q, n in ((2, 6), (3, 6), (3, 2), (5, 2), (7, 2)):
        c = tn_count(q, n)
        check(f"|T_{n}(F_{q})|", c == cyclotomic_eval(n, q), c)


def _full(check):
    stream = SeedStream(SEED, "full")
    for a, b in ((2, 3), (3, 4), (2, 5), (3, 5)):
        p = make_params(1009, a, b, SEED)
        fails = 0
        for _ in range(100):
            t = p.ctx.random_unit(stream)
            try:
                c = compress_coset_retrying(p, t, seed=SEED)
                t2 = rerandomize(p, t, stream.randbits(64).to_bytes(8, "big"))
                pg = compress_pgl(p, t)
                back = decompress(p, pg)
                fails += not (
                    compress_coset(p, t2) == c
                    and proportional(p.q, back, t)
                    and coset_eq(p, t, t2)
                )
            except OutOfGoodLocus:
                fails += 1
        check(f"round trip q=1009 a={a} b={b}", fails == 0, f"{fails} failures")
        check(f"payload length a={a} b={b}", p.coset_len == a * b + 1 - a - b, p.coset_len)
    p = make_params(1009, 2, 3, SEED)
    g = find_generator(p, SEED, qorder_primes(orders(1009, 2, 3).q_order))
    disagree = 0
    for k in range(10):
        alice = keygen(p, g, seed=SEED + bytes([k, 0]))
        bob = keygen(p, g, seed=SEED + bytes([k, 1]))
        disagree += derive(p, alice.secret, bob.public) != derive(p, bob.secret, alice.public)
    check("dh agreement q=1009 a=2 b=3", disagree == 0, f"{disagree} of 10 disagree")


def run(level: str = "small"):
    """Return (report lines, number of failures)."""
    if level not in ("small", "full"):
        raise ValueError(f"unknown level {level!r}")
    lines = []
    failures = 0

    def check(name, ok, detail):
        nonlocal failures
        failures += not ok
        lines.append(f"{'ok  ' if ok else 'FAIL'} {name}: {detail}")

    _small(check)
    if level == "full":
        _full(check)
    lines.append(f"selftest {level}: {len(lines) - failures} passed, {failures} failed")
    return lines, failures
