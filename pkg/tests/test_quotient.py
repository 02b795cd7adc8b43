import pytest
import sympy

from toruscomp.drbg import SeedStream
from toruscomp.errors import CoprimeViolation, NotADivisor, ZeroInverse
from toruscomp.ffield import ExtFieldCtx, FieldCtx, irreducible_gen
from toruscomp.quotient import (
    coset_eq,
    cyclotomic_eval,
    h_membership,
    norm,
    orders,
    tn_membership,
    tn_membership_all_divisors,
)
from toruscomp.talgebra import A_SIDE, B_SIDE

from oracles import closure, naive_tensor_mul


@pytest.mark.parametrize(
    "q, a, b, h, n",
    [(2, 2, 3, 21, 3), (3, 2, 3, 104, 7), (5, 1, 3, 124, 1), (1009, 1, 4, 1009**4 - 1, 1)],
)
def test_orders(q, a, b, h, n):
    o = orders(q, a, b)
    assert (o.h_order, o.q_order) == (h, n)
    assert o.h_order * o.q_order == q ** (a * b) - 1


def test_orders_coprime():
    with pytest.raises(CoprimeViolation):
        orders(1009, 2, 4)


def _h_closure(p):
    ctx = p.ctx
    fA, fB = ctx.ctxA.modulus, ctx.ctxB.modulus
    gens = [ctx.embed(A_SIDE, x) for x in ctx.ctxA.elements() if any(x)]
    gens += [ctx.embed(B_SIDE, y) for y in ctx.ctxB.elements() if any(y)]
    return closure(gens, lambda z, w: naive_tensor_mul(z, w, fA, fB, ctx.q), ctx.one)


@pytest.mark.parametrize("fixture, h, n", [("p223", 21, 3), ("p323", 104, 7)])
def test_h_membership_exhaustive(request, fixture, h, n):
    p = request.getfixturevalue(fixture)
    H = _h_closure(p)
    assert len(H) == h
    units = list(p.ctx.units())
    assert all(h_membership(p, t) == (t in H) for t in units)
    classes = {}
    for t in units:
        inv = p.ctx.inv(t)
        key = min(naive_tensor_mul(hh, t, p.ctx.ctxA.modulus, p.ctx.ctxB.modulus, p.q) for hh in H)
        classes.setdefault(key, []).append(t)
        assert coset_eq(p, t, classes[key][0])
        assert not coset_eq(p, t, p.ctx.one) or key == min(H)
        assert inv is not None
    assert len(classes) == n
    assert {len(c) for c in classes.values()} == {h}


def test_h_membership_zero(p223):
    with pytest.raises(ZeroInverse):
        h_membership(p223, p223.ctx.zero)


def test_coset_eq_equivalence(toy_params):
    p = toy_params[(2, 5)]
    s = SeedStream(b"eq")
    A, B = p.ctx.ctxA, p.ctx.ctxB
    for _ in range(30):
        t = p.ctx.random_unit(s)
        h = p.ctx.mul(p.ctx.embed(A_SIDE, A.random_unit(s)), p.ctx.embed(B_SIDE, B.random_unit(s)))
        t2 = p.ctx.mul(h, t)
        t3 = p.ctx.mul(p.ctx.embed(B_SIDE, B.random_unit(s)), t2)
        assert coset_eq(p, t, t)
        assert coset_eq(p, t, t2) and coset_eq(p, t2, t)
        assert coset_eq(p, t, t3)
        r = p.ctx.random_unit(s)
        assert coset_eq(p, t, r) == coset_eq(p, r, t)


def test_norm_examples(f4):
    assert norm(f4, 1, f4.gen) == f4.one
    assert norm(f4, 1, f4.one) == f4.one
    with pytest.raises(NotADivisor):
        norm(f4, 3, f4.gen)
    with pytest.raises(ZeroInverse):
        norm(f4, 1, f4.zero)


def test_norm_properties():
    for q in (2, 1009):
        base = FieldCtx(q)
        big = ExtFieldCtx(base, irreducible_gen(base, 6, b"n"))
        s = SeedStream(b"norm", str(q))
        for _ in range(20):
            z, w = big.random_unit(s), big.random_unit(s)
            for d in (1, 2, 3):
                n = norm(big, d, z)
                assert big.pow(n, q**d) == n
                assert norm(big, d, big.mul(z, w)) == big.mul(n, norm(big, d, w))


def _squarefree(n):
    return all(e == 1 for e in sympy.factorint(n).values())


def _tn_cases(limit):
    for q in (2, 3, 5, 7, 11, 13):
        n = 1
        while q**n <= limit:
            if _squarefree(n):
                yield q, n
            n += 1


@pytest.mark.parametrize("q, n", list(_tn_cases(1 << 12)))
def test_tn_count_matches_cyclotomic(q, n):
    base = FieldCtx(q)
    big = ExtFieldCtx(base, irreducible_gen(base, n, b"tn"))
    count = 0
    for z in big.elements():
        if any(z):
            member = tn_membership(big, z)
            assert member == tn_membership_all_divisors(big, z)
            count += member
    assert count == cyclotomic_eval(n, q)


@pytest.mark.parametrize("q, n, expected", [(2, 6, 3), (3, 6, 7), (3, 2, 4), (5, 2, 6), (7, 2, 8)])
def test_tn_examples(q, n, expected):
    base = FieldCtx(q)
    big = ExtFieldCtx(base, irreducible_gen(base, n, b"ex"))
    assert sum(tn_membership(big, z) for z in big.elements() if any(z)) == expected
    assert tn_membership(big, big.one)


def test_cyclotomic_eval_against_sympy():
    x = sympy.Symbol("x")
    for n in range(1, 41):
        poly = sympy.cyclotomic_poly(n, x)
        for q in (2, 3, 10, 1009):
            assert cyclotomic_eval(n, q) == poly.subs(x, q)
    assert cyclotomic_eval(1, 7) == 6
    assert cyclotomic_eval(6, 2) == 3 and cyclotomic_eval(6, 3) == 7


@pytest.mark.parametrize("a, b", [(2, 3), (2, 5), (3, 5), (5, 7), (3, 7)])
def test_quotient_order_is_cyclotomic(a, b):
    for q in (2, 3, 1009):
        assert orders(q, a, b).q_order == cyclotomic_eval(a * b, q)
