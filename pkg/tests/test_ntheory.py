import pytest

from toruscomp.errors import FactorizationError
from toruscomp.ntheory import divisors, euler_phi, factorize, is_prime, mobius


def _sieve(n):
    flags = [True] * (n + 1)
    flags[0] = flags[1] = False
    for i in range(2, int(n**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = [False] * len(flags[i * i :: i])
    return flags


def test_is_prime_against_sieve():
    flags = _sieve(200_000)
    assert all(is_prime(n) == flags[n] for n in range(len(flags)))


@pytest.mark.parametrize(
    "n, expected",
    [
        ((1 << 61) - 1, True),
        ((1 << 64) - 59, True),
        ((1 << 127) - 1, True),
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases up to 23
        (((1 << 61) - 1) * ((1 << 31) - 1), False),
        (170141183460469231731687303715884124579, True),
    ],
)
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected


def test_factorize():
    n = 2**3 * 3 * 727 * 1399 * 1036487904481
    assert factorize(n) == {2: 3, 3: 1, 727: 1, 1399: 1, 1036487904481: 1}
    assert factorize(1) == {}
    assert factorize(1009**2) == {1009: 2}


def test_factorize_budget():
    p, q = (1 << 61) - 1, (1 << 89) - 1
    with pytest.raises(FactorizationError):
        factorize(p * q, budget=1000)


def test_mobius_divisors_phi():
    assert [mobius(n) for n in range(1, 13)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [euler_phi(n) for n in (1, 6, 10, 12, 15)] == [1, 2, 4, 4, 8]
