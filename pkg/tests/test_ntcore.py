import math

import pytest
from hypothesis import given, strategies as st

from powerful_aps.ntcore import (
    FactoredNatural,
    certificate_parts,
    coprime_basis,
    factorize,
    is_kfull,
    is_prime,
    kfull_decompose,
    kfull_divisors,
    nu,
    nu2,
    radical,
)

PRIMES = [2, 3, 5, 7, 31, 97, 7919, 2**31 - 1, 2**61 - 1]
COMPOSITES = [1, 4, 561, 1729, 25326001, 2**32, 3215031751]


@pytest.mark.parametrize("p", PRIMES)
def test_is_prime_on_primes(p):
    assert is_prime(p)


@pytest.mark.parametrize("n", COMPOSITES)
def test_is_prime_on_composites(n):
    # 561, 1729 Carmichael; 25326001, 3215031751 strong pseudoprime classics
    assert not is_prime(n)


def test_valuations():
    assert nu(2, 96) == 5
    assert nu(3, 96) == 1
    assert nu(5, 96) == 0
    assert nu2(729000) == 3
    assert nu2(1) == 0


def test_factorize_basics():
    fn = factorize(729000)
    assert str(fn) == "2^3*3^6*5^3"
    fn.check()
    assert fn.as_dict() == {2: 3, 3: 6, 5: 3}
    assert fn.nu(3) == 6
    assert fn.radical() == 30
    assert fn.is_kfull(2) and fn.is_kfull(3) and not fn.is_kfull(4)
    assert radical(729000) == 30


def test_factorize_one():
    fn = factorize(1)
    assert fn.factors == () and str(fn) == "1"
    assert fn.is_kfull(2)


def test_times_and_pow():
    a, b = factorize(12), factorize(18)
    prod = a.times(b)
    assert prod.value == 216 and prod.as_dict() == {2: 3, 3: 3}
    cube = factorize(6).pow(3)
    assert cube.value == 216 and cube.is_kfull(3)


def test_json_roundtrip():
    fn = factorize(64192144)
    again = FactoredNatural.from_json_obj(fn.to_json_obj())
    assert again == fn
    again.check()


def test_check_rejects_lies():
    with pytest.raises(ValueError):
        FactoredNatural(12, ((2, 2), (5, 1))).check()
    with pytest.raises(ValueError):
        FactoredNatural(12, ((4, 1), (3, 1))).check()  # 4 is not prime
    with pytest.raises(ValueError):
        FactoredNatural(12, ((2, 2), (3, 0))).check()  # zero exponent


@given(st.integers(min_value=1, max_value=10**6))
def test_factorize_recomposes(n):
    fn = factorize(n)
    fn.check()
    assert math.prod(p**e for p, e in fn.factors) == n
    assert fn.is_kfull(2) == is_kfull(n, 2)


def test_kfull_decompose_worked():
    dec = kfull_decompose(729000, 2)
    assert dec.parts == (27, 10)
    assert dec.value == 729000
    dec.check(729000)


def test_kfull_decompose_greedy_rule():
    # 2^7: q, r = 3, 1 so a_2 gets 2^2 and a_3 one factor 2
    assert kfull_decompose(2**7, 2).parts == (4, 2)
    assert kfull_decompose(2**6, 2).parts == (8, 1)
    assert kfull_decompose(2**3 * 3**4, 3).parts == (2, 3, 1)


def test_kfull_decompose_rejects_non_kfull():
    with pytest.raises(ValueError):
        kfull_decompose(12, 2)
    with pytest.raises(ValueError):
        kfull_decompose(729000, 1)


@given(st.integers(min_value=1, max_value=300), st.integers(min_value=1, max_value=40))
def test_kfull_decompose_property(a, b):
    n = a * a * b**3
    dec = kfull_decompose(n, 2)
    p2, p3 = dec.parts
    assert p2**2 * p3**3 == n
    assert factorize(p3).radical() == p3  # a_3 stays squarefree


def test_kfull_divisors():
    assert kfull_divisors(729000, 2) == [
        d for d in range(1, 729001) if 729000 % d == 0 and is_kfull(d, 2)
    ]
    assert kfull_divisors(729000, 2, limit=100) == [1, 4, 8, 9, 25, 27, 36, 72, 81, 100]
    assert kfull_divisors(12, 2) == [1, 4]


def test_coprime_basis_worked():
    assert coprime_basis([(12, 2), (18, 3)]) == [(2, 7), (3, 8)]


def test_coprime_basis_rejects_zero():
    with pytest.raises(ValueError):
        coprime_basis([(0, 2)])


@given(
    st.lists(
        st.tuples(st.integers(min_value=2, max_value=500), st.integers(min_value=1, max_value=5)),
        min_size=1,
        max_size=5,
    )
)
def test_coprime_basis_property(components):
    basis = coprime_basis(components)
    lhs = math.prod(c**e for c, e in components)
    rhs = math.prod(b**e for b, e in basis)
    assert lhs == rhs
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            assert math.gcd(basis[i][0], basis[j][0]) == 1


def test_certificate_parts():
    assert certificate_parts([(6, 2), (10, 3)], 2) == (6, 10)
    parts = certificate_parts([(12, 2), (18, 3)], 2)
    assert parts[0] ** 2 * parts[1] ** 3 == 12**2 * 18**3


def test_certificate_parts_needs_k():
    # refinement leaves gcd(4, 6) = 2 with exponent 1 + 1 = 2, but 4/2 and 6/2
    # keep exponent 1 each, below k
    with pytest.raises(ValueError):
        certificate_parts([(4, 1), (6, 1)], 2)
