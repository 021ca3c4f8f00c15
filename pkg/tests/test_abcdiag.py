from fractions import Fraction

import pytest

from powerful_aps.abcdiag import (
    EXCEPTIONAL_PAIRS,
    abc_quality,
    kabc_triple,
    lemma5ap_check,
    roadie_check,
    small_primes_product,
    theorem1_exponents,
    witness_diagnostics,
)
from powerful_aps.witness import witness_from_values

ROW_10404 = [499392, 509796, 520200, 530604]


def test_exceptional_pairs():
    assert EXCEPTIONAL_PAIRS == ((3, 2), (3, 3), (4, 2))


def test_exponents_worked_examples():
    t = theorem1_exponents(5, 2)
    assert t.e_gcd == Fraction(2, 7)
    assert not t.exceptional

    t = theorem1_exponents(4, 2)
    assert t.exceptional
    assert t.strengthened_dN == Fraction(3, 5)

    t = theorem1_exponents(3, 2)
    assert t.exceptional
    assert t.e_gcd == -2
    assert t.e_dN == Fraction(2, 5)
    assert t.e_Nd == 0
    assert t.strengthened_gcd is None  # denominator vanishes exactly here
    assert t.strengthened_dN == Fraction(1, 2)
    assert t.strengthened_Nd == 0


def test_exponents_positive_iff_not_exceptional():
    for m in range(3, 9):
        for k in range(2, 7):
            t = theorem1_exponents(m, k)
            assert (t.e_gcd > 0) == ((m, k) not in EXCEPTIONAL_PAIRS)
            assert t.e_dN > 0 and t.e_Nd >= 0


def test_strengthened_presence():
    for m in range(3, 9):
        for k in range(2, 7):
            t = theorem1_exponents(m, k)
            present = t.strengthened_dN is not None
            assert present == (m >= 2 * k - 1)


def test_exponents_guards():
    with pytest.raises(ValueError):
        theorem1_exponents(2, 2)
    with pytest.raises(ValueError):
        theorem1_exponents(3, 1)


def test_abc_quality_classic():
    q = abc_quality(1, 8, 9)
    assert q.rad == 6
    assert q.quality.startswith("1.2262943855309168")


def test_abc_quality_guards():
    with pytest.raises(ValueError):
        abc_quality(1, 2, 4)  # 1 + 2 != 4
    with pytest.raises(ValueError):
        abc_quality(2, 4, 6)  # not coprime
    with pytest.raises(ValueError):
        abc_quality(8, 1, 9)  # out of order


def test_kabc_on_table_row():
    w = witness_from_values(ROW_10404)
    res = kabc_triple(w, with_quality=True)
    assert (res.ell, res.t, res.n0, res.d0) == (3, 10404, 48, 1)
    assert (res.raw_even, res.raw_odd) == (6000000, 6000099)
    assert res.raw_diff == 99
    assert res.common == 3
    assert res.a + res.b == res.c
    assert res.common_bound == 3**9
    assert res.common_ok
    assert res.quality.startswith("1.3715615219")


def test_kabc_on_smallest_progression():
    w = witness_from_values([1, 25, 49])
    res = kabc_triple(w, with_quality=True)
    assert res.ell == 2 and res.common == 1
    assert (res.a, res.b, res.c) == (49, 576, 625)
    assert res.quality.startswith("1.2039689893")


def test_kabc_needs_three_terms():
    with pytest.raises(ValueError):
        kabc_triple(witness_from_values([4, 8]))


def test_lemma5ap_worked():
    res = lemma5ap_check(1728, 27, 2)
    assert (res.lhs, res.rhs) == (432, 2985984)
    assert res.ok


def test_lemma5ap_guards():
    with pytest.raises(ValueError):
        lemma5ap_check(1728, 12, 2)  # t not squarefull
    with pytest.raises(ValueError):
        lemma5ap_check(1728, 25, 2)  # t does not divide n


def test_lemma5ap_sweep(squarefull_1e6):
    from powerful_aps.ntcore import factorize, kfull_divisors

    checked = 0
    for n in squarefull_1e6[squarefull_1e6 <= 20000].tolist():
        fn = factorize(int(n))
        for t in kfull_divisors(fn, 2):
            assert lemma5ap_check(fn, factorize(t), 2).ok
            checked += 1
    assert checked > 400


def test_small_primes_product():
    assert small_primes_product(4) == 6
    assert small_primes_product(5) == 30
    assert small_primes_product(2) == 2


def test_roadie_on_trivial_family():
    w = witness_from_values([36, 72, 108, 144])
    res = roadie_check(w)
    assert (res.lhs, res.rhs) == (362797056, 3761479876608)
    assert res.ok


def test_roadie_on_searched_row():
    w = witness_from_values([1, 25, 49])
    res = roadie_check(w)
    assert (res.lhs, res.rhs) == (42875, 9261000)
    assert res.ok


def test_roadie_wants_enough_terms():
    w = witness_from_values([4913, 27783, 50653], k=3)
    with pytest.raises(ValueError):
        roadie_check(w)  # m = 3 < 2k - 1 = 5


def test_witness_diagnostics():
    d = witness_diagnostics(witness_from_values([729000, 729316, 729632]))
    assert (d.m, d.k, d.t) == (3, 2, 4)
    assert d.ratio_d_N == "0.4263"
    assert d.ratio_t_last == "0.1026"
    assert d.exponents.m == 3
