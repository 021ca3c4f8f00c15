import pytest

from powerful_aps.constructions import (
    CubicTriple,
    FamilyParams,
    PellPair,
    ap3_cubefull_iterate,
    ap3_cubefull_seed,
    ap3_cubefull_witness,
    ap3_squarefull,
    check_pelly,
    family_4term,
    family_params,
    pell_pair,
    pelly,
    sweep_budget,
)
from powerful_aps.witness import WitnessError


def test_ap3_squarefull_classic():
    w = ap3_squarefull(2, 1)
    assert w.values == (1, 25, 49)
    assert w.source == "constructed-sum-of-squares"
    w.verify()


def test_ap3_squarefull_larger():
    w = ap3_squarefull(5, 2)
    w.verify()
    assert w.m == 3 and w.k == 2
    assert w.values[1] == 29**2


def test_ap3_squarefull_guards():
    with pytest.raises(ValueError):
        ap3_squarefull(3, 1)  # same parity
    with pytest.raises(ValueError):
        ap3_squarefull(4, 2)  # not coprime
    with pytest.raises(ValueError):
        ap3_squarefull(0, 1)


def test_ap3_squarefull_sign_insensitive():
    assert ap3_squarefull(-2, 1).values == (1, 25, 49)


def test_cubefull_seed():
    t = ap3_cubefull_seed()
    assert (t.X, t.Y, t.Z) == (37, 17, 7)
    assert 37**3 + 17**3 == 162 * 7**3


def test_cubefull_iterate():
    g1 = ap3_cubefull_iterate(ap3_cubefull_seed())
    assert (g1.X, g1.Y, g1.Z) == (2237723, -1805723, 320180)
    assert g1.generation == 1
    g2 = ap3_cubefull_iterate(g1)
    assert abs(g2.Z) > abs(g1.Z)


def test_cubefull_triple_check():
    with pytest.raises(ValueError):
        CubicTriple(37, 17, 8).check()
    with pytest.raises(ValueError):
        CubicTriple(37 * 3, 17 * 3, 21).check()  # not coprime


def test_cubefull_witness_from_seed():
    w = ap3_cubefull_witness(ap3_cubefull_seed())
    assert w.values == (4913, 27783, 50653)
    assert w.diff == 22870
    assert w.source == "constructed-cubic-iteration"
    w.verify()


def test_cubefull_witness_sweeps_to_a_positive_variant():
    g1 = ap3_cubefull_iterate(ap3_cubefull_seed())
    w = ap3_cubefull_witness(g1)  # gens 1, 2 have no positive variant; 3 does
    w.verify()
    assert w.k == 3


def test_cubefull_witness_budget_exhaustion():
    g1 = ap3_cubefull_iterate(ap3_cubefull_seed())
    with pytest.raises(WitnessError):
        ap3_cubefull_witness(g1, max_sweeps=0)


def test_sweep_budget_grows():
    t = ap3_cubefull_seed()
    budgets = []
    for _ in range(3):
        budgets.append(sweep_budget(t))
        t = ap3_cubefull_iterate(t)
    assert budgets[0] < budgets[1] < budgets[2]


def test_pell_pairs():
    assert pell_pair(0) == PellPair(0, 1, 0)
    assert pell_pair(1) == PellPair(1, 1, 1)
    for k in range(12):
        pell_pair(k).check()
    assert pelly(14) == 80782


def test_pell_guard():
    with pytest.raises(ValueError):
        pell_pair(-1)
    with pytest.raises(ValueError):
        PellPair(3, 2, 1).check()


@pytest.mark.parametrize("j", range(5))
def test_pell_five_adic_congruences(j):
    assert check_pelly(j)


def test_family_params_j1():
    p = family_params(4, 1)
    assert p.index == 14 and p.x == 80782
    assert p.companion**2 - 2 * p.x**2 == 1
    assert p.diff == p.s**2
    assert p.first == 2 * p.x**2 * p.diff
    assert len(str(p.first)) == 48
    assert p.ratio_report() == "0.275945932335"


def test_family_params_guards():
    with pytest.raises(ValueError):
        family_params(3, 1)
    with pytest.raises(ValueError):
        family_params(4, 0)


def test_family_witness_m4():
    w = family_4term(4, 1)
    assert w.m == 4 and w.k == 2
    assert w.source == "family-pell"
    w.verify()


def test_family_witness_m5():
    w = family_4term(5, 1)
    assert w.m == 5
    w.verify()
