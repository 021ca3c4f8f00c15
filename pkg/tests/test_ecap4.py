import pytest

from powerful_aps import ecap4
from powerful_aps.ellcurve import CURVE, INFINITY, P1

MOD = 10**9 + 7


def test_ladder_matches_group_law():
    for n in range(1, 11):
        assert ecap4._EXACT.point(n) == CURVE.mul(n, P1)


def test_psi_small_values():
    assert ecap4.psi(1) == 1
    assert ecap4.psi(4) == -19111064818388639416320


def test_psi_modular_agrees_with_exact():
    assert ecap4.psi(20, MOD) == ecap4.psi(20) % MOD
    assert ecap4.phi_omega(7, MOD) == (ecap4.phi(7) % MOD, ecap4.omega(7) % MOD)


def test_modulus_must_avoid_denominators():
    with pytest.raises(ValueError):
        ecap4.DivisionValues(10**9)  # shares a factor with 2 psi_2


def test_omega_alt_consistency():
    for n in range(2, 9):
        assert ecap4._EXACT.omega_alt(n) == ecap4._EXACT.omega(n)


def test_nu2_psi_values():
    assert [ecap4.nu2_psi(n) for n in range(2, 17)] == [
        5, 13, 30, 39, 57, 78, 109, 130, 161, 195, 238, 273, 317, 364, 422,
    ]


def test_nu2_closed_form():
    assert ecap4.nu2_closed_form(20) == ("==", 654)
    assert ecap4.nu2_closed_form(19) == ("==", 585)
    assert ecap4.nu2_closed_form(14) == ("==", 317)


def test_nu2_prediction_holds():
    assert all(ok for *_, ok in ecap4.nu2_psi_check(60))


def test_scan_periods_73():
    rep = ecap4.scan_periods(73)
    assert (rep.psi_period, rep.phi_period, rep.omega_period) == (2628, 1314, 876)
    assert sorted(rep.residue_classes) == [39]
    assert not rep.exact_fallback
    assert rep.window == 3 * 36 * 73


def test_scan_periods_small_modulus_falls_back():
    rep = ecap4.scan_periods(5)
    assert (rep.psi_period, rep.phi_period, rep.omega_period) == (8, 4, 8)
    assert rep.exact_fallback


def test_ab_from_n_shapes():
    ab = ecap4.ab_from_n(4)
    assert len(str(ab.a)) == 37
    assert (ab.congruence_ok, ab.parity_index_ok, ab.a_even_b_odd, ab.residue_ok) == (
        False, True, True, False,
    )
    ab = ecap4.ab_from_n(39)
    assert len(str(ab.a)) == 3049
    assert (ab.congruence_ok, ab.parity_index_ok, ab.a_even_b_odd, ab.residue_ok) == (
        True, False, False, True,
    )


def test_ab_from_n_guards():
    with pytest.raises(ValueError):
        ecap4.ab_from_n(1)


def test_quartic_value():
    assert ecap4.quartic_value(2, -1) == 73
    # invariant under (a, b) -> (b, -a)
    assert ecap4.quartic_value(-1, -2) == 73
    assert ecap4.quartic_value(1, 0) == 1


def test_proposition_witness_rejects_wrong_class():
    with pytest.raises(ValueError):
        ecap4.proposition_witness(405)
    with pytest.raises(ValueError):
        ecap4.proposition_witness(39)  # right mod 73, wrong mod 16


def test_intro_example_verifies():
    rep = ecap4.verify_intro_example()
    assert rep.ok, rep.failures()
    assert (rep.n_digits, rep.d_digits, rep.a_digits, rep.b_digits) == (1126, 1125, 282, 282)
    assert len(rep.checks) == 9


def test_intro_witness():
    w = ecap4.intro_witness()
    assert (w.m, w.k) == (4, 2)
    assert w.source == "constructed-elliptic"
    assert w.diff > 0
    w.verify()


def test_data_dir_has_fixtures():
    d = ecap4.data_dir()
    for name in ("intro_N.txt", "intro_d.txt", "intro_a.txt", "intro_b.txt"):
        assert (d / name).is_file()
