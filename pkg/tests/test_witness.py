import dataclasses

import pytest
from hypothesis import given, strategies as st

from powerful_aps.ntcore import factorize
from powerful_aps.witness import (
    ProgressionWitness,
    Term,
    WitnessError,
    term_from_factored,
    term_from_parts,
    witness_from_values,
)

ROW_316 = [729000, 729316, 729632]


def test_term_evidence_required():
    with pytest.raises(WitnessError):
        Term(8).check(2)
    term_from_factored(factorize(8)).check(2)
    term_from_parts(8, (1, 2)).check(2)  # 1^2 * 2^3


def test_term_catches_wrong_parts():
    with pytest.raises(WitnessError):
        term_from_parts(9, (1, 2)).check(2)
    with pytest.raises(WitnessError):
        term_from_parts(8, (1, 2, 1)).check(2)  # wrong length


def test_term_catches_wrong_factorization():
    with pytest.raises(WitnessError):
        Term(8, factored=factorize(9)).check(2)
    with pytest.raises(WitnessError):
        Term(12, factored=factorize(12)).check(2)  # 12 is not squarefull


def test_witness_from_values():
    w = witness_from_values(ROW_316)
    assert (w.k, w.m, w.first, w.diff) == (2, 3, 729000, 316)
    assert w.values == tuple(ROW_316)
    w.verify()


def test_witness_normalizes_descending_input():
    w = witness_from_values(list(reversed(ROW_316)))
    assert w.diff == 316 and w.first == 729000
    w.verify()


def test_witness_from_values_rejects_non_ap():
    with pytest.raises(WitnessError):
        witness_from_values([4, 8, 9])
    with pytest.raises(WitnessError):
        witness_from_values([4])


def test_unknown_source_rejected():
    with pytest.raises(WitnessError):
        witness_from_values(ROW_316, source="guessed")


def test_json_roundtrip():
    w = witness_from_values(ROW_316)
    again = ProgressionWitness.from_json(w.to_json())
    assert again == w
    again.verify()


def test_json_roundtrip_with_parts():
    t = term_from_parts(8, (1, 2))
    w = ProgressionWitness(2, 2, 4, 4, (term_from_factored(factorize(4)), t))
    again = ProgressionWitness.from_json(w.to_json())
    assert again == w and again.terms[1].parts == (1, 2)
    again.verify()


def test_verify_catches_broken_progression():
    w = witness_from_values(ROW_316)
    bad = dataclasses.replace(w, diff=317)
    with pytest.raises(WitnessError):
        bad.verify()


def test_verify_shape_checks():
    w = witness_from_values(ROW_316)
    with pytest.raises(WitnessError):
        dataclasses.replace(w, m=4).verify()
    with pytest.raises(WitnessError):
        dataclasses.replace(w, k=1).verify()
    with pytest.raises(WitnessError):
        dataclasses.replace(w, diff=0).verify()


def test_elliptic_source_demands_structure():
    w = witness_from_values(ROW_316)
    retagged = dataclasses.replace(w, source="constructed-elliptic")
    with pytest.raises(WitnessError):
        retagged.verify()


def test_primitive_on_searched_row():
    assert witness_from_values(ROW_316).is_primitive()


def test_primitive_needs_factored_terms():
    t = term_from_parts(8, (1, 2))
    w = ProgressionWitness(2, 2, 4, 4, (term_from_factored(factorize(4)), t))
    with pytest.raises(WitnessError):
        w.is_primitive()


@given(st.integers(min_value=2, max_value=12))
def test_square_scaling_is_imprimitive(t):
    scaled = witness_from_values([t * t * v for v in ROW_316])
    assert not scaled.is_primitive()


def test_doubling_here_is_still_primitive():
    # 2x the row stays squarefull termwise but 2 is not a square scale
    w = witness_from_values([2 * v for v in ROW_316])
    w.verify()
    assert w.is_primitive()
