import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dtinv.errors import BadEpsilon, BadWindow
from dtinv.walls import (
    Chamber,
    ChamberSpec,
    DestabilizerTriple,
    bogomolov_window,
    classify,
    destabilizer_search,
    k_value,
    k_value_3fold,
    moduli_is_empty,
    wall_bounds,
)

EPS = [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_wall_bounds():
    assert wall_bounds(2, 0, 0) == (2, math.inf)
    assert wall_bounds(2, 1, 0) == (Fraction(4, 3), 4)
    assert wall_bounds(2, 0, 1) == (1, math.inf)
    with pytest.raises(BadEpsilon):
        wall_bounds(2, 2, 0)


def test_classify_examples():
    assert classify(ChamberSpec(2, 0, 0, 1)) is Chamber.BELOW_WALL
    assert classify(ChamberSpec(2, 0, 0, 3)) is Chamber.IN_CHAMBER
    assert classify(ChamberSpec(2, 0, 0, 2)) is Chamber.ON_WALL
    assert classify(ChamberSpec(2, 1, 0, 4)) is Chamber.AT_OR_ABOVE_UPPER
    assert classify(ChamberSpec(2, 1, 0, Fraction(39, 10))) is Chamber.IN_CHAMBER
    assert classify(ChamberSpec(2, 0, 0, 10**9)) is Chamber.IN_CHAMBER


def test_chamber_spec_validation():
    with pytest.raises(ValueError):
        ChamberSpec(2, 0, 0, 0)
    with pytest.raises(ValueError):
        ChamberSpec(1, 0, 0, 3)
    with pytest.raises(BadEpsilon):
        ChamberSpec(2, 0, -1, 3)


@given(
    st.integers(2, 5),
    st.sampled_from(EPS),
    st.fractions(min_value=Fraction(1, 100), max_value=20),
    st.fractions(min_value=0, max_value=20),
)
@settings(max_examples=100, deadline=None)
def test_prop_classify_monotone(n, eps, r, dr):
    order = [Chamber.BELOW_WALL, Chamber.ON_WALL, Chamber.IN_CHAMBER, Chamber.AT_OR_ABOVE_UPPER]
    a = classify(ChamberSpec(n, *eps, r))
    b = classify(ChamberSpec(n, *eps, r + dr))
    assert order.index(a) <= order.index(b)


def test_k_values():
    assert k_value_3fold(0, 0) == 5
    assert k_value_3fold(1, 0) == 11
    assert k_value(2, 0, 1) == 2 == k_value_3fold(0, 1)
    for e1, e2 in EPS:
        assert k_value(2, e1, e2) == k_value_3fold(e1, e2)
    with pytest.raises(BadEpsilon):
        k_value(2, 0, 3)


def test_moduli_is_empty():
    spec = ChamberSpec(2, 0, 0, 3)
    assert moduli_is_empty(-2, spec, "B")
    assert moduli_is_empty(3, spec, "B")
    assert not moduli_is_empty(4, spec, "B")
    assert moduli_is_empty(4, ChamberSpec(2, 0, 0, 1), "B")
    assert not moduli_is_empty(0, family="A")
    assert moduli_is_empty(1, family="A")
    with pytest.raises(ValueError):
        moduli_is_empty(0, family="C")


def test_destabilizer_examples():
    expected = [DestabilizerTriple(0, -1, 1)]
    assert destabilizer_search(2, 0, 0, 3, Fraction(1, 4), 4) == expected
    assert destabilizer_search(2, 1, 0, 2, Fraction(1, 8), 4) == expected


@pytest.mark.parametrize("e1,e2", EPS)
def test_destabilizer_unique_in_chamber(e1, e2):
    lo, up = wall_bounds(2, e1, e2)
    hi = lo + 5 if up == math.inf else up
    window = bogomolov_window(2, e1, e2)
    for r in (lo + Fraction(1, 7), (lo + hi) / 2, hi - Fraction(1, 9)):
        for r0 in (window / 3, window / 2, window * Fraction(9, 10)):
            a = destabilizer_search(2, e1, e2, r, r0, 4)
            assert [t.as_tuple() for t in a] == [(0, -1, 1)]
            assert destabilizer_search(2, e1, e2, r, r0, 6) == a


def test_destabilizer_never_violates_sign_filter():
    for e1, e2 in EPS:
        for t in destabilizer_search(3, e1, e2, 7, bogomolov_window(3, e1, e2) / 2, 5):
            assert 2 * t.a + 2 * t.b - e1 < 0


def test_destabilizer_bad_window():
    with pytest.raises(BadWindow):
        destabilizer_search(2, 0, 0, 3, Fraction(1, 2), 4)
    with pytest.raises(BadWindow):
        destabilizer_search(2, 0, 0, 3, 0, 4)
    with pytest.raises(ValueError):
        destabilizer_search(2, 0, 0, 3, Fraction(1, 4), 2)


def test_window_formula():
    assert bogomolov_window(2, 0, 0) == Fraction(1, 2)
    assert bogomolov_window(2, 1, 0) == Fraction(1, 3)
    assert bogomolov_window(3, 0, 1) == Fraction(1, 2)
