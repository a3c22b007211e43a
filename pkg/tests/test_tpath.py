from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import tableau_st
from dellac.errors import BoxOccupied, TargetNotInCodomain, ValidationError
from dellac.tpath import (
    PartialTableau,
    admissible,
    codomain,
    in_codomain,
    pi,
    pi_inverse,
    reverse_path,
    t_path,
)

T0_COLS = (1, 1, 3, 0, 0, 3, 0, 0, 0, 0, 2, 0, 0, 2)


@pytest.fixture
def T0():
    return PartialTableau(7, 4, T0_COLS)


def test_worked_paths(T0):
    p = t_path(T0, 4, 8)
    assert p.steps == (8, 2, 10, 6) and p.arrival == 6
    assert t_path(T0, 4, 9).steps == (9, 14)


def test_pi_table(T0):
    assert pi(T0, 4) == {4: 4, 5: 5, 7: 7, 8: 6, 9: 14, 11: 11, 12: 12, 13: 13}
    assert codomain(7, 4) == [4, 5, 6, 7, 11, 12, 13, 14]


def test_inverse_and_reverse(T0):
    assert pi_inverse(T0, 4, 6) == 8
    assert pi_inverse(T0, 4, 14) == 9
    assert reverse_path(T0, 4, 6).steps == (8, 2, 10, 6)
    with pytest.raises(TargetNotInCodomain):
        pi_inverse(T0, 4, 3)


def test_codomain_membership():
    assert in_codomain(7, 4, 12)
    assert not in_codomain(7, 4, 3)


def test_encoding_and_insertion(T0):
    assert T0.encode() == "J n=7 j=4 cols=1,1,3,.,.,3,.,.,.,.,2,.,.,2"
    U = T0.with_dot(4, 8)
    with pytest.raises(BoxOccupied):
        U.with_dot(4, 8)


def test_partial_rejects_filled_future_column():
    with pytest.raises(ValidationError):
        PartialTableau(2, 1, (0, 0, 2, 2))


def test_empty_partial():
    E = PartialTableau.empty(3)
    assert E.j == 1
    assert pi(E, 1) == {i: i for i in codomain(3, 1)}


@settings(max_examples=80)
@given(tableau_st(5), st.data())
def test_pi_is_a_bijection_onto_codomain(T, data):
    j = data.draw(st.integers(1, T.n))
    P = PartialTableau.from_tableau(T, j)
    table = pi(P, j)
    assert sorted(table.values()) == codomain(T.n, j)
    assert all(admissible(P, j, i) for i in table)
    for i, v in table.items():
        assert pi_inverse(P, j, v, table) == i
        assert reverse_path(P, j, v).steps[0] == i


@settings(max_examples=50)
@given(tableau_st(5))
def test_path_length_is_bounded(T):
    P = PartialTableau.from_tableau(T, T.n)
    for i in pi(P, T.n):
        assert len(t_path(P, T.n, i).steps) <= 2 * T.n + 1
