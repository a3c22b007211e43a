from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import F1, T1_COLS, pistol_st, tableau_st
from dellac.core import (
    StatVector,
    decode,
    doubled_fixed_points,
    enumerate_dellac,
    enumerate_pistols,
    enumerate_spdc,
    enumerate_tableaux,
    fr,
    fr_vec,
    from_json,
    make_dellac,
    make_pistol,
    make_spdc,
    make_tableau,
    ndf,
    ndf_vec,
    rho,
    tableau_count,
    to_json,
)
from dellac.errors import (
    ColumnCountViolation,
    DiagonalViolation,
    NotSurjective,
    ParseError,
    SymmetryViolation,
    ValidationError,
    ValueBelowIndex,
)


def test_rho_examples():
    assert rho(7, 8) == 13
    assert rho(7, 14) == 14
    assert rho(7, 3) == 3


@given(st.integers(1, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, 2 * n))))
def test_rho_is_an_involution(ni):
    n, i = ni
    assert rho(n, rho(n, i)) == i


def test_rho_rejects_out_of_range():
    with pytest.raises(ValueError):
        rho(3, 7)


def test_constructors_accept_running_examples():
    T = make_tableau(7, T1_COLS)
    assert T.phys_col == T1_COLS
    assert make_pistol(7, F1).f == F1


def test_three_dots_in_a_column():
    with pytest.raises(ColumnCountViolation) as info:
        make_tableau(2, [1, 1, 2, 1])
    assert info.value.invariant == "column-count"


def test_dot_below_diagonal():
    with pytest.raises(DiagonalViolation) as info:
        make_tableau(2, [2, 1, 1, 2])
    assert info.value.index == 1


def test_pistol_errors():
    with pytest.raises(NotSurjective):
        make_pistol(2, [4, 4, 4, 4])
    with pytest.raises(ValueBelowIndex):
        make_pistol(2, [2, 2, 2, 4])


def test_dellac_window_and_symmetry():
    with pytest.raises(ValidationError):
        make_dellac(2, [1, 2, 2, 1])  # row 4 is out of reach for column 1
    with pytest.raises(SymmetryViolation):
        make_spdc(2, [1, 1, 2, 3, 2, 4, 3, 4])


@pytest.mark.parametrize(
    "enum, counts",
    [
        (enumerate_dellac, [1, 2, 7, 38, 295]),
        (enumerate_tableaux, [1, 3, 18, 180, 2700]),
        (enumerate_pistols, [1, 3, 17, 155, 2073]),
        (enumerate_spdc, [2, 10, 98, 1594]),
    ],
)
def test_counts(enum, counts):
    assert [len(enum(n)) for n in range(1, len(counts) + 1)] == counts


def test_tableau_count_formula():
    assert [tableau_count(n) for n in range(1, 7)] == [1, 3, 18, 180, 2700, 56700]


@pytest.mark.parametrize("enum", [enumerate_dellac, enumerate_tableaux, enumerate_pistols, enumerate_spdc])
def test_enumeration_is_sorted_and_duplicate_free(enum):
    objs = enum(3)
    assert objs == sorted(objs)
    assert len(set(objs)) == len(objs)


@pytest.mark.parametrize("enum", [enumerate_dellac, enumerate_tableaux, enumerate_pistols, enumerate_spdc])
def test_parallel_enumeration_matches_serial(enum):
    assert enum(4, jobs=3) == enum(4)


def test_small_cases():
    assert [d.row_col for d in enumerate_dellac(1)] == [(1, 1)]
    assert [f.f for f in enumerate_pistols(2)] == [(2, 2, 4, 4), (2, 4, 4, 4), (4, 2, 4, 4)]


def test_fr_examples():
    T1 = make_tableau(7, T1_COLS)
    assert fr_vec(T1) == StatVector([1, 1, 0, 0, 1, 1, 1])
    assert repr(fr_vec(T1)) == "[1,1,0,0,1,1,1]"
    assert [fr(T) for T in enumerate_tableaux(2)] == [2, 1, 2]


def test_ndf_examples():
    assert ndf(make_pistol(2, [2, 2, 4, 4])) == 1
    assert doubled_fixed_points(make_pistol(2, [2, 2, 4, 4])) == {2}
    assert ndf_vec(make_pistol(7, F1)) == StatVector([1, 1, 0, 1, 1, 1, 1])
    assert ndf(make_pistol(1, [2, 2])) == 1


@given(tableau_st())
def test_fr_is_bit_sum(T):
    assert fr(T) == fr_vec(T).total


@given(pistol_st())
def test_ndf_properties(f):
    assert ndf(f) >= 1
    assert ndf_vec(f).bit(f.n) == 1


@settings(max_examples=60)
@given(st.one_of(tableau_st(4), pistol_st(4), st.integers(1, 3).flatmap(lambda n: st.sampled_from(enumerate_spdc(n)))))
def test_encoding_round_trips(obj):
    assert decode(obj.encode()) == obj
    assert from_json(json.dumps(to_json(obj))) == obj


def test_decode_rejects_garbage():
    with pytest.raises(ParseError):
        decode("T n=2 cols=1,x")
    with pytest.raises(ParseError):
        decode("Q n=1 cols=1,1")
