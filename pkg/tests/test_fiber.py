from __future__ import annotations

import pytest
from hypothesis import given, settings

from conftest import FIG10_COLS, pistol_st, tableau_st
from dellac.core import fr, make_pistol, ndf
from dellac.errors import PreconditionViolated
from dellac.fiber import fiber, fiber_sum_check, is_tilde, mute, neighbours, signature, switch
from dellac.insertion import Phi
from dellac.labeling import ALPHA, BETA, phi

SWITCHED = {
    (1, 1): (1, 2, 1, 3, 5, 4, 4, 5, 7, 3, 2, 6, 7, 6),
    (1, -1): (1, 2, 1, 3, 5, 5, 4, 4, 7, 3, 2, 7, 6, 6),
    (-1, 1): (1, 2, 2, 3, 5, 4, 4, 5, 7, 3, 1, 7, 6, 6),
    (-1, -1): (1, 2, 2, 3, 5, 5, 4, 4, 7, 3, 1, 6, 7, 6),
}


def test_signature_of_fiber_example(fig10):
    sig = signature(fig10)
    assert sig.S_set == (3, 6)
    assert sig.mu == (-1, 1)
    assert sig.C_set == (3,)
    assert sig.t_map == {3: BETA}
    assert sig.to_json()["t"] == {"3": BETA}


def test_running_example_is_tilde(T1):
    assert signature(T1).C_set == ()
    assert is_tilde(T1)


@pytest.mark.parametrize("mu", sorted(SWITCHED))
def test_switch_outputs(fig10, mu):
    U = switch(fig10, mu)
    assert U.phys_col == SWITCHED[mu]
    assert phi(U) == phi(fig10)


def test_switch_to_own_mu_is_identity(fig10):
    assert switch(fig10, signature(fig10).mu) == fig10


def test_switch_rejects_bad_vector(fig10):
    with pytest.raises(PreconditionViolated):
        switch(fig10, (1,))


def test_mute_outputs(fig10):
    beta = mute(fig10, 3, BETA)
    assert beta.phys_col == SWITCHED[(1, 1)]
    alpha = mute(fig10, 3, ALPHA)
    assert alpha.phys_col == (1, 2, 1, 3, 5, 4, 4, 7, 6, 3, 2, 6, 5, 7)
    assert phi(alpha) == phi(beta) == phi(fig10)
    assert is_tilde(alpha)


def test_mute_requires_twin_column(fig10):
    with pytest.raises(PreconditionViolated):
        mute(fig10, 1, ALPHA)


def test_fiber_of_smallest_pistols():
    assert fiber(make_pistol(1, [2, 2])) == fiber(make_pistol(1, [2, 2]), mode="brute")
    rep = fiber_sum_check(make_pistol(2, [2, 2, 4, 4]))
    assert rep.passed and rep.expected == 2


def test_fiber_rejects_unknown_mode():
    with pytest.raises(ValueError):
        fiber(make_pistol(1, [2, 2]), mode="guess")


def test_running_example_fiber_identity(f1):
    rep = fiber_sum_check(f1)
    assert rep.passed
    assert rep.expected == 2 ** ndf(f1) == 64


@settings(max_examples=40, deadline=None)
@given(pistol_st(4))
def test_closure_equals_brute_force(f):
    members = fiber(f)
    assert members == fiber(f, mode="brute")
    assert sum(2 ** fr(T) for T in members) == 2 ** ndf(f)
    assert Phi(f) in members


@settings(max_examples=60, deadline=None)
@given(tableau_st(5))
def test_moves_stay_in_fiber(T):
    f = phi(T)
    for U in neighbours(T):
        assert phi(U) == f


@settings(max_examples=60, deadline=None)
@given(tableau_st(5))
def test_tilde_iff_built_by_Phi(T):
    assert is_tilde(T) == (Phi(phi(T)) == T)
