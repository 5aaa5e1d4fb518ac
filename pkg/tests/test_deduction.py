import pytest

from monoidvar.deduction import (Caps, direct_deductions, fic_class, free_rees_quotient,
                                 isoterm_basis, isoterm_monoid, member, orbit, rearrangements)
from monoidvar.families import BETA, variety_basis
from monoidvar.identities import identity
from monoidvar.monoids import factor_monoid, satisfies, satisfies_basis, trivial_monoid
from monoidvar.words import EMPTY, word

A = variety_basis("A")
X2Y = identity("x^2 y = y x^2")


def fm(*ws):
    return factor_monoid([word(w) for w in ws])


def test_direct_deductions():
    assert word("y x^2") in direct_deductions(word("x^2 y"), X2Y)
    assert direct_deductions(word("x y x"), X2Y) == {word("x y x")}
    assert word("x z y x t y") in direct_deductions(word("x z x y t y"), BETA)


def test_direct_deductions_symmetric():
    for u in ("x y x y", "x^2 y x", "y x^2 y"):
        assert direct_deductions(word(u), X2Y) == direct_deductions(word(u), X2Y.swap())


def test_free_letters_inserted_within_bound():
    out = direct_deductions(word("x"), identity("x = 1"), max_len=2)
    assert EMPTY in out and word("x x") in out
    assert all(len(w) <= 2 for w in out)


def test_orbit_examples():
    o = orbit(word("x^2 y"), [X2Y])
    assert o.words == {word("x^2 y"), word("y x^2")} and o.closed
    o = orbit(word("x y x"), [X2Y])
    assert o.words == {word("x y x")} and o.closed
    o = orbit(word("x"), [])
    assert o.words == {word("x")} and o.closed


def test_orbit_caps():
    o = orbit(word("x^2"), [identity("x^2 = x^3")], Caps(max_word_length=4))
    assert not o.closed and o.words == {word("x^2"), word("x^3"), word("x^4")}
    o = orbit(word("x y z t"), [identity("x y = y x")], Caps(max_orbit_size=5))
    assert not o.closed and len(o) == 5


def test_fic_class():
    assert fic_class(word("x^2 y"), A).words == {word("x^2 y"), word("y x^2")}
    assert fic_class(word("x y"), []).words == {word("x y")}


def test_isoterm_basis():
    assert isoterm_basis(word("x y x"), A).is_holds
    v = isoterm_basis(word("x y"), [identity("x y = y x")])
    assert v.is_fails and v.witness == identity("x y = y x")
    assert isoterm_basis(word("x"), [identity("x^2 = x^3")]).is_holds
    assert isoterm_basis(word("x y z"), variety_basis("P", 2)).is_unknown


def test_isoterm_monoid():
    v = isoterm_monoid(word("x y x"), fm("x y"))
    assert v.is_fails and v.witness == identity("x y x = x x y")
    assert satisfies(fm("x y"), v.witness).is_holds
    # pinned-down letter counts make these decisive
    assert isoterm_monoid(word("x y"), fm("x y")).is_holds
    assert isoterm_monoid(word("x"), fm("x y")).is_holds
    assert isoterm_monoid(word("x"), trivial_monoid()).is_fails
    assert isoterm_monoid(EMPTY, trivial_monoid()).is_fails


def test_isoterm_monoid_sweep_unknown():
    # powers in {1, 0} cannot pin x^2, so only a bounded sweep is possible
    v = isoterm_monoid(word("x^2 y"), fm("1"), Caps(max_candidate_length=3))
    assert v.is_fails  # x^2 y = x y holds in the semilattice
    v = isoterm_monoid(word("x^2"), fm("x y"), Caps(max_candidate_length=1))
    assert v.is_unknown and "no witness" in v.reason


def test_rearrangements():
    rs = list(rearrangements(word("x y x")))
    assert rs == [word("x x y"), word("x y x"), word("y x x")]
    assert list(rearrangements(EMPTY)) == [EMPTY]


def test_member():
    assert member([word("x y x")], A).is_holds
    assert member([word("x y x")], fm("x y")).is_fails
    assert member([word("x y")], [identity("x y = y x")]).is_fails


@pytest.mark.parametrize("W", [["x y"], ["x y x"], ["x^2 y"], ["x y", "x^2"], ["x z x y t y"]])
@pytest.mark.parametrize("basis", ["A", "N", "SL", "T"])
def test_member_agrees_with_satisfaction(W, basis):
    B = variety_basis(basis)
    Ws = [word(w) for w in W]
    a, b = member(Ws, B), satisfies_basis(factor_monoid(Ws), B)
    assert not {a.outcome, b.outcome} >= {a.outcome.HOLDS, a.outcome.FAILS}
    if a.decisive and b.decisive:
        assert a.outcome == b.outcome


def test_free_rees_quotient_countermodel():
    N = variety_basis("N")
    S = free_rees_quotient([word("x y z x y")], N)
    assert S is not None and S.is_associative()
    assert satisfies_basis(S, N).is_holds
    assert satisfies(S, identity("x y z x y = y x z x y")).is_fails
    assert free_rees_quotient([word("x^2")], [identity("x^2 = x^3")]) is None
