import pytest

from monoidvar.families import ALPHA, BETA, c_word, make_identity
from monoidvar.identities import (Identity, SearchCapExceeded, canonical_form, dual_identity,
                                  identity, inversion_distance, is_linear_balanced)
from monoidvar.words import word


def test_parse_and_trivial():
    s = identity("x^2 y = y x^2")
    assert s.lhs == word("x x y") and not s.trivial
    assert identity("x = x").trivial
    assert s.same_as(s.swap()) and not s.same_as(s.swap(), ordered=True)
    with pytest.raises(ValueError):
        identity("x y")


def test_canonical_form():
    assert canonical_form(identity("a b = b a")) == canonical_form(identity("x y = y x"))
    assert canonical_form(identity("z t x z x = x z x t z")) != \
        canonical_form(identity("x z x y t y = x z y x t y"))
    assert canonical_form(identity("x = x")) == canonical_form(identity("y = y"))


def test_dual_identity():
    assert dual_identity(identity("x^2 y = y x^2")) == identity("y x^2 = x^2 y")
    c, cp = c_word(0, 0, 0), c_word(0, 0, 0, variant="prime")
    assert dual_identity(Identity(c, cp)) == identity("y x t y x = y x t x y")
    s = identity("x = x")
    assert dual_identity(dual_identity(s)) == s


def test_linear_balanced():
    assert is_linear_balanced(ALPHA)
    assert is_linear_balanced(BETA)
    assert not is_linear_balanced(identity("x^2 y = y x^2"))
    # x and y are simple in both sides, and the simple sequences differ
    assert not is_linear_balanced(identity("x y = y x"))
    assert is_linear_balanced(make_identity("a_pair", 1, 1, None)) is False  # x twice in a block


def test_inversion_distance():
    u = word("x y x y")
    assert inversion_distance(u, u) == 0
    assert inversion_distance(u, word("y x x y")) == 1
    assert inversion_distance(word("x y"), word("y x")) is None
    assert inversion_distance(word("x y"), word("x x")) is None
    with pytest.raises(SearchCapExceeded):
        inversion_distance(word("x y z t x y z t"), word("t z y x t z y x"), node_cap=5)
