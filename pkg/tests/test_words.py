import pytest

from monoidvar.words import (EMPTY, Letter, Substitution, Word, analyze, apply_substitution,
                             decompose, delete, factor_at, factors, occurrence_position,
                             precedes, restrict, reverse, word)


def L(s):
    return Letter.parse(s)


def test_letter_parse_and_order():
    assert str(L("z12''")) == "z12''"
    assert L("x") < L("x1") < L("x1'") < L("x2") < L("y")
    with pytest.raises(ValueError):
        Letter("x1")
    with pytest.raises(ValueError):
        Letter("x", 1, 3)


def test_word_parse_powers_and_empty():
    assert word("x^2 y") == word("x x y")
    assert word("1") == EMPTY and str(EMPTY) == "1"
    assert len(word("z1 t1 x z1 x")) == 5
    with pytest.raises(ValueError):
        word("X")


def test_analyze():
    s = analyze(word("x y x"))
    assert s.content == {L("x"), L("y")}
    assert s.occ == {L("x"): 2, L("y"): 1}
    assert s.simple == {L("y")} and s.multiple == {L("x")}
    assert not s.is_linear
    s = analyze(word("x y s x z y t z"))
    assert s.simple == {L("s"), L("t")}
    assert s.multiple == {L("x"), L("y"), L("z")}
    e = analyze(EMPTY)
    assert e.content == frozenset() and not e.is_linear
    assert analyze(word("x y z")).is_linear


@pytest.mark.parametrize("w, seq, blocks", [
    ("x y s x z y t z", "s t", ["x y", "x z y", "z"]),
    ("x^2 y", "y", ["x x", "1"]),
    ("x y x", "y", ["x", "x"]),
])
def test_decompose(w, seq, blocks):
    d = decompose(word(w))
    assert d.simple_seq == word(seq).letters
    assert d.blocks == tuple(word(b) for b in blocks)
    assert d.assemble() == word(w)


def test_restrict_delete():
    w = word("x y s x z y t z")
    assert restrict(w, {L("x"), L("z"), L("s"), L("t")}) == word("x s x z t z")
    assert restrict(w, set()) == EMPTY
    assert delete(word("z1 t1 x z1 x"), L("x")) == word("z1 t1 z1")


def test_reverse():
    assert reverse(word("x y t x y")) == word("y x t y x")
    assert reverse(EMPTY) == EMPTY


def test_factors():
    assert factors(word("x y")) == {word("x"), word("y"), word("x y")}
    assert len(factors(word("x y x"))) == 5
    assert factor_at(word("x y z w"), 1, 2) == word("y z")
    with pytest.raises(IndexError):
        factor_at(word("x y"), 1, 2)


def test_occurrences():
    assert occurrence_position(word("x y x"), L("x"), 2) == 2
    assert precedes(word("x y x"), L("x"), 1, L("y"), 1)
    with pytest.raises(LookupError):
        occurrence_position(word("x y"), L("y"), 2)


def test_substitution():
    phi = Substitution({L("x"): word("y z")})
    assert phi(word("x t x")) == word("y z t y z")
    assert apply_substitution(Substitution({L("x"): EMPTY}), word("x^2 y")) == word("y")
    assert Substitution()(word("x y")) == word("x y")
