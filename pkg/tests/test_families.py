from itertools import product

import pytest

from monoidvar.families import (ParameterError, Perm, a_pq_word, a_word, all_perms, c_word,
                                d_word, delta, enum_nm_perms, insert_theta_qr, is_nm_perm,
                                lift_theta_prime, make_identity, make_word, pi_tau_perms,
                                v_st_word, v_xieta_word, variety_basis)
from monoidvar.identities import identity
from monoidvar.words import Letter, Word, delete, reverse, word


def P(*xs):
    return Perm(tuple(xs))


def test_enum_nm_perms_examples():
    assert set(enum_nm_perms(1, 1)) == set(all_perms(2))
    assert enum_nm_perms(2, 0) == []
    assert enum_nm_perms(2, 1) == [P(1, 3, 2), P(2, 3, 1)]


def test_enum_nm_perms_matches_filter():
    for total in range(7):
        for n in range(total + 1):
            m = total - n
            expect = sorted(r for r in all_perms(total) if is_nm_perm(r, n, m))
            assert enum_nm_perms(n, m) == expect


def test_lift_theta_prime():
    assert lift_theta_prime(P(1, 3, 2, 4), 2) == P(2, 6, 4, 8, 1, 5, 3, 7)
    with pytest.raises(ParameterError):
        lift_theta_prime(P(1, 2), 1)
    for k in (2, 3):
        thetas = [t for t in enum_nm_perms(k, k) if t(1) <= k]
        assert thetas
        for t in thetas:
            assert is_nm_perm(lift_theta_prime(t, k), k + 2, k + 2)


def test_insert_theta_qr():
    e = Perm.identity(1)
    assert insert_theta_qr(e, 1, 2) == P(2, 1)
    assert insert_theta_qr(e, 2, 2) == P(1, 2)
    with pytest.raises(ParameterError):
        insert_theta_qr(e, 3, 1)
    for p in range(5):
        for t in all_perms(p):
            for q, r in product(range(1, p + 2), repeat=2):
                out = insert_theta_qr(t, q, r)
                assert sorted(out.images) == list(range(1, p + 2)) and out(q) == r


def test_word_examples():
    assert a_word(1, 0) == word("z1 t1 x z1 x")
    assert a_word(0, 0) == word("x x") == a_word(0, 0, variant="prime")
    assert c_word(0, 0, 0) == word("x y t x y")
    assert d_word(0, 0, 0) == word("y x t y x")
    assert make_word("ahat", 1, 0) == word("z1 t1 z1")


def test_identity_examples():
    assert delta(2, 1) == identity("x t1 x t2 x = x^3 t1 t2")
    assert make_identity("named", "beta") == identity("x z x y t y = x z y x t y")
    assert delta(0, 3).trivial
    with pytest.raises(ParameterError):
        make_identity("named", "nope")


def test_family_relations_small_parameters():
    X = Letter("x")
    for n, m, k in product(range(3), repeat=3):
        for tau in all_perms(n + m + k):
            for v in ("plain", "prime"):
                assert d_word(n, m, k, tau, v) == reverse(c_word(n, m, k, tau, v))
    for n, m in product(range(3), repeat=2):
        for rho in all_perms(n + m):
            assert a_word(n, m, rho, "hat") == delete(a_word(n, m, rho), X)


def test_family_parameter_errors():
    with pytest.raises(ParameterError):
        a_word(1, 1, P(1, 2, 3))
    with pytest.raises(ParameterError):
        a_pq_word(1, 1, None, 2, 1)
    with pytest.raises(ParameterError):
        v_st_word(2, Perm.identity(4), 0, 0)


def test_apq_endpoints():
    rho = P(2, 1)
    assert a_pq_word(1, 1, rho, 0, 2) == a_word(1, 1, rho)


def test_vst_is_renamed_a_pair_word():
    # v_{0,6n} has the shape of a_{3n,3n}: both x's around the whole middle
    n = 4
    xi = [t for t in enum_nm_perms(2, 2) if t(1) <= 2][0]
    rho = lift_theta_prime(xi, 2)
    w = v_st_word(n, rho, 0, 6 * n)
    assert w.occ(Letter("x")) == 2
    assert all(w.occ(a) in (1, 2) for a in w.content())
    assert len(w) == len(a_word(3 * n, 3 * n))


def test_vxe_words():
    pi, tau = pi_tau_perms(0, 0)
    assert pi == P(1, 2, 3) and tau == P(3, 2, 1)
    w = v_xieta_word(0, 0, P(1, 2), P(1, 2))
    assert len(w) == 44 and len(w.content()) == 27
    assert sum(1 for a in w.content() if w.occ(a) == 1) == 10
    with pytest.raises(ParameterError):
        v_xieta_word(0, 0, P(1, 2, 3), P(1, 2))


def test_bases():
    Q2 = variety_basis("Q", 2)
    assert set(Q2.finite_ids) == {identity("x^2 = x^3"), identity("x^2 y = y x^2"),
                                  identity("x^2 y = x y x")}
    assert len(variety_basis("N").finite_ids) == 5
    assert set(variety_basis("SL").finite_ids) == {identity("x^2 = x"), identity("x y = y x")}
    assert not Q2.truncated and variety_basis("P", 2).truncated
    D = variety_basis("dual:A")
    assert D.finite_ids == (identity("y x^2 = x^2 y"),)
    assert D.dual().name == "A"
    with pytest.raises(ParameterError):
        variety_basis("Z")


def test_instantiate_respects_bound():
    B = variety_basis("Aprime", bound=2)
    ids = B.instantiate()
    assert identity("x^2 y = y x^2") in ids
    assert all(not s.trivial for s in ids)
    assert len(ids) == len({frozenset((s.lhs, s.rhs)) for s in ids})
    assert len(variety_basis("Aprime", bound=3).instantiate()) > len(ids)


def test_perm_parse():
    assert Perm.parse("2,1") == P(2, 1)
    assert Perm.parse("e") == Perm(())
    with pytest.raises(ParameterError):
        Perm.parse("1,1")
    assert isinstance(make_word("c", 0, 0, 3, P(3, 2, 1)), Word)
