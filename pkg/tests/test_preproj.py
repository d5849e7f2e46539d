from itertools import product

import numpy as np
import pytest

from quotient_closed.errors import NotReduced
from quotient_closed.leftmost import category_of
from quotient_closed.preproj import (C_of, C_of_quotient, expected_dimension, ideal_contains,
                                     ideal_Ii, ideal_Iw, ideal_of, is_two_sided, multiply_ideals,
                                     preprojective_algebra, regular_rep, restrict_to_kQ,
                                     verify_duality)
from quotient_closed.quiver import builtin
from quotient_closed.repkit import catalogue, complement, decompose
from quotient_closed.weyl import (all_reduced_words, bruhat_leq, enumerate_group,
                                  longest_element, weyl_group)

S1, P2, S2 = (1, 0), (1, 1), (0, 1)


@pytest.fixture(scope="module")
def pi2():
    return preprojective_algebra(builtin("A2"))


@pytest.fixture(scope="module")
def pi3():
    return preprojective_algebra(builtin("A3"))


@pytest.mark.parametrize("name,dim", [("A1", 1), ("A2", 4), ("A3", 10), ("A4", 20), ("D4", 28)])
def test_dimension(name, dim):
    q = builtin(name)
    assert expected_dimension(q) == dim
    assert preprojective_algebra(q).dim == dim


def test_a2_grading(pi2):
    assert pi2.graded_dims() == [2, 2]


def test_associative_with_unit(pi3):
    rng = np.random.default_rng(1)
    one = pi3.one()
    for _ in range(20):
        x, y, z = (rng.integers(0, pi3.p, pi3.dim) for _ in range(3))
        assert np.array_equal(pi3.mul(pi3.mul(x, y), z), pi3.mul(x, pi3.mul(y, z)))
        assert np.array_equal(pi3.mul(one, x) % pi3.p, x % pi3.p)
        assert np.array_equal(pi3.mul(x, one) % pi3.p, x % pi3.p)


def _arrow(pi, m):
    """Basis vector of doubled arrow ``m`` (``m >= #arrows`` are the starred ones)."""
    for a, (_, _, mono) in enumerate(pi.basis):
        if mono == (m,):
            return pi.unit(a)
    raise KeyError(m)


@pytest.mark.parametrize("name", ["A3", "D4"])
def test_mesh_relation_vanishes(name):
    pi = preprojective_algebra(builtin(name))
    n_arrows = len(pi.quiver.arrows)
    for v in range(1, pi.quiver.n + 1):
        total = np.zeros(pi.dim, dtype=np.int64)
        for m, (i, j) in enumerate(pi.quiver.arrows):
            a, astar = _arrow(pi, m), _arrow(pi, m + n_arrows)
            if j == v:
                total += pi.mul(a, astar)
            if i == v:
                total -= pi.mul(astar, a)
        assert not (total % pi.p).any()


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_Ii_has_codimension_one_and_is_idempotent(name):
    pi = preprojective_algebra(builtin(name))
    for i in range(1, pi.quiver.n + 1):
        ideal = ideal_Ii(pi, i)
        assert ideal.dim == pi.dim - 1
        assert is_two_sided(pi, ideal)
        assert multiply_ideals(pi, ideal, ideal) == ideal


def test_Iw_examples(pi2, pi3):
    w0 = longest_element(pi2.quiver)
    assert ideal_of(pi2, w0).dim == 0
    assert ideal_of(pi2, weyl_group(pi2.quiver).identity).dim == pi2.dim
    with pytest.raises(NotReduced):
        ideal_Iw(pi3, (1, 1))


def test_Iw_is_two_sided(pi3):
    for w in enumerate_group(pi3.quiver):
        assert is_two_sided(pi3, ideal_of(pi3, w))


def test_Iw_independent_of_reduced_word(pi3):
    for w in enumerate_group(pi3.quiver):
        ideals = {_key(ideal_Iw(pi3, word, use_cache=False)) for word in all_reduced_words(w)}
        assert len(ideals) == 1


def _key(space):
    return space.basis.tobytes(), space.basis.shape


def test_regular_rep_decomposition(pi2, pi3):
    assert decompose(regular_rep(pi2)) == {S1: 1, P2: 1, S2: 1}
    cat = catalogue(pi3.quiver)
    assert set(decompose(regular_rep(pi3))) == cat.full


def test_restriction_of_zero_and_full(pi2):
    assert restrict_to_kQ(pi2, pi2.zero()).total_dim == 0
    assert restrict_to_kQ(pi2, pi2.zero(), quotient=True).dim == regular_rep(pi2).dim


def test_C_of_examples(pi2, pi3, ev):
    g2 = weyl_group(pi2.quiver)
    assert C_of(pi2, g2.identity) == catalogue(pi2.quiver).full
    assert C_of(pi2, longest_element(pi2.quiver)) == frozenset()
    assert C_of_quotient(pi2, g2.identity) == frozenset()
    assert C_of_quotient(pi2, longest_element(pi2.quiver)) == catalogue(pi2.quiver).full
    assert C_of_quotient(pi2, ev(pi2.quiver, "1")) == {S1}
    w = ev(pi3.quiver, "1 2 3 2")
    cat = catalogue(pi3.quiver)
    assert C_of(pi3, w) == complement(cat, category_of(w).missing)


def test_duality_a2(pi2):
    assert all(verify_duality(pi2, w) for w in enumerate_group(pi2.quiver))


def test_containment_examples(pi2, ev):
    a2 = pi2.quiver
    assert ideal_contains(pi2, ev(a2, "1"), ev(a2, "1 2"))
    assert not ideal_contains(pi2, ev(a2, "1"), ev(a2, "2"))


def test_containment_is_bruhat_a2(pi2):
    group = enumerate_group(pi2.quiver)
    for v, w in product(group, repeat=2):
        assert ideal_contains(pi2, v, w) == bruhat_leq(v, w)


def test_field_independence_a2():
    a, b = preprojective_algebra(builtin("A2"), 3), preprojective_algebra(builtin("A2"), 5)
    assert a.graded_dims() == b.graded_dims()
    for w in enumerate_group(a.quiver):
        assert ideal_of(a, w).dim == ideal_of(b, w).dim
        assert C_of(a, w) == C_of(b, w)
