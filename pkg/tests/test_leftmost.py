from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quotient_closed.arquiver import PreprojIndex
from quotient_closed.errors import NotASubword, ZeroModuleHit
from quotient_closed.leftmost import (C_INFINITY, SubcategorySpec, c_infinity_prefix,
                                      category_of, element_of, is_leftmost, leftmost_positions,
                                      positions_to_indices, word_from_missing)
from quotient_closed.quiver import builtin
from quotient_closed.weyl import enumerate_group, evaluate_word, weak_leq_right, weyl_group


def brute_leftmost(q, base, target):
    """Lexicographically smallest position tuple giving a reduced occurrence."""
    t = target.length
    for positions in combinations(range(1, len(base) + 1), t):
        sub = [base[p - 1] for p in positions]
        if evaluate_word(q, sub) == target:
            return positions
    return None


def test_a3_intro_example(A3, ev):
    w = ev(A3, "1 2 3 2")
    assert leftmost_positions(w) == (1, 2, 3, 5)
    spec = category_of(w)
    assert [m.label() for m in spec.missing] == ["P1", "P2", "P3", "t^-1P2"]
    assert element_of(spec) == w


def test_triangle_example(triangle, ev):
    w = ev(triangle, "1 2 3 2 1")
    assert w.length == 5
    assert leftmost_positions(w) == (1, 2, 3, 5, 7)
    spec = category_of(w)
    assert spec.missing == (PreprojIndex(1, 0), PreprojIndex(2, 0), PreprojIndex(3, 0),
                            PreprojIndex(2, 1), PreprojIndex(1, 2))


def test_identity_is_empty(A3):
    e = weyl_group(A3).identity
    assert leftmost_positions(e) == ()
    assert category_of(e).missing == ()


def test_a1_examples(A1, ev):
    assert category_of(ev(A1, "1")).missing == (PreprojIndex(1, 0),)


@pytest.mark.parametrize("name", ["A2", "A3"])
def test_greedy_is_lexicographically_minimal(name):
    q = builtin(name)
    base = c_infinity_prefix(q, q.n + 1)
    for w in enumerate_group(q):
        assert leftmost_positions(w, base) == brute_leftmost(q, base, w)
        assert leftmost_positions(w) == leftmost_positions(w, base)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=8), st.lists(st.integers(1, 3), min_size=1, max_size=9))
def test_greedy_minimal_on_arbitrary_base_triangle(word, base):
    q = builtin("triangle")
    w = evaluate_word(q, word)
    expected = brute_leftmost(q, base, w)
    if expected is None:
        with pytest.raises(NotASubword):
            leftmost_positions(w, tuple(base))
    else:
        assert leftmost_positions(w, tuple(base)) == expected


def test_not_a_subword(A3, ev):
    with pytest.raises(NotASubword):
        leftmost_positions(ev(A3, "2 1"), (1, 2))


def test_missing_sets_grow_along_weak_order(A3):
    group = enumerate_group(A3)
    for v in group:
        for w in group:
            if weak_leq_right(v, w):
                assert set(category_of(v).missing) <= set(category_of(w).missing)


def test_is_leftmost(A3):
    base = (1, 2, 3, 1, 2, 3)
    assert is_leftmost(A3, base, (1, 2, 3, 5))
    # s1 s2 s3 occurs at positions 1, 2, 3 already
    assert not is_leftmost(A3, base, (4, 5, 6))
    assert not is_leftmost(A3, base, (1, 4))  # s1 s1 is not reduced
    assert not is_leftmost(A3, base, (4,))  # s1 already at position 1
    assert is_leftmost(A3, base, ())


def test_zero_module_hit(A2):
    # in A2 the preprojective component has 3 modules: P1, P2, t^-1P1
    with pytest.raises(ZeroModuleHit):
        positions_to_indices(A2, (4,))
    assert positions_to_indices(A2, (1, 2, 3)) == [PreprojIndex(1, 0), PreprojIndex(2, 0),
                                                   PreprojIndex(1, 1)]


def test_spec_requires_sorted_missing(A3):
    with pytest.raises(ValueError):
        SubcategorySpec(A3, (PreprojIndex(2, 1), PreprojIndex(1, 0)))
    with pytest.raises(ValueError):
        SubcategorySpec(A3, (PreprojIndex(1, 0), PreprojIndex(1, 0)))


@pytest.mark.parametrize("name", ["A2", "A3", "D4"])
def test_round_trip(name):
    q = builtin(name)
    seen = set()
    for w in enumerate_group(q):
        spec = category_of(w)
        assert len(spec.missing) == w.length
        assert evaluate_word(q, word_from_missing(spec)) == w
        seen.add(spec.missing)
    assert len(seen) == len(enumerate_group(q))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=10))
def test_round_trip_triangle(word):
    q = builtin("triangle")
    w = evaluate_word(q, word)
    spec = category_of(w)
    assert element_of(spec) == w


def test_alternate_coxeter_word(A3, ev):
    w = ev(A3, "2 1")
    assert leftmost_positions(w, C_INFINITY, cword=(3, 2, 1)) == (2, 3)
