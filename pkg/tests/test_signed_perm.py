from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cellkit.errors import InvalidGeneratorError, RankMismatchError, ResourceLimitError
from cellkit.signed_perm import (
    SignedPermutation,
    bruhat_leq,
    compose,
    descents,
    embed_sym,
    enumerate_group,
    format_word,
    from_word,
    generated_subgroup,
    in_type_D,
    inverse,
    length,
    longest_element,
    parse_window,
    parse_word,
    reduced_word,
    weight_a,
)


def W(*window):
    return SignedPermutation(window)


def words(d, max_len=8):
    return st.lists(st.integers(0, d - 1), max_size=max_len).map(lambda w: from_word(d, w))


def elements(max_d=4):
    return st.integers(1, max_d).flatmap(lambda d: words(d))


def test_from_word_generators():
    assert from_word(2, []) == W(1, 2)
    assert from_word(2, [0]) == W(-1, 2)
    assert from_word(2, [1]) == W(2, 1)


def test_from_word_rejects_bad_letter():
    with pytest.raises(InvalidGeneratorError):
        from_word(2, [2])


def test_compose_and_inverse():
    s0, s1 = from_word(2, [0]), from_word(2, [1])
    assert compose(s0, s0).is_identity()
    assert inverse(W(2, -1)) == W(-2, 1)
    assert compose(s1, s0) == W(-2, 1) == from_word(2, [1, 0])


def test_compose_rank_mismatch():
    with pytest.raises(RankMismatchError):
        compose(W(1), W(1, 2))


def test_rejects_bad_window():
    with pytest.raises(ValueError):
        W(1, 1)
    with pytest.raises(ValueError):
        W(1, 3)


def test_lengths():
    assert length(W(1, 2)) == 0
    assert length(from_word(2, [0, 1, 0, 1])) == 4
    assert length(from_word(2, [1, 0])) == 2
    assert length(longest_element(3)) == 9


def test_weight_a():
    assert weight_a(from_word(2, [0])) == 0
    assert weight_a(from_word(2, [1])) == 1
    assert weight_a(from_word(2, [0, 1, 0])) == 1


def test_bruhat_examples():
    d = 2
    e = SignedPermutation.identity(d)
    assert all(bruhat_leq(e, w) for w in enumerate_group(d))
    assert bruhat_leq(from_word(d, [1]), from_word(d, [0, 1]))
    assert not bruhat_leq(from_word(d, [0]), from_word(d, [1]))


def test_embed_sym():
    assert embed_sym(SignedPermutation.identity(2), "C") == (1, 2, 3, 4)
    assert embed_sym(from_word(2, [0]), "C") == (1, 3, 2, 4)
    assert embed_sym(SignedPermutation.identity(2), "B") == (1, 2, 3, 4, 5)


def test_type_D_and_descents():
    assert not in_type_D(from_word(2, [0]))
    assert in_type_D(from_word(2, [0, 1, 0]))
    assert from_word(2, [0, 1, 0]) == W(-2, -1)
    assert descents(from_word(2, [1, 0]), "right") == {0}
    assert descents(from_word(2, [1, 0]), "left") == {1}
    assert descents(from_word(2, [1, 0]), "right", "tilde") == frozenset()


def test_enumerate_group_sizes():
    assert len(enumerate_group(2)) == 8
    assert len(enumerate_group(3)) == 48
    assert len(enumerate_group(4, "D")) == 192
    with pytest.raises(ResourceLimitError):
        enumerate_group(6)


def test_generated_subgroup():
    assert generated_subgroup(2, [1]) == [W(1, 2), W(2, 1)]
    assert len(generated_subgroup(3, [0, 1, 2])) == 48
    assert len(generated_subgroup(3, [1, 2])) == 6


def test_text_forms():
    assert str(W(-2, 1)) == "[-2,1]"
    assert parse_window("[-2, 1]") == W(-2, 1)
    assert format_word((0, 1, 0)) == "s0 s1 s0"
    assert format_word(()) == "e"
    assert parse_word("s0 s1 s0") == (0, 1, 0)
    assert parse_word("e") == ()
    with pytest.raises(ValueError):
        parse_word("t1")


@given(elements())
def test_reduced_word_roundtrip(w):
    word = reduced_word(w)
    assert len(word) == length(w)
    assert from_word(w.d, word) == w


@given(elements())
def test_inverse_property(w):
    assert compose(w, inverse(w)).is_identity()
    assert length(inverse(w)) == length(w)


@given(st.integers(1, 4).flatmap(lambda d: st.tuples(words(d), words(d))))
def test_weight_a_additive_on_reduced_products(pair):
    x, y = pair
    if length(x * y) == length(x) + length(y):
        assert weight_a(x * y) == weight_a(x) + weight_a(y)


def test_bruhat_partial_order_refines_length():
    group = enumerate_group(3)
    for x, y in product(group, repeat=2):
        if bruhat_leq(x, y):
            assert length(x) <= length(y)
            if bruhat_leq(y, x):
                assert x == y


def _covering_closure(d):
    # x < x t for reflections t with length going up generates Bruhat order
    group = enumerate_group(d)
    gens = [from_word(d, [i]) for i in range(d)]
    reflections = {w * s * inverse(w) for w in group for s in gens}
    below = {w: {w} for w in group}
    for w in sorted(group, key=length):
        for t in reflections:
            u = w * t
            if length(u) < length(w):
                below[w] |= below[u]
    return below


def test_bruhat_matches_reflection_closure():
    for d in (2, 3):
        below = _covering_closure(d)
        group = enumerate_group(d)
        for x, y in product(group, repeat=2):
            assert bruhat_leq(x, y) == (x in below[y])


def test_type_D_is_a_subgroup_generated_by_the_embedding():
    for d in (2, 3, 4):
        members = set(enumerate_group(d, "D"))
        gens = [from_word(d, [0, 1, 0])] + [from_word(d, [i]) for i in range(1, d)]
        reached = {SignedPermutation.identity(d)}
        frontier = list(reached)
        while frontier:
            frontier = [w * g for w in frontier for g in gens if w * g not in reached]
            reached |= set(frontier)
        assert reached == members
        for x, y in product(list(members)[:20], enumerate_group(d)[:20]):
            assert in_type_D(x * y) == in_type_D(y)
