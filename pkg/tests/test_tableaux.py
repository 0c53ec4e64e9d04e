import pytest
from hypothesis import given
from hypothesis import strategies as st

from cellkit.errors import DuplicateEntryError, ParityError
from cellkit.signed_perm import embed_sym, enumerate_group, from_word, inverse, longest_element
from cellkit.symbols import is_symbol_partition
from cellkit.tableaux import (
    LabeledPartition,
    conjugate,
    count_semistandard_domino,
    count_standard_domino,
    count_standard_domino_by_labels,
    enumerate_special,
    in_orbit_set,
    is_special,
    is_standard,
    partition,
    partitions,
    pt_shape,
    pt_tableau,
    rs_insert,
    rs_tableau,
    shape,
)


def test_rs_insert_examples():
    assert rs_insert((), 5) == ((5,),)
    assert rs_insert(((5,),), 3) == ((5, 3),)
    assert rs_insert(((5, 3),), 7) == ((7, 3), (5,))
    with pytest.raises(DuplicateEntryError):
        rs_insert(((5, 3),), 3)


def test_pt_shape_examples():
    assert pt_shape(from_word(2, []), "C") == (1, 1, 1, 1)
    assert pt_shape(from_word(2, [0]), "C") == (2, 1, 1)
    assert pt_shape(from_word(2, [1]), "C") == (2, 2)


def test_pt_shape_of_worked_permutation():
    values = [7, 3, 2, -4, -5, 6, 1, 0, -1, -6, 5, 4, -2, -3, -7]
    image = dict(zip(range(-7, 8), values))
    from cellkit.signed_perm import SignedPermutation

    y = SignedPermutation(tuple(image[i] for i in range(1, 8)))
    assert pt_shape(y, "B") == (9, 4, 2)


def test_conjugate():
    assert conjugate((5,)) == (1, 1, 1, 1, 1)
    assert conjugate((3, 1, 1)) == (3, 1, 1)
    assert conjugate((2, 2)) == (2, 2)


def test_is_special_examples():
    assert is_special((3, 1, 1), "B")
    assert not is_special((2, 2, 1), "B")
    assert is_special((4,), "C")
    assert not is_special((3, 1), "C")
    with pytest.raises(ParityError):
        is_special((2, 2), "B")
    with pytest.raises(ParityError):
        is_special((3,), "C")


def test_enumerate_special_examples():
    assert enumerate_special(5, 3, "B") == [(5,), (3, 1, 1)]
    assert enumerate_special(5, None, "B") == [(5,), (3, 1, 1), (1, 1, 1, 1, 1)]
    assert enumerate_special(6, 2, "C") == [(6,), (4, 2), (3, 3)]
    for d in (2, 4, 6, 8):
        expected = [(2 * d - 2 * k, 2 * k) if k else (2 * d,) for k in range(d // 2 + 1)]
        assert enumerate_special(2 * d, 2, "C") == expected


def test_enumerate_special_type_D_labels():
    found = enumerate_special(4, None, "D")
    assert LabeledPartition((2, 2), "I") in found and LabeledPartition((2, 2), "II") in found
    assert found.count(LabeledPartition((3, 1))) == 1
    assert LabeledPartition((2, 2), "I").to_json() == {"parts": [2, 2], "label": "I"}
    assert LabeledPartition((3, 1)).to_json() == [3, 1]
    with pytest.raises(ValueError):
        LabeledPartition((3, 1), "I")


def test_domino_counts():
    assert count_standard_domino((1,)) == 1
    assert count_standard_domino((5,)) == 1
    assert count_standard_domino((3, 1, 1)) == 2
    assert count_standard_domino((1, 1, 1, 1, 1)) == 1
    assert count_standard_domino((2, 1)) == 0


def test_semistandard_domino_counts():
    assert count_semistandard_domino((1,), 3, True) == 1
    assert count_semistandard_domino((5,), 2, True) == 3
    assert count_semistandard_domino((2, 2), 1, False) == 1
    assert count_semistandard_domino((3, 1, 1), 2, True) == 2


def test_standard_domino_chain_count_matches_label_search():
    for size in range(1, 9):
        for p in partitions(size):
            assert count_standard_domino(p) == count_standard_domino_by_labels(p), p


def test_partition_helpers():
    assert partition([0, 1, 3, 0, 2]) == (3, 2, 1)
    with pytest.raises(ValueError):
        partition([-1])
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert in_orbit_set((2, 2, 1), "B") and not in_orbit_set((2, 1, 1, 1), "B")


@given(st.integers(1, 3).flatmap(lambda d: st.sampled_from(enumerate_group(d))), st.sampled_from(["B", "C"]))
def test_rs_symmetry(w, kind):
    assert shape(pt_tableau(w, kind)) == shape(pt_tableau(inverse(w), kind))


def test_rs_symmetry_exhaustive():
    for d in (1, 2, 3):
        for w in enumerate_group(d):
            for kind in ("B", "C"):
                assert pt_shape(w, kind) == pt_shape(inverse(w), kind)


def test_identity_and_longest_shapes():
    for d in range(1, 6):
        e = from_word(d, [])
        w0 = longest_element(d)
        assert pt_shape(e, "B") == (1,) * (2 * d + 1)
        assert pt_shape(e, "C") == (1,) * (2 * d)
        assert pt_shape(w0, "B") == (2 * d + 1,)
        assert pt_shape(w0, "C") == (2 * d,)


def test_shapes_are_symbol_partitions():
    for d in (1, 2, 3):
        for w in enumerate_group(d):
            assert is_symbol_partition(pt_shape(w, "B"), "B")
            assert is_symbol_partition(pt_shape(w, "C"), "C")


@given(st.permutations(list(range(1, 9))))
def test_insertion_gives_standard_decreasing_tableau(seq):
    t = ()
    for k, value in enumerate(seq, start=1):
        t = rs_insert(t, value)
        assert sum(shape(t)) == k
    assert is_standard(t)
    assert all(row[j] > row[j + 1] for row in t for j in range(len(row) - 1))


@given(st.integers(1, 12).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_conjugate_involution(p):
    assert conjugate(conjugate(p)) == p


@given(st.integers(0, 6).map(lambda d: 2 * d + 1).flatmap(lambda n: st.sampled_from(list(partitions(n)))))
def test_special_B_definition(p):
    assert is_special(p, "B") == (in_orbit_set(p, "B") and in_orbit_set(conjugate(p), "B"))


def test_embed_then_insert_is_pt_tableau():
    w = from_word(3, [0, 1, 2, 0])
    assert pt_tableau(w, "B") == rs_tableau(embed_sym(w, "B"))
