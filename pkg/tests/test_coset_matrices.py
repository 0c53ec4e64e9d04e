import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cellkit.coset_matrices import (
    Composition,
    CosetMatrix,
    enumerate_compositions,
    enumerate_Pi,
    greene_numbers,
    intervals,
    length_formula,
    matrix_from_json,
    matrix_of_triple,
    matrix_to_json,
    parabolic_generators,
    pseudo_matrix,
    sigma,
    sigma_greene_oracle,
    special_key,
    two_sided_classify,
    y_of_matrix,
)
from cellkit.errors import ParityError, ResourceLimitError
from cellkit.signed_perm import enumerate_group, inverse, length
from cellkit.tableaux import enumerate_special


def M(kind, *rows):
    return CosetMatrix(kind, rows)


def test_validation():
    with pytest.raises(ValueError):
        M("j", (1, 0, 0), (0, 1, 0), (0, 1, 1))
    with pytest.raises(ParityError):
        M("j", (1, 0, 0), (0, 0, 0), (0, 0, 1))
    with pytest.raises(ParityError):
        M("i", (1, 0, 0), (0, 1, 0), (0, 0, 1))
    with pytest.raises(ValueError):
        Composition("j", (1, 2, 2))


def test_counts():
    assert len(enumerate_Pi(3, 2, "j")) == 15
    assert len(enumerate_Pi(2, 2, "i")) == 3
    assert len(enumerate_Pi(2, 3, "i")) == 4
    with pytest.raises(ParityError):
        enumerate_Pi(2, 1, "j")


def test_compositions_and_generators():
    comps = {c.parts: parabolic_generators(c) for c in enumerate_compositions(3, 2, "j")}
    assert comps[(0, 5, 0)] == {0, 1}
    assert comps[(1, 3, 1)] == {0}
    assert comps[(2, 1, 2)] == {1}
    lam = Composition("j", (2, 3, 2))
    assert intervals(lam)[0].points() == [-1, 0, 1]
    assert intervals(lam)[1].points() == [2, 3]
    assert intervals(lam)[-1].points() == [-3, -2]


def test_worked_length_case():
    a = M("j", (1, 1, 0), (0, 1, 0), (0, 1, 1))
    assert a.ro().parts == (2, 1, 2) and a.co().parts == (1, 3, 1)
    assert length_formula(a) == 2 == length(y_of_matrix(a))


def test_pseudo_matrix_example():
    a = M("j", (2, 1, 1), (2, 3, 2), (1, 1, 2))
    cells = pseudo_matrix(a)
    assert cells[(-1, -1)] == (-4, -5)
    assert cells[(0, 0)] == (1, 0, -1)
    assert cells[(1, 1)] == (5, 4)
    assert sigma(a) == (9, 4, 2)
    assert greene_numbers(a) == (9, 13, 15)


def test_greene_limit():
    a = enumerate_Pi(5, 1, "j")[0]
    with pytest.raises(ResourceLimitError):
        greene_numbers(a)


def test_closed_form_two_by_two():
    for d in range(1, 9):
        for k in range(d + 1):
            a = M("i", (k, d - k), (d - k, k))
            assert sigma(a) == ((2 * d - k, k) if k else (2 * d,))


def test_two_sided_classify_example():
    classes = two_sided_classify(3, 2, "j")
    assert set(classes) == {(5,), (3, 1, 1)}
    assert len(classes[(3, 1, 1)]) == 6 and len(classes[(5,)]) == 9
    assert special_key((2, 2, 1), "j") == (3, 1, 1)
    assert special_key((3, 2), "j") == (3, 1, 1)


def test_json_round_trip():
    for a in enumerate_Pi(3, 2, "j") + enumerate_Pi(4, 2, "i"):
        assert matrix_from_json(matrix_to_json(a)) == a
    with pytest.raises(ValueError):
        matrix_from_json('{"kind": "i", "n": 4, "rows": [[2, 0], [0, 2]]}')


CASES = [(3, 1, "j"), (3, 2, "j"), (3, 3, "j"), (5, 2, "j"), (2, 2, "i"), (2, 3, "i"), (4, 2, "i")]


@pytest.mark.parametrize("n,d,kind", CASES)
def test_matrices_biject_with_double_cosets(n, d, kind):
    pi = set(enumerate_Pi(n, d, kind))
    comps = enumerate_compositions(n, d, kind)
    seen = set()
    for lam in comps:
        for mu in comps:
            for g in enumerate_group(d):
                a = matrix_of_triple(lam, g, mu)
                assert a.ro() == lam and a.co() == mu
                seen.add(a)
    assert seen == pi


@pytest.mark.parametrize("n,d,kind", CASES)
def test_y_lies_in_its_double_coset(n, d, kind):
    for a in enumerate_Pi(n, d, kind):
        y = y_of_matrix(a)
        assert matrix_of_triple(a.ro(), y, a.co()) == a
        assert length(y) == length_formula(a)


@pytest.mark.parametrize("n,d,kind", [(3, 2, "j"), (3, 3, "j"), (2, 3, "i"), (4, 2, "i")])
def test_sigma_matches_greene(n, d, kind):
    for a in enumerate_Pi(n, d, kind):
        assert sigma(a) == sigma_greene_oracle(a)


def test_sigma_image_covers_bounded_specials():
    for d in (1, 2, 3):
        keys = set(two_sided_classify(3, d, "j"))
        assert keys == set(enumerate_special(2 * d + 1, 3, "B"))
        keys = set(two_sided_classify(2, d, "i"))
        assert keys == set(enumerate_special(2 * d, 2, "C"))


@settings(max_examples=40)
@given(st.sampled_from(enumerate_Pi(3, 3, "j") + enumerate_Pi(4, 2, "i")))
def test_transpose_swaps_ro_and_co(a):
    t = a.transpose()
    assert t.ro() == a.co() and t.co() == a.ro()
    assert y_of_matrix(t) == inverse(y_of_matrix(a))
    assert length_formula(t) == length_formula(a)
