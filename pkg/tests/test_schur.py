from functools import lru_cache

import pytest

from cellkit.coset_matrices import CosetMatrix, enumerate_Pi, length_formula, two_sided_classify, y_of_matrix
from cellkit.errors import ConventionError
from cellkit.hecke.laurent import LaurentPoly
from cellkit.hecke.schur import (
    SchurOracle,
    cell_key,
    classify_via_hecke,
    domino_comparison,
    hecke_left_cells_per_special,
    left_cell_count_via_R,
    left_cells_per_two_sided,
    matrix_kind,
    schur_structure_constant,
)
from cellkit.signed_perm import length
from cellkit.tableaux import count_standard_domino


@lru_cache(maxsize=None)
def oracle(n, d, kind):
    return SchurOracle(n, d, kind)


def test_matrix_kind():
    assert matrix_kind("i-tilde") == "i"
    with pytest.raises(ValueError):
        matrix_kind("k")


@pytest.mark.parametrize("n,d,kind", [(3, 1, "j"), (3, 2, "j"), (2, 2, "i"), (2, 2, "i-tilde"), (2, 3, "i-tilde")])
def test_longest_representatives(n, d, kind):
    o = oracle(n, d, kind)
    for a in o.matrices:
        assert o.longest[a] == y_of_matrix(a)
        assert length(o.longest[a]) == length_formula(a)


def test_identity_matrices_act_as_units():
    o = oracle(3, 2, "j")
    one = LaurentPoly.constant(1)
    diagonal = [a for a in o.matrices if all(a.rows[i][j] == 0 for i in range(3) for j in range(3) if i != j)]
    assert len(diagonal) == len({a.ro() for a in o.matrices})
    for e in diagonal:
        for b in o.matrices:
            if b.ro() == e.co():
                assert o.product(e, b) == {b: one}


def test_structure_constant_examples():
    a = CosetMatrix("i", ((1, 1), (1, 1)))
    e = CosetMatrix("i", ((2, 0), (0, 2)))
    assert schur_structure_constant(e, a, a, "i") == LaurentPoly.constant(1)
    assert schur_structure_constant(a, e, e, "i").is_zero()
    coeff = oracle(2, 2, "i").structure_constant(a, a, a)
    assert coeff.is_bar_invariant() and coeff.is_nonnegative()
    with pytest.raises(ValueError):
        schur_structure_constant(CosetMatrix("j", ((1, 0, 0), (0, 1, 0), (0, 0, 1))), e, e, "i-tilde")


@pytest.mark.parametrize("n,d,kind", [(3, 2, "j"), (2, 2, "i"), (2, 3, "i"), (2, 2, "i-tilde"), (2, 3, "i-tilde")])
def test_structure_constants_positive(n, d, kind):
    o = oracle(n, d, kind)
    for a in o.matrices:
        for b in o.matrices:
            for p in o.product(a, b).values():
                assert p.is_nonnegative() and p.is_bar_invariant()


@pytest.mark.parametrize("n,d,kind", [(3, 2, "j"), (2, 2, "i"), (2, 3, "i"), (2, 2, "i-tilde"), (3, 3, "j")])
def test_schur_cells_match_hecke_prediction(n, d, kind):
    o = oracle(n, d, kind)
    cells = o.cells()
    predicted = classify_via_hecke(n, d, kind, oracle=o)
    for side in ("left", "right", "two_sided"):
        assert cells.partition_of(side) == predicted[side]


@pytest.mark.parametrize("n,d,kind", [(3, 2, "j"), (3, 3, "j"), (2, 2, "i"), (2, 3, "i")])
def test_two_sided_cells_match_similarity_classes(n, d, kind):
    cells = oracle(n, d, kind).cells()
    classes = {frozenset(m) for m in two_sided_classify(n, d, matrix_kind(kind)).values()}
    assert cells.partition_of("two_sided") == classes


def test_tilde_cells_can_merge_classes():
    cells = oracle(2, 2, "i-tilde").cells()
    keys = {cell_key(c, "i-tilde") for c in cells.two_sided}
    assert all(isinstance(k, tuple) for k in keys)
    with pytest.raises(ConventionError):
        cell_key(frozenset(enumerate_Pi(2, 2, "i")), "i")


def test_left_counts_and_R_count():
    cells = oracle(3, 2, "j").cells()
    counts = left_cells_per_two_sided(cells, "j")
    assert counts == {(5,): 3, (3, 1, 1): 2}
    via_r = {k: v for k, v in left_cell_count_via_R(3, 2).items() if v}
    assert via_r == counts
    with pytest.raises(ValueError):
        left_cell_count_via_R(2, 2, "i")


@pytest.mark.parametrize("d", [1, 2, 3])
def test_hecke_left_cells_count_standard_dominoes(hecke_cell_data, d):
    counts = hecke_left_cells_per_special(d, hecke_cell_data(d, "equal"))
    assert counts == {key: count_standard_domino(key) for key in counts}


def test_domino_comparison_rows():
    rows = domino_comparison(3, 2, "j")
    assert {tuple(r["partition"]) for r in rows} == {(5,), (3, 1, 1)}
    assert all(set(r) == {"partition", "domino_count", "left_cells", "match"} for r in rows)


def test_whole_group_idempotent():
    a = CosetMatrix("j", ((0, 0, 0), (0, 5, 0), (0, 0, 0)))
    assert oracle(3, 2, "j").product(a, a) == {a: LaurentPoly.constant(1)}
