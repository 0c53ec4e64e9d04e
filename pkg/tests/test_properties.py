"""Cross-module properties on random group elements and matrices."""

from hypothesis import given
from hypothesis import strategies as st

from cellkit.coset_matrices import enumerate_Pi, length_formula, sigma, sigma_greene_oracle, special_key, y_of_matrix
from cellkit.signed_perm import enumerate_group, inverse, length, longest_element
from cellkit.symbols import approx_equal, is_special_symbol, symbol_from_partition
from cellkit.tableaux import conjugate, is_special, pt_shape

elements = st.integers(1, 4).flatmap(lambda d: st.sampled_from(enumerate_group(d)))
kinds = st.sampled_from(["B", "C"])
j_matrices = st.integers(1, 3).flatmap(lambda d: st.sampled_from(enumerate_Pi(3, d, "j")))
i_matrices = st.integers(1, 3).flatmap(lambda d: st.sampled_from(enumerate_Pi(4, d, "i")))


@given(elements, kinds)
def test_shape_of_inverse(w, kind):
    assert pt_shape(inverse(w), kind) == pt_shape(w, kind)


@given(elements, kinds)
def test_longest_element_conjugates_shape(w, kind):
    w0 = longest_element(w.d)
    assert pt_shape(w0 * w, kind) == conjugate(pt_shape(w, kind))


@given(elements, kinds)
def test_shape_has_a_symbol(w, kind):
    s = symbol_from_partition(pt_shape(w, kind), kind)
    assert s.rank == w.d


@given(st.one_of(j_matrices, i_matrices))
def test_sigma_agrees_with_chains(a):
    assert sigma(a) == sigma_greene_oracle(a)


@given(st.one_of(j_matrices, i_matrices))
def test_transpose_keeps_sigma(a):
    assert sigma(a.transpose()) == sigma(a)


@given(st.one_of(j_matrices, i_matrices))
def test_length_formula(a):
    assert length(y_of_matrix(a)) == length_formula(a)


@given(j_matrices)
def test_special_key_is_special_and_similar(a):
    key = special_key(sigma(a), "j")
    assert is_special(key, "B")
    assert special_key(key, "j") == key
    s, t = symbol_from_partition(sigma(a), "B"), symbol_from_partition(key, "B")
    assert approx_equal(s, t) and is_special_symbol(t)
