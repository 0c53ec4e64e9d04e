"""Cells of signed permutation groups, coset matrices, and Schur algebra cell classification."""
