"""Schur-algebra structure constants from Hecke ones, and the resulting cells.

For matrices ``A, B, C`` with ``co(A) = ro(B) = mu``, ``ro(C) = ro(A)`` and
``co(C) = co(B)``:

    pi(J_mu) * g_{A,B}^C = h_{wA, wB}^{wC},     pi(J_mu) = q^-L(w_mu) sum_{w in W_mu} q^(2 L(w))

where ``wA`` is the longest element of the double coset of ``A``.  The division
is required to be exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, Optional

import numpy as np

from cellkit.coset_matrices import (
    Composition,
    CosetMatrix,
    MatrixKind,
    enumerate_compositions,
    enumerate_Pi,
    matrix_of_triple,
    parabolic_generators,
    sigma,
    special_key,
)
from cellkit.errors import ConventionError
from cellkit.hecke.algebra import HeckeAlgebra, OracleConfig, WeightFunction
from cellkit.hecke.cells import CellDecomposition, Side, decompose, hecke_cells
from cellkit.hecke.laurent import LaurentPoly
from cellkit.signed_perm import (
    SignedPermutation,
    descents,
    enumerate_group,
    generated_subgroup,
    length,
)
from cellkit.tableaux import Partition, count_semistandard_domino, pt_shape

SchurKind = Literal["j", "i", "i-tilde"]


def matrix_kind(kind: SchurKind) -> MatrixKind:
    if kind not in ("j", "i", "i-tilde"):
        raise ValueError(f"unknown Schur kind {kind!r}")
    return "j" if kind == "j" else "i"


def schur_weight(kind: SchurKind, d: int) -> WeightFunction:
    return WeightFunction.ell_a(d) if kind == "i-tilde" else WeightFunction.equal(d)


def parabolic_subgroup(lam: Composition) -> list[SignedPermutation]:
    return generated_subgroup(lam.d, parabolic_generators(lam))


@dataclass(frozen=True)
class DoubleCoset:
    lam: Composition
    mu: Composition
    elements: frozenset[SignedPermutation]
    shortest: SignedPermutation
    longest: SignedPermutation

    @property
    def matrix(self) -> CosetMatrix:
        return matrix_of_triple(self.lam, self.longest, self.mu)


def double_coset_data(lam: Composition, mu: Composition) -> list[DoubleCoset]:
    """Partition W(B_d) into ``W_lam \\ W / W_mu`` orbits by brute force."""
    if lam.d != mu.d:
        raise ValueError("compositions must have the same rank")
    left, right = parabolic_subgroup(lam), parabolic_subgroup(mu)
    seen: set[SignedPermutation] = set()
    out = []
    for g in enumerate_group(lam.d):
        if g in seen:
            continue
        orbit = frozenset(a * g * b for a in left for b in right)
        seen |= orbit
        ranked = sorted(orbit, key=lambda w: (length(w), w.window))
        if len(ranked) > 1 and length(ranked[-1]) == length(ranked[-2]):
            raise ConventionError(f"double coset of {g} has no unique longest element")
        out.append(DoubleCoset(lam, mu, orbit, ranked[0], ranked[-1]))
    return out


def pi_J(mu: Composition, weight: WeightFunction) -> LaurentPoly:
    group = parabolic_subgroup(mu)
    lengths = [weight.of(w) for w in group]
    top = max(lengths)
    return LaurentPoly(tuple((2 * v - top, 1) for v in lengths))


class SchurOracle:
    """Structure constants and cells of the Schur algebra attached to (n, d, kind)."""

    def __init__(self, n: int, d: int, kind: SchurKind, config: OracleConfig = OracleConfig()) -> None:
        self.n, self.d, self.kind = n, d, kind
        self.mkind = matrix_kind(kind)
        self.matrices = enumerate_Pi(n, d, self.mkind)
        self.algebra = HeckeAlgebra(d, schur_weight(kind, d), config)
        comps = enumerate_compositions(n, d, self.mkind)
        self.longest: dict[CosetMatrix, SignedPermutation] = {}
        for lam in comps:
            for mu in comps:
                for coset in double_coset_data(lam, mu):
                    self.longest[coset.matrix] = coset.longest
        missing = [a for a in self.matrices if a not in self.longest]
        if missing or len(self.longest) != len(self.matrices):
            raise ConventionError("double cosets and matrices are not in bijection")
        self.pi = {mu: pi_J(mu, self.algebra.weight) for mu in comps}
        self._rows: dict[tuple[int, int], np.ndarray] = {}

    def _hecke_row(self, x: SignedPermutation, y: SignedPermutation) -> np.ndarray:
        H = self.algebra
        key = (H.index[x], H.index[y])
        if key not in self._rows:
            if self.d <= H.config.table_max_rank:
                self._rows[key] = H.structure_table[key]
            else:
                self._rows[key] = H.to_kl(H.multiply(H.C(x), H.C(y)))
        return self._rows[key]

    def structure_constant(self, a: CosetMatrix, b: CosetMatrix, c: CosetMatrix) -> LaurentPoly:
        if a.co() != b.ro() or a.ro() != c.ro() or b.co() != c.co():
            return LaurentPoly()
        H = self.algebra
        row = self._hecke_row(self.longest[a], self.longest[b])
        h = LaurentPoly.from_dense(row[H.index[self.longest[c]]], H.E)
        return h.exact_div(self.pi[a.co()])

    def product(self, a: CosetMatrix, b: CosetMatrix) -> dict[CosetMatrix, LaurentPoly]:
        out = {}
        for c in self.matrices:
            g = self.structure_constant(a, b, c)
            if g:
                out[c] = g
        return out

    def cells(self) -> CellDecomposition[CosetMatrix]:
        index = {a: t for t, a in enumerate(self.matrices)}
        m = len(self.matrices)
        left_rel = np.zeros((m, m), dtype=bool)
        right_rel = np.zeros((m, m), dtype=bool)
        for a in self.matrices:
            for b in self.matrices:
                if a.co() != b.ro():
                    continue
                for c in self.product(a, b):
                    left_rel[index[b], index[c]] = True
                    right_rel[index[a], index[c]] = True
        return decompose(self.matrices, left_rel, right_rel)


def schur_structure_constant(
    a: CosetMatrix, b: CosetMatrix, c: CosetMatrix, kind: SchurKind = "j"
) -> LaurentPoly:
    if kind == "i-tilde" and a.kind != "i":
        raise ValueError("kind i-tilde uses kind i matrices")
    return SchurOracle(a.n, a.d, kind).structure_constant(a, b, c)


def schur_cells(n: int, d: int, kind: SchurKind, config: OracleConfig = OracleConfig()) -> CellDecomposition:
    return SchurOracle(n, d, kind, config).cells()


def classify_via_hecke(
    n: int,
    d: int,
    kind: SchurKind,
    hecke: Optional[CellDecomposition] = None,
    oracle: Optional[SchurOracle] = None,
) -> dict[Side, set[frozenset]]:
    """Matrix cells predicted from Hecke cells of the longest representatives:
    left cells need equal ``co`` and left-equivalent representatives, right cells
    equal ``ro`` and right-equivalent ones, two-sided cells two-sided-equivalent ones."""
    oracle = oracle or SchurOracle(n, d, kind)
    hecke = hecke or hecke_cells(d, oracle.algebra.weight, algebra=oracle.algebra)
    w = oracle.longest

    def group(same) -> set[frozenset]:
        classes: list[list[CosetMatrix]] = []
        for a in oracle.matrices:
            for cls in classes:
                if same(cls[0], a):
                    cls.append(a)
                    break
            else:
                classes.append([a])
        return {frozenset(c) for c in classes}

    return {
        "left": group(lambda a, b: a.co() == b.co() and hecke.same_cell(w[a], w[b], "left")),
        "right": group(lambda a, b: a.ro() == b.ro() and hecke.same_cell(w[a], w[b], "right")),
        "two_sided": group(lambda a, b: hecke.same_cell(w[a], w[b], "two_sided")),
    }


def cell_key(cell: frozenset, kind: SchurKind):
    """Special partition labelling a two-sided cell of matrices.

    Under the weight with ``L(s_0) = 0`` a cell may join several classes, so
    kind i-tilde gets the sorted tuple of all member keys instead.
    """
    mkind = matrix_kind(kind)
    keys = {special_key(sigma(a), mkind) for a in cell}
    if kind == "i-tilde":
        return tuple(sorted(keys, reverse=True))
    if len(keys) != 1:
        raise ConventionError(f"cell mixes special keys {sorted(keys)}")
    return keys.pop()


def left_cells_per_two_sided(cells: CellDecomposition, kind: SchurKind) -> dict:
    out = {}
    for two in cells.two_sided:
        out[cell_key(two, kind)] = sum(1 for left in cells.left if left <= two)
    return dict(sorted(out.items(), reverse=True))


def right_descent_set(cell: frozenset[SignedPermutation]) -> frozenset[int]:
    found = {descents(w, "right") for w in cell}
    if len(found) != 1:
        raise ConventionError("right descent sets differ inside a left cell")
    return found.pop()


def left_cell_count_via_R(
    n: int, d: int, kind: SchurKind = "j", hecke: Optional[CellDecomposition] = None
) -> dict[Partition, int]:
    """Per Hecke two-sided cell: the number of pairs (left cell G, composition lam)
    with every generator of ``W_lam`` a right descent of G."""
    if kind != "j":
        raise ValueError("left_cell_count_via_R is defined for kind j")
    hecke = hecke or hecke_cells(d, "equal")
    comps = enumerate_compositions(n, d, "j")
    gens = [parabolic_generators(lam) for lam in comps]
    out: dict[Partition, int] = {}
    for two in hecke.two_sided:
        key = special_key(pt_shape(next(iter(two)), "B"), "j")
        total = 0
        for left in hecke.left:
            if left <= two:
                descent = right_descent_set(left)
                total += sum(1 for g in gens if g <= descent)
        out[key] = total
    return dict(sorted(out.items(), reverse=True))


def hecke_left_cells_per_special(d: int, hecke: Optional[CellDecomposition] = None) -> dict[Partition, int]:
    """Number of left cells in each two-sided cell of the equal-parameter algebra,
    keyed by the special partition of 2d+1."""
    hecke = hecke or hecke_cells(d, "equal")
    out = {}
    for two in hecke.two_sided:
        key = special_key(pt_shape(next(iter(two)), "B"), "j")
        out[key] = sum(1 for left in hecke.left if left <= two)
    return dict(sorted(out.items(), reverse=True))


def domino_comparison(n: int, d: int, kind: Literal["j", "i"]) -> list[dict]:
    """Rows (special partition, semistandard domino count, Schur left-cell count).

    Kind j bounds domino entries by r+1 with the monomino entry 1 (n = 2r+1);
    kind i bounds them by r (n = 2r).
    """
    r = n // 2
    bound = r + 1 if kind == "j" else r
    counts = left_cells_per_two_sided(schur_cells(n, d, kind), kind)
    rows = []
    for key, left_count in counts.items():
        domino = count_semistandard_domino(key, bound, monomino_entry_one=True)
        rows.append({"partition": list(key), "domino_count": domino, "left_cells": left_count,
                     "match": domino == left_count})
    return rows
