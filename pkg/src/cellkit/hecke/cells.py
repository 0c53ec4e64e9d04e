"""Left, right and two-sided cells of a based algebra from nonzero-coefficient relations.

A relation matrix ``rel[b, b2]`` is true when ``b2`` occurs with nonzero
coefficient in some product with ``b`` (on the given side).  Preorders are the
reflexive-transitive closures and cells their mutual-reachability classes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Generic, Hashable, Literal, Sequence, TypeVar

import numpy as np

from cellkit.hecke.algebra import HeckeAlgebra, OracleConfig, WeightSpec
from cellkit.signed_perm import SignedPermutation, from_word, in_type_D

Side = Literal["left", "right", "two_sided"]
X = TypeVar("X", bound=Hashable)


def closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure (Warshall) of a boolean square matrix."""
    reach = rel.astype(bool) | np.eye(rel.shape[0], dtype=bool)
    for k in range(reach.shape[0]):
        reach |= reach[:, k : k + 1] & reach[k : k + 1, :]
    return reach


def blocks(reach: np.ndarray) -> list[list[int]]:
    """Mutual-reachability classes, in order of first member."""
    mutual = reach & reach.T
    seen: set[int] = set()
    out = []
    for t in range(reach.shape[0]):
        if t in seen:
            continue
        members = [int(u) for u in np.flatnonzero(mutual[t])]
        seen.update(members)
        out.append(members)
    return out


@dataclass
class CellDecomposition(Generic[X]):
    elements: list
    left_reach: np.ndarray
    right_reach: np.ndarray
    two_sided_reach: np.ndarray
    left: list[frozenset] = field(init=False)
    right: list[frozenset] = field(init=False)
    two_sided: list[frozenset] = field(init=False)

    def __post_init__(self) -> None:
        self.index = {x: t for t, x in enumerate(self.elements)}
        self.left = self._labelled(self.left_reach)
        self.right = self._labelled(self.right_reach)
        self.two_sided = self._labelled(self.two_sided_reach)

    def _labelled(self, reach: np.ndarray) -> list[frozenset]:
        return [frozenset(self.elements[t] for t in block) for block in blocks(reach)]

    def cells(self, side: Side) -> list[frozenset]:
        return {"left": self.left, "right": self.right, "two_sided": self.two_sided}[side]

    def cell_of(self, x, side: Side = "two_sided") -> frozenset:
        return next(c for c in self.cells(side) if x in c)

    def same_cell(self, x, y, side: Side = "two_sided") -> bool:
        return y in self.cell_of(x, side)

    def leq(self, x, y, side: Side = "left") -> bool:
        """``x <= y`` in the preorder: ``x`` is reachable from ``y``."""
        reach = {"left": self.left_reach, "right": self.right_reach, "two_sided": self.two_sided_reach}[side]
        return bool(reach[self.index[y], self.index[x]])

    def partition_of(self, side: Side) -> set[frozenset]:
        return set(self.cells(side))


def decompose(elements: Sequence, left_rel: np.ndarray, right_rel: np.ndarray) -> CellDecomposition:
    return CellDecomposition(
        list(elements), closure(left_rel), closure(right_rel), closure(left_rel | right_rel)
    )


def _nonzero(action: np.ndarray) -> np.ndarray:
    return action.any(axis=2)


def hecke_cells(
    d: int,
    weight: WeightSpec = "equal",
    subgroup: Literal["B", "D"] = "B",
    method: Literal["generators", "table"] = "generators",
    config: OracleConfig = OracleConfig(),
    algebra: HeckeAlgebra | None = None,
) -> CellDecomposition[SignedPermutation]:
    """Cells of the KL basis of the Hecke algebra of W(B_d), or of the span of the
    ``C'_w`` with ``w`` in W(D_d) (only closed under products when ``L(s_0) = 0``).

    ``method="generators"`` multiplies by the algebra generators ``C'_s`` (for the
    D subalgebra: ``C'_{s_i}``, ``i >= 1``, and ``C'_{s0 s1 s0}``), which generate
    the algebra, so the closures agree with those from all products;
    ``method="table"`` reads the full structure-constant table.
    """
    H = algebra if algebra is not None else HeckeAlgebra(d, weight, config)
    if subgroup == "D" and H.weight.values[0] != 0:
        raise ValueError("the W(D_d) span is a subalgebra only when L(s_0) = 0")
    if subgroup == "D":
        keep = np.array([t for t, w in enumerate(H.elements) if in_type_D(w)])
    else:
        keep = np.arange(H.N)
    n = len(keep)
    left_rel = np.zeros((n, n), dtype=bool)
    right_rel = np.zeros((n, n), dtype=bool)
    if method == "table":
        table = H.structure_table[np.ix_(keep, keep, keep)].any(axis=3)
        left_rel = table.any(axis=0)
        right_rel = table.any(axis=1)
    elif method == "generators":
        if subgroup == "B":
            left_mats = [H.left_action(i) for i in range(d)]
            right_mats = [H.right_action(i) for i in range(d)]
        else:
            left_mats = [H.left_action(i) for i in range(1, d)]
            right_mats = [H.right_action(i) for i in range(1, d)]
            if d >= 2:  # W(D_1) is trivial
                extra = H.C(from_word(d, (0, 1, 0)))
                left_mats.append(H.left_action_of(extra))
                right_mats.append(H.right_action_of(extra))
        for mat in left_mats:
            left_rel |= _nonzero(mat)[np.ix_(keep, keep)]
        for mat in right_mats:
            right_rel |= _nonzero(mat)[np.ix_(keep, keep)]
    else:
        raise ValueError(f"unknown cell method {method!r}")
    return decompose([H.elements[t] for t in keep], left_rel, right_rel)
