"""Partitions, decreasing Robinson-Schensted insertion, special partitions, domino tableaux.

Tableaux here follow the decreasing convention: entries decrease along each row
and down each column.  Inserting ``k`` into a row appends it when ``k`` is no
larger than every entry; otherwise ``k`` replaces the largest entry smaller than
itself and the displaced entry moves on to the next row.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterator, Literal, Optional, Sequence

from cellkit.errors import DuplicateEntryError, ParityError
from cellkit.signed_perm import Kind, SignedPermutation, embed_sym

Partition = tuple[int, ...]
Tableau = tuple[tuple[int, ...], ...]
SpecialKind = Literal["B", "C", "D"]


def partition(parts: Sequence[int]) -> Partition:
    """Normalize: sort decreasingly and drop zeros."""
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {list(parts)}")
    return tuple(sorted((int(p) for p in parts if p), reverse=True))


@dataclass(frozen=True)
class LabeledPartition:
    """A partition with an optional I/II label; only very even partitions carry one."""

    parts: Partition
    label: Optional[Literal["I", "II"]] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", partition(self.parts))
        if self.label is not None and not is_very_even(self.parts):
            raise ValueError(f"label {self.label} on a partition that is not very even: {self.parts}")

    def to_json(self):
        if self.label is None:
            return list(self.parts)
        return {"parts": list(self.parts), "label": self.label}


def is_very_even(p: Partition) -> bool:
    return len(p) > 0 and all(part % 2 == 0 for part in p)


def partitions(n: int, max_part: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def conjugate(p: Sequence[int]) -> Partition:
    p = partition(p)
    if not p:
        return ()
    return tuple(sum(1 for part in p if part > j) for j in range(p[0]))


# ---------------------------------------------------------------------------
# Robinson-Schensted


def rs_insert(t: Tableau, k: int) -> Tableau:
    rows = [list(row) for row in t]
    if any(k in row for row in rows):
        raise DuplicateEntryError(f"{k} is already in the tableau")
    carry = k
    for row in rows:
        if all(carry <= entry for entry in row):
            row.append(carry)
            return tuple(tuple(r) for r in rows)
        # row is decreasing, so the first entry below carry is the largest one
        pos = next(j for j, entry in enumerate(row) if entry < carry)
        row[pos], carry = carry, row[pos]
    rows.append([carry])
    return tuple(tuple(r) for r in rows)


def rs_tableau(sequence: Sequence[int]) -> Tableau:
    t: Tableau = ()
    for k in sequence:
        t = rs_insert(t, k)
    return t


def shape(t: Tableau) -> Partition:
    return tuple(len(row) for row in t)


def is_standard(t: Tableau) -> bool:
    entries = sorted(e for row in t for e in row)
    if entries != list(range(1, len(entries) + 1)):
        return False
    if any(len(t[i]) < len(t[i + 1]) for i in range(len(t) - 1)):
        return False
    for i, row in enumerate(t):
        for j, entry in enumerate(row):
            if j + 1 < len(row) and not row[j + 1] < entry:
                return False
            if i + 1 < len(t) and j < len(t[i + 1]) and not t[i + 1][j] < entry:
                return False
    return True


def pt_tableau(w: SignedPermutation, kind: Kind = "B") -> Tableau:
    return rs_tableau(embed_sym(w, kind))


def pt_shape(w: SignedPermutation, kind: Kind = "B") -> Partition:
    """Shape of the insertion tableau of ``w`` viewed in S_{2d+1} (kind B) or S_{2d} (kind C)."""
    return shape(pt_tableau(w, kind))


# ---------------------------------------------------------------------------
# special partitions


def _even_parts_even_multiplicity(p: Partition) -> bool:
    return all(m % 2 == 0 for part, m in Counter(p).items() if part % 2 == 0)


def _odd_parts_even_multiplicity(p: Partition) -> bool:
    return all(m % 2 == 0 for part, m in Counter(p).items() if part % 2 == 1)


def in_orbit_set(p: Sequence[int], kind: SpecialKind) -> bool:
    """Membership in the Jordan-type sets: even parts paired (B, D) or odd parts paired (C)."""
    p = partition(p)
    if kind == "C":
        return _odd_parts_even_multiplicity(p)
    return _even_parts_even_multiplicity(p)


def is_special(p: Sequence[int], kind: SpecialKind) -> bool:
    p = partition(p)
    size = sum(p)
    if kind == "B" and size % 2 != 1:
        raise ParityError(f"kind B needs an odd size, got {size}")
    if kind in ("C", "D") and size % 2 != 0:
        raise ParityError(f"kind {kind} needs an even size, got {size}")
    pt = conjugate(p)
    if kind == "B":
        return _even_parts_even_multiplicity(p) and _even_parts_even_multiplicity(pt)
    if kind == "C":
        return _odd_parts_even_multiplicity(p) and _odd_parts_even_multiplicity(pt)
    return _even_parts_even_multiplicity(p) and _odd_parts_even_multiplicity(pt)


def enumerate_special(N: int, max_parts: Optional[int], kind: SpecialKind) -> list:
    """Special partitions of ``N`` with at most ``max_parts`` parts.

    Kind D returns ``LabeledPartition`` objects, very even ones twice (labels I and II);
    kinds B and C return plain tuples.
    """
    found: list = []
    for p in partitions(N):
        if max_parts is not None and len(p) > max_parts:
            continue
        if not is_special(p, kind):
            continue
        if kind == "D":
            if is_very_even(p):
                found.extend([LabeledPartition(p, "I"), LabeledPartition(p, "II")])
            else:
                found.append(LabeledPartition(p))
        else:
            found.append(p)
    return found


# ---------------------------------------------------------------------------
# domino tableaux

Cell = tuple[int, int]
Domino = tuple[Cell, Cell]


def _core(size: int) -> Partition:
    return (1,) if size % 2 else ()


def _removable_dominoes(p: Partition) -> Iterator[Partition]:
    rows = list(p) + [0, 0]
    for i in range(len(p)):
        if rows[i] - 2 >= rows[i + 1]:
            smaller = rows[:]
            smaller[i] -= 2
            yield partition(smaller)
        if rows[i] == rows[i + 1] and rows[i + 1] - 1 >= rows[i + 2]:
            smaller = rows[:]
            smaller[i] -= 1
            smaller[i + 1] -= 1
            yield partition(smaller)


@lru_cache(maxsize=None)
def _count_domino_chains(p: Partition, core: Partition) -> int:
    if p == core:
        return 1
    if sum(p) <= sum(core):
        return 0
    return sum(_count_domino_chains(q, core) for q in _removable_dominoes(p))


def count_standard_domino(p: Sequence[int]) -> int:
    """Standard domino tableaux of shape ``p``: growth chains from the empty shape
    (even size) or the single box (odd size, the monomino) adding one domino at a time."""
    p = partition(p)
    return _count_domino_chains(p, _core(sum(p)))


def domino_tilings(p: Sequence[int], skip: frozenset[Cell] = frozenset()) -> Iterator[list[Domino]]:
    """All tilings by dominoes of the cells of ``p`` not in ``skip``."""
    p = partition(p)
    cells = [(i, j) for i, part in enumerate(p) for j in range(part) if (i, j) not in skip]
    cell_set = set(cells)

    def extend(covered: frozenset[Cell], placed: list[Domino]) -> Iterator[list[Domino]]:
        free = next((c for c in cells if c not in covered), None)
        if free is None:
            yield list(placed)
            return
        i, j = free
        for other in ((i, j + 1), (i + 1, j)):
            if other in cell_set and other not in covered:
                placed.append((free, other))
                yield from extend(covered | {free, other}, placed)
                placed.pop()

    yield from extend(frozenset(), [])


def _filling_ok(label_of: dict[Cell, int], domino_of: dict[Cell, int]) -> bool:
    """Weak increase along rows, strict down columns, between cells of different tiles."""
    for (i, j), value in label_of.items():
        right = (i, j + 1)
        if right in label_of and domino_of[right] != domino_of[(i, j)] and label_of[right] < value:
            return False
        below = (i + 1, j)
        if below in label_of and domino_of[below] != domino_of[(i, j)] and label_of[below] <= value:
            return False
    return True


def count_semistandard_domino(
    p: Sequence[int], entry_bound: int, monomino_entry_one: bool = True
) -> int:
    """Semistandard domino tableaux of shape ``p`` with domino entries in ``1..entry_bound``.

    Cells read their tile's entry; entries weakly increase along rows and strictly
    increase down columns, comparisons only between different tiles.  For odd size
    the monomino sits in the corner with entry 1 (or 0 when ``monomino_entry_one``
    is false, i.e. below every domino).
    """
    p = partition(p)
    odd = sum(p) % 2 == 1
    skip = frozenset({(0, 0)}) if odd else frozenset()
    total = 0
    for tiling in domino_tilings(p, skip):
        domino_of = {cell: k for k, tile in enumerate(tiling) for cell in tile}
        if odd:
            domino_of[(0, 0)] = -1
        for labels in product(range(1, entry_bound + 1), repeat=len(tiling)):
            label_of = {cell: labels[k] for k, tile in enumerate(tiling) for cell in tile}
            if odd:
                label_of[(0, 0)] = 1 if monomino_entry_one else 0
            if _filling_ok(label_of, domino_of):
                total += 1
    return total


def count_standard_domino_by_labels(p: Sequence[int]) -> int:
    """Brute-force count: tilings with distinct labels 1..k increasing along rows and columns."""
    p = partition(p)
    odd = sum(p) % 2 == 1
    skip = frozenset({(0, 0)}) if odd else frozenset()
    total = 0
    for tiling in domino_tilings(p, skip):
        domino_of = {cell: k for k, tile in enumerate(tiling) for cell in tile}
        if odd:
            domino_of[(0, 0)] = -1
        k = len(tiling)
        for labels in permutations(range(1, k + 1)):
            label_of = {cell: labels[t] for t, tile in enumerate(tiling) for cell in tile}
            if odd:
                label_of[(0, 0)] = 0
            if _filling_ok(label_of, domino_of):
                total += 1
    return total
