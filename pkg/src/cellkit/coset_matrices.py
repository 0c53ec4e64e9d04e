"""Centrally symmetric matrices indexing double cosets of parabolic subgroups of W(B_d).

Kind ``"j"``: n = 2r+1, rows and columns indexed by -r..r, entries sum to 2d+1.
Kind ``"i"``: n = 2r, indices -r..-1, 1..r, entries sum to 2d.
In both cases ``a[i][j] == a[-i][-j]``.  Rows are stored top to bottom, i.e. from
index -r down to index r.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator, Literal, Sequence

import numpy as np

from cellkit.errors import ParityError, ResourceLimitError
from cellkit.signed_perm import SignedPermutation, domain
from cellkit.symbols import par_B, par_C, special_in_class, symbol_from_partition
from cellkit.tableaux import Partition, partition, pt_shape

MatrixKind = Literal["j", "i"]

GREENE_MAX_N = 4


def signed_indices(n: int, kind: MatrixKind) -> list[int]:
    _check_n(n, kind)
    r = n // 2
    if kind == "j":
        return list(range(-r, r + 1))
    return [i for i in range(-r, r + 1) if i != 0]


def _check_n(n: int, kind: MatrixKind) -> None:
    if kind not in ("j", "i"):
        raise ValueError(f"unknown matrix kind {kind!r}")
    if kind == "j" and (n < 3 or n % 2 == 0):
        raise ParityError(f"kind j needs odd n >= 3, got {n}")
    if kind == "i" and (n < 2 or n % 2 == 1):
        raise ParityError(f"kind i needs even n >= 2, got {n}")


def _group_kind(kind: MatrixKind) -> Literal["B", "C"]:
    return "B" if kind == "j" else "C"


@dataclass(frozen=True)
class Composition:
    """A symmetric composition, parts listed from index -r to r."""

    kind: MatrixKind
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(p) for p in self.parts))
        idx = signed_indices(len(self.parts), self.kind)
        values = dict(zip(idx, self.parts))
        if any(p < 0 for p in self.parts) or any(values[i] != values[-i] for i in idx):
            raise ValueError(f"not a symmetric composition: {self.parts}")
        if self.kind == "j" and sum(self.parts) % 2 == 0:
            raise ParityError(f"kind j compositions have odd total, got {sum(self.parts)}")
        if self.kind == "i" and sum(self.parts) % 2 == 1:
            raise ParityError(f"kind i compositions have even total, got {sum(self.parts)}")

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def d(self) -> int:
        return sum(self.parts) // 2

    def indices(self) -> list[int]:
        return signed_indices(self.n, self.kind)

    def __getitem__(self, i: int) -> int:
        return self.parts[self.indices().index(i)]


def enumerate_compositions(n: int, d: int, kind: MatrixKind) -> list[Composition]:
    idx = signed_indices(n, kind)
    r = n // 2
    out = []
    if kind == "j":
        for k in range(d + 1):
            for tail in _weak_compositions(d - k, r):
                half = dict(zip(range(1, r + 1), tail))
                out.append(Composition(kind, tuple(2 * k + 1 if i == 0 else half[abs(i)] for i in idx)))
    else:
        for tail in _weak_compositions(d, r):
            half = dict(zip(range(1, r + 1), tail))
            out.append(Composition(kind, tuple(half[abs(i)] for i in idx)))
    return out


def _weak_compositions(total: int, slots: int) -> Iterator[tuple[int, ...]]:
    if slots == 0:
        if total == 0:
            yield ()
        return
    for bars in combinations_with_replacement(range(total + 1), slots - 1):
        cuts = (0,) + bars + (total,)
        yield tuple(cuts[t + 1] - cuts[t] for t in range(slots))


# ---------------------------------------------------------------------------
# intervals and parabolic subgroups


@dataclass(frozen=True)
class IntegerInterval:
    lo: int
    hi: int

    def points(self) -> list[int]:
        return list(range(self.lo, self.hi + 1))

    def __len__(self) -> int:
        return max(0, self.hi - self.lo + 1)


def intervals(lam: Composition) -> dict[int, IntegerInterval]:
    """The blocks ``R_i`` cut out of the domain by ``lam``; ``R_{-i} = -R_i``."""
    r = lam.n // 2
    start = lam[0] // 2 if lam.kind == "j" else 0
    out: dict[int, IntegerInterval] = {}
    if lam.kind == "j":
        out[0] = IntegerInterval(-start, start)
    acc = start
    for i in range(1, r + 1):
        out[i] = IntegerInterval(acc + 1, acc + lam[i])
        out[-i] = IntegerInterval(-(acc + lam[i]), -(acc + 1))
        acc += lam[i]
    return out


def parabolic_generators(lam: Composition) -> frozenset[int]:
    """Indices of the simple reflections generating ``W_lam``."""
    d = lam.d
    r = lam.n // 2
    first = lam[0] // 2 if lam.kind == "j" else 0
    removed = {first}
    acc = first
    for i in range(1, r):
        acc += lam[i]
        removed.add(acc)
    return frozenset(i for i in range(d) if i not in removed)


# ---------------------------------------------------------------------------
# matrices


@dataclass(frozen=True)
class CosetMatrix:
    kind: MatrixKind
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("coset matrix must be square")
        _check_n(n, self.kind)
        if any(v < 0 for row in rows for v in row):
            raise ValueError("entries must be nonnegative")
        if any(rows[a][b] != rows[n - 1 - a][n - 1 - b] for a in range(n) for b in range(n)):
            raise ValueError(f"matrix is not centrally symmetric: {rows}")
        total = sum(map(sum, rows))
        if self.kind == "j" and total % 2 == 0:
            raise ParityError("kind j matrices have odd entry sum")
        if self.kind == "i" and total % 2 == 1:
            raise ParityError("kind i matrices have even entry sum")

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def d(self) -> int:
        return sum(map(sum, self.rows)) // 2

    def indices(self) -> list[int]:
        return signed_indices(self.n, self.kind)

    def entry(self, i: int, j: int) -> int:
        idx = self.indices()
        return self.rows[idx.index(i)][idx.index(j)]

    def ro(self) -> Composition:
        return Composition(self.kind, tuple(sum(row) for row in self.rows))

    def co(self) -> Composition:
        return Composition(self.kind, tuple(sum(col) for col in zip(*self.rows)))

    def transpose(self) -> CosetMatrix:
        return CosetMatrix(self.kind, tuple(zip(*self.rows)))

    def __str__(self) -> str:
        return "[" + "; ".join(" ".join(map(str, row)) for row in self.rows) + "]"


def enumerate_Pi(n: int, d: int, kind: MatrixKind) -> list[CosetMatrix]:
    """All matrices of the given shape and total, sorted by (ro, co, rows)."""
    idx = signed_indices(n, kind)
    pos = {i: t for t, i in enumerate(idx)}
    if kind == "j":
        reps = [(i, j) for i in idx for j in idx if i > 0 or (i == 0 and j > 0)]
        centre_options = [(k, d - k) for k in range(d + 1)]
    else:
        reps = [(i, j) for i in idx for j in idx if i > 0]
        centre_options = [(None, d)]
    found = []
    for k, rest in centre_options:
        for values in _weak_compositions(rest, len(reps)):
            grid = [[0] * n for _ in range(n)]
            if k is not None:
                grid[pos[0]][pos[0]] = 2 * k + 1
            for (i, j), v in zip(reps, values):
                grid[pos[i]][pos[j]] = v
                grid[pos[-i]][pos[-j]] = v
            found.append(CosetMatrix(kind, tuple(map(tuple, grid))))
    found.sort(key=lambda a: (a.ro().parts, a.co().parts, a.rows))
    return found


def pseudo_matrix(a: CosetMatrix) -> dict[tuple[int, int], tuple[int, ...]]:
    """Fill each cell with ``a_ij`` consecutive domain points.

    Rows are filled top to bottom, each row right to left, and each cell's
    points are stored in decreasing order.
    """
    points = iter(domain(a.d, _group_kind(a.kind)))
    idx = a.indices()
    cells: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in idx:
        for j in reversed(idx):
            chunk = [next(points) for _ in range(a.entry(i, j))]
            cells[(i, j)] = tuple(reversed(chunk))
    return cells


def y_of_matrix(a: CosetMatrix) -> SignedPermutation:
    """Read the pseudo-matrix column by column (left to right, each bottom to top)."""
    cells = pseudo_matrix(a)
    idx = a.indices()
    values = [v for j in idx for i in reversed(idx) for v in cells[(i, j)]]
    pts = domain(a.d, _group_kind(a.kind))
    image = dict(zip(pts, values))
    return SignedPermutation(tuple(image[t] for t in range(1, a.d + 1)))


def length_formula(a: CosetMatrix) -> int:
    """Closed-form length of the longest double-coset representative."""
    idx = a.indices()
    r = a.n // 2

    def corner_sums(i: int, j: int) -> int:
        low = sum(a.entry(x, y) for x in idx for y in idx if x < i and y < j)
        high = sum(a.entry(x, y) for x in idx for y in idx if x > i and y > j)
        return low + high

    total = Fraction(0)
    if a.kind == "j":
        cells = [(0, j) for j in range(1, r + 1)] + [(i, j) for i in range(1, r + 1) for j in idx]
        for i, j in cells:
            total += a.entry(i, j) * corner_sums(i, j)
        total += Fraction(a.entry(0, 0) - 1, 2) * corner_sums(0, 0)
        value = a.d ** 2 - total / 2
    else:
        cells = [(i, j) for i in range(1, r + 1) for j in idx]
        for i, j in cells:
            total += a.entry(i, j) * corner_sums(i, j)
        positive = sum(a.entry(i, j) for i in idx for j in idx if i > 0 and j > 0)
        value = a.d ** 2 - total / 2 - Fraction(positive, 2)
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral length {value} for {a}")
    return int(value)


def matrix_of_triple(lam: Composition, g: SignedPermutation, mu: Composition) -> CosetMatrix:
    """``a_ij = #(R_i^lam  intersect  g(R_j^mu))``."""
    if lam.kind != mu.kind or lam.n != mu.n or lam.d != mu.d or g.d != lam.d:
        raise ValueError("compositions and permutation must share kind, n and rank")
    rl, rm = intervals(lam), intervals(mu)
    idx = lam.indices()
    rows = []
    for i in idx:
        block = set(rl[i].points())
        rows.append(tuple(sum(1 for p in rm[j].points() if g(p) in block) for j in idx))
    return CosetMatrix(lam.kind, tuple(rows))


# ---------------------------------------------------------------------------
# partitions attached to matrices


def sigma(a: CosetMatrix) -> Partition:
    """Insertion shape of ``y_of_matrix(a)``."""
    return pt_shape(y_of_matrix(a), _group_kind(a.kind))


def _antichain_masks(positions: Sequence[tuple[int, int]]) -> list[int]:
    # antichains of the order (i,j) <= (i',j') iff i >= i' and j <= j' are the
    # sets strictly increasing in both coordinates
    order = sorted(range(len(positions)), key=lambda t: positions[t])
    masks = [0]

    def extend(start: int, last: tuple[int, int] | None, mask: int) -> None:
        for t in order[start:]:
            p = positions[t]
            if last is None or (p[0] > last[0] and p[1] > last[1]):
                masks.append(mask | (1 << t))
                extend(order.index(t) + 1, p, mask | (1 << t))

    extend(0, None, 0)
    return masks


def greene_numbers(a: CosetMatrix) -> tuple[int, ...]:
    """``s_k`` for k = 1..n: the largest entry sum over unions of k chains.

    A set of cells is a union of k chains iff its largest antichain has at most
    k cells, so this is an exhaustive search over subsets of the nonzero cells.
    """
    if a.n > GREENE_MAX_N:
        raise ResourceLimitError(f"chain-family search is limited to n <= {GREENE_MAX_N}")
    idx = a.indices()
    positions = [(i, j) for i in idx for j in idx if a.entry(i, j)]
    weights = np.array([a.entry(i, j) for i, j in positions], dtype=np.int64)
    m = len(positions)
    masks = np.arange(1 << m, dtype=np.int64)
    sums = np.zeros(1 << m, dtype=np.int64)
    for b in range(m):
        sums += ((masks >> b) & 1) * weights[b]
    width = np.zeros(1 << m, dtype=np.int64)
    for x in _antichain_masks(positions):
        np.maximum(width, np.bitwise_count(masks & x).astype(np.int64), out=width)
    return tuple(int(sums[width <= k].max()) for k in range(1, a.n + 1))


def sigma_greene_oracle(a: CosetMatrix) -> Partition:
    s = (0,) + greene_numbers(a)
    return partition([s[k] - s[k - 1] for k in range(1, len(s))])


def special_key(p: Partition, kind: MatrixKind) -> Partition:
    """The special partition in the similarity class of ``p``."""
    group = _group_kind(kind)
    special = special_in_class(symbol_from_partition(p, group))
    return par_B(special) if group == "B" else par_C(special)


def two_sided_classify(n: int, d: int, kind: MatrixKind) -> dict[Partition, list[CosetMatrix]]:
    """Group the matrices by similarity class of ``sigma``, keyed by the special member."""
    classes: dict[Partition, list[CosetMatrix]] = {}
    for a in enumerate_Pi(n, d, kind):
        classes.setdefault(special_key(sigma(a), kind), []).append(a)
    return dict(sorted(classes.items(), reverse=True))


# ---------------------------------------------------------------------------
# JSON


def matrix_to_dict(a: CosetMatrix) -> dict:
    return {"kind": a.kind, "n": a.n, "d": a.d, "rows": [list(row) for row in a.rows]}


def matrix_to_json(a: CosetMatrix) -> str:
    return json.dumps(matrix_to_dict(a))


def matrix_from_json(text: str) -> CosetMatrix:
    data = json.loads(text)
    a = CosetMatrix(data["kind"], tuple(tuple(row) for row in data["rows"]))
    if ("n" in data and data["n"] != a.n) or ("d" in data and data["d"] != a.d):
        raise ValueError("n/d fields disagree with the rows")
    return a
