"""Barbasch-Vogan symbols of types B/C (rows of length m+1 and m) and D (two rows of length m).

A symbol is stored with both rows strictly increasing.  Shift equivalence prepends
0 to both rows and adds 1 to every old entry; classes are represented by the
fully down-shifted symbol (and, in type D, with the rows ordered).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, replace
from typing import Literal, Optional, Sequence, Union

from cellkit.errors import NotASymbolPartitionError
from cellkit.signed_perm import SignedPermutation, enumerate_group
from cellkit.tableaux import Partition, partition, pt_shape

Twin = Optional[Literal["I", "II"]]


def _strict(row: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(row, row[1:])) and all(v >= 0 for v in row)


@dataclass(frozen=True)
class SymbolBC:
    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom) + 1:
            raise ValueError(f"rows must have lengths m+1 and m: {self}")
        if not (_strict(self.top) and _strict(self.bottom)):
            raise ValueError(f"rows must be strictly increasing nonnegative integers: {self}")

    @property
    def m(self) -> int:
        return len(self.bottom)

    @property
    def rank(self) -> int:
        return sum(self.top) + sum(self.bottom) - self.m ** 2

    def entries(self) -> list[int]:
        return list(self.top) + list(self.bottom)

    def __str__(self) -> str:
        return format_symbol(self)


@dataclass(frozen=True)
class SymbolD:
    top: tuple[int, ...]
    bottom: tuple[int, ...]
    twin: Twin = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "top", tuple(self.top))
        object.__setattr__(self, "bottom", tuple(self.bottom))
        if len(self.top) != len(self.bottom):
            raise ValueError(f"type D rows must have equal length: {self}")
        if not (_strict(self.top) and _strict(self.bottom)):
            raise ValueError(f"rows must be strictly increasing nonnegative integers: {self}")
        if self.twin is not None and self.top != self.bottom:
            raise ValueError("a twin label needs identical rows")

    @property
    def m(self) -> int:
        return len(self.top)

    @property
    def rank(self) -> int:
        return sum(self.top) + sum(self.bottom) - self.m * (self.m - 1)

    def entries(self) -> list[int]:
        return list(self.top) + list(self.bottom)

    def __str__(self) -> str:
        return format_symbol(self)


Symbol = Union[SymbolBC, SymbolD]


def shift(s: Symbol) -> Symbol:
    top = (0,) + tuple(v + 1 for v in s.top)
    bottom = (0,) + tuple(v + 1 for v in s.bottom)
    return replace(s, top=top, bottom=bottom)


def _can_unshift(s: Symbol) -> bool:
    return bool(s.top) and bool(s.bottom) and s.top[0] == 0 and s.bottom[0] == 0


def unshift(s: Symbol) -> Symbol:
    if not _can_unshift(s):
        raise ValueError(f"{s} is not a shifted symbol")
    return replace(s, top=tuple(v - 1 for v in s.top[1:]), bottom=tuple(v - 1 for v in s.bottom[1:]))


def normalize(s: Symbol) -> Symbol:
    """Canonical class representative: undo all shifts; type D puts the smaller row on top."""
    while _can_unshift(s):
        s = unshift(s)
    if isinstance(s, SymbolD) and s.bottom < s.top:
        s = SymbolD(s.bottom, s.top, s.twin)
    return s


def shift_to(s: Symbol, m: int) -> Symbol:
    if m < s.m:
        raise ValueError(f"cannot shift {s} down to m={m}")
    while s.m < m:
        s = shift(s)
    return s


# ---------------------------------------------------------------------------
# partitions attached to symbols


def _par(odd_row: Sequence[int], even_row: Sequence[int]) -> Partition:
    nus = sorted([2 * v + 1 for v in odd_row] + [2 * v for v in even_row])
    return partition([nu - t for t, nu in enumerate(nus)])


def par_B(s: SymbolBC) -> Partition:
    """Partition of 2d+1 built from ``{2*top+1} | {2*bottom}``."""
    return _par(s.top, s.bottom)


def par_C(s: SymbolBC) -> Partition:
    """Partition of 2d built from ``{2*top} | {2*bottom+1}``."""
    return _par(s.bottom, s.top)


def symbol_from_partition(p: Sequence[int], kind: Literal["B", "C"]) -> SymbolBC:
    """The unique class whose ``par_B`` (kind B) or ``par_C`` (kind C) is ``p``."""
    p = partition(p)
    length = len(p) if len(p) % 2 == 1 else len(p) + 1
    ascending = sorted(list(p) + [0] * (length - len(p)))
    nus = [part + t for t, part in enumerate(ascending)]
    odds = [nu for nu in nus if nu % 2 == 1]
    evens = [nu for nu in nus if nu % 2 == 0]
    m = (length - 1) // 2
    if kind == "B":
        if len(odds) != m + 1:
            raise NotASymbolPartitionError(f"{p} is not par_B of any symbol")
        s = SymbolBC(tuple((v - 1) // 2 for v in odds), tuple(v // 2 for v in evens))
    else:
        if len(evens) != m + 1:
            raise NotASymbolPartitionError(f"{p} is not par_C of any symbol")
        s = SymbolBC(tuple(v // 2 for v in evens), tuple((v - 1) // 2 for v in odds))
    return normalize(s)


def is_symbol_partition(p: Sequence[int], kind: Literal["B", "C"]) -> bool:
    try:
        symbol_from_partition(p, kind)
    except NotASymbolPartitionError:
        return False
    return True


# ---------------------------------------------------------------------------
# similarity classes


def approx_equal(
    a: Symbol,
    b: Symbol,
    kind: Literal["B", "D"] = "B",
    identify_twins: bool = False,
    semantics: Optional[Literal["set", "multiset"]] = None,
) -> bool:
    """Same entries after shifting both to a common m.

    Kind B compares multisets of entries, kind D sets of entries (the default
    ``semantics`` for each kind); twin classes with different I/II labels are
    distinct unless ``identify_twins``.
    """
    expected = SymbolBC if kind == "B" else SymbolD
    if not (isinstance(a, expected) and isinstance(b, expected)):
        raise TypeError(f"approx_equal kind {kind} expects two {expected.__name__} values")
    if semantics is None:
        semantics = "multiset" if kind == "B" else "set"
    m = max(a.m, b.m)
    ea, eb = shift_to(a, m).entries(), shift_to(b, m).entries()
    same = sorted(ea) == sorted(eb) if semantics == "multiset" else set(ea) == set(eb)
    if same and kind == "D" and not identify_twins:
        if a.twin is not None and b.twin is not None and a.twin != b.twin:
            return False
    return same


def is_special_symbol(s: Symbol, kind: Literal["B", "D"] = "B") -> bool:
    if kind == "B":
        lam, mu = s.top, s.bottom
        return all(lam[i] <= mu[i] <= lam[i + 1] for i in range(len(mu)))

    def interlaces(x: Sequence[int], y: Sequence[int]) -> bool:
        return all(x[i] <= y[i] and (i + 1 == len(x) or y[i] <= x[i + 1]) for i in range(len(x)))

    return interlaces(s.top, s.bottom) or interlaces(s.bottom, s.top)


def special_in_class(s: SymbolBC) -> SymbolBC:
    """The unique special symbol with the same entry multiset (at the same m)."""
    z = sorted(s.entries())
    return normalize(SymbolBC(tuple(z[0::2]), tuple(z[1::2])))


# ---------------------------------------------------------------------------
# type D


def chi(s: SymbolBC) -> SymbolD:
    return SymbolD(s.top, (0,) + tuple(v + 1 for v in s.bottom))


def sym(w: SignedPermutation) -> SymbolD:
    """Type-D symbol class attached to ``w`` through the kind-C insertion shape."""
    lam = symbol_from_partition(pt_shape(w, "C"), "C")
    return normalize(chi(lam))


# ---------------------------------------------------------------------------
# text and JSON forms

_SYMBOL_RE = re.compile(r"^\s*\{\s*([0-9<\s]*)/\s*([0-9<\s]*)\}\s*(I{1,2})?\s*$")


def format_symbol(s: Symbol) -> str:
    text = "{" + "<".join(map(str, s.top)) + " / " + "<".join(map(str, s.bottom)) + "}"
    if isinstance(s, SymbolD) and s.twin:
        text += " " + s.twin
    return text


def parse_symbol(text: str) -> Symbol:
    match = _SYMBOL_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse symbol {text!r}")

    def row(part: str) -> tuple[int, ...]:
        part = part.strip()
        return tuple(int(v) for v in part.split("<")) if part else ()

    top, bottom = row(match.group(1)), row(match.group(2))
    if len(top) == len(bottom):
        return SymbolD(top, bottom, match.group(3))
    return SymbolBC(top, bottom)


def symbol_to_json(s: Symbol) -> str:
    twin = s.twin if isinstance(s, SymbolD) else None
    return json.dumps({"top": list(s.top), "bottom": list(s.bottom), "twin": twin})


def symbol_from_json(text: str) -> Symbol:
    data = json.loads(text)
    if len(data["top"]) == len(data["bottom"]):
        return SymbolD(tuple(data["top"]), tuple(data["bottom"]), data.get("twin"))
    return SymbolBC(tuple(data["top"]), tuple(data["bottom"]))


# ---------------------------------------------------------------------------
# left multiplication by s_0


@dataclass(frozen=True)
class S0ScanResult:
    d: int
    checked: int
    counterexamples: tuple[tuple[SignedPermutation, SymbolD, SymbolD], ...]
    exact_mismatches: int


def scan_s0_invariance(d: int) -> S0ScanResult:
    """Compare the classes ``sym(s_0 w)`` and ``sym(w)`` for every ``w`` in W(D_d).

    A counterexample is a pair that is not similar in type D with twins
    identified.  ``exact_mismatches`` counts pairs whose normalized symbols differ.
    """
    s0 = SignedPermutation.generator(d, 0)
    bad = []
    exact = 0
    elements = enumerate_group(d, "D")
    for w in elements:
        a, b = sym(s0 * w), sym(w)
        exact += a != b
        if not approx_equal(a, b, "D", identify_twins=True):
            bad.append((w, a, b))
    return S0ScanResult(d, len(elements), tuple(bad), exact)
