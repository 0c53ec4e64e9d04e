"""Signed permutations: the hyperoctahedral group W(B_d) = W(C_d) and its index-2 subgroup W(D_d).

An element ``w`` is stored by its window ``(w(1), ..., w(d))``; ``w(-i) = -w(i)``
and ``w(0) = 0`` are implied.  The simple reflections are

    s_0 = (-1, 1),    s_i = (-i-1, -i)(i, i+1)  for 1 <= i <= d-1,

and products compose right to left as functions: ``(x * y)(i) = x(y(i))``.
A word ``[a_1, ..., a_k]`` denotes ``s_{a_1} s_{a_2} ... s_{a_k}``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Literal, Sequence

from cellkit.errors import InvalidGeneratorError, RankMismatchError, ResourceLimitError

Kind = Literal["B", "C"]

DEFAULT_GROUP_BOUND = 5


@dataclass(frozen=True, order=True)
class SignedPermutation:
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        window = tuple(int(v) for v in self.window)
        object.__setattr__(self, "window", window)
        d = len(window)
        if d == 0:
            raise ValueError("rank must be positive")
        if sorted(abs(v) for v in window) != list(range(1, d + 1)):
            raise ValueError(f"not a signed permutation window: {list(window)}")

    @property
    def d(self) -> int:
        return len(self.window)

    @classmethod
    def identity(cls, d: int) -> SignedPermutation:
        return cls(tuple(range(1, d + 1)))

    @classmethod
    def generator(cls, d: int, i: int) -> SignedPermutation:
        _check_generator(d, i)
        window = list(range(1, d + 1))
        if i == 0:
            window[0] = -1
        else:
            window[i - 1], window[i] = window[i], window[i - 1]
        return cls(tuple(window))

    def __call__(self, i: int) -> int:
        if i == 0:
            return 0
        if i > 0:
            return self.window[i - 1]
        return -self.window[-i - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        return compose(self, other)

    def inverse(self) -> SignedPermutation:
        return inverse(self)

    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.d + 1))

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.window) + "]"


def _check_generator(d: int, i: int) -> None:
    if not 0 <= i < d:
        raise InvalidGeneratorError(f"generator s{i} does not exist in rank {d}")


def compose(x: SignedPermutation, y: SignedPermutation) -> SignedPermutation:
    if x.d != y.d:
        raise RankMismatchError(f"ranks differ: {x.d} vs {y.d}")
    return SignedPermutation(tuple(x(v) for v in y.window))


def inverse(x: SignedPermutation) -> SignedPermutation:
    window = [0] * x.d
    for i, v in enumerate(x.window, start=1):
        if v > 0:
            window[v - 1] = i
        else:
            window[-v - 1] = -i
    return SignedPermutation(tuple(window))


def right_mul_gen(w: SignedPermutation, i: int) -> SignedPermutation:
    """``w * s_i``: acts on window positions."""
    _check_generator(w.d, i)
    window = list(w.window)
    if i == 0:
        window[0] = -window[0]
    else:
        window[i - 1], window[i] = window[i], window[i - 1]
    return SignedPermutation(tuple(window))


def left_mul_gen(w: SignedPermutation, i: int) -> SignedPermutation:
    """``s_i * w``: acts on window values."""
    _check_generator(w.d, i)
    s = SignedPermutation.generator(w.d, i)
    return SignedPermutation(tuple(s(v) for v in w.window))


def from_word(d: int, word: Iterable[int]) -> SignedPermutation:
    w = SignedPermutation.identity(d)
    for i in word:
        w = right_mul_gen(w, int(i))
    return w


def length(w: SignedPermutation) -> int:
    """Coxeter length, via the pair count over ``[1, d] x [-d, d]`` (which equals ``2 * length``)."""
    d = w.d
    count = 0
    for a in range(1, d + 1):
        wa = w(a)
        for b in range(-d, d + 1):
            wb = w(b)
            if (a < b and wa > wb) or (a > b and wa < wb):
                count += 1
    return count // 2


length_B = length


def is_right_descent(w: SignedPermutation, i: int) -> bool:
    if i == 0:
        return w.window[0] < 0
    return w.window[i - 1] > w.window[i]


def reduced_word(w: SignedPermutation) -> tuple[int, ...]:
    """Greedy right-descent stripping, smallest descent first."""
    letters: list[int] = []
    while not w.is_identity():
        i = next(j for j in range(w.d) if is_right_descent(w, j))
        letters.append(i)
        w = right_mul_gen(w, i)
    return tuple(reversed(letters))


def weighted_length(w: SignedPermutation, weights: Sequence[int]) -> int:
    return sum(weights[i] for i in reduced_word(w))


def weight_a(w: SignedPermutation) -> int:
    """Number of letters ``s_i`` with ``i >= 1`` in a reduced word (zero weight on ``s_0``)."""
    return sum(1 for i in reduced_word(w) if i >= 1)


def descents(
    w: SignedPermutation,
    side: Literal["left", "right"] = "right",
    generators: Literal["full", "tilde"] = "full",
) -> frozenset[int]:
    """``{i : l(w s_i) < l(w)}`` (right) or ``{i : l(s_i w) < l(w)}`` (left).

    ``generators="tilde"`` drops ``s_0``.
    """
    target = w if side == "right" else inverse(w)
    found = {i for i in range(w.d) if is_right_descent(target, i)}
    if generators == "tilde":
        found.discard(0)
    return frozenset(found)


@lru_cache(maxsize=4096)
def bruhat_interval(y: SignedPermutation) -> frozenset[SignedPermutation]:
    """All products of subwords of one reduced word of ``y``; this is the lower interval ``[e, y]``."""
    reached = {SignedPermutation.identity(y.d)}
    for i in reduced_word(y):
        reached |= {right_mul_gen(u, i) for u in reached}
    return frozenset(reached)


def bruhat_leq(x: SignedPermutation, y: SignedPermutation) -> bool:
    if x.d != y.d:
        raise RankMismatchError(f"ranks differ: {x.d} vs {y.d}")
    return x in bruhat_interval(y)


def domain(d: int, kind: Kind) -> list[int]:
    """The points ``w`` permutes: ``[-d, d]`` for kind B, ``[-d, d]`` without 0 for kind C."""
    if kind == "B":
        return list(range(-d, d + 1))
    return [i for i in range(-d, d + 1) if i != 0]


def embed_sym(w: SignedPermutation, kind: Kind = "B") -> tuple[int, ...]:
    """One-line notation of ``w`` as a permutation of ``1..N`` (``N = 2d+1`` or ``2d``)."""
    points = domain(w.d, kind)
    label = {p: t for t, p in enumerate(points, start=1)}
    return tuple(label[w(p)] for p in points)


def in_type_D(w: SignedPermutation) -> bool:
    return sum(1 for v in w.window if v < 0) % 2 == 0


def longest_element(d: int) -> SignedPermutation:
    return SignedPermutation(tuple(-i for i in range(1, d + 1)))


def enumerate_group(
    d: int, subgroup: Literal["B", "C", "D"] = "B", bound: int = DEFAULT_GROUP_BOUND
) -> list[SignedPermutation]:
    """All elements of W(B_d) (or W(D_d)), sorted by length then window."""
    if d > bound:
        raise ResourceLimitError(f"rank {d} exceeds the enumeration bound {bound}")
    elements = [
        SignedPermutation(tuple(s * v for s, v in zip(signs, perm)))
        for perm in permutations(range(1, d + 1))
        for signs in product((1, -1), repeat=d)
    ]
    if subgroup == "D":
        elements = [w for w in elements if in_type_D(w)]
    return sorted(elements, key=lambda w: (length(w), w.window))


def generated_subgroup(d: int, generators: Iterable[int]) -> list[SignedPermutation]:
    """Elements of the standard parabolic subgroup generated by ``{s_i : i in generators}``."""
    gens = sorted(set(generators))
    for i in gens:
        _check_generator(d, i)
    seen = {SignedPermutation.identity(d)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for w in frontier:
            for i in gens:
                u = right_mul_gen(w, i)
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return sorted(seen, key=lambda w: (length(w), w.window))


_WINDOW_RE = re.compile(r"^\s*\[\s*(-?\d+(?:\s*,\s*-?\d+)*)\s*\]\s*$")


def parse_window(text: str) -> SignedPermutation:
    match = _WINDOW_RE.match(text)
    if not match:
        raise ValueError(f"cannot parse signed permutation {text!r}")
    return SignedPermutation(tuple(int(t) for t in match.group(1).split(",")))


def format_word(word: Sequence[int]) -> str:
    return " ".join(f"s{i}" for i in word) if word else "e"


def parse_word(text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    letters = []
    for token in text.replace("*", " ").split():
        if not re.fullmatch(r"s\d+", token):
            raise ValueError(f"bad generator token {token!r}")
        letters.append(int(token[1:]))
    return tuple(letters)
