"""Iwahori-Hecke algebra of W(B_d) with a weight function, and its Kazhdan-Lusztig basis.

Elements live in dense integer arrays of shape ``(N, K)``: row ``u`` is the
coefficient of ``T_u`` and column ``k`` the coefficient of ``q^(k - E)``.
Relations: ``T_s^2 = 1 + (q^L(s) - q^-L(s)) T_s``.  The KL element is
``C'_w = T_w + sum_{y<w} p_{y,w} T_y`` with ``p_{y,w}`` in ``q^-1 Z[q^-1]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

import numpy as np

from cellkit.errors import ConventionError, RankMismatchError, ResourceLimitError
from cellkit.hecke.laurent import LaurentPoly
from cellkit.signed_perm import (
    SignedPermutation,
    enumerate_group,
    left_mul_gen,
    length,
    reduced_word,
    right_mul_gen,
)


@dataclass(frozen=True)
class OracleConfig:
    max_rank: int = 4
    table_max_rank: int = 3


@dataclass(frozen=True)
class WeightFunction:
    """Values ``L(s_0), ..., L(s_{d-1})``; the ``s_i`` with ``i >= 1`` are conjugate and share a value."""

    values: tuple[int, ...]
    name: str = "custom"

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values:
            raise ValueError("a weight function needs at least one generator")
        if any(v < 0 for v in self.values):
            raise ValueError(f"weights must be nonnegative: {self.values}")
        if len(set(self.values[1:])) > 1:
            raise ValueError(f"conjugate generators s_1.. need equal weights: {self.values}")

    @property
    def d(self) -> int:
        return len(self.values)

    @classmethod
    def equal(cls, d: int) -> WeightFunction:
        return cls((1,) * d, "equal")

    @classmethod
    def ell_a(cls, d: int) -> WeightFunction:
        """Zero on ``s_0``, one elsewhere."""
        return cls((0,) + (1,) * (d - 1), "ell_a")

    @classmethod
    def named(cls, name: str, d: int) -> WeightFunction:
        if name == "equal":
            return cls.equal(d)
        if name in ("ell_a", "a"):
            return cls.ell_a(d)
        raise ValueError(f"unknown weight function {name!r}")

    def of(self, w: SignedPermutation) -> int:
        return sum(self.values[i] for i in reduced_word(w))


WeightSpec = Union[str, WeightFunction]


def resolve_weight(weight: WeightSpec, d: int) -> WeightFunction:
    if isinstance(weight, str):
        return WeightFunction.named(weight, d)
    if weight.d != d:
        raise RankMismatchError(f"weight function has rank {weight.d}, algebra has rank {d}")
    return weight


# ---------------------------------------------------------------------------
# dense Laurent helpers; the last axis is the exponent axis


def shift_exponents(a: np.ndarray, s: int) -> np.ndarray:
    """Multiply by ``q^s``; raises if a nonzero coefficient would leave the window."""
    if s == 0:
        return a.copy()
    size = a.shape[-1]
    out = np.zeros_like(a)
    if abs(s) >= size:
        if a.any():
            raise ConventionError("exponent window exceeded")
        return out
    if s > 0:
        if a[..., size - s:].any():
            raise ConventionError("exponent window exceeded")
        out[..., s:] = a[..., : size - s]
    else:
        if a[..., :-s].any():
            raise ConventionError("exponent window exceeded")
        out[..., : size + s] = a[..., -s:]
    return out


def scale(p: np.ndarray, x: np.ndarray, offset: int) -> np.ndarray:
    """``p * x`` for a dense scalar polynomial ``p`` and an array ``x``."""
    out = np.zeros_like(x)
    for k in np.flatnonzero(p):
        out += int(p[k]) * shift_exponents(x, int(k) - offset)
    return out


def poly_matmul(a: np.ndarray, b: np.ndarray, offset: int) -> np.ndarray:
    """Matrix product of polynomial matrices ``(m, n, K) x (n, p, K) -> (m, p, K)``."""
    size = a.shape[-1]
    out = np.zeros((a.shape[0], b.shape[1], size), dtype=np.int64)
    ka = np.flatnonzero(a.any(axis=(0, 1)))
    kb = np.flatnonzero(b.any(axis=(0, 1)))
    for k1 in ka:
        left = a[:, :, k1]
        for k2 in kb:
            t = int(k1) + int(k2) - offset
            prod = left @ b[:, :, k2]
            if 0 <= t < size:
                out[:, :, t] += prod
            elif prod.any():
                raise ConventionError("exponent window exceeded")
    return out


def bar_dense(x: np.ndarray) -> np.ndarray:
    """``q -> q^-1`` on the coefficients (the window is symmetric)."""
    return x[..., ::-1].copy()


class HeckeAlgebra:
    """Hecke algebra of W(B_d) for a weight function, with lazily built KL data."""

    def __init__(
        self, d: int, weight: WeightSpec = "equal", config: OracleConfig = OracleConfig()
    ) -> None:
        if d < 1:
            raise ValueError("rank must be positive")
        if d > config.max_rank:
            raise ResourceLimitError(f"rank {d} exceeds the Hecke oracle bound {config.max_rank}")
        self.d = d
        self.config = config
        self.weight = resolve_weight(weight, d)
        self.elements = enumerate_group(d, bound=config.max_rank)
        self.N = len(self.elements)
        self.index = {w: t for t, w in enumerate(self.elements)}
        self.ell = np.array([length(w) for w in self.elements])
        self.L = np.array([self.weight.of(w) for w in self.elements])
        self.E = 2 * int(self.L.max()) + 4
        self.K = 2 * self.E + 1
        self.left_perm = np.array(
            [[self.index[left_mul_gen(w, i)] for w in self.elements] for i in range(d)]
        )
        self.right_perm = np.array(
            [[self.index[right_mul_gen(w, i)] for w in self.elements] for i in range(d)]
        )
        self.left_down = self.ell[self.left_perm] < self.ell[None, :]
        self.right_down = self.ell[self.right_perm] < self.ell[None, :]
        self._kl: Optional[np.ndarray] = None
        self._bar_table: Optional[np.ndarray] = None
        self._left_actions: dict[int, np.ndarray] = {}
        self._right_actions: dict[int, np.ndarray] = {}
        self._table: Optional[np.ndarray] = None

    # -- basic elements -----------------------------------------------------

    def zero(self) -> np.ndarray:
        return np.zeros((self.N, self.K), dtype=np.int64)

    def scalar(self, p: LaurentPoly) -> np.ndarray:
        return p.to_dense(self.K, self.E)

    def T(self, w: SignedPermutation) -> np.ndarray:
        x = self.zero()
        x[self.index[w], self.E] = 1
        return x

    def coefficient(self, x: np.ndarray, u: SignedPermutation) -> LaurentPoly:
        return LaurentPoly.from_dense(x[self.index[u]], self.E)

    def to_dict(self, x: np.ndarray) -> dict[SignedPermutation, LaurentPoly]:
        return {
            self.elements[t]: LaurentPoly.from_dense(x[t], self.E)
            for t in np.flatnonzero(x.any(axis=1))
        }

    def _generator_twist(self, x: np.ndarray, i: int, down: np.ndarray) -> np.ndarray:
        weight = self.weight.values[i]
        if weight == 0:
            return np.zeros_like(x)
        rows = np.zeros_like(x)
        rows[down] = x[down]
        return shift_exponents(rows, weight) - shift_exponents(rows, -weight)

    def left_T(self, x: np.ndarray, i: int) -> np.ndarray:
        """``T_{s_i} x``."""
        return x[self.left_perm[i]] + self._generator_twist(x, i, self.left_down[i])

    def right_T(self, x: np.ndarray, i: int) -> np.ndarray:
        """``x T_{s_i}``."""
        return x[self.right_perm[i]] + self._generator_twist(x, i, self.right_down[i])

    def left_C(self, x: np.ndarray, i: int) -> np.ndarray:
        """``C'_{s_i} x`` with ``C'_s = T_s + q^-L(s)`` (just ``T_s`` when ``L(s) = 0``)."""
        out = self.left_T(x, i)
        if self.weight.values[i]:
            out += shift_exponents(x, -self.weight.values[i])
        return out

    def right_C(self, x: np.ndarray, i: int) -> np.ndarray:
        out = self.right_T(x, i)
        if self.weight.values[i]:
            out += shift_exponents(x, -self.weight.values[i])
        return out

    def left_T_word(self, word: Sequence[int], x: np.ndarray) -> np.ndarray:
        """``T_{s_a1} ... T_{s_ak} x``."""
        for i in reversed(word):
            x = self.left_T(x, i)
        return x

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Product ``x y`` in the T basis."""
        cache: dict[int, np.ndarray] = {0: y}

        def t_times_y(t: int) -> np.ndarray:
            if t not in cache:
                i = int(np.flatnonzero(self.left_down[:, t])[0])
                cache[t] = self.left_T(t_times_y(int(self.left_perm[i, t])), i)
            return cache[t]

        out = self.zero()
        for t in np.flatnonzero(x.any(axis=1)):
            out += scale(x[t], t_times_y(int(t)), self.E)
        return out

    # -- bar involution -------------------------------------------------------

    @property
    def bar_table(self) -> np.ndarray:
        """``bar(T_u)`` for every ``u``, via ``bar(T_s) = T_s - (q^L - q^-L)``."""
        if self._bar_table is None:
            table = np.zeros((self.N, self.N, self.K), dtype=np.int64)
            table[0, 0, self.E] = 1
            for t in range(1, self.N):
                i = int(np.flatnonzero(self.left_down[:, t])[0])
                prev = table[self.left_perm[i, t]]
                weight = self.weight.values[i]
                table[t] = self.left_T(prev, i)
                if weight:
                    table[t] -= shift_exponents(prev, weight) - shift_exponents(prev, -weight)
            self._bar_table = table
        return self._bar_table

    def bar(self, x: np.ndarray) -> np.ndarray:
        table = self.bar_table
        out = self.zero()
        for t in np.flatnonzero(x.any(axis=1)):
            out += scale(bar_dense(x[t]), table[t], self.E)
        return out

    # -- Kazhdan-Lusztig basis ------------------------------------------------

    def _reduce_to_kl(self, h: np.ndarray, top: int, kl: np.ndarray) -> np.ndarray:
        """Subtract bar-invariant multiples of lower ``C'_z`` until every coefficient
        other than the one at ``top`` lies in ``q^-1 Z[q^-1]``."""
        E = self.E
        while True:
            bad = np.flatnonzero(h[:, E:].any(axis=1))
            bad = bad[bad != top]
            if bad.size == 0:
                return h
            z = int(bad.max())
            mu = np.zeros(self.K, dtype=np.int64)
            mu[E:] = h[z, E:]
            mu[:E] = h[z, E + 1:][::-1]
            h = h - scale(mu, kl[z], E)

    @property
    def kl_basis(self) -> np.ndarray:
        """``P[w]`` is ``C'_w`` in T coordinates."""
        if self._kl is None:
            kl = np.zeros((self.N, self.N, self.K), dtype=np.int64)
            kl[0, 0, self.E] = 1
            for t in range(1, self.N):
                i = int(np.flatnonzero(self.left_down[:, t])[0])
                h = self.left_C(kl[self.left_perm[i, t]], i)
                h = self._reduce_to_kl(h, t, kl)
                lead = np.zeros(self.K, dtype=np.int64)
                lead[self.E] = 1
                if not np.array_equal(h[t], lead):
                    raise ConventionError(f"leading coefficient of C'_{self.elements[t]} is not 1")
                kl[t] = h
            self._kl = kl
        return self._kl

    def C(self, w: SignedPermutation) -> np.ndarray:
        return self.kl_basis[self.index[w]].copy()

    def kl_polynomial(self, y: SignedPermutation, w: SignedPermutation) -> LaurentPoly:
        return LaurentPoly.from_dense(self.kl_basis[self.index[w], self.index[y]], self.E)

    def to_kl(self, x: np.ndarray) -> np.ndarray:
        """Coordinates of ``x`` in the ``C'`` basis, by triangular elimination."""
        kl = self.kl_basis
        x = x.copy()
        out = self.zero()
        while True:
            rows = np.flatnonzero(x.any(axis=1))
            if rows.size == 0:
                return out
            z = int(rows.max())
            c = x[z].copy()
            out[z] = c
            x -= scale(c, kl[z], self.E)

    def from_kl(self, coords: np.ndarray) -> np.ndarray:
        kl = self.kl_basis
        out = self.zero()
        for z in np.flatnonzero(coords.any(axis=1)):
            out += scale(coords[z], kl[z], self.E)
        return out

    # -- actions and structure constants ---------------------------------------

    def left_action(self, i: int) -> np.ndarray:
        """``M[w, z]``: coefficient of ``C'_z`` in ``C'_{s_i} C'_w``."""
        if i not in self._left_actions:
            kl = self.kl_basis
            self._left_actions[i] = np.stack([self.to_kl(self.left_C(kl[t], i)) for t in range(self.N)])
        return self._left_actions[i]

    def right_action(self, i: int) -> np.ndarray:
        """``M[w, z]``: coefficient of ``C'_z`` in ``C'_w C'_{s_i}``."""
        if i not in self._right_actions:
            kl = self.kl_basis
            self._right_actions[i] = np.stack([self.to_kl(self.right_C(kl[t], i)) for t in range(self.N)])
        return self._right_actions[i]

    def left_action_of(self, x: np.ndarray) -> np.ndarray:
        """``M[w, z]``: coefficient of ``C'_z`` in ``x C'_w`` for an element ``x`` in T coordinates."""
        kl = self.kl_basis
        return np.stack([self.to_kl(self.multiply(x, kl[t])) for t in range(self.N)])

    def right_action_of(self, x: np.ndarray) -> np.ndarray:
        kl = self.kl_basis
        return np.stack([self.to_kl(self.multiply(kl[t], x)) for t in range(self.N)])

    @property
    def structure_table(self) -> np.ndarray:
        """``H[x, y, z]``: coefficient of ``C'_z`` in ``C'_x C'_y``.

        Built from ``C'_s C'_{x'} = C'_x + sum_z m_z C'_z`` with ``x = s x'``.
        """
        if self._table is None:
            if self.d > self.config.table_max_rank:
                raise ResourceLimitError(
                    f"full structure tables are limited to rank {self.config.table_max_rank}"
                )
            N, E = self.N, self.E
            table = np.zeros((N, N, N, self.K), dtype=np.int64)
            table[0, np.arange(N), np.arange(N), E] = 1
            for x in range(1, N):
                i = int(np.flatnonzero(self.left_down[:, x])[0])
                prev = int(self.left_perm[i, x])
                action = self.left_action(i)
                acc = poly_matmul(table[prev], action, E)
                for z in np.flatnonzero(action[prev].any(axis=1)):
                    if z != x:
                        acc -= scale(action[prev, z], table[z], E)
                table[x] = acc
            self._table = table
        return self._table

    def structure_constants(
        self, x: SignedPermutation, y: SignedPermutation
    ) -> dict[SignedPermutation, LaurentPoly]:
        """``z -> h_{x,y}^z`` (nonzero entries only)."""
        if self.d <= self.config.table_max_rank:
            row = self.structure_table[self.index[x], self.index[y]]
        else:
            row = self.to_kl(self.multiply(self.C(x), self.C(y)))
        return self.to_dict(row)
