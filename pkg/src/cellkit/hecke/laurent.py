"""Sparse exact Laurent polynomials in one variable q over the integers."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

import numpy as np

from cellkit.errors import ConventionError

Scalar = Union[int, "LaurentPoly"]


@dataclass(frozen=True)
class LaurentPoly:
    """Immutable ``sum c_e q^e``; stored as sorted (exponent, coefficient) pairs, no zeros."""

    terms: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        merged: dict[int, int] = {}
        for e, c in self.terms:
            merged[int(e)] = merged.get(int(e), 0) + int(c)
        object.__setattr__(self, "terms", tuple(sorted((e, c) for e, c in merged.items() if c)))

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> LaurentPoly:
        return cls(tuple(coeffs.items()))

    @classmethod
    def constant(cls, c: int) -> LaurentPoly:
        return cls(((0, c),))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls(((e, c),))

    @classmethod
    def from_dense(cls, row: Iterable[int], offset: int) -> LaurentPoly:
        return cls(tuple((k - offset, int(c)) for k, c in enumerate(row) if c))

    def to_dense(self, size: int, offset: int) -> np.ndarray:
        out = np.zeros(size, dtype=np.int64)
        for e, c in self.terms:
            k = e + offset
            if not 0 <= k < size:
                raise ConventionError(f"exponent {e} outside the dense window")
            out[k] = c
        return out

    def coeffs(self) -> dict[int, int]:
        return dict(self.terms)

    def coeff(self, e: int) -> int:
        return self.coeffs().get(e, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def min_degree(self) -> int:
        return self.terms[0][0]

    def max_degree(self) -> int:
        return self.terms[-1][0]

    def is_nonnegative(self) -> bool:
        return all(c > 0 for _, c in self.terms)

    def bar(self) -> LaurentPoly:
        return LaurentPoly(tuple((-e, c) for e, c in self.terms))

    def is_bar_invariant(self) -> bool:
        return self == self.bar()

    def __add__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        return LaurentPoly(self.terms + other.terms)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: Scalar) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: Scalar) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: Scalar) -> LaurentPoly:
        other = _coerce(other)
        return LaurentPoly(tuple((e1 + e2, c1 * c2) for e1, c1 in self.terms for e2, c2 in other.terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial()")
        out = LaurentPoly.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def divmod(self, other: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Long division from the top degree; the remainder has degree below other's span."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = other.terms[-1]
        low_e = other.terms[0][0]
        quotient: dict[int, int] = {}
        rem = self
        while rem.terms and rem.terms[-1][0] - lead_e >= rem.terms[0][0] - low_e:
            e, c = rem.terms[-1]
            if c % lead_c:
                break
            step = LaurentPoly.monomial(e - lead_e, c // lead_c)
            quotient[e - lead_e] = quotient.get(e - lead_e, 0) + c // lead_c
            rem = rem - step * other
        return LaurentPoly.from_dict(quotient), rem

    def exact_div(self, other: LaurentPoly) -> LaurentPoly:
        quotient, rem = self.divmod(other)
        if rem:
            raise ConventionError(f"{self} is not divisible by {other} (remainder {rem})")
        return quotient

    def __str__(self) -> str:
        return format_laurent(self)

    def __repr__(self) -> str:
        return f"LaurentPoly({format_laurent(self)!r})"


def _coerce(x: Scalar) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, np.integer)):
        return LaurentPoly.constant(int(x))
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


q = LaurentPoly.monomial(1)
q_inv = LaurentPoly.monomial(-1)


def format_laurent(p: LaurentPoly) -> str:
    """Ascending exponents, e.g. ``q^-1+q``, ``2*q^-2-3+q^4``; zero is ``0``."""
    if p.is_zero():
        return "0"
    pieces = []
    for e, c in p.terms:
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            power = "q" if e == 1 else f"q^{e}"
            body = power if mag == 1 else f"{mag}*{power}"
        pieces.append((sign, body))
    text = "".join(f"{s}{b}" for s, b in pieces)
    return text[1:] if text.startswith("+") else text


_TERM_RE = re.compile(r"([+-]?)\s*(\d+)?\s*(\*?\s*q(?:\^\(?(-?\d+)\)?)?)?")


def parse_laurent(text: str) -> LaurentPoly:
    compact = text.replace(" ", "")
    if compact in ("", "0"):
        return LaurentPoly()
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(compact):
        match = _TERM_RE.match(compact, pos)
        if not match or match.end() == pos or not (match.group(2) or match.group(3)):
            raise ValueError(f"cannot parse Laurent polynomial {text!r}")
        sign = -1 if match.group(1) == "-" else 1
        c = int(match.group(2)) if match.group(2) else 1
        if match.group(3):
            e = int(match.group(4)) if match.group(4) is not None else 1
        else:
            e = 0
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = match.end()
    return LaurentPoly.from_dict(coeffs)
