"""Laurent polynomials in A with integer coefficients."""

from __future__ import annotations

import re
from typing import Iterable, Mapping, Union


class LaurentPoly:
    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}

    @classmethod
    def monomial(cls, coeff: int = 1, exp: int = 0) -> LaurentPoly:
        return cls({exp: coeff})

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, exp: int) -> int:
        return self._terms.get(exp, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms)

    def max_exp(self) -> int:
        return max(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    def __add__(self, other: Union[LaurentPoly, int]) -> LaurentPoly:
        other = _coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union[LaurentPoly, int]) -> LaurentPoly:
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> LaurentPoly:
        return _coerce(other) - self

    def __mul__(self, other: Union[LaurentPoly, int]) -> LaurentPoly:
        other = _coerce(other)
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            if len(self._terms) != 1 or abs(next(iter(self._terms.values()))) != 1:
                raise ValueError("only unit monomials have Laurent inverses")
            (e, c), = self._terms.items()
            m = -k
            return LaurentPoly({-e * m: c ** m})
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def substitute_t(self) -> dict[int, int]:
        """Rewrite in t = A^-4; fails unless every exponent is divisible by 4."""
        if any(e % 4 for e in self._terms):
            raise ValueError("exponents not divisible by 4; not a polynomial in t")
        return {-e // 4: c for e, c in sorted(self._terms.items(), key=lambda ec: -ec[0])}

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms})"

    def __str__(self) -> str:
        return format_terms(self._terms.items(), "A")


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


A = LaurentPoly.monomial(1, 1)


def format_terms(items: Iterable[tuple[int, int]], var: str) -> str:
    """Ascending exponents, e.g. ``-A^-4 + 1 + 2A^6``."""
    parts = []
    for e, c in sorted(items):
        if c == 0:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            body = ("" if mag == 1 else str(mag)) + var + ("" if e == 1 else f"^{e}")
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


_TERM = re.compile(r"([+-]?)\s*(\d*)\s*(?:(A)(?:\^(-?\d+))?)?")


def parse_laurent(text: str) -> LaurentPoly:
    s = text.strip()
    if s == "0":
        return LaurentPoly()
    acc: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos or (not m.group(2) and not m.group(3)):
            raise ValueError(f"cannot parse Laurent polynomial at {s[pos:]!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = int(m.group(2)) if m.group(2) else 1
        exp = (int(m.group(4)) if m.group(4) else 1) if m.group(3) else 0
        acc[exp] = acc.get(exp, 0) + sign * coeff
        pos = m.end()
        while pos < len(s) and s[pos] == " ":
            pos += 1
    return LaurentPoly(acc)
