"""Deciding whether a tangle diagram is a unit of the string link monoid.

Units are exactly the braids.  A verdict is one of

* ``Unit``: a braid representative was found by rewriting, together with
  an inverse that has been checked on both sides;
* ``NotUnit``: the diagram is not a string link, or some one- or two-strand
  sub-link has a knotted closure (a braid cannot have one);
* ``Unknown``: neither could be established.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Literal, Union

from .braid import BraidWord, braid_inverse, format_word, is_trivial, to_string_link
from .invariants import jones
from .laurent import LaurentPoly
from .stringlink import (
    SliceDiagram,
    closure,
    compose,
    delete_strands,
    is_monotone,
    monotonize_search,
    reflect,
    validate,
)

DEFAULT_BUDGET = 10_000


@dataclass(frozen=True)
class NotAStringLink:
    component: int
    kind = "not-a-string-link"

    def detail(self) -> str:
        return f"component:{self.component}"


@dataclass(frozen=True)
class KnottedStrand:
    strand: int
    jones: LaurentPoly
    kind = "knotted-strand"

    def detail(self) -> str:
        return f"strand:{self.strand}"


@dataclass(frozen=True)
class BadPairClosure:
    pair: tuple[int, int]
    jones: LaurentPoly
    kind = "bad-pair-closure"

    def detail(self) -> str:
        return f"pair:{self.pair[0]},{self.pair[1]}"


Certificate = Union[NotAStringLink, KnottedStrand, BadPairClosure]


@dataclass(frozen=True)
class Unit:
    word: BraidWord
    inverse: BraidWord
    witness: SliceDiagram


@dataclass(frozen=True)
class NotUnit:
    certificate: Certificate


@dataclass(frozen=True)
class Unknown:
    reason: Literal["budget", "no-certificate"]


UnitVerdict = Union[Unit, NotUnit, Unknown]


@dataclass(frozen=True)
class InverseCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def _braid_of(d: SliceDiagram, budget: int) -> tuple[BraidWord | None, bool]:
    word = is_monotone(d)
    if word is not None:
        return word, False
    res = monotonize_search(d, budget)
    return res.word, res.exhausted


def verify_inverse(d: SliceDiagram, candidate: BraidWord, budget: int = DEFAULT_BUDGET) -> InverseCheck:
    """Check d * candidate and candidate * d are both the identity braid."""
    c = to_string_link(candidate)
    if candidate.strands != d.boundary:
        return InverseCheck(False, "strand-mismatch")
    for product in (compose(d, c), compose(c, d)):
        word, exhausted = _braid_of(product, budget)
        if word is None:
            return InverseCheck(False, "budget" if exhausted else "not-monotonized")
        if not is_trivial(word):
            return InverseCheck(False, "refuted")
    return InverseCheck(True)


def reflect_inverse_candidate(d: SliceDiagram) -> SliceDiagram:
    return reflect(d)


def obstruction_battery(d: SliceDiagram) -> Certificate | None:
    """First certificate in the fixed order: single strands, then pairs (i < j)."""
    n = d.boundary
    for i in range(1, n + 1):
        sub = delete_strands(d, {i}) if n > 1 else d
        v = jones(closure(sub, "trace"))
        if v != 1:
            return KnottedStrand(i, v)
    for i, j in combinations(range(1, n + 1), 2):
        sub = delete_strands(d, {i, j}) if n > 2 else d
        v = jones(closure(sub, "plait"))
        if v != 1:
            return BadPairClosure((i, j), v)
    return None


def decide_unit(d: SliceDiagram, budget: int = DEFAULT_BUDGET) -> UnitVerdict:
    trace = validate(d)
    if not trace.is_string_link():
        bad = next(k for k, s in enumerate(trace.strands, start=1) if s.start[0] == s.end[0])
        return NotUnit(NotAStringLink(bad))
    word, exhausted = _braid_of(d, budget)
    if word is not None:
        inverse = braid_inverse(word)
        check = verify_inverse(d, inverse, budget)
        if check:
            return Unit(word, inverse, to_string_link(word))
        exhausted = exhausted or check.reason == "budget"
    cert = obstruction_battery(d)
    if cert is not None:
        return NotUnit(cert)
    return Unknown("budget" if exhausted else "no-certificate")


def format_verdict(v: UnitVerdict) -> str:
    if isinstance(v, Unit):
        return f"UNIT inverse={format_word(v.inverse)}"
    if isinstance(v, NotUnit):
        c = v.certificate
        value = str(c.jones) if hasattr(c, "jones") else "-"
        return f"NOT-UNIT certificate={c.kind} detail={c.detail()} jones={value}"
    return f"UNKNOWN reason={v.reason}"
