"""Kauffman bracket and Jones polynomial of planar diagram (PD) codes.

A crossing ``(a, b, c, d)`` lists its four arc labels counterclockwise,
starting from the incoming under-arc; the under-strand runs a -> c and the
over-strand joins b and d.  The A-smoothing joins a-b and c-d.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .laurent import LaurentPoly

DELTA = LaurentPoly({2: -1, -2: -1})

# states are enumerated in blocks of this many to bound memory
_BLOCK = 1 << 13


class PDError(ValueError):
    pass


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple[tuple[int, int, int, int], ...]
    free_loops: int = 0
    signs: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(tuple(x) for x in self.crossings))
        if self.signs is not None:
            object.__setattr__(self, "signs", tuple(self.signs))
            if len(self.signs) != len(self.crossings):
                raise PDError("one sign per crossing required")
        counts = Counter(lab for x in self.crossings for lab in x)
        bad = sorted(lab for lab, c in counts.items() if c != 2)
        if bad:
            raise PDError(f"arc labels must occur exactly twice; offending: {bad}")
        if any(len(x) != 4 for x in self.crossings):
            raise PDError("every crossing needs four arc labels")
        if self.free_loops < 0:
            raise PDError("free loop count must be non-negative")

    @property
    def oriented(self) -> bool:
        return self.signs is not None

    def __len__(self) -> int:
        return len(self.crossings)

    def component_count(self) -> int:
        parent: dict[int, int] = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b, c, d in self.crossings:
            parent[find(a)] = find(c)
            parent[find(b)] = find(d)
        roots = {find(x) for x in list(parent)}
        return len(roots) + self.free_loops

    def disjoint_union_unknot(self) -> LinkDiagram:
        return LinkDiagram(self.crossings, self.free_loops + 1, self.signs)

    def __str__(self) -> str:
        return format_pd(self)


def _state_counts(crossings) -> Counter:
    """Counter of (number of B-smoothings, loop count) over all states."""
    c = len(crossings)
    slots = 4 * c
    where: dict[int, list[int]] = {}
    for k, x in enumerate(crossings):
        for p, lab in enumerate(x):
            where.setdefault(lab, []).append(4 * k + p)
    arc = np.empty(slots, dtype=np.int64)
    for s1, s2 in where.values():
        arc[s1], arc[s2] = s2, s1

    base = np.repeat(np.arange(c, dtype=np.int64) * 4, 4)
    a_partner = base + np.array([1, 0, 3, 2] * c)
    b_partner = base + np.array([3, 2, 1, 0] * c)
    steps = max(1, int(np.ceil(np.log2(slots)))) + 1
    ident = np.arange(slots, dtype=np.int64)
    counts: Counter = Counter()
    total = 1 << c
    for lo in range(0, total, _BLOCK):
        states = np.arange(lo, min(lo + _BLOCK, total), dtype=np.int64)
        # bit k of the state set -> B-smoothing at crossing k
        bits = (states[:, None] >> np.arange(c, dtype=np.int64)) & 1
        slot_bits = np.repeat(bits, 4, axis=1).astype(bool)
        sm = np.where(slot_bits, b_partner, a_partner)
        ptr = arc[sm]
        lab = np.broadcast_to(ident, ptr.shape).copy()
        for _ in range(steps):
            lab = np.minimum(lab, np.take_along_axis(lab, ptr, axis=1))
            ptr = np.take_along_axis(ptr, ptr, axis=1)
        loops = (lab == ident).sum(axis=1) // 2
        nb = bits.sum(axis=1)
        keys, freq = np.unique(nb * (slots + 1) + loops, return_counts=True)
        for key, f in zip(keys.tolist(), freq.tolist()):
            counts[divmod(key, slots + 1)] += f
    return counts


def kauffman_bracket(L: LinkDiagram) -> LaurentPoly:
    """State sum over all 2^c smoothings, normalized so the unknot is 1."""
    c = len(L.crossings)
    if c == 0:
        if L.free_loops == 0:
            raise PDError("bracket of the empty diagram is undefined")
        return DELTA ** (L.free_loops - 1)
    by_loops: dict[int, dict[int, int]] = {}
    for (nb, loops), f in _state_counts(L.crossings).items():
        row = by_loops.setdefault(loops + L.free_loops - 1, {})
        row[c - 2 * nb] = row.get(c - 2 * nb, 0) + f
    total = LaurentPoly()
    for power, row in by_loops.items():
        total = total + LaurentPoly(row) * DELTA ** power
    return total


def writhe(L: LinkDiagram) -> int:
    if L.signs is None:
        raise PDError("writhe needs an oriented diagram")
    return sum(L.signs)


def jones(L: LinkDiagram) -> LaurentPoly:
    """(-A^3)^(-writhe) times the bracket; substitute t = A^-4 for the usual form."""
    w = writhe(L)
    return LaurentPoly.monomial(-1 if w % 2 else 1, -3 * w) * kauffman_bracket(L)


def certifies_not_unknot(L: LinkDiagram) -> bool:
    """True proves ``L`` is knotted; False is inconclusive."""
    if L.component_count() != 1:
        raise PDError(f"expected a knot, got {L.component_count()} components")
    return jones(L) != 1


# --------------------------------------------------------------------------
# text format


def format_pd(L: LinkDiagram) -> str:
    parts = [f"X({a},{b},{c},{d})" for a, b, c, d in L.crossings]
    if L.free_loops:
        parts.append(f"O({L.free_loops})")
    return " ".join(parts)


_PD_ITEM = re.compile(r"\s*([XO])\s*[\(\[]([^\)\]]*)[\)\]]\s*,?")


def parse_pd(text: str) -> LinkDiagram:
    """Parse ``X(a,b,c,d) ... [O(k)]`` and recover crossing signs.

    Each component that passes under somewhere is oriented by its under
    passages (a -> c).  A component that only passes over is oriented by
    the usual label convention (labels increase along the component).
    """
    crossings = []
    free = 0
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _PD_ITEM.match(text, pos)
        if not m:
            raise PDError(f"cannot parse PD code at {text[pos:pos + 20]!r}")
        try:
            args = [int(t) for t in m.group(2).replace(",", " ").split()]
        except ValueError:
            raise PDError(f"non-integer label in {m.group(0).strip()!r}") from None
        if m.group(1) == "X":
            if len(args) != 4:
                raise PDError(f"crossing needs four labels: {m.group(0).strip()!r}")
            crossings.append(tuple(args))
        else:
            if len(args) != 1:
                raise PDError(f"O(k) takes one count: {m.group(0).strip()!r}")
            free += args[0]
        pos = m.end()
    unsigned = LinkDiagram(tuple(crossings), free)
    return LinkDiagram(unsigned.crossings, free, _orient(unsigned.crossings))


def _orient(crossings) -> tuple[int, ...]:
    where: dict[int, list[tuple[int, int]]] = {}
    for k, x in enumerate(crossings):
        for p, lab in enumerate(x):
            where.setdefault(lab, []).append((k, p))
    over_in: dict[int, int] = {}
    done: set[tuple[int, int]] = set()

    def run(k, p):
        # travel from slot p through crossing k, then along arcs
        while (k, p) not in done:
            done.add((k, p))
            q = (p + 2) % 4
            done.add((k, q))
            if p in (1, 3):
                over_in[k] = p
            lab = crossings[k][q]
            s1, s2 = where[lab]
            k, p = s2 if s1 == (k, q) else s1

    for k in range(len(crossings)):
        if (k, 0) not in done:
            run(k, 0)
    for k, x in enumerate(crossings):
        if k in over_in:
            continue
        b, d = x[1], x[3]
        # label convention: the over strand runs from d to b when b follows d
        run(k, 3 if (b - d == 1 or d - b > 1) else 1)
    return tuple(1 if over_in[k] == 3 else -1 for k in range(len(crossings)))
