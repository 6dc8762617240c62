"""Reference diagrams and random generators for tests and benchmarks.

Every random rewrite here is an isotopy (or a Reidemeister move), so the
output is equivalent to the input by construction.
"""

from __future__ import annotations

import random
from typing import Sequence

from .braid import BraidWord
from .invariants import LinkDiagram, parse_pd
from .stringlink import Birth, Cross, Death, SliceDiagram, _commutations, _encode

# positive (right-handed) trefoil, all crossings +1
TREFOIL_PD = "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)"


def trefoil() -> LinkDiagram:
    return parse_pd(TREFOIL_PD)


def clasp(n: int = 2) -> SliceDiagram:
    """Two strands clasped three times around a turnback, plus n-2 straight strands on top.

    Strand 1 runs out to the right, turns back, and its returning arc twists
    three times with strand 2 before turning right again; its plait closure
    is the trefoil while each strand alone is unknotted.
    """
    if n < 2:
        raise ValueError("the clasp needs at least two strands")
    return SliceDiagram(n, (Birth(3), Cross(2, 1), Cross(2, 1), Cross(2, 1), Death(1)))


def random_word(rng: random.Random, n: int, length: int) -> BraidWord:
    if n < 2:
        return BraidWord(max(n, 1), ())
    return BraidWord(n, tuple(rng.choice((1, -1)) * rng.randint(1, n - 1) for _ in range(length)))


def braid_move(letters: Sequence[int], j: int) -> tuple[int, ...] | None:
    """Apply a braid relation to letters[j:j+3] (or a far commutation to letters[j:j+2])."""
    w = tuple(letters)
    if j + 3 <= len(w):
        x, y, z = w[j:j + 3]
        p, q, r = abs(x), abs(y), abs(z)
        if p == r and abs(p - q) == 1:
            e, d, g = (1 if t > 0 else -1 for t in (x, y, z))
            if e == d == g:
                return w[:j] + (e * q, e * p, e * q) + w[j + 3:]
            if g == -e:
                return w[:j] + (-e * q, d * p, e * q) + w[j + 3:]
    if j + 2 <= len(w):
        x, y = w[j:j + 2]
        if abs(abs(x) - abs(y)) >= 2:
            return w[:j] + (y, x) + w[j + 2:]
    return None


def related_word(rng: random.Random, b: BraidWord, steps: int = 20, max_len: int = 40) -> BraidWord:
    """A word equal to ``b`` in B_n, reached by random relation moves."""
    w = b.letters
    n = b.strands
    for _ in range(steps):
        move = rng.random()
        if move < 0.15 and n >= 2 and len(w) + 2 <= max_len:
            j = rng.randint(0, len(w))
            a = rng.choice((1, -1)) * rng.randint(1, n - 1)
            w = w[:j] + (a, -a) + w[j:]
        elif move < 0.25:
            for j in range(len(w) - 1):
                if w[j] == -w[j + 1]:
                    w = w[:j] + w[j + 2:]
                    break
        else:
            spots = [j for j in range(len(w)) if braid_move(w, j) is not None]
            if spots:
                w = braid_move(w, rng.choice(spots))
    return BraidWord(n, w)


def _widths(ev: Sequence[tuple[int, int, int]], n: int) -> list[int]:
    w = [n]
    for kind, _, _ in ev:
        w.append(w[-1] + (2 if kind == 1 else -2 if kind == 2 else 0))
    return w


def _decode(ev) -> tuple:
    out = []
    for kind, p, s in ev:
        out.append(Cross(p, s) if kind == 0 else Birth(p) if kind == 1 else Death(p))
    return tuple(out)


def insert_zigzag(rng: random.Random, d: SliceDiagram) -> SliceDiagram:
    ev = list(d.events)
    widths = d.widths()
    choices = [k for k in range(len(ev) + 1) if widths[k] >= 1]
    if not choices:
        return d
    k = rng.choice(choices)
    i = rng.randint(1, widths[k])
    pair = [Birth(i + 1), Death(i)] if rng.random() < 0.5 else [Birth(i), Death(i + 1)]
    return SliceDiagram(d.boundary, tuple(ev[:k] + pair + ev[k:]))


def scramble(rng: random.Random, d: SliceDiagram, steps: int) -> SliceDiagram:
    """Random commutations and turnback slides that keep the tangle's class."""
    ev = [_encode(e) for e in d.events]
    for _ in range(steps):
        if not ev:
            break
        widths = _widths(ev, d.boundary)
        j = rng.randrange(len(ev))
        kind, p, _ = ev[j]
        s = rng.choice((1, -1))
        w = widths[j]
        r = rng.random()
        if r < 0.5 and j + 1 < len(ev):
            options = _commutations(ev[j], ev[j + 1])
            if options:
                ev[j:j + 2] = list(rng.choice(options))
        elif kind == 1:
            if rng.random() < 0.5 and p >= 2:
                ev[j:j + 1] = [(1, p - 1, 0), (0, p, s), (0, p - 1, s)]
            elif p <= w:
                ev[j:j + 1] = [(1, p + 1, 0), (0, p, s), (0, p + 1, s)]
        elif kind == 2:
            if rng.random() < 0.5 and p >= 2:
                ev[j:j + 1] = [(0, p - 1, s), (0, p, s), (2, p - 1, 0)]
            elif p + 2 <= w:
                ev[j:j + 1] = [(0, p + 1, s), (0, p, s), (2, p + 1, 0)]
    return SliceDiagram(d.boundary, _decode(ev))


def hidden_braid(rng: random.Random, b: BraidWord, zigzags: int = 3, steps: int = 6) -> SliceDiagram:
    """``b`` as a diagram with turnbacks that must be rewritten away."""
    from .braid import to_string_link

    d = to_string_link(b)
    for _ in range(zigzags):
        d = insert_zigzag(rng, d)
    return scramble(rng, d, steps)


def add_kink(rng: random.Random, d: SliceDiagram) -> SliceDiagram:
    """Reidemeister I: a curl on a random strand at a random slice."""
    ev = list(d.events)
    widths = d.widths()
    choices = [k for k in range(len(ev) + 1) if widths[k] >= 1]
    k = rng.choice(choices)
    i = rng.randint(1, widths[k])
    s = rng.choice((1, -1))
    if rng.random() < 0.5:
        curl = [Birth(i + 1), Cross(i, s), Death(i + 1)]
    else:
        curl = [Birth(i), Cross(i + 1, s), Death(i)]
    return SliceDiagram(d.boundary, tuple(ev[:k] + curl + ev[k:]))


def add_r2(rng: random.Random, d: SliceDiagram) -> SliceDiagram | None:
    """Reidemeister II: push two adjacent strands across each other."""
    ev = list(d.events)
    widths = d.widths()
    choices = [k for k in range(len(ev) + 1) if widths[k] >= 2]
    if not choices:
        return None
    k = rng.choice(choices)
    i = rng.randint(1, widths[k] - 1)
    s = rng.choice((1, -1))
    return SliceDiagram(d.boundary, tuple(ev[:k] + [Cross(i, s), Cross(i, -s)] + ev[k:]))


def apply_r3(rng: random.Random, d: SliceDiagram) -> SliceDiagram | None:
    """Reidemeister III on a random crossing triple that admits it."""
    ev = d.events
    spots = []
    for j in range(len(ev) - 2):
        if all(isinstance(e, Cross) for e in ev[j:j + 3]):
            letters = tuple(e.position * e.sign for e in ev[j:j + 3])
            if abs(letters[0]) == abs(letters[2]) and abs(abs(letters[0]) - abs(letters[1])) == 1 \
                    and braid_move(letters, 0) is not None:
                spots.append(j)
    if not spots:
        return None
    j = rng.choice(spots)
    letters = braid_move(tuple(e.position * e.sign for e in ev[j:j + 3]), 0)
    new = tuple(Cross(abs(a), 1 if a > 0 else -1) for a in letters)
    return SliceDiagram(d.boundary, ev[:j] + new + ev[j + 3:])


def plant_r3(rng: random.Random, d: SliceDiagram) -> SliceDiagram:
    """Insert a crossing triple of the form s_i s_{i+1} s_i somewhere wide enough."""
    widths = d.widths()
    choices = [k for k in range(len(d.events) + 1) if widths[k] >= 3]
    if not choices:
        return d
    k = rng.choice(choices)
    i = rng.randint(1, widths[k] - 2)
    e, dl = rng.choice((1, -1)), rng.choice((1, -1))
    if rng.random() < 0.5:
        triple = (Cross(i, e), Cross(i + 1, e), Cross(i, e))
    else:
        triple = (Cross(i, e), Cross(i + 1, dl), Cross(i, -e))
    return SliceDiagram(d.boundary, d.events[:k] + triple + d.events[k:])
