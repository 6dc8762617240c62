"""(n,n)-tangle diagrams as left-to-right sequences of slice events.

A diagram is swept from the left face to the right face.  At every moment
the strands cross the sweep line at positions 1..w, numbered bottom to top.
Three elementary events change the picture:

``Cross(i, s)``
    the strands at positions i and i+1 swap.  For ``s = +1`` the strand
    entering at i+1 passes over, which is a positive crossing when both
    strands run left to right.
``Birth(i)``
    a new arc turns back to the right, occupying positions i and i+1;
    everything at i or above moves up by two.
``Death(i)``
    the strands at positions i and i+1 are joined by an arc turning back
    to the left.

A diagram without births and deaths is a braid diagram.
"""

from __future__ import annotations

import heapq
import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Literal, Sequence, Union

from .braid import BraidWord, Permutation


@dataclass(frozen=True, slots=True)
class Cross:
    position: int
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"crossing sign must be +1 or -1, got {self.sign}")


@dataclass(frozen=True, slots=True)
class Birth:
    position: int


@dataclass(frozen=True, slots=True)
class Death:
    position: int


SliceEvent = Union[Cross, Birth, Death]


class DiagramError(ValueError):
    """Base class for malformed diagrams; ``index`` is the offending event."""

    def __init__(self, message: str, index: int):
        super().__init__(f"event {index}: {message}")
        self.index = index


class WidthError(DiagramError):
    pass


class PositionError(DiagramError):
    pass


class ClosedLoopError(DiagramError):
    pass


class NotAStringLinkError(ValueError):
    pass


@dataclass(frozen=True)
class SliceDiagram:
    boundary: int
    events: tuple[SliceEvent, ...] = ()

    def __post_init__(self):
        if self.boundary < 0:
            raise ValueError(f"boundary count must be non-negative, got {self.boundary}")
        object.__setattr__(self, "events", tuple(self.events))

    def __len__(self) -> int:
        return len(self.events)

    def __mul__(self, other: SliceDiagram) -> SliceDiagram:
        return compose(self, other)

    def __str__(self) -> str:
        return format_slice(self)

    def widths(self) -> list[int]:
        """Width before each event, plus the final width."""
        w = self.boundary
        out = [w]
        for ev in self.events:
            if isinstance(ev, Birth):
                w += 2
            elif isinstance(ev, Death):
                w -= 2
            out.append(w)
        return out


def identity(n: int) -> SliceDiagram:
    if n < 1:
        raise ValueError(f"identity needs n >= 1, got {n}")
    return SliceDiagram(n, ())


# --------------------------------------------------------------------------
# strand graph

Node = tuple
Endpoint = tuple[str, int]

# crossing slots, counterclockwise: bottom-left, bottom-right, top-right, top-left
BL, BR, TR, TL = 0, 1, 2, 3
_SLOT_XY = {BL: (-1, -1), BR: (1, -1), TR: (1, 1), TL: (-1, 1)}


@dataclass
class _Graph:
    edges: list[tuple[Node, Node, str]]
    adj: dict[Node, list[int]]

    def add(self, u: Node, v: Node, kind: str) -> None:
        self.edges.append((u, v, kind))
        e = len(self.edges) - 1
        self.adj.setdefault(u, []).append(e)
        self.adj.setdefault(v, []).append(e)

    def other(self, e: int, u: Node) -> Node:
        a, b, _ = self.edges[e]
        return b if a == u else a


def _check_event(ev: SliceEvent, k: int, w: int) -> None:
    if isinstance(ev, Cross):
        if w < 2:
            raise WidthError(f"crossing needs width >= 2, width is {w}", k)
        if not 1 <= ev.position <= w - 1:
            raise PositionError(f"crossing position {ev.position} out of range for width {w}", k)
    elif isinstance(ev, Birth):
        if not 1 <= ev.position <= w + 1:
            raise PositionError(f"birth position {ev.position} out of range for width {w}", k)
    elif isinstance(ev, Death):
        if w < 2:
            raise WidthError(f"death would make width negative (width {w})", k)
        if not 1 <= ev.position <= w - 1:
            raise PositionError(f"death position {ev.position} out of range for width {w}", k)
    else:
        raise TypeError(f"unknown slice event {ev!r}")


def _build_graph(d: SliceDiagram) -> _Graph:
    g = _Graph([], {})
    current: list[Node] = [("L", i) for i in range(1, d.boundary + 1)]
    for node in current:
        g.adj[node] = []
    for k, ev in enumerate(d.events):
        _check_event(ev, k, len(current))
        i = ev.position
        if isinstance(ev, Cross):
            g.add(current[i - 1], ("X", k, BL), "seg")
            g.add(current[i], ("X", k, TL), "seg")
            g.add(("X", k, BL), ("X", k, TR), "pass")
            g.add(("X", k, TL), ("X", k, BR), "pass")
            current[i - 1] = ("X", k, BR)
            current[i] = ("X", k, TR)
        elif isinstance(ev, Birth):
            node = ("B", k)
            g.adj[node] = []
            current[i - 1:i - 1] = [node, node]
        else:
            node = ("D", k)
            g.add(current[i - 1], node, "seg")
            g.add(current[i], node, "seg")
            del current[i - 1:i + 1]
    if len(current) != d.boundary:
        raise WidthError(f"final width {len(current)} differs from boundary count {d.boundary}", len(d.events))
    for j, node in enumerate(current, start=1):
        g.add(node, ("R", j), "seg")
    return g


def _walk(g: _Graph, start: Node, first_edge: int) -> tuple[list[Node], list[int]]:
    """Follow a path or cycle; returns visited nodes and edges in order."""
    nodes = [start]
    edges = []
    u, e = start, first_edge
    while True:
        edges.append(e)
        v = g.other(e, u)
        if v == start:
            break
        nodes.append(v)
        nxt = [f for f in g.adj[v] if f != e]
        if not nxt:
            break
        u, e = v, nxt[0]
    return nodes, edges


# --------------------------------------------------------------------------
# component traces


@dataclass(frozen=True)
class StrandTrace:
    start: Endpoint
    end: Endpoint
    events: tuple[int, ...]


@dataclass(frozen=True)
class ComponentTrace:
    boundary: int
    strands: tuple[StrandTrace, ...]

    def __len__(self) -> int:
        return len(self.strands)

    def is_string_link(self) -> bool:
        return all(s.start[0] == "L" and s.end[0] == "R" for s in self.strands)

    def strand_of_left(self, i: int) -> int:
        for idx, s in enumerate(self.strands):
            if s.start == ("L", i):
                return idx
        raise KeyError(i)

    def endpoint_map(self) -> Permutation:
        """For a string link: left endpoint i -> right endpoint of its strand."""
        if not self.is_string_link():
            raise NotAStringLinkError("endpoint map is only defined for string links")
        images = [0] * self.boundary
        for s in self.strands:
            images[s.start[1] - 1] = s.end[1]
        return Permutation(tuple(images))


def _endpoint_order(node: Node) -> tuple[int, int]:
    return (0 if node[0] == "L" else 1, node[1])


def _trace(d: SliceDiagram) -> tuple[ComponentTrace, dict[Node, int]]:
    g = _build_graph(d)
    owner: dict[Node, int] = {}
    strands = []
    endpoints = sorted((u for u in g.adj if u[0] in ("L", "R")), key=_endpoint_order)
    for u in endpoints:
        if u in owner:
            continue
        nodes, _ = _walk(g, u, g.adj[u][0])
        idx = len(strands)
        events = []
        for j, node in enumerate(nodes):
            owner[node] = idx
            if node[0] in ("B", "D"):
                events.append(node[1])
            elif node[0] == "X" and j + 1 < len(nodes) and nodes[j + 1][:2] == node[:2]:
                # record a crossing passage at the slot where it is entered
                events.append(node[1])
        strands.append(StrandTrace(nodes[0], nodes[-1], tuple(events)))
    leftover = [u for u in g.adj if u not in owner]
    if leftover:
        k = min(u[1] for u in leftover)
        raise ClosedLoopError("diagram contains a closed loop", k)
    return ComponentTrace(d.boundary, tuple(strands)), owner


def validate(d: SliceDiagram) -> ComponentTrace:
    """Check widths, positions and absence of closed loops; trace the strands."""
    return _trace(d)[0]


def is_string_link(d: SliceDiagram) -> bool:
    return validate(d).is_string_link()


def _require_string_link(d: SliceDiagram) -> tuple[ComponentTrace, dict[Node, int]]:
    trace, owner = _trace(d)
    if not trace.is_string_link():
        raise NotAStringLinkError("diagram is not a string link")
    return trace, owner


# --------------------------------------------------------------------------
# monoid structure


def compose(d1: SliceDiagram, d2: SliceDiagram) -> SliceDiagram:
    """``d1`` followed by ``d2`` (d1 on the left)."""
    if d1.boundary != d2.boundary:
        raise ValueError(f"boundary mismatch: {d1.boundary} != {d2.boundary}")
    return SliceDiagram(d1.boundary, d1.events + d2.events)


def _mirror_event(ev: SliceEvent) -> SliceEvent:
    if isinstance(ev, Cross):
        return Cross(ev.position, -ev.sign)
    if isinstance(ev, Birth):
        return Death(ev.position)
    return Birth(ev.position)


def reflect(d: SliceDiagram) -> SliceDiagram:
    """Mirror image across the vertical middle plane."""
    return SliceDiagram(d.boundary, tuple(_mirror_event(ev) for ev in reversed(d.events)))


def _position_owners(d: SliceDiagram, owner: dict[Node, int]) -> list[list[int]]:
    """Strand index at each position, before each event and at the end."""
    comps = [owner[("L", i)] for i in range(1, d.boundary + 1)]
    out = []
    for k, ev in enumerate(d.events):
        out.append(list(comps))
        i = ev.position
        if isinstance(ev, Cross):
            comps[i - 1], comps[i] = comps[i], comps[i - 1]
        elif isinstance(ev, Birth):
            c = owner[("B", k)]
            comps[i - 1:i - 1] = [c, c]
        else:
            del comps[i - 1:i + 1]
    out.append(comps)
    return out


def delete_strands(d: SliceDiagram, keep: Iterable[int]) -> SliceDiagram:
    """Keep only the strands whose left endpoints are in ``keep``.

    Crossings with a deleted strand disappear and the remaining positions
    are renumbered.
    """
    keep = set(keep)
    if not keep:
        raise ValueError("keep set must be nonempty")
    if not keep <= set(range(1, d.boundary + 1)):
        raise ValueError(f"keep set {sorted(keep)} not within 1..{d.boundary}")
    trace, owner = _require_string_link(d)
    kept = {trace.strand_of_left(i) for i in keep}
    owners = _position_owners(d, owner)
    events: list[SliceEvent] = []
    for k, ev in enumerate(d.events):
        comps = owners[k]
        i = ev.position
        below = sum(1 for c in comps[: i - 1] if c in kept)
        if isinstance(ev, Cross):
            if comps[i - 1] in kept and comps[i] in kept:
                events.append(Cross(below + 1, ev.sign))
        elif isinstance(ev, Birth):
            if owner[("B", k)] in kept:
                events.append(Birth(below + 1))
        elif comps[i - 1] in kept:
            events.append(Death(below + 1))
    return SliceDiagram(len(keep), tuple(events))


def is_monotone(d: SliceDiagram) -> BraidWord | None:
    """The braid word of a diagram without births or deaths, else ``None``."""
    validate(d)
    if any(not isinstance(ev, Cross) for ev in d.events):
        return None
    return BraidWord(max(d.boundary, 1), tuple(ev.position * ev.sign for ev in d.events))


# --------------------------------------------------------------------------
# monotonization by bounded rewriting
#
# Events are encoded as (kind, position, sign) with kind 0 = cross,
# 1 = birth, 2 = death.  Every move below is a planar isotopy or a
# Reidemeister move, so the equivalence class never changes.

_X, _B, _D = 0, 1, 2


def _encode(ev: SliceEvent) -> tuple[int, int, int]:
    if isinstance(ev, Cross):
        return (_X, ev.position, ev.sign)
    if isinstance(ev, Birth):
        return (_B, ev.position, 0)
    return (_D, ev.position, 0)


def _block(e: tuple[int, int, int]) -> tuple[int, int, int]:
    """(first position, width consumed, width produced)."""
    kind, p, _ = e
    if kind == _X:
        return p, 2, 2
    if kind == _B:
        return p, 0, 2
    return p, 2, 0


def _commutations(e1, e2) -> list[tuple]:
    a1, in1, out1 = _block(e1)
    a2, in2, out2 = _block(e2)
    out = []
    if a2 + in2 <= a1:
        out.append(((e2[0], a2, e2[2]), (e1[0], a1 + out2 - in2, e1[2])))
    if a2 >= a1 + out1:
        out.append(((e2[0], a2 - out1 + in1, e2[2]), e1))
    return out


def _rotations(e1, e2) -> list[tuple]:
    """Slide a crossing around an adjacent turnback to the turnback's other end."""
    k1, p1, s1 = e1
    k2, p2, s2 = e2
    if k1 == _B and k2 == _X and abs(p2 - p1) == 1:
        return [((_B, p2, 0), (_X, p1, -s2))]
    if k1 == _X and k2 == _D and abs(p1 - p2) == 1:
        return [((_X, p2, -s1), (_D, p1, 0))]
    return []


def _reduce_pair(e1, e2):
    k1, p1, s1 = e1
    k2, p2, s2 = e2
    if k1 == _X and k2 == _X and p1 == p2 and s1 == -s2:
        return ()
    if k1 == _B and k2 == _D and abs(p1 - p2) == 1:
        return ()
    if k1 == _B and k2 == _X and p1 == p2:
        return (e1,)
    if k1 == _X and k2 == _D and p1 == p2:
        return (e2,)
    return None


def _reduce_triple(e1, e2, e3):
    (k1, p1, s1), (k2, p2, s2), (k3, p3, s3) = e1, e2, e3
    if k2 != _X:
        return None
    # a curl: turnback, one crossing, turnback
    if k1 == _B and k3 == _D and p1 == p3 and abs(p2 - p1) == 1:
        return ()
    if k1 == _B and k3 == _X and s2 == s3:
        if p2 == p1 + 1 and p3 == p1:
            return ((_B, p1 + 1, 0),)
        if p2 == p1 - 1 and p3 == p1:
            return ((_B, p1 - 1, 0),)
    if k1 == _X and k3 == _D and s1 == s2:
        if p1 == p3 and p2 == p3 + 1:
            return ((_D, p3 + 1, 0),)
        if p1 == p3 and p2 == p3 - 1:
            return ((_D, p3 - 1, 0),)
    return None


def _greedy_reduce(state: tuple) -> tuple:
    ev = list(state)
    changed = True
    while changed:
        changed = False
        j = 0
        while j < len(ev) - 1:
            r = _reduce_pair(ev[j], ev[j + 1])
            if r is not None:
                ev[j:j + 2] = r
                changed = True
                j = max(j - 2, 0)
                continue
            if j < len(ev) - 2:
                r = _reduce_triple(ev[j], ev[j + 1], ev[j + 2])
                if r is not None:
                    ev[j:j + 3] = r
                    changed = True
                    j = max(j - 2, 0)
                    continue
            j += 1
    return tuple(ev)


def _priority(state: tuple) -> tuple[int, int, int]:
    bd = 0
    spread = 0
    for j, e in enumerate(state):
        if e[0] == _X:
            continue
        bd += 1
        # distance from a birth to the next death after it
        if e[0] == _B:
            for k in range(j + 1, len(state)):
                if state[k][0] == _D:
                    spread += k - j
                    break
            else:
                spread += len(state) - j
    return bd, spread, len(state)


@dataclass(frozen=True)
class MonotonizeResult:
    word: BraidWord | None
    steps: int
    exhausted: bool
    """True when the step budget ran out before the search space did."""


def monotonize_search(d: SliceDiagram, budget: int = 10_000) -> MonotonizeResult:
    _require_string_link(d)
    n = d.boundary
    start = _greedy_reduce(tuple(_encode(ev) for ev in d.events))
    tie = itertools.count()
    heap = [(_priority(start), next(tie), start)]
    seen = {start}
    steps = 0
    while heap:
        prio, _, state = heapq.heappop(heap)
        if prio[0] == 0:
            return MonotonizeResult(BraidWord(n, tuple(p * s for _, p, s in state)), steps, False)
        if steps >= budget:
            return MonotonizeResult(None, steps, True)
        steps += 1
        for j in range(len(state) - 1):
            for pair in _commutations(state[j], state[j + 1]) + _rotations(state[j], state[j + 1]):
                nxt = _greedy_reduce(state[:j] + pair + state[j + 2:])
                if nxt not in seen:
                    seen.add(nxt)
                    heapq.heappush(heap, (_priority(nxt), next(tie), nxt))
    return MonotonizeResult(None, steps, False)


def monotonize(d: SliceDiagram, budget: int = 10_000) -> BraidWord | None:
    """Search for a braid representative of ``d`` by bounded rewriting.

    Moves: zig-zag cancellation, Reidemeister I at turnbacks and curls,
    Reidemeister II, sliding a turnback past a strand that lies entirely over
    or under it, moving a crossing around a turnback, and commutation of
    events with disjoint support.  ``None`` means no braid was
    reached, which proves nothing.
    """
    return monotonize_search(d, budget).word


# --------------------------------------------------------------------------
# closures


def closure(d: SliceDiagram, scheme: Literal["trace", "plait"] = "trace"):
    """Close the tangle into a link diagram.

    ``trace`` joins left i to right i around the outside; ``plait`` joins
    the adjacent endpoint pairs (1,2), (3,4), ... on each face.
    """
    from .invariants import LinkDiagram

    n = d.boundary
    if scheme == "plait" and n % 2:
        raise ValueError(f"plait closure needs an even boundary count, got {n}")
    if scheme not in ("trace", "plait"):
        raise ValueError(f"unknown closure scheme {scheme!r}")
    validate(d)
    g = _build_graph(d)
    if scheme == "trace":
        for i in range(1, n + 1):
            g.add(("R", i), ("L", i), "close")
    else:
        for i in range(1, n + 1, 2):
            g.add(("L", i), ("L", i + 1), "close")
            g.add(("R", i), ("R", i + 1), "close")

    slot_arc: dict[Node, int] = {}
    under_in: dict[int, int] = {}
    over_in: dict[int, int] = {}
    signs_by_event = {k: ev.sign for k, ev in enumerate(d.events) if isinstance(ev, Cross)}
    visited: set[Node] = set()
    free_loops = 0
    label = 1

    def starts():
        for i in range(1, n + 1):
            yield ("L", i)
        for i in range(1, n + 1):
            yield ("R", i)
        yield from list(g.adj)

    for u in starts():
        if u in visited:
            continue
        first = next(e for e in g.adj[u] if g.edges[e][2] != "close") if u[0] in "LR" else g.adj[u][0]
        nodes, edges = _walk(g, u, first)
        visited.update(nodes)
        passages = 0
        arc_of_edge = []
        for e, v in zip(edges, nodes):
            if g.edges[e][2] == "pass":
                k, s = v[1], v[2]
                # v is the slot through which this passage is entered
                if (s in (BL, TR)) == (signs_by_event[k] > 0):
                    under_in[k] = s
                else:
                    over_in[k] = s
                passages += 1
            arc_of_edge.append(passages)
        if passages == 0:
            free_loops += 1
            continue
        for e, rel in zip(edges, arc_of_edge):
            if g.edges[e][2] == "pass":
                continue
            lab = label + (rel % passages)
            for v in g.edges[e][:2]:
                if v[0] == "X":
                    slot_arc[v] = lab
        label += passages

    crossings = []
    signs = []
    for k in sorted(signs_by_event):
        u = under_in[k]
        crossings.append(tuple(slot_arc[("X", k, (u + j) % 4)] for j in range(4)))
        o = over_in[k]
        ox, oy = _direction(o)
        ux, uy = _direction(u)
        signs.append(1 if ox * uy - oy * ux > 0 else -1)
    return LinkDiagram(tuple(crossings), free_loops, tuple(signs))


def _direction(slot: int) -> tuple[int, int]:
    x0, y0 = _SLOT_XY[slot]
    x1, y1 = _SLOT_XY[(slot + 2) % 4]
    return x1 - x0, y1 - y0


# --------------------------------------------------------------------------
# text format


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


_HEADER = re.compile(r"tangle\s+n=(\d+)\s*$")


def parse_slice(text: str) -> SliceDiagram:
    """Parse the line-based slice format.

    ::

        tangle n=<int>
        x <i> +        # or -
        birth <i>
        death <i>
    """
    boundary = None
    events: list[SliceEvent] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        body = line.strip()
        if boundary is None:
            m = _HEADER.match(body)
            if not m:
                raise ParseError("expected header 'tangle n=<int>'", lineno, col)
            boundary = int(m.group(1))
            continue
        parts = body.split()
        cols = [m.start() + col for m in re.finditer(r"\S+", body)]
        op = parts[0]
        want = 3 if op == "x" else 2
        if op not in ("x", "birth", "death"):
            raise ParseError(f"unknown event {op!r}", lineno, col)
        if len(parts) != want:
            raise ParseError(f"'{op}' takes {want - 1} argument(s), got {len(parts) - 1}", lineno, col)
        if not parts[1].isdigit() or int(parts[1]) < 1:
            raise ParseError(f"bad position {parts[1]!r}", lineno, cols[1])
        pos = int(parts[1])
        if op == "x":
            if parts[2] not in ("+", "-"):
                raise ParseError(f"bad crossing sign {parts[2]!r}", lineno, cols[2])
            events.append(Cross(pos, 1 if parts[2] == "+" else -1))
        elif op == "birth":
            events.append(Birth(pos))
        else:
            events.append(Death(pos))
    if boundary is None:
        raise ParseError("missing header 'tangle n=<int>'", 1, 1)
    return SliceDiagram(boundary, tuple(events))


def format_slice(d: SliceDiagram) -> str:
    lines = [f"tangle n={d.boundary}"]
    for ev in d.events:
        if isinstance(ev, Cross):
            lines.append(f"x {ev.position} {'+' if ev.sign > 0 else '-'}")
        elif isinstance(ev, Birth):
            lines.append(f"birth {ev.position}")
        else:
            lines.append(f"death {ev.position}")
    return "\n".join(lines) + "\n"


def events_from_word(letters: Sequence[int]) -> tuple[Cross, ...]:
    return tuple(Cross(abs(a), 1 if a > 0 else -1) for a in letters)
