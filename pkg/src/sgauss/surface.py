"""Ribbon graph of a signed Gauss paragraph and its boundary walks.

A paragraph with n symbols induces a 4-valent graph: one vertex per symbol,
one arc per consecutive-letter pair of each cyclic word (2n arcs in total).
Fixing, at every vertex, the counterclockwise order of the four incident arc
ends

    (out+, in-, in+, out-)

(the strand traversed with exponent -1 crosses the +1 strand from its left
to its right) turns the graph into a ribbon graph.  Tracing the boundary of
a regular neighborhood -- turn left at every crossing -- partitions the 4n
directed arc sides (darts) into Carter circles.  With b of them, the closed
surface obtained by capping the boundary has Euler characteristic
n - 2n + b, so its genus is (n + 2 - b) / 2; the paragraph is geometric
(realizable in the sphere) exactly when b = n + 2.

The opposite chirality would produce the mirror surface, which has the same
number of boundary walks, so b, the genus and the planarity verdict do not
depend on the convention (see ``RotationSystem.mirror``).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .model import NEGATIVE, POSITIVE, Occurrence, SignedLetter, SignedParagraph

__all__ = [
    "Arc",
    "Dart",
    "RotationSystem",
    "CarterCircle",
    "SurfaceSummary",
    "build_ribbon",
    "trace_circles",
    "summarize",
    "is_geometric",
    "carter_circles_symbolic",
]


class Arc(NamedTuple):
    """A directed edge between consecutive letters of a cyclic word (1-based id)."""

    id: int
    tail: Occurrence
    head: Occurrence


class Dart(NamedTuple):
    """One of the two directed sides of an arc."""

    arc: int
    forward: bool

    def reverse(self) -> "Dart":
        return Dart(self.arc, not self.forward)

    @property
    def signed_id(self) -> int:
        return self.arc if self.forward else -self.arc

    def __str__(self) -> str:
        return f"{self.signed_id:+d}"


@dataclass(frozen=True)
class RotationSystem:
    """Counterclockwise dart order at every crossing.

    ``rotations[sym]`` holds the quadruple (out+, in-, in+, out-) of darts
    based at ``sym``; incoming arc ends are represented by the reverse dart of
    the arriving arc, so each of the 4n darts occupies exactly one slot.
    """

    arcs: tuple[Arc, ...]
    rotations: dict[str, tuple[Dart, Dart, Dart, Dart]]

    @property
    def n(self) -> int:
        return len(self.rotations)

    def arc(self, id: int) -> Arc:
        return self.arcs[id - 1]

    def darts(self) -> Iterator[Dart]:
        for a in self.arcs:
            yield Dart(a.id, True)
            yield Dart(a.id, False)

    def vertex_of(self, d: Dart) -> str:
        """Symbol of the crossing the dart arrives at."""
        a = self.arc(d.arc)
        return (a.head if d.forward else a.tail).sym

    def successor(self, d: Dart) -> Dart:
        """Left-turn rule: the outgoing dart immediately preceding reverse(d)
        in the counterclockwise order at the crossing d arrives at."""
        rot = self.rotations[self.vertex_of(d)]
        return rot[rot.index(d.reverse()) - 1]

    def mirror(self) -> "RotationSystem":
        """Reverse every cyclic order; the mirror embedding."""
        return RotationSystem(
            self.arcs, {s: tuple(reversed(q)) for s, q in self.rotations.items()}
        )


@dataclass(frozen=True)
class CarterCircle:
    """One boundary walk: a cyclically-ordered orbit of darts."""

    darts: tuple[Dart, ...]

    def __len__(self) -> int:
        return len(self.darts)

    def signed_ids(self) -> tuple[int, ...]:
        return tuple(d.signed_id for d in self.darts)


class SurfaceSummary(NamedTuple):
    """Size data of the minimal realization surface."""

    n: int
    edges: int
    b: int
    euler: int
    genus: int

    @property
    def geometric(self) -> bool:
        return self.genus == 0

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": self.edges,
            "b": self.b,
            "euler": self.euler,
            "genus": self.genus,
            "geometric": self.geometric,
        }


def build_ribbon(p: SignedParagraph) -> RotationSystem:
    """The rotation system induced by ``p`` under the fixed chirality.

    The arc following the +1 occurrence of a symbol supplies its out+ end,
    the arc preceding the -1 occurrence supplies in-, and so on.
    """
    arcs: list[Arc] = []
    start_at: dict[tuple[str, int], Arc] = {}
    end_at: dict[tuple[str, int], Arc] = {}
    for wi, w in enumerate(p.words):
        length = len(w)
        for i in range(length):
            a, b = w[i], w.at(i + 1)
            arc = Arc(
                len(arcs) + 1,
                Occurrence(a.sym, a.exp, wi, i),
                Occurrence(b.sym, b.exp, wi, (i + 1) % length),
            )
            arcs.append(arc)
            start_at[(a.sym, a.exp)] = arc
            end_at[(b.sym, b.exp)] = arc
    rotations = {}
    for sym in sorted(p.alphabet):
        rotations[sym] = (
            Dart(start_at[(sym, POSITIVE)].id, True),  # out+
            Dart(end_at[(sym, NEGATIVE)].id, False),  # in-
            Dart(end_at[(sym, POSITIVE)].id, False),  # in+
            Dart(start_at[(sym, NEGATIVE)].id, True),  # out-
        )
    return RotationSystem(tuple(arcs), rotations)


def trace_circles(r: RotationSystem) -> list[CarterCircle]:
    """Orbits of the left-turn successor map; they partition all 4n darts.

    Circles are returned sorted by their least dart, each listed starting
    from it, so the output is deterministic.
    """
    seen: set[Dart] = set()
    circles: list[CarterCircle] = []
    for start in r.darts():
        if start in seen:
            continue
        orbit = [start]
        seen.add(start)
        d = r.successor(start)
        while d != start:
            orbit.append(d)
            seen.add(d)
            d = r.successor(d)
        circles.append(CarterCircle(tuple(orbit)))
    return circles


def summarize(p: SignedParagraph) -> SurfaceSummary:
    """Crossing count, Carter circle count, Euler characteristic and genus."""
    n = p.n
    b = len(trace_circles(build_ribbon(p)))
    twice_genus = n + 2 - b
    if twice_genus < 0 or twice_genus % 2:
        raise RuntimeError(
            f"internal consistency failure: n={n}, b={b} gives no integer genus"
        )
    return SurfaceSummary(n=n, edges=2 * n, b=b, euler=b - n, genus=twice_genus // 2)


def is_geometric(p: SignedParagraph) -> bool:
    """Whether ``p`` is realizable in the sphere (genus 0, i.e. b = n + 2)."""
    return summarize(p).genus == 0


def _letter_token(o: Occurrence) -> str:
    return o.sym if o.exp == POSITIVE else f"{o.sym}^-1"


def edge_token(d: Dart, r: RotationSystem) -> str:
    """Render a dart as a signed edge, e.g. ``+[a,b^-1]``."""
    a = r.arc(d.arc)
    sign = "+" if d.forward else "-"
    return f"{sign}[{_letter_token(a.tail)},{_letter_token(a.head)}]"


def carter_circles_symbolic(p: SignedParagraph) -> list[tuple[str, ...]]:
    """The Carter circles rendered as signed-edge words, in trace order."""
    r = build_ribbon(p)
    return [tuple(edge_token(d, r) for d in c.darts) for c in trace_circles(r)]
