"""Degree-preserving two-edge rewiring.

A move takes edges ``(i, j)`` and ``(u, v)`` and reconnects their four
endpoints crosswise:

* Case I  -> ``(i, v)`` and ``(j, u)``
* Case II -> ``(i, u)`` and ``(j, v)``

Each case is feasible only when both new edges are absent and neither is a
self-loop. Every endpoint keeps its degree.
"""
from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field

from .exceptions import ConflictError, DomainError, PreconditionError
from .graph import Edge, Graph, edge


class CaseTag(enum.Enum):
    CASE_I = "I"
    CASE_II = "II"


class BothCasesPolicy(enum.Enum):
    """What to do when a pair of edges admits both reconnections."""

    PREFER_CASE_I = "prefer-1"
    PREFER_CASE_II = "prefer-2"
    RANDOM = "random"
    # Read "Case I holds but Case II does not" literally and drop the pair.
    REJECT = "reject"


def new_edges(e1: tuple[int, int], e2: tuple[int, int], tag: CaseTag) -> tuple[Edge, Edge]:
    (i, j), (u, v) = e1, e2
    if tag is CaseTag.CASE_I:
        return edge(i, v), edge(j, u)
    return edge(i, u), edge(j, v)


def case_feasible(g: Graph, e1: tuple[int, int], e2: tuple[int, int], tag: CaseTag) -> bool:
    (i, j), (u, v) = e1, e2
    if tag is CaseTag.CASE_I:
        a, b, c, d = i, v, j, u
    else:
        a, b, c, d = i, u, j, v
    return a != b and c != d and not g.has_edge(a, b) and not g.has_edge(c, d)


def judge_constraints(
    g: Graph,
    e1: tuple[int, int],
    e2: tuple[int, int],
    policy: BothCasesPolicy = BothCasesPolicy.PREFER_CASE_I,
    rng: random.Random | None = None,
) -> CaseTag | None:
    """Decide which reconnection, if any, is allowed for oriented edges ``e1``, ``e2``.

    Orientation matters: ``e1 = (i, j)`` and ``e2 = (u, v)`` fix which
    endpoint pairs Case I and Case II refer to.
    """
    (i, j), (u, v) = e1, e2
    if not (g.has_edge(i, j) and g.has_edge(u, v)):
        raise DomainError(f"edges {e1} and {e2} must both be present")
    if edge(i, j) == edge(u, v):
        raise DomainError(f"edges must be distinct, got {e1} twice")
    ok1 = case_feasible(g, e1, e2, CaseTag.CASE_I)
    ok2 = case_feasible(g, e1, e2, CaseTag.CASE_II)
    if ok1 and ok2:
        if policy is BothCasesPolicy.PREFER_CASE_I:
            return CaseTag.CASE_I
        if policy is BothCasesPolicy.PREFER_CASE_II:
            return CaseTag.CASE_II
        if policy is BothCasesPolicy.RANDOM:
            if rng is None:
                raise DomainError("the random both-cases policy needs an rng")
            return CaseTag.CASE_I if rng.random() < 0.5 else CaseTag.CASE_II
        return None
    if ok1:
        return CaseTag.CASE_I
    if ok2:
        return CaseTag.CASE_II
    return None


@dataclass(frozen=True)
class RewiringMove:
    e1: tuple[int, int]
    e2: tuple[int, int]
    tag: CaseTag
    # Graph.version the move was validated against.
    version: int

    @property
    def removed(self) -> tuple[Edge, Edge]:
        return edge(*self.e1), edge(*self.e2)

    @property
    def added(self) -> tuple[Edge, Edge]:
        return new_edges(self.e1, self.e2, self.tag)

    def touches(self) -> set[int]:
        return {*self.e1, *self.e2}


def make_move(
    g: Graph,
    e1: tuple[int, int],
    e2: tuple[int, int],
    policy: BothCasesPolicy = BothCasesPolicy.PREFER_CASE_I,
    rng: random.Random | None = None,
) -> RewiringMove | None:
    tag = judge_constraints(g, e1, e2, policy, rng)
    if tag is None:
        return None
    return RewiringMove(tuple(e1), tuple(e2), tag, g.version)


@dataclass
class EditLog:
    """Net difference between the original edge set and the current one."""

    removed_original: set[Edge] = field(default_factory=set)
    added_foreign: set[Edge] = field(default_factory=set)

    def record_removal(self, e: Edge) -> None:
        if e in self.added_foreign:
            self.added_foreign.discard(e)
        else:
            self.removed_original.add(e)

    def record_addition(self, e: Edge) -> None:
        if e in self.removed_original:
            self.removed_original.discard(e)
        else:
            self.added_foreign.add(e)

    def __len__(self) -> int:
        return len(self.removed_original)

    def copy(self) -> EditLog:
        return EditLog(set(self.removed_original), set(self.added_foreign))

    def to_json(self, labels: list[str] | None = None) -> dict:
        def fmt(edges):
            out = sorted(edges)
            if labels is not None:
                return [[labels[a], labels[b]] for a, b in out]
            return [list(e) for e in out]

        return {"removed": fmt(self.removed_original), "added": fmt(self.added_foreign)}


def apply_move(g: Graph, move: RewiringMove, log: EditLog | None = None) -> RewiringMove:
    """Apply ``move`` to ``g`` in place and return the move that undoes it.

    Raises:
        ConflictError: ``g`` was mutated after ``move`` was validated.
    """
    if move.version != g.version:
        raise ConflictError(
            f"move validated at graph version {move.version}, graph is at {g.version}"
        )
    removed, added = move.removed, move.added
    for e in removed:
        g.remove_edge(*e)
    try:
        for e in added:
            g.add_edge(*e)
    except PreconditionError:  # pragma: no cover - guarded by validation
        raise ConflictError(f"move {move} no longer applies") from None
    if log is not None:
        for e in removed:
            log.record_removal(e)
        for e in added:
            log.record_addition(e)
    (i, j), (u, v) = move.e1, move.e2
    if move.tag is CaseTag.CASE_I:
        inv1, inv2 = (i, v), (u, j)
    else:
        inv1, inv2 = (i, u), (j, v)
    return RewiringMove(inv1, inv2, move.tag, g.version)


def _oriented(e: Edge, rng: random.Random) -> tuple[int, int]:
    return (e[1], e[0]) if rng.random() < 0.5 else e


def random_feasible_move(
    g: Graph,
    rng: random.Random,
    policy: BothCasesPolicy = BothCasesPolicy.PREFER_CASE_I,
) -> RewiringMove | None:
    """Draw two distinct edges uniformly, orient each at random, and judge them.

    Returns ``None`` when the drawn pair admits no reconnection; callers retry.
    """
    m = g.edge_count
    if m < 2:
        raise DomainError(f"need at least two edges to rewire, graph has {m}")
    a, b = rng.sample(range(m), 2)
    edges = g.edge_list
    e1 = _oriented(edges[a], rng)
    e2 = _oriented(edges[b], rng)
    return make_move(g, e1, e2, policy, rng)


def all_feasible_moves(g: Graph) -> list[RewiringMove]:
    """Every distinct single rewiring of ``g``, under either case.

    Each unordered edge pair has exactly two crosswise reconnections, so
    a fixed orientation with both cases enumerates them all.
    """
    moves = []
    edges = g.edges()
    for x in range(len(edges)):
        for y in range(x + 1, len(edges)):
            for tag in CaseTag:
                if case_feasible(g, edges[x], edges[y], tag):
                    moves.append(RewiringMove(edges[x], edges[y], tag, g.version))
    return moves
