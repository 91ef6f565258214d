"""Undirected simple graphs with dense integer node ids.

Nodes are ``0 .. n-1``. The original token each node was read from is kept
in :attr:`Graph.labels` so results can be reported in the input's terms.
Edges are normalized to ``(min, max)`` tuples.
"""
from __future__ import annotations

import io
import os
from typing import IO, Iterable, Iterator

from .exceptions import DomainError, ParseError, PreconditionError, SelfLoopError

Edge = tuple[int, int]

COMMENT_PREFIXES = ("#", "%")


def edge(u: int, v: int) -> Edge:
    """Return the canonical ``(min, max)`` form of the undirected edge ``u-v``."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Mutable undirected simple graph.

    Edges are kept both as per-node neighbor sets (for O(1) ``has_edge``)
    and as a flat list with a position index, so a uniformly random edge
    can be drawn in O(1) and removal is a swap-with-last.
    """

    def __init__(self, node_count: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if node_count < 0:
            raise DomainError("node_count must be non-negative")
        self._adj: list[set[int]] = [set() for _ in range(node_count)]
        self._edges: list[Edge] = []
        self._pos: dict[Edge, int] = {}
        self.version = 0
        if labels is None:
            labels = [str(i) for i in range(node_count)]
        elif len(labels) != node_count:
            raise DomainError(f"got {len(labels)} labels for {node_count} nodes")
        self.labels: list[str] = list(labels)
        for u, v in edges:
            self.add_edge(u, v)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], node_count: int | None = None) -> Graph:
        edges = list(edges)
        if node_count is None:
            node_count = 1 + max((max(e) for e in edges), default=-1)
        return cls(node_count, edges)

    # -- size and lookup ---------------------------------------------------

    @property
    def node_count(self) -> int:
        return len(self._adj)

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def __len__(self) -> int:
        return len(self._adj)

    def nodes(self) -> range:
        return range(len(self._adj))

    @property
    def edge_list(self) -> list[Edge]:
        """Edges in internal storage order. Do not mutate."""
        return self._edges

    def edges(self) -> list[Edge]:
        return sorted(self._edges)

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self._edges)

    def neighbors(self, v: int) -> set[int]:
        self._check_node(v)
        return self._adj[v]

    def degree(self, v: int) -> int:
        self._check_node(v)
        return len(self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def degree_sequence(self) -> list[int]:
        return sorted(len(a) for a in self._adj)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_node(u)
        self._check_node(v)
        return v in self._adj[u]

    def label_index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    def _check_node(self, v: int) -> None:
        if not 0 <= v < len(self._adj):
            raise DomainError(f"node {v} out of range [0, {len(self._adj)})")

    # -- mutation ----------------------------------------------------------

    def add_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        if u == v:
            raise PreconditionError(f"self-loop ({u}, {v}) not allowed")
        if v in self._adj[u]:
            raise PreconditionError(f"edge {edge(u, v)} already present")
        e = edge(u, v)
        self._adj[u].add(v)
        self._adj[v].add(u)
        self._pos[e] = len(self._edges)
        self._edges.append(e)
        self.version += 1

    def remove_edge(self, u: int, v: int) -> None:
        self._check_node(u)
        self._check_node(v)
        e = edge(u, v)
        idx = self._pos.pop(e, None)
        if idx is None:
            raise PreconditionError(f"edge {e} not present")
        last = self._edges.pop()
        if idx < len(self._edges):
            self._edges[idx] = last
            self._pos[last] = idx
        self._adj[u].discard(v)
        self._adj[v].discard(u)
        self.version += 1

    def copy(self) -> Graph:
        g = Graph.__new__(Graph)
        g._adj = [set(a) for a in self._adj]
        g._edges = list(self._edges)
        g._pos = dict(self._pos)
        g.version = 0
        g.labels = list(self.labels)
        return g

    def same_edges(self, other: Graph) -> bool:
        return self.node_count == other.node_count and self._pos.keys() == other._pos.keys()

    def __repr__(self) -> str:
        return f"Graph(nodes={self.node_count}, edges={self.edge_count})"


# -- edge-list I/O -----------------------------------------------------------


def _lines(source) -> Iterator[str]:
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    if isinstance(source, str):
        source = io.StringIO(source)
    for raw in source:
        yield raw.decode("utf-8") if isinstance(raw, bytes) else raw


def parse_edge_list(source: str | bytes | IO) -> Graph:
    """Parse a whitespace-separated edge list into a :class:`Graph`.

    Each non-blank line not starting with ``#`` or ``%`` must hold two node
    labels; extra columns (weights, timestamps) are ignored. Labels get dense
    ids in order of first appearance. Repeated edges, in either direction,
    are merged.

    Raises:
        SelfLoopError: a line joins a label to itself.
        ParseError: a line has fewer than two fields.
    """
    ids: dict[str, int] = {}
    labels: list[str] = []
    edges: dict[Edge, None] = {}
    for lineno, raw in enumerate(_lines(source), start=1):
        line = raw.strip()
        if not line or line.startswith(COMMENT_PREFIXES):
            continue
        parts = line.split()
        if len(parts) < 2:
            raise ParseError(f"expected two node labels, got {line!r}", lineno)
        a, b = parts[0], parts[1]
        if a == b:
            raise SelfLoopError(f"self-loop on node {a!r}", lineno)
        for label in (a, b):
            if label not in ids:
                ids[label] = len(labels)
                labels.append(label)
        edges[edge(ids[a], ids[b])] = None
    return Graph(len(labels), edges, labels)


def read_edge_list(path: str | os.PathLike) -> Graph:
    with open(path, "rb") as f:
        return parse_edge_list(f)


def serialize_edge_list(g: Graph, use_labels: bool = False) -> str:
    """One ``"u v"`` line per edge, sorted by ``(min, max)`` dense id.

    With ``use_labels`` the original labels are written instead of ids, so
    the file can be matched node-for-node against the source it came from.
    """
    out = io.StringIO()
    for u, v in g.edges():
        if use_labels:
            out.write(f"{g.labels[u]} {g.labels[v]}\n")
        else:
            out.write(f"{u} {v}\n")
    return out.getvalue()


def write_edge_list(g: Graph, path: str | os.PathLike, use_labels: bool = False) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_edge_list(g, use_labels=use_labels))


def align_to(reference: Graph, other: Graph) -> Graph:
    """Re-index ``other`` so that nodes with equal labels get ``reference``'s ids.

    Used when two edge lists over the same node set were parsed separately
    and first-appearance ids therefore disagree.
    """
    index = reference.label_index()
    if sorted(other.labels) != sorted(reference.labels):
        missing = set(reference.labels) ^ set(other.labels)
        raise DomainError(f"node sets differ ({len(missing)} labels not shared)")
    remap = [index[label] for label in other.labels]
    return Graph(
        reference.node_count,
        ((remap[u], remap[v]) for u, v in other.edge_list),
        reference.labels,
    )
