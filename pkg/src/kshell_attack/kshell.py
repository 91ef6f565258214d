"""k-shell (core number) decomposition."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .exceptions import DomainError
from .graph import Graph


def kshell_decompose(g: Graph) -> list[int]:
    """Core number of every node, indexed by node id.

    Bucket-queue peeling (Batagelj & Zaversnik): nodes are kept sorted by
    current degree in a flat array with per-degree start offsets, so each
    decrement is an O(1) swap. Runs in O(|V| + |E|).
    """
    n = g.node_count
    if n == 0:
        return []
    adj = [g.neighbors(v) for v in range(n)]
    deg = [len(a) for a in adj]
    max_deg = max(deg)

    bin_start = [0] * (max_deg + 1)
    for d in deg:
        bin_start[d] += 1
    start = 0
    for d in range(max_deg + 1):
        count = bin_start[d]
        bin_start[d] = start
        start += count

    order = [0] * n
    pos = [0] * n
    for v in range(n):
        pos[v] = bin_start[deg[v]]
        order[pos[v]] = v
        bin_start[deg[v]] += 1
    for d in range(max_deg, 0, -1):
        bin_start[d] = bin_start[d - 1]
    bin_start[0] = 0

    for i in range(n):
        v = order[i]
        dv = deg[v]
        for u in adj[v]:
            du = deg[u]
            if du > dv:
                pu = pos[u]
                pw = bin_start[du]
                w = order[pw]
                if u != w:
                    order[pu] = w
                    pos[w] = pu
                    order[pw] = u
                    pos[u] = pw
                bin_start[du] += 1
                deg[u] = du - 1
    return deg


def kshell_oracle(g: Graph) -> list[int]:
    """Reference decomposition by literal repeated pruning.

    For k = 1, 2, ... strip every node of remaining degree < k until none
    is left; nodes still present get shell >= k. Quadratic-ish and only
    meant for cross-checking :func:`kshell_decompose`.
    """
    n = g.node_count
    alive = set(range(n))
    shell = [0] * n
    k = 0
    while alive:
        k += 1
        while True:
            doomed = [v for v in alive if sum(1 for u in g.neighbors(v) if u in alive) < k]
            if not doomed:
                break
            alive.difference_update(doomed)
        for v in alive:
            shell[v] = k
    return shell


def degeneracy(shells: list[int]) -> int:
    return max(shells, default=0)


@dataclass(frozen=True)
class ShellHistogram:
    counts: dict[int, int]
    fractions: dict[int, float]

    def __str__(self) -> str:
        return "\n".join(
            f"{k}: {self.counts[k]} ({self.fractions[k]:.3f})" for k in sorted(self.counts)
        )


def shell_histogram(shells: list[int], n: int | None = None) -> ShellHistogram:
    if n is None:
        n = len(shells)
    if len(shells) != n:
        raise DomainError(f"shell index covers {len(shells)} nodes, expected {n}")
    counts = dict(sorted(Counter(shells).items()))
    fractions = {k: c / n for k, c in counts.items()} if n else {}
    return ShellHistogram(counts, fractions)
