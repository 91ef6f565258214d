"""Attack quality: success rate, link change rate, links per node."""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Sequence

from .exceptions import DomainError
from .graph import Graph
from .kshell import kshell_decompose


@dataclass(frozen=True)
class MetricReport:
    asr: float
    lcr: float
    lpn: float | None
    changed_nodes: int
    changed_links: int

    def as_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> str:
        lpn = "nan" if self.lpn is None else repr(self.lpn)
        return f"{self.asr!r},{self.lcr!r},{lpn},{self.changed_nodes},{self.changed_links}"


def changed_nodes(before: Sequence[int], after: Sequence[int]) -> int:
    if len(before) != len(after):
        raise DomainError(f"shell indices cover {len(before)} and {len(after)} nodes")
    return sum(1 for a, b in zip(before, after) if a != b)


def attack_success_rate(before: Sequence[int], after: Sequence[int], n: int | None = None) -> float:
    """Fraction of nodes whose shell index differs, in either direction."""
    if n is None:
        n = len(before)
    if len(before) != n or len(after) != n:
        raise DomainError(f"shell indices must both cover {n} nodes")
    if n == 0:
        return 0.0
    return changed_nodes(before, after) / n


def changed_links(original: Graph, adversarial: Graph) -> int:
    if original.node_count != adversarial.node_count:
        raise DomainError("graphs have different node counts")
    if original.edge_count != adversarial.edge_count:
        raise DomainError(
            f"edge counts differ ({original.edge_count} vs {adversarial.edge_count});"
            " only degree-preserving edits are measurable"
        )
    current = adversarial.edge_set()
    return sum(1 for e in original.edge_list if e not in current)


def link_change_rate(original: Graph, adversarial: Graph) -> float:
    """Fraction of original links absent from the adversarial graph."""
    m = original.edge_count
    return changed_links(original, adversarial) / m if m else 0.0


def link_per_node(changed_link_count: int, changed_node_count: int) -> float | None:
    """Changed links per successfully attacked node; ``None`` when no node changed."""
    if changed_node_count == 0:
        return None
    return changed_link_count / changed_node_count


def report(n_nodes: int, n_edges: int, node_changes: int, link_changes: int) -> MetricReport:
    return MetricReport(
        asr=node_changes / n_nodes if n_nodes else 0.0,
        lcr=link_changes / n_edges if n_edges else 0.0,
        lpn=link_per_node(link_changes, node_changes),
        changed_nodes=node_changes,
        changed_links=link_changes,
    )


def evaluate(
    original: Graph,
    adversarial: Graph,
    original_shells: Sequence[int] | None = None,
) -> MetricReport:
    """All metrics for ``adversarial`` measured against ``original``.

    Computed from set differences, independent of any edit log.
    """
    if original_shells is None:
        original_shells = kshell_decompose(original)
    after = kshell_decompose(adversarial)
    return report(
        original.node_count,
        original.edge_count,
        changed_nodes(original_shells, after),
        changed_links(original, adversarial),
    )


def lpn_identity_holds(r: MetricReport, n_nodes: int, n_edges: int, tol: float = 1e-12) -> bool:
    """Check LPN * ASR * |V| == LCR * |E| for a report with a defined LPN."""
    if r.lpn is None:
        return r.changed_nodes == 0
    return math.isclose(r.lpn * r.asr * n_nodes, r.lcr * n_edges, rel_tol=0, abs_tol=tol)
