"""Registry of the benchmark social networks and their reference statistics.

Only the karate club ships with the package. The other edge lists are looked
up by file name in ``$KSHELL_DATA_DIR`` (searched first) and then in the
bundled ``data/`` directory.
"""
from __future__ import annotations

import hashlib
import logging
import os
from dataclasses import dataclass
from pathlib import Path

from .exceptions import DatasetError, VersionMismatchError
from .graph import Graph, read_edge_list
from .kshell import degeneracy, kshell_decompose

log = logging.getLogger(__name__)

DATA_ENV = "KSHELL_DATA_DIR"
BUNDLED_DIR = Path(__file__).parent / "data"


@dataclass(frozen=True)
class DatasetSpec:
    name: str
    filename: str
    expected_nodes: int
    expected_edges: int
    expected_max_shell: int
    sha256: str | None = None
    description: str = ""

    def expected(self) -> dict:
        return {
            "nodes": self.expected_nodes,
            "edges": self.expected_edges,
            "max_shell": self.expected_max_shell,
        }


DATASETS = {
    spec.name: spec
    for spec in [
        DatasetSpec(
            "karate", "karate.txt", 34, 78, 4,
            sha256="7fe7e99be759e60890d1b005655b9f62a45034acdbf071835c78e8d929269b89",
            description="Zachary's university karate club",
        ),
        DatasetSpec(
            "dolphin", "dolphins.txt", 62, 159, 4,
            description="Lusseau's bottlenose dolphins, Doubtful Sound",
        ),
        DatasetSpec(
            "thrones", "thrones.txt", 107, 352, 7,
            description="Game of Thrones character co-occurrence (Beveridge & Shan)",
        ),
        DatasetSpec(
            "facebook", "facebook.txt", 1266, 6451, 11,
            description="UC Irvine online student community, message subset",
        ),
    ]
}


def get_spec(name: str | DatasetSpec) -> DatasetSpec:
    if isinstance(name, DatasetSpec):
        return name
    try:
        return DATASETS[name.lower()]
    except KeyError:
        raise DatasetError(f"unknown dataset {name!r}; known: {', '.join(DATASETS)}") from None


def search_dirs() -> list[Path]:
    dirs = []
    if os.environ.get(DATA_ENV):
        dirs.append(Path(os.environ[DATA_ENV]))
    dirs.append(BUNDLED_DIR)
    return dirs


def dataset_path(spec: str | DatasetSpec) -> Path:
    spec = get_spec(spec)
    candidate = Path(spec.filename)
    if candidate.is_absolute():
        if candidate.exists():
            return candidate
    else:
        for d in search_dirs():
            if (d / candidate).exists():
                return d / candidate
    raise DatasetError(
        f"edge list for {spec.name!r} not found: put {spec.filename} in ${DATA_ENV}"
        f" (searched {', '.join(map(str, search_dirs()))})"
    )


def is_available(spec: str | DatasetSpec) -> bool:
    try:
        dataset_path(spec)
    except DatasetError:
        return False
    return True


def graph_stats(g: Graph) -> dict:
    return {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "max_shell": degeneracy(kshell_decompose(g)),
    }


def load_dataset(spec: str | DatasetSpec, strict: bool = True) -> Graph:
    """Load a registered network and check it against its reference statistics.

    With ``strict=False`` a statistics mismatch is logged instead of raised,
    so a differing copy of the data can still be used.
    """
    spec = get_spec(spec)
    path = dataset_path(spec)
    if spec.sha256 is not None:
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        if digest != spec.sha256:
            log.warning("%s: checksum %s differs from the reference copy", path, digest)
    g = read_edge_list(path)
    found = graph_stats(g)
    if found != spec.expected():
        err = VersionMismatchError(spec.name, spec.expected(), found)
        if strict:
            raise err
        log.warning("%s", err)
    return g
