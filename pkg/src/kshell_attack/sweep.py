"""Budget sweeps over (strategy, rounds, seed) and their CSV output.

The round count N is the controlled variable; the realized link change rate
is reported per record and is what results should be plotted against.
"""
from __future__ import annotations

import csv
import json
import math
import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

import yaml

from .attacks import AttackConfig, AttackResult, Strategy, run_attack
from .datasets import DATASETS, load_dataset
from .exceptions import DomainError, KShellError
from .graph import Graph, read_edge_list
from .kshell import kshell_decompose
from .rewiring import BothCasesPolicy

RECORD_COLUMNS = [
    "dataset", "method", "seed", "rounds", "lcr", "asr", "lpn",
    "changed_nodes", "changed_links", "wall_time", "error",
]
MEDIAN_COLUMNS = [
    "dataset", "method", "rounds", "seeds", "lcr", "asr", "lpn",
    "changed_nodes", "changed_links",
]


@dataclass
class SweepSpec:
    dataset: str
    strategies: list[Strategy]
    round_schedule: list[int]
    seeds: list[int]
    initial_temp: float = 1.0
    terminate_temp: float = 1e-6
    ha_quantile: float = 0.2
    both_cases_policy: BothCasesPolicy = BothCasesPolicy.PREFER_CASE_I
    compound: bool = False
    # Accept a dataset copy whose statistics differ from the reference.
    allow_mismatch: bool = False

    def __post_init__(self):
        self.strategies = [Strategy(s.lower() if isinstance(s, str) else s) for s in self.strategies]
        self.both_cases_policy = BothCasesPolicy(self.both_cases_policy)
        if not self.seeds:
            raise DomainError("a sweep needs at least one seed")
        if not self.strategies:
            raise DomainError("a sweep needs at least one strategy")
        if not self.round_schedule or any(
            b <= a for a, b in zip(self.round_schedule, self.round_schedule[1:])
        ):
            raise DomainError(f"round_schedule must be strictly increasing, got {self.round_schedule}")

    @classmethod
    def from_mapping(cls, d: dict) -> SweepSpec:
        d = dict(d)
        sa = d.pop("sa_params", None)
        if sa is not None:
            if isinstance(sa, dict):
                d.setdefault("initial_temp", sa["initial_temp"])
                d.setdefault("terminate_temp", sa["terminate_temp"])
            else:
                d.setdefault("initial_temp", sa[0])
                d.setdefault("terminate_temp", sa[1])
        unknown = set(d) - set(cls.__dataclass_fields__)
        if unknown:
            raise DomainError(f"unknown sweep keys: {', '.join(sorted(unknown))}")
        return cls(**d)

    def config(self, strategy: Strategy, rounds: int, seed: int) -> AttackConfig:
        return AttackConfig(
            strategy=strategy,
            rounds=rounds,
            initial_temp=self.initial_temp,
            terminate_temp=self.terminate_temp,
            seed=seed,
            both_cases_policy=self.both_cases_policy,
            ha_quantile=self.ha_quantile,
            compound=self.compound,
        )

    def cells(self) -> list[tuple[Strategy, int, int]]:
        return [(s, n, seed) for s in self.strategies for n in self.round_schedule for seed in self.seeds]


def load_sweep_config(path: str | Path) -> SweepSpec:
    """Read a YAML (or JSON) sweep description."""
    with open(path, encoding="utf-8") as f:
        return SweepSpec.from_mapping(yaml.safe_load(f))


def cell_name(strategy: Strategy, rounds: int, seed: int) -> str:
    return f"{strategy.value}-n{rounds}-s{seed}"


@dataclass
class CellOutcome:
    record: dict
    result: AttackResult | None = None


def run_cell(g: Graph, dataset: str, cfg: AttackConfig) -> CellOutcome:
    record = {
        "dataset": dataset,
        "method": cfg.strategy.value,
        "seed": cfg.seed,
        "rounds": cfg.rounds,
    }
    start = time.perf_counter()
    try:
        result = run_attack(g, cfg)
    except KShellError as exc:
        record.update(
            lcr=math.nan, asr=math.nan, lpn=None, changed_nodes=None, changed_links=None,
            wall_time=time.perf_counter() - start, error=f"{type(exc).__name__}: {exc}",
        )
        return CellOutcome(record)
    m = result.metrics
    record.update(
        lcr=m.lcr, asr=m.asr, lpn=m.lpn,
        changed_nodes=m.changed_nodes, changed_links=m.changed_links,
        wall_time=time.perf_counter() - start, error="",
    )
    return CellOutcome(record, result)


def _run_cell_star(args) -> CellOutcome:
    return run_cell(*args)


def _median(values: list) -> float | None:
    values = [v for v in values if v is not None and not (isinstance(v, float) and math.isnan(v))]
    return statistics.median(values) if values else None


def median_records(records: Iterable[dict]) -> list[dict]:
    groups: dict[tuple, list[dict]] = {}
    for r in records:
        if r.get("error"):
            continue
        groups.setdefault((r["dataset"], r["method"], r["rounds"]), []).append(r)
    out = []
    for (dataset, method, rounds), rs in sorted(groups.items()):
        out.append({
            "dataset": dataset,
            "method": method,
            "rounds": rounds,
            "seeds": len(rs),
            **{k: _median([r[k] for r in rs])
               for k in ("lcr", "asr", "lpn", "changed_nodes", "changed_links")},
        })
    return out


def _fmt(value) -> str:
    if value is None:
        return "nan"
    if isinstance(value, float):
        return repr(value)
    return str(value)


class CsvSink:
    """Append-only CSV writer that flushes after every row."""

    def __init__(self, path: Path, columns: list[str]):
        self._f = open(path, "w", newline="", encoding="utf-8")
        self._w = csv.writer(self._f)
        self._columns = columns
        self._w.writerow(columns)
        self._f.flush()

    def write(self, row: dict) -> None:
        self._w.writerow([_fmt(row.get(c)) for c in self._columns])
        self._f.flush()

    def close(self) -> None:
        self._f.close()

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        self.close()


def emit_case_study(g: Graph, result: AttackResult) -> dict:
    """Everything needed to redraw the original and attacked graphs side by side."""
    labels = g.labels
    before = result.original_shells
    after = kshell_decompose(result.final_graph)
    log = result.edit_log
    edited = {v for e in (*log.removed_original, *log.added_foreign) for v in e}
    m = result.metrics
    return {
        "config": result.config.as_dict(),
        "metrics": m.as_dict(),
        "original_shells": {labels[v]: before[v] for v in g.nodes()},
        "adversarial_shells": {labels[v]: after[v] for v in g.nodes()},
        "shell_delta": {labels[v]: after[v] - before[v] for v in g.nodes()},
        "edit_log": log.to_json(labels),
        # Nodes whose shell moved although none of their own links changed.
        "remote_changes": [labels[v] for v in g.nodes() if before[v] != after[v] and v not in edited],
    }


@dataclass
class SweepOutcome:
    records: list[dict] = field(default_factory=list)
    medians: list[dict] = field(default_factory=list)


def load_sweep_graph(spec: SweepSpec) -> Graph:
    """A registered dataset by name, or any edge-list file by path."""
    if spec.dataset.lower() in DATASETS:
        return load_dataset(spec.dataset, strict=not spec.allow_mismatch)
    return read_edge_list(spec.dataset)


def iter_sweep(spec: SweepSpec, graph: Graph | None = None, workers: int = 1) -> Iterator[CellOutcome]:
    """Run every cell, yielding outcomes in cell order."""
    if graph is None:
        graph = load_sweep_graph(spec)
    jobs = [(graph, spec.dataset, spec.config(*cell)) for cell in spec.cells()]
    if workers <= 1:
        for job in jobs:
            yield run_cell(*job)
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            yield from pool.map(_run_cell_star, jobs)


def run_sweep(
    spec: SweepSpec,
    out_dir: str | Path | None = None,
    graph: Graph | None = None,
    workers: int = 1,
) -> SweepOutcome:
    """Run a sweep; with ``out_dir`` also write records, medians and per-cell JSON."""
    outcome = SweepOutcome()
    sink = None
    if out_dir is not None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        sink = CsvSink(out_dir / "records.csv", RECORD_COLUMNS)
    try:
        for cell in iter_sweep(spec, graph, workers):
            outcome.records.append(cell.record)
            if sink is None:
                continue
            sink.write(cell.record)
            if cell.result is not None:
                cfg = cell.result.config
                stem = cell_name(cfg.strategy, cfg.rounds, cfg.seed)
                labels = cell.result.original.labels
                (out_dir / f"editlog-{stem}.json").write_text(
                    json.dumps(cell.result.edit_log.to_json(labels), indent=1)
                )
                (out_dir / f"case-study-{stem}.json").write_text(
                    json.dumps(emit_case_study(cell.result.original, cell.result), indent=1)
                )
    finally:
        if sink is not None:
            sink.close()
    outcome.medians = median_records(outcome.records)
    if out_dir is not None:
        with CsvSink(out_dir / "medians.csv", MEDIAN_COLUMNS) as med:
            for row in outcome.medians:
                med.write(row)
    return outcome
