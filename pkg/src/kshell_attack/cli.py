"""Command-line entry point: ``kshell-attack <subcommand>``."""
from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from pathlib import Path

from .attacks import AttackConfig, run_attack
from .datasets import DATASETS, dataset_path, graph_stats, is_available
from .exceptions import KShellError
from .graph import align_to, read_edge_list, write_edge_list
from .kshell import kshell_decompose, shell_histogram
from .metrics import evaluate
from .sweep import _fmt, emit_case_study, load_sweep_config, run_sweep


def cmd_decompose(args) -> int:
    g = read_edge_list(args.edgelist)
    shells = kshell_decompose(g)
    out = csv.writer(sys.stdout, lineterminator="\n")
    out.writerow(["node_label", "shell"])
    for v in g.nodes():
        out.writerow([g.labels[v], shells[v]])
    hist = shell_histogram(shells, g.node_count)
    print(f"# nodes={g.node_count} edges={g.edge_count} max_shell={max(shells, default=0)}")
    print("# shell,count,fraction")
    for k, c in hist.counts.items():
        print(f"# {k},{c},{hist.fractions[k]:.4f}")
    return 0


def cmd_evaluate(args) -> int:
    original = read_edge_list(args.original)
    adversarial = align_to(original, read_edge_list(args.adversarial))
    r = evaluate(original, adversarial)
    print("asr,lcr,lpn,changed_nodes,changed_links")
    print(r.csv_row())
    return 0


def cmd_attack(args) -> int:
    g = read_edge_list(args.edgelist)
    cfg = AttackConfig(
        strategy=args.method,
        rounds=args.rounds,
        initial_temp=args.temp,
        terminate_temp=args.temp_min,
        seed=args.seed,
        both_cases_policy=args.both_cases,
        ha_quantile=args.ha_quantile,
        compound=args.compound,
    )
    result = run_attack(g, cfg)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    write_edge_list(result.final_graph, out / "adversarial.txt", use_labels=True)
    (out / "editlog.json").write_text(json.dumps(result.edit_log.to_json(g.labels), indent=1))
    (out / "case-study.json").write_text(json.dumps(emit_case_study(g, result), indent=1))
    with open(out / "trajectory.csv", "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(["round", "lcr", "asr", "lpn", "changed_nodes", "changed_links"])
        for n, r in enumerate(result.trajectory, start=1):
            w.writerow([n, _fmt(r.lcr), _fmt(r.asr), _fmt(r.lpn), r.changed_nodes, r.changed_links])
    m = result.metrics
    print(
        f"{cfg.strategy.name}: rounds={cfg.rounds} asr={m.asr:.4f} lcr={m.lcr:.4f} "
        f"lpn={_fmt(m.lpn)} -> {out}"
    )
    return 0


def cmd_sweep(args) -> int:
    spec = load_sweep_config(args.config)
    outcome = run_sweep(spec, args.out, workers=args.workers)
    failed = sum(1 for r in outcome.records if r["error"])
    print(f"{len(outcome.records)} records ({failed} failed), {len(outcome.medians)} medians -> {args.out}")
    return 0


def cmd_datasets(args) -> int:
    for name, spec in DATASETS.items():
        if not is_available(spec):
            print(f"{name}: missing ({spec.filename})")
            continue
        stats = graph_stats(read_edge_list(dataset_path(spec)))
        status = "ok" if stats == spec.expected() else f"MISMATCH expected {spec.expected()}"
        print(f"{name}: {stats['nodes']} nodes, {stats['edges']} edges, max shell {stats['max_shell']} [{status}]")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kshell-attack",
        description="Robustness of k-shell structure under degree-preserving rewiring attacks.",
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", help="print every node's k-shell as CSV")
    p.add_argument("edgelist")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("evaluate", help="score an adversarial edge list against the original")
    p.add_argument("original")
    p.add_argument("adversarial")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("attack", help="run one attack and write its outputs")
    p.add_argument("edgelist")
    p.add_argument("--method", choices=["ra", "ha", "sa"], required=True)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--temp", type=float, default=1.0, help="initial annealing temperature")
    p.add_argument("--temp-min", type=float, default=1e-6, help="terminate temperature")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--ha-quantile", type=float, default=0.2)
    p.add_argument(
        "--both-cases", choices=["prefer-1", "prefer-2", "random", "reject"], default="prefer-1"
    )
    p.add_argument("--compound", action="store_true", help="SA: chain accepted moves within a round")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("sweep", help="run a budget sweep from a YAML config")
    p.add_argument("--config", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("datasets", help="list registered datasets and check their statistics")
    p.set_defaults(func=cmd_datasets)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (KShellError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
