"""Measure how robust a graph's k-shell structure is to degree-preserving rewiring attacks."""
from .attacks import (
    AttackConfig,
    AttackResult,
    Strategy,
    attack_heuristic,
    attack_random,
    attack_sa,
    run_attack,
)
from .datasets import DATASETS, DatasetSpec, load_dataset
from .graph import Graph, edge, parse_edge_list, read_edge_list, serialize_edge_list
from .kshell import kshell_decompose, kshell_oracle, shell_histogram
from .metrics import MetricReport, attack_success_rate, evaluate, link_change_rate, link_per_node
from .rewiring import (
    BothCasesPolicy,
    CaseTag,
    EditLog,
    RewiringMove,
    apply_move,
    judge_constraints,
    random_feasible_move,
)
from .sweep import SweepSpec, emit_case_study, run_sweep

__version__ = "0.1.0"
