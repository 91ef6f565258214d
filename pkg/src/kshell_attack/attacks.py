"""Random, heuristic and simulated-annealing rewiring attacks on k-shell structure.

All three drivers share the same machinery: draw a pair of links, judge
which crosswise reconnection is feasible, apply it. They differ in how the
pair is drawn and whether a feasible move is kept.

Success is always measured against the shells of the *original* graph, so
a node whose shell is disturbed and later restored no longer counts.
"""
from __future__ import annotations

import dataclasses
import enum
import math
import random
from dataclasses import dataclass, field
from typing import Callable

from .exceptions import DomainError, StuckRoundError
from .graph import Graph
from .kshell import kshell_decompose
from .metrics import MetricReport, changed_nodes, evaluate
from .rewiring import (
    BothCasesPolicy,
    EditLog,
    RewiringMove,
    apply_move,
    case_feasible,
    make_move,
    random_feasible_move,
)


class Strategy(enum.Enum):
    RA = "ra"
    HA = "ha"
    SA = "sa"


@dataclass(frozen=True)
class AttackConfig:
    strategy: Strategy
    rounds: int
    initial_temp: float = 1.0
    terminate_temp: float = 1e-6
    seed: int = 0
    both_cases_policy: BothCasesPolicy = BothCasesPolicy.PREFER_CASE_I
    ha_quantile: float = 0.2
    retry_budget: int = 1000
    # SA only: build each candidate on the last accepted graph instead of
    # the graph the round started from.
    compound: bool = False

    def __post_init__(self):
        object.__setattr__(self, "strategy", Strategy(self.strategy))
        object.__setattr__(self, "both_cases_policy", BothCasesPolicy(self.both_cases_policy))
        if self.rounds < 1:
            raise DomainError(f"rounds must be >= 1, got {self.rounds}")
        if not (self.initial_temp > 0 and self.terminate_temp > 0):
            raise DomainError("temperatures must be positive")
        if not 0 < self.ha_quantile <= 1:
            raise DomainError(f"ha_quantile must lie in (0, 1], got {self.ha_quantile}")
        if self.retry_budget < 1:
            raise DomainError("retry_budget must be >= 1")

    def as_dict(self) -> dict:
        d = dataclasses.asdict(self)
        d["strategy"] = self.strategy.value
        d["both_cases_policy"] = self.both_cases_policy.value
        return d


@dataclass
class AttackResult:
    original: Graph
    final_graph: Graph
    edit_log: EditLog
    original_shells: list[int]
    config: AttackConfig
    trajectory: list[MetricReport] = field(default_factory=list)
    # Feasible candidates evaluated / candidates accepted / rewirings kept.
    proposed_moves: int = 0
    accepted_moves: int = 0
    applied_moves: int = 0

    @property
    def metrics(self) -> MetricReport:
        if self.trajectory:
            return self.trajectory[-1]
        return evaluate(self.original, self.final_graph, self.original_shells)

    def to_dict(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "trajectory": [r.as_dict() for r in self.trajectory],
            "edit_log": self.edit_log.to_json(),
            "final_edges": [list(e) for e in self.final_graph.edges()],
            "proposed_moves": self.proposed_moves,
            "accepted_moves": self.accepted_moves,
            "applied_moves": self.applied_moves,
        }


def cool(temp: float, tau: int) -> float:
    """One cooling step, T_tau = T_(tau-1) / tau, so T_tau = T / tau!."""
    return temp / tau


def temperature_at(initial_temp: float, tau: int) -> float:
    return initial_temp / math.factorial(tau)


def annealing_steps(initial_temp: float, terminate_temp: float) -> int:
    """Number of feasible candidates one annealing loop evaluates."""
    tau, temp = 0, initial_temp
    while temp > terminate_temp:
        tau += 1
        temp = cool(temp, tau)
    return tau


def acceptance_probability(delta_asr: float, temp: float) -> float:
    """Metropolis weight exp(-|delta| / T) for a non-improving candidate."""
    if temp <= 0:
        return 1.0 if delta_asr == 0 else 0.0
    return math.exp(-abs(delta_asr) / temp)


def accepts(asr: float, asr_prev: float, temp: float, rng: random.Random) -> bool:
    """Metropolis rule. Improvements pass without consuming a random draw."""
    return asr > asr_prev or rng.random() < acceptance_probability(asr - asr_prev, temp)


class _Run:
    """Mutable state shared by the drivers for one attack."""

    def __init__(self, g: Graph, cfg: AttackConfig, strategy: Strategy):
        if cfg.strategy is not strategy:
            raise DomainError(f"config is for {cfg.strategy.name}, not {strategy.name}")
        if g.edge_count < 2:
            raise DomainError(f"need at least two edges to rewire, graph has {g.edge_count}")
        self.cfg = cfg
        self.rng = random.Random(cfg.seed)
        self.graph = g.copy()
        self.result = AttackResult(
            original=g,
            final_graph=self.graph,
            edit_log=EditLog(),
            original_shells=kshell_decompose(g),
            config=cfg,
        )

    def draw(self, sampler: Callable[[], RewiringMove | None]) -> RewiringMove:
        for _ in range(self.cfg.retry_budget + 1):
            move = sampler()
            if move is not None:
                self.result.proposed_moves += 1
                return move
        raise StuckRoundError(
            f"no feasible rewiring after {self.cfg.retry_budget} retries "
            f"(round {len(self.result.trajectory) + 1})",
            partial=self.result,
        )

    def commit(self, move: RewiringMove) -> None:
        apply_move(self.graph, move, self.result.edit_log)
        self.result.applied_moves += 1

    def record(self) -> MetricReport:
        r = evaluate(self.result.original, self.graph, self.result.original_shells)
        self.result.trajectory.append(r)
        return r

    def asr_of(self, g: Graph) -> float:
        n = g.node_count
        return changed_nodes(self.result.original_shells, kshell_decompose(g)) / n


def attack_random(g: Graph, cfg: AttackConfig) -> AttackResult:
    """Apply one uniformly random feasible rewiring per round."""
    run = _Run(g, cfg, Strategy.RA)
    policy = cfg.both_cases_policy
    for _ in range(cfg.rounds):
        move = run.draw(lambda: random_feasible_move(run.graph, run.rng, policy))
        run.commit(move)
        run.result.accepted_moves += 1
        run.record()
    return run.result


def heuristic_pools(g: Graph, shells: list[int], q: float):
    edges = list(g.edge_list)
    weight = [shells[a] + shells[b] for a, b in edges]
    k = max(1, math.ceil(q * len(edges)))
    ranked = sorted(weight)
    hi_cut = ranked[len(ranked) - k]
    lo_cut = ranked[k - 1]
    # Ties at the cut stay in the pool, so equal weights cover every edge.
    top = [e for e, w in zip(edges, weight) if w >= hi_cut]
    bottom = [e for e, w in zip(edges, weight) if w <= lo_cut]
    return top, bottom


def attack_heuristic(g: Graph, cfg: AttackConfig) -> AttackResult:
    """Pair a link between high-shell nodes with a link between low-shell nodes.

    Edges are weighted by the sum of their endpoints' current shells. The
    first link is drawn from the top ``ha_quantile`` of that ranking, the
    second from the bottom ``ha_quantile``.
    """
    run = _Run(g, cfg, Strategy.HA)
    rng, policy = run.rng, cfg.both_cases_policy

    for _ in range(cfg.rounds):
        top, bottom = heuristic_pools(run.graph, kshell_decompose(run.graph), cfg.ha_quantile)

        def sample():
            a, b = rng.choice(top), rng.choice(bottom)
            if a == b:
                return None
            if rng.random() < 0.5:
                a = (a[1], a[0])
            if rng.random() < 0.5:
                b = (b[1], b[0])
            return make_move(run.graph, a, b, policy, rng)

        run.commit(run.draw(sample))
        run.result.accepted_moves += 1
        run.record()
    return run.result


def attack_sa(g: Graph, cfg: AttackConfig) -> AttackResult:
    """Simulated-annealing attack.

    Each round runs an annealing loop from ``initial_temp`` down to
    ``terminate_temp`` with factorial cooling. Every feasible candidate is
    one rewiring of the graph the round started from; it replaces the
    round's pending choice when its success rate beats the last accepted
    one, or otherwise with probability exp(-|delta ASR| / T). The pending
    choice is committed when the loop ends, so a round adds at most one
    rewiring. With ``cfg.compound`` accepted candidates are applied
    immediately and later candidates build on them.
    """
    run = _Run(g, cfg, Strategy.SA)
    rng, policy, base = run.rng, cfg.both_cases_policy, run.graph
    asr_prev = 0.0

    for _ in range(cfg.rounds):
        tau = 0
        temp = cfg.initial_temp
        pending: RewiringMove | None = None
        while temp > cfg.terminate_temp:
            move = run.draw(lambda: random_feasible_move(base, rng, policy))
            tau += 1
            undo = apply_move(base, move, run.result.edit_log if cfg.compound else None)
            asr = run.asr_of(base)
            temp = cool(temp, tau)
            if accepts(asr, asr_prev, temp, rng):
                run.result.accepted_moves += 1
                asr_prev = asr
                if cfg.compound:
                    run.result.applied_moves += 1
                    continue
                pending = move
            apply_move(base, undo, run.result.edit_log if cfg.compound else None)
        if pending is not None:
            assert case_feasible(base, pending.e1, pending.e2, pending.tag)
            run.commit(dataclasses.replace(pending, version=base.version))
        asr_prev = run.record().asr
    return run.result


DRIVERS = {
    Strategy.RA: attack_random,
    Strategy.HA: attack_heuristic,
    Strategy.SA: attack_sa,
}


def run_attack(g: Graph, cfg: AttackConfig) -> AttackResult:
    return DRIVERS[cfg.strategy](g, cfg)
