"""Random-partition solvers for the seven tractable constraint cases.

Each trial 2-colors a set of *colorable* edges, puts color-1 edges in G1 and
everything else in G2, and looks for the first path in G1 and the second in
G2. Both searches succeed whenever the colorable edges of some solution got
the right colors, which happens with probability at least ``2**-r``:

* short/exact pairs color every edge, ``r = k1 + k2``;
* one short path plus an unconstrained one color only nearby-edges,
  ``r = k1 + (k1 + 1)**2``;
* one short path plus a long one color only nearby-edges,
  ``r = k1**2 + 4*k1 + 2*k2``.

A vertex ``v`` is *nearby* when ``d(s1, v) + d(v, t1) <= k1``; an edge is
nearby when both ends are. Any ``(s1, t1)``-path of length at most ``k1``
uses only nearby-edges, and a suitably minimal partner path uses few of them.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

import numpy as np

from .constraints import Case, Kind, LengthConstraint, ProblemInstance, Solution, classify_case
from .graph import UNREACHABLE, Graph, Path, bfs_tree
from .paths import LongPathBudget, any_path, find_path_at_least, find_path_at_most, find_path_exact
from .rng import SplitMix64, mix_seed

_FLIP = bytes([1, 0]) + bytes(254)


@dataclass(frozen=True)
class NearbySets:
    nearby_vertex: tuple[bool, ...]
    nearby_edges: tuple[int, ...]

    @property
    def vertex_count(self) -> int:
        return sum(self.nearby_vertex)

    @property
    def edge_count(self) -> int:
        return len(self.nearby_edges)


def compute_nearby(g: Graph, s1: int, t1: int, k1: int) -> NearbySets:
    if k1 < 0:
        raise ValueError("k1 must be non-negative")
    ds, _ = bfs_tree(g, s1, max_depth=k1)
    dt, _ = bfs_tree(g, t1, max_depth=k1)
    near = tuple(
        a != UNREACHABLE and b != UNREACHABLE and a + b <= k1 for a, b in zip(ds, dt)
    )
    edges = tuple(e for e in g.edge_ids() if near[g.endpoints(e)[0]] and near[g.endpoints(e)[1]])
    return NearbySets(near, edges)


def count_nearby(nearby: NearbySets, path: Path) -> int:
    members = set(nearby.nearby_edges)
    return sum(1 for e in path.edges if e in members)


# -- trial bookkeeping -------------------------------------------------------


def _amplified(r: int, delta: float) -> float:
    if r > 1000:
        return math.inf
    return math.ceil(math.ldexp(math.log(1 / delta), r))


def trial_count(r: int, delta: float, m_prime: int) -> int:
    """``min(ceil(2**r * ln(1/delta)), 2**m_prime)``, at least 1."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    if r < 0 or m_prime < 0:
        raise ValueError("r and m_prime must be non-negative")
    full = 2**m_prime if m_prime < 4096 else math.inf
    return int(max(1, min(_amplified(r, delta), full)))


@dataclass(frozen=True)
class TrialPlan:
    exponent: int
    delta: float
    trials: int
    master_seed: int
    colorable: int

    @property
    def exhaustive(self) -> bool:
        """True when the trials enumerate every coloring of the colorable edges."""
        return self.colorable < 4096 and self.trials == 2**self.colorable

    @classmethod
    def make(cls, exponent: int, delta: float, seed: int, colorable: int) -> "TrialPlan":
        return cls(exponent, delta, trial_count(exponent, delta, colorable), seed, colorable)


@dataclass(frozen=True)
class ColorAssignment:
    """Colors (1 or 2) for ``colorable`` edges; every other edge has color 2.

    ``colorable`` may be a tuple or an int array; large trials pass the same
    array to every assignment to avoid re-converting it.
    """

    colorable: Sequence[int]
    colors: bytes

    def color(self, eid: int) -> int:
        for e, c in zip(self.colorable, self.colors):
            if e == eid:
                return c
        return 2

    def first_class(self) -> list[int]:
        return [int(e) for e, c in zip(self.colorable, self.colors) if c == 1]

    def masks(self, id_bound: int) -> tuple[bytes, bytes]:
        """Edge masks ``(G1, G2)`` over edge ids ``0..id_bound-1``."""
        if len(self.colorable) > 64:
            g1 = np.zeros(id_bound, dtype=np.uint8)
            g1[np.asarray(self.colorable, dtype=np.int64)] = (
                np.frombuffer(self.colors, dtype=np.uint8) == 1
            )
            g1 = g1.tobytes()
        else:
            g1 = bytearray(id_bound)
            for e, c in zip(self.colorable, self.colors):
                if c == 1:
                    g1[e] = 1
            g1 = bytes(g1)
        return g1, g1.translate(_FLIP)


def _colors_from_bits(count: int, bits: int) -> bytes:
    if count > 64:
        raw = np.frombuffer(bits.to_bytes((count + 7) // 8, "little"), dtype=np.uint8)
        ones = np.unpackbits(raw, bitorder="little")[:count]
        return (2 - ones).astype(np.uint8).tobytes()
    return bytes(1 if bits >> i & 1 else 2 for i in range(count))


def _as_sequence(colorable: Iterable[int]) -> Sequence[int]:
    return colorable if isinstance(colorable, (tuple, np.ndarray)) else tuple(colorable)


def assignment_from_bits(colorable: Iterable[int], bits: int) -> ColorAssignment:
    """Bit ``i`` of ``bits`` set means the ``i``-th colorable edge gets color 1."""
    colorable = _as_sequence(colorable)
    return ColorAssignment(colorable, _colors_from_bits(len(colorable), bits))


def random_edge_partition(colorable: Iterable[int], rng: SplitMix64) -> ColorAssignment:
    colorable = _as_sequence(colorable)
    return assignment_from_bits(colorable, rng.bits(len(colorable)))


# -- solving -----------------------------------------------------------------


@dataclass(frozen=True)
class SolveConfig:
    delta: float = 1e-9
    seed: int = 0
    mode: str = "random"
    threads: int = 1
    long_budget: LongPathBudget = field(default_factory=LongPathBudget)
    # Skip all trials when G itself has no admissible path for one of the pairs.
    prefilter: bool = True

    def __post_init__(self) -> None:
        if not 0 < self.delta < 1:
            raise ValueError("delta must lie in (0, 1)")
        if self.mode not in ("random", "universal"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.threads < 1:
            raise ValueError("threads must be positive")


@dataclass(frozen=True)
class Unsupported:
    case: Case

    def __str__(self) -> str:
        return "UNSUPPORTED: open case; use `oracle`"


@dataclass(frozen=True)
class PartitionProblem:
    """A normalized instance with its colorable edge set and trial exponent."""

    inst: ProblemInstance
    case: Case
    colorable: tuple[int, ...]
    exponent: int


SHORT_SHORT = {Case.SHORT_SHORT, Case.SHORT_EXACT, Case.EXACT_EXACT}
CONSTRAINED_UNBOUNDED = {Case.SHORT_UNBOUNDED, Case.EXACT_UNBOUNDED}
CONSTRAINED_LONG = {Case.SHORT_LONG, Case.EXACT_LONG}


def prepare(inst: ProblemInstance) -> PartitionProblem:
    """Set up trials for an instance already in normalized order."""
    case_id = classify_case(inst.c1, inst.c2)
    if case_id.swapped:
        raise ValueError("instance is not normalized; swap the pairs first")
    case = case_id.case
    k1, k2 = inst.c1.k, inst.c2.k
    g = inst.graph
    if case in SHORT_SHORT:
        return PartitionProblem(inst, case, tuple(g.edge_ids()), k1 + k2)
    nearby = compute_nearby(g, inst.s1, inst.t1, k1).nearby_edges
    if case in CONSTRAINED_UNBOUNDED:
        return PartitionProblem(inst, case, nearby, k1 + (k1 + 1) ** 2)
    if case in CONSTRAINED_LONG:
        return PartitionProblem(inst, case, nearby, k1 * k1 + 4 * k1 + 2 * k2)
    raise ValueError(f"case {case.value} has no partition solver")


def find_constrained_path(
    g: Graph,
    s: int,
    t: int,
    c: LengthConstraint,
    allowed=None,
    delta: float = 1e-9,
    seed: int = 0,
    long_budget: LongPathBudget = LongPathBudget(),
) -> Optional[Path]:
    """Dispatch to the path engine matching the constraint kind."""
    if c.kind is Kind.AT_MOST:
        return find_path_at_most(g, s, t, c.k, allowed)
    if c.kind is Kind.EXACTLY:
        return find_path_exact(g, s, t, c.k, delta, seed, allowed)
    if c.kind is Kind.AT_LEAST:
        return find_path_at_least(g, s, t, c.k, long_budget, allowed)
    return any_path(g, s, t, allowed)


def partition_trial(
    problem: PartitionProblem,
    assignment: ColorAssignment,
    config: SolveConfig = SolveConfig(),
    trial_seed: int = 0,
) -> Optional[Solution]:
    inst = problem.inst
    g = inst.graph
    g1, g2 = assignment.masks(g.id_bound)
    p1 = find_constrained_path(
        g, inst.s1, inst.t1, inst.c1, g1, config.delta, trial_seed, config.long_budget
    )
    if p1 is None:
        return None
    p2 = find_constrained_path(
        g, inst.s2, inst.t2, inst.c2, g2, config.delta, mix_seed(trial_seed, 1), config.long_budget
    )
    if p2 is None:
        return None
    return Solution(p1, p2)


def obviously_infeasible(problem: PartitionProblem, config: SolveConfig) -> bool:
    """True when G itself lacks a path for one of the pairs (then no trial can succeed)."""
    inst = problem.inst
    g = inst.graph
    for s, t, c in ((inst.s1, inst.t1, inst.c1), (inst.s2, inst.t2, inst.c2)):
        try:
            found = find_constrained_path(g, s, t, c, None, config.delta, config.seed, config.long_budget)
        except RuntimeError:
            continue
        if found is None:
            return True
    return False


@dataclass(frozen=True)
class SearchOutcome:
    solution: Optional[Solution]
    trials_run: int
    plan: Optional[TrialPlan]


def run_trials(
    problem: PartitionProblem,
    assignments: Callable[[int], ColorAssignment],
    count: int,
    config: SolveConfig,
    stop_early: bool = True,
) -> tuple[Optional[Solution], int]:
    """Run trials ``0..count-1``; return the lowest-index success and trials consumed.

    With several threads, trials run in blocks and the lowest successful
    index within the first successful block wins, so the answer does not
    depend on the thread count.
    """

    def one(i: int) -> Optional[Solution]:
        return partition_trial(problem, assignments(i), config, mix_seed(config.seed, i))

    found: Optional[Solution] = None
    if config.threads == 1:
        for i in range(count):
            sol = one(i)
            if sol is not None and found is None:
                found = sol
                if stop_early:
                    return found, i + 1
        return found, count
    block = 16 * config.threads
    with ThreadPoolExecutor(config.threads) as pool:
        for start in range(0, count, block):
            idx = range(start, min(count, start + block))
            for i, sol in zip(idx, pool.map(one, idx)):
                if sol is not None and found is None:
                    found = sol
                    if stop_early:
                        return found, i + 1
    return found, count


def randomized_search(
    problem: PartitionProblem, config: SolveConfig, stop_early: bool = True
) -> SearchOutcome:
    plan = TrialPlan.make(problem.exponent, config.delta, config.seed, len(problem.colorable))
    if config.prefilter and obviously_infeasible(problem, config):
        return SearchOutcome(None, 0, plan)
    colorable = problem.colorable
    if len(colorable) > 64:
        colorable = np.asarray(colorable, dtype=np.int64)
    if plan.exhaustive:
        def assignments(i: int) -> ColorAssignment:
            return assignment_from_bits(colorable, i)
    else:
        def assignments(i: int) -> ColorAssignment:
            return random_edge_partition(colorable, SplitMix64(mix_seed(config.seed, i)))
    sol, used = run_trials(problem, assignments, plan.trials, config, stop_early)
    return SearchOutcome(sol, used, plan)


def _solve_normalized(inst: ProblemInstance, cases: set, config: SolveConfig) -> Optional[Solution]:
    problem = prepare(inst)
    if problem.case not in cases:
        raise ValueError(f"case {problem.case.value} not handled here")
    return randomized_search(problem, config).solution


def solve_short_short(inst: ProblemInstance, delta: float = 1e-9, seed: int = 0) -> Optional[Solution]:
    """Cases (<=k1, <=k2), (<=k1, =k2), (=k1, =k2): color every edge."""
    return _solve_normalized(inst, SHORT_SHORT, SolveConfig(delta, seed))


def solve_constrained_unbounded(
    inst: ProblemInstance, delta: float = 1e-9, seed: int = 0
) -> Optional[Solution]:
    """Cases (<=k1, inf), (=k1, inf): color nearby-edges, any path for the second pair."""
    return _solve_normalized(inst, CONSTRAINED_UNBOUNDED, SolveConfig(delta, seed))


def solve_constrained_long(
    inst: ProblemInstance,
    delta: float = 1e-9,
    seed: int = 0,
    long_budget: LongPathBudget = LongPathBudget(),
) -> Optional[Solution]:
    """Cases (<=k1, >=k2), (=k1, >=k2): color nearby-edges, long path for the second pair."""
    return _solve_normalized(
        inst, CONSTRAINED_LONG, SolveConfig(delta, seed, long_budget=long_budget)
    )


def solve(
    inst: ProblemInstance, config: SolveConfig = SolveConfig()
) -> Union[Solution, None, Unsupported]:
    """Normalize, dispatch by case and map the answer back to the caller's pair order."""
    case_id = classify_case(inst.c1, inst.c2)
    if not case_id.case.supported:
        return Unsupported(case_id.case)
    if config.mode == "universal":
        from .derand import derandomized_solve

        return derandomized_solve(inst, config)
    work = inst.swapped() if case_id.swapped else inst
    sol = randomized_search(prepare(work), config).solution
    if sol is not None and case_id.swapped:
        sol = sol.swapped()
    return sol


__all__ = [
    "NearbySets", "compute_nearby", "count_nearby", "trial_count", "TrialPlan",
    "ColorAssignment", "assignment_from_bits", "random_edge_partition", "SolveConfig",
    "Unsupported", "PartitionProblem", "prepare", "partition_trial", "run_trials",
    "randomized_search", "SearchOutcome", "solve_short_short", "solve_constrained_unbounded",
    "solve_constrained_long", "solve", "find_constrained_path",
]
