"""Small (m, r)-universal families and the deterministic solve mode.

A family of m-bit colorings is (m, r)-universal when every 0/1 pattern on
every r positions shows up in some member. Iterating such a family over the
colorable edges replaces random trials: whenever a solution exists whose
colorable edges number at most r, some member colors them correctly.

Two constructions are provided. Full enumeration of all 2**m colorings is
universal for every r. For r < m a greedy cover builds members one bit at a
time by the method of conditional expectations, each member covering at
least a 2**-r share of the still-uncovered (positions, pattern) demands.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constraints import ProblemInstance, Solution, classify_case
from .partition import SolveConfig, assignment_from_bits, obviously_infeasible, prepare, run_trials


class LimitsExceeded(RuntimeError):
    def __init__(self, m: int, r: int) -> None:
        self.m = m
        self.r = r
        super().__init__(f"no universal family for m={m}, r={r} within configured limits")


@dataclass(frozen=True)
class UniversalLimits:
    greedy_max_m: int = 16
    greedy_max_r: int = 4
    # Full enumeration of 2**m colorings is allowed up to this m.
    enumerate_max_m: int = 20


@dataclass(frozen=True)
class UniversalFamily:
    """Members are ints; bit ``i`` is the value at ground position ``i``."""

    m: int
    r: int
    members: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.members)

    def bitstrings(self) -> list[str]:
        return ["".join("1" if x >> i & 1 else "0" for i in range(self.m)) for x in self.members]

    def dumps(self) -> str:
        return f"{self.m} {self.r}\n" + "".join(b + "\n" for b in self.bitstrings())

    @classmethod
    def loads(cls, text: str) -> "UniversalFamily":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        m, r = map(int, lines[0].split())
        members = []
        for ln in lines[1:]:
            if len(ln) != m or set(ln) - {"0", "1"}:
                raise ValueError(f"bad member {ln!r} for m={m}")
            members.append(sum(1 << i for i, ch in enumerate(ln) if ch == "1"))
        return cls(m, r, tuple(members))


def _greedy_cover(m: int, r: int) -> list[int]:
    subsets = np.array(list(itertools.combinations(range(m), r)), dtype=np.int64).reshape(-1, r)
    patterns = np.array(list(itertools.product((0, 1), repeat=r)), dtype=np.int8).reshape(-1, r)
    # One demand per (subset, pattern).
    pos = np.repeat(subsets, len(patterns), axis=0)
    want = np.tile(patterns, (len(subsets), 1))
    open_ = np.ones(len(pos), dtype=bool)
    members = []
    while open_.any():
        p_pos, p_want = pos[open_], want[open_]
        alive = np.ones(len(p_pos), dtype=bool)
        free = np.full(len(p_pos), r, dtype=np.int64)
        member = 0
        for i in range(m):
            hit = p_pos == i
            touches = hit.any(axis=1)
            vals = (p_want * hit).sum(axis=1)
            best_b, best_score = 0, -1.0
            for b in (0, 1):
                ok = alive & (~touches | (vals == b))
                score = np.ldexp(1.0, -(free - touches)[ok]).sum()
                if score > best_score:
                    best_b, best_score = b, score
            alive &= ~touches | (vals == best_b)
            free -= touches
            member |= best_b << i
        members.append(member)
        bits = (member >> pos) & 1
        open_ &= ~(bits == want).all(axis=1)
    return members


def build_universal_family(m: int, r: int, limits: UniversalLimits = UniversalLimits()) -> UniversalFamily:
    if m < 0 or r < 0:
        raise ValueError("m and r must be non-negative")
    if r >= m:
        if m > limits.enumerate_max_m:
            raise LimitsExceeded(m, r)
        return UniversalFamily(m, r, tuple(range(2**m)))
    if r == 0:
        return UniversalFamily(m, r, (0,))
    if m > limits.greedy_max_m or r > limits.greedy_max_r:
        raise LimitsExceeded(m, r)
    return UniversalFamily(m, r, tuple(_greedy_cover(m, r)))


def verify_universal(f: UniversalFamily, max_checks: int = 10_000_000) -> bool:
    """Exhaustively check that every pattern on every ``min(r, m)`` positions occurs."""
    r = min(f.r, f.m)
    if math.comb(f.m, r) * 2**r > max_checks:
        raise ValueError(f"C({f.m},{r})*2^{r} demands exceed the check guard")
    members = f.members
    for subset in itertools.combinations(range(f.m), r):
        seen = {tuple(x >> i & 1 for i in subset) for x in members}
        if len(seen) < 2**r:
            return False
    return True


def family_for(m_prime: int, r: int, limits: UniversalLimits = UniversalLimits()) -> UniversalFamily:
    """Family of strength ``min(r, m_prime)``, falling back to full enumeration."""
    strength = min(r, m_prime)
    try:
        return build_universal_family(m_prime, strength, limits)
    except LimitsExceeded:
        if m_prime <= limits.enumerate_max_m:
            return build_universal_family(m_prime, m_prime, limits)
        raise LimitsExceeded(m_prime, strength) from None


def derandomized_solve(
    inst: ProblemInstance,
    config: SolveConfig = SolveConfig(mode="universal"),
    limits: UniversalLimits = UniversalLimits(),
) -> Optional[Solution]:
    """Run the partition trials over a universal family instead of random colorings.

    With exact path engines (always the case at the sizes the family limits
    allow) a ``None`` answer is definitive.
    """
    case_id = classify_case(inst.c1, inst.c2)
    if not case_id.case.supported:
        raise ValueError(f"case {case_id.case.value} has no partition solver")
    work = inst.swapped() if case_id.swapped else inst
    problem = prepare(work)
    family = family_for(len(problem.colorable), problem.exponent, limits)
    if config.prefilter and obviously_infeasible(problem, config):
        return None
    colorable = problem.colorable
    members = family.members
    sol, _ = run_trials(problem, lambda i: assignment_from_bits(colorable, members[i]), len(members), config)
    if sol is not None and case_id.swapped:
        sol = sol.swapped()
    return sol
