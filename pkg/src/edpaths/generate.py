"""Random and planted instances.

All randomness comes from :func:`edpaths.rng.numpy_stream` (PCG64 keyed on
the seed and a purpose string), so a seed pins the instance on every platform.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .constraints import (
    UNBOUNDED, Case, Kind, LengthConstraint, ProblemInstance, Solution, verify_solution,
)
from .graph import Graph
from .rng import numpy_stream

TERMINAL_RULES = ("distinct", "coincident", "crossing")


def _sample_pairs(n: int, m: int, rng: np.random.Generator, taken: set) -> list[tuple[int, int]]:
    """``m`` uniformly random new vertex pairs not in ``taken`` (updated in place)."""
    total = n * (n - 1) // 2
    if m > total - len(taken):
        raise ValueError(f"cannot place {m} more edges on {n} vertices")
    out: list[tuple[int, int]] = []
    if m == 0:
        return out
    if total <= 2_000_000:
        us, vs = np.triu_indices(n, 1)
        for i in rng.permutation(total):
            pair = (int(us[i]), int(vs[i]))
            if pair not in taken:
                taken.add(pair)
                out.append(pair)
                if len(out) == m:
                    break
        return out
    while len(out) < m:
        batch = rng.integers(0, n, size=(2 * (m - len(out)) + 16, 2))
        for u, v in batch.tolist():
            if u == v:
                continue
            pair = (u, v) if u < v else (v, u)
            if pair not in taken:
                taken.add(pair)
                out.append(pair)
                if len(out) == m:
                    break
    return out


def gen_random(
    n: int,
    m: int,
    terminals: str = "distinct",
    c1: LengthConstraint = LengthConstraint(Kind.AT_MOST, 2),
    c2: LengthConstraint = UNBOUNDED,
    seed: int = 0,
) -> ProblemInstance:
    """Uniform simple graph with ``m`` edges plus terminals chosen by ``terminals``.

    ``distinct`` picks each pair as two different random vertices,
    ``coincident`` uses the same pair twice, and ``crossing`` picks four
    vertices and forces the 4-cycle ``s1 s2 t1 t2`` into the graph.
    """
    if terminals not in TERMINAL_RULES:
        raise ValueError(f"unknown terminal rule {terminals!r}")
    if m > n * (n - 1) // 2:
        raise ValueError(f"m={m} exceeds the {n * (n - 1) // 2} possible edges on {n} vertices")
    rng = numpy_stream(seed, "terminals")
    need = 4 if terminals == "crossing" else 2
    if n < need:
        raise ValueError(f"terminal rule {terminals!r} needs at least {need} vertices")
    picks = [int(x) for x in rng.choice(n, size=need, replace=False)]
    forced: list[tuple[int, int]] = []
    if terminals == "distinct":
        s1, t1 = picks
        s2, t2 = (int(x) for x in rng.choice(n, size=2, replace=False))
    elif terminals == "coincident":
        s1, t1 = picks
        s2, t2 = s1, t1
    else:
        s1, s2, t1, t2 = picks
        if m < 4:
            raise ValueError("crossing terminals need m >= 4")
        cycle = [s1, s2, t1, t2, s1]
        forced = [tuple(sorted(e)) for e in zip(cycle, cycle[1:])]
    taken = set(forced)
    edges = forced + _sample_pairs(n, m - len(forced), numpy_stream(seed, "graph"), taken)
    return ProblemInstance(Graph(n, edges), s1, t1, s2, t2, c1, c2)


_FIRST = {"Short": Kind.AT_MOST, "Exact": Kind.EXACTLY, "Long": Kind.AT_LEAST, "Open": Kind.AT_LEAST}
_SECOND = {"Short": Kind.AT_MOST, "Exact": Kind.EXACTLY, "Long": Kind.AT_LEAST, "Unbounded": Kind.UNBOUNDED}


def case_constraints(case: Case, k1: int, k2: int) -> tuple[LengthConstraint, LengthConstraint]:
    """Constraints in normalized order for ``case``."""
    if case is Case.UNCONSTRAINED:
        return UNBOUNDED, UNBOUNDED
    name = case.value
    if name.startswith("OpenLong"):
        first, second = Kind.AT_LEAST, _SECOND[name[len("OpenLong"):]]
    else:
        head = next(p for p in ("Short", "Exact") if name.startswith(p))
        first, second = _FIRST[head], _SECOND[name[len(head):]]
    c1 = LengthConstraint(first, k1)
    c2 = UNBOUNDED if second is Kind.UNBOUNDED else LengthConstraint(second, k2)
    return c1, c2


@dataclass(frozen=True)
class PlantShape:
    case: Case
    k1: int
    k2: int
    extra_n: int = 0
    extra_m: int = 0
    # Planted length of the second path when it is unconstrained; defaults to k2.
    free_length: Optional[int] = None


def gen_planted(shape: PlantShape, seed: int = 0) -> tuple[ProblemInstance, Solution]:
    """Instance with an embedded edge-disjoint pair meeting the case's constraints.

    The first path gets exactly ``k1`` edges and the second ``k2`` (or
    ``free_length`` when unconstrained) on disjoint fresh vertices; then
    ``extra_n`` vertices and ``extra_m`` random decoy edges are added and all
    labels and edge ids are shuffled.
    """
    if min(shape.k1, shape.k2, shape.extra_n, shape.extra_m) < 0:
        raise ValueError("shape parameters must be non-negative")
    c1, c2 = case_constraints(shape.case, shape.k1, shape.k2)
    len1 = shape.k1
    len2 = shape.k2 if c2.kind is not Kind.UNBOUNDED or shape.free_length is None else shape.free_length
    n = len1 + 1 + len2 + 1 + shape.extra_n
    rng = numpy_stream(seed, "planted")
    label = [int(x) for x in rng.permutation(n)]
    p1 = [label[i] for i in range(len1 + 1)]
    p2 = [label[len1 + 1 + i] for i in range(len2 + 1)]
    planted = [tuple(sorted(e)) for p in (p1, p2) for e in zip(p, p[1:])]
    taken = set(planted)
    decoys = _sample_pairs(n, shape.extra_m, numpy_stream(seed, "decoys"), taken)
    edges = planted + decoys
    order = numpy_stream(seed, "edge-order").permutation(len(edges))
    g = Graph(n, [edges[i] for i in order])
    inst = ProblemInstance(g, p1[0], p1[-1], p2[0], p2[-1], c1, c2)
    cert = Solution(g.path(p1), g.path(p2))
    assert verify_solution(inst, cert.p1, cert.p2).valid
    return inst, cert
