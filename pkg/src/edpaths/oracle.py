"""Exhaustive ground truth for small instances.

Deliberately independent of the partition solvers and the path engine:
everything here is plain depth-first enumeration of simple paths.
"""
from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

from .constraints import Kind, LengthConstraint, ProblemInstance, Solution
from .graph import Graph, Path


class InstanceTooLargeForOracle(RuntimeError):
    pass


class PathEnumeration(NamedTuple):
    paths: list[Path]
    truncated: bool


def _simple_paths(g: Graph, s: int, t: int, max_len: Optional[int], blocked=frozenset()) -> Iterator[Path]:
    """All simple ``(s, t)``-paths avoiding edge ids in ``blocked``, in DFS order."""
    adj = g.adjacency
    vertices = [s]
    eids: list[int] = []
    on_path = {s}
    if s == t:
        yield Path((s,), ())
        return
    stack = [iter(adj[s])]
    while stack:
        for w, eid in stack[-1]:
            if w in on_path or eid in blocked:
                continue
            if w == t:
                if max_len is None or len(eids) < max_len:
                    yield Path(tuple(vertices) + (t,), tuple(eids) + (eid,))
                continue
            if max_len is not None and len(eids) + 1 >= max_len:
                continue
            vertices.append(w)
            eids.append(eid)
            on_path.add(w)
            stack.append(iter(adj[w]))
            break
        else:
            stack.pop()
            on_path.discard(vertices.pop())
            if eids:
                eids.pop()


def enumerate_paths(
    g: Graph,
    s: int,
    t: int,
    max_paths: Optional[int] = None,
    max_len: Optional[int] = None,
) -> PathEnumeration:
    paths = []
    for p in _simple_paths(g, s, t, max_len):
        if max_paths is not None and len(paths) >= max_paths:
            return PathEnumeration(paths, True)
        paths.append(p)
    return PathEnumeration(paths, False)


class _Budget:
    def __init__(self, limit: Optional[int]) -> None:
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise InstanceTooLargeForOracle(f"enumerated more than {self.limit} paths")


def _admissible(g, s, t, c: LengthConstraint, blocked, budget: _Budget) -> Iterator[Path]:
    for p in _simple_paths(g, s, t, c.max_length, blocked):
        budget.tick()
        if c.admits(p.length):
            yield p


def _guard(g: Graph, max_n: Optional[int]) -> None:
    if max_n is not None and g.n > max_n:
        raise InstanceTooLargeForOracle(f"n={g.n} exceeds oracle limit {max_n}")


def oracle_solve(
    inst: ProblemInstance, max_n: Optional[int] = 14, max_paths: Optional[int] = 1_000_000
) -> Optional[Solution]:
    """First admissible pair in DFS order, or ``None``; exact for every constraint pair."""
    g = inst.graph
    _guard(g, max_n)
    budget = _Budget(max_paths)
    for p1 in _admissible(g, inst.s1, inst.t1, inst.c1, frozenset(), budget):
        blocked = frozenset(p1.edges)
        for p2 in _admissible(g, inst.s2, inst.t2, inst.c2, blocked, budget):
            return Solution(p1, p2)
    return None


def is_valid_pair(inst: ProblemInstance, p1: Path, p2: Path) -> bool:
    """The problem definition restated directly, independent of ``verify_solution``."""
    g = inst.graph

    def simple_in_g(p: Path) -> bool:
        vs = p.vertices
        return len(set(vs)) == len(vs) and all(g.edge_id(a, b) is not None for a, b in zip(vs, vs[1:]))

    if not (simple_in_g(p1) and simple_in_g(p2)):
        return False
    if (p1.vertices[0], p1.vertices[-1]) != (inst.s1, inst.t1):
        return False
    if (p2.vertices[0], p2.vertices[-1]) != (inst.s2, inst.t2):
        return False
    e1 = {frozenset(e) for e in zip(p1.vertices, p1.vertices[1:])}
    e2 = {frozenset(e) for e in zip(p2.vertices, p2.vertices[1:])}
    return not (e1 & e2) and inst.c1.admits(len(p1.vertices) - 1) and inst.c2.admits(len(p2.vertices) - 1)


def minimal_valid_partner(
    g: Graph,
    p1: Path,
    s2: int,
    t2: int,
    c2: LengthConstraint,
    max_n: Optional[int] = 14,
    max_paths: Optional[int] = 1_000_000,
) -> Optional[Path]:
    """Shortest ``(s2, t2)``-path edge-disjoint from ``p1`` satisfying ``c2``.

    Ties go to the first such path in DFS order.
    """
    _guard(g, max_n)
    budget = _Budget(max_paths)
    blocked = frozenset(p1.edges)
    lo = c2.k if c2.kind is Kind.AT_LEAST else 0
    hi = g.n - 1 if c2.max_length is None else min(c2.max_length, g.n - 1)
    for length in range(lo, hi + 1):
        if not c2.admits(length):
            continue
        for p in _simple_paths(g, s2, t2, length, blocked):
            budget.tick()
            if p.length == length:
                return p
    return None
