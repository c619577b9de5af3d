"""Instance transformers: identification, exact-path reduction and OR composition.

* :func:`identify_compose` glues exact-length path instances at their ends.
* :func:`ppt_from_exact_path` turns an exact-length path question into a
  (=k, inf) two-path instance.
* :func:`or_compose_pair` / :func:`or_compose_many` combine (<=k1, <=k2)
  instances into one whose answer is the OR of the inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

from .constraints import UNBOUNDED, Kind, LengthConstraint, ProblemInstance, at_most
from .graph import Graph


class PathInstance(NamedTuple):
    """Does ``graph`` contain an ``(s, t)``-path with exactly ``k`` edges?"""

    graph: Graph
    s: int
    t: int
    k: int


def identify_compose(instances: Sequence[PathInstance]) -> PathInstance:
    """Disjoint union with every ``s_i`` merged into ``s`` and every ``t_i`` into ``t``.

    A simple path from ``s`` to ``t`` cannot leave the copy it starts in, so
    the result is a yes-instance iff one of the inputs is. Parallel ``s-t``
    edges from different inputs collapse into one.
    """
    if not instances:
        raise ValueError("nothing to compose")
    k = instances[0].k
    if any(inst.k != k for inst in instances):
        raise ValueError("all instances must share k")
    if any(inst.s == inst.t for inst in instances):
        raise ValueError("terminals must differ within each instance")
    s, t = 0, 1
    n = 2
    edges: dict[tuple[int, int], None] = {}
    for inst in instances:
        label = {}
        for v in range(inst.graph.n):
            if v == inst.s:
                label[v] = s
            elif v == inst.t:
                label[v] = t
            else:
                label[v] = n
                n += 1
        for u, v in inst.graph.edges():
            a, b = sorted((label[u], label[v]))
            edges.setdefault((a, b))
    return PathInstance(Graph(n, list(edges)), s, t, k)


def ppt_from_exact_path(g: Graph, s: int, t: int, k: int) -> ProblemInstance:
    """Add an isolated edge ``s2-t2``; ask for ``|P1| = k`` and any ``P2``."""
    s2, t2 = g.n, g.n + 1
    h = Graph(g.n + 2, g.edges() + [(s2, t2)])
    return ProblemInstance(h, s, t, s2, t2, LengthConstraint(Kind.EXACTLY, k), UNBOUNDED)


# -- OR composition ----------------------------------------------------------

# Each row joins two named vertices by a short-path (one edge) or a long-path
# (k1 + 4 edges through fresh degree-2 vertices). "a.*" and "b.*" are the
# terminals of the two inputs; the primed names are the output terminals.
#
# The first pair can only afford four short edges plus an (s1, t1)-path of
# one input. Routing it through b uses u1-u2, which the second pair needs to
# reach a; routing it through a uses v1-v2, the only short way from b's t2
# side to t2'. So the second pair is forced through the same input as the
# first, with overhead exactly 3(k1 + 4) + 1 on either side.
OR_GADGET: tuple[tuple[str, str, str], ...] = (
    ("short", "s1'", "u1"),
    ("short", "u1", "u2"),
    ("short", "u2", "b.s1"),
    ("short", "b.t1", "t1'"),
    ("short", "s1'", "a.s1"),
    ("short", "a.t1", "v1"),
    ("short", "v1", "v2"),
    ("short", "v2", "t1'"),
    ("long", "s2'", "u1"),
    ("long", "u2", "a.s2"),
    ("long", "a.t2", "t2'"),
    ("long", "s2'", "b.s2"),
    ("long", "b.t2", "v1"),
    ("long", "v2", "t2'"),
)
GADGET_VERTICES = ("s1'", "t1'", "s2'", "t2'", "u1", "u2", "v1", "v2")


def composed_parameters(k1: int, k2: int) -> tuple[int, int]:
    """Output bounds of one pairwise composition."""
    return k1 + 4, k2 + 3 * (k1 + 4) + 1


def _shared_parameters(inst: ProblemInstance) -> tuple[int, int | None]:
    if inst.c1.kind is not Kind.AT_MOST or inst.c2.kind not in (Kind.AT_MOST, Kind.UNBOUNDED):
        raise ValueError("OR composition needs (<=k1, <=k2) or (<=k1, inf) instances")
    return inst.c1.k, inst.c2.k


def or_compose_pair(a: ProblemInstance, b: ProblemInstance, gadget=OR_GADGET) -> ProblemInstance:
    params = _shared_parameters(a)
    if _shared_parameters(b) != params:
        raise ValueError("instances must share (k1, k2) and constraint kinds")
    k1, k2 = params
    long_len = k1 + 4
    na, nb = a.graph.n, b.graph.n
    names = {
        "a.s1": a.s1, "a.t1": a.t1, "a.s2": a.s2, "a.t2": a.t2,
        "b.s1": na + b.s1, "b.t1": na + b.t1, "b.s2": na + b.s2, "b.t2": na + b.t2,
    }
    for i, name in enumerate(GADGET_VERTICES):
        names[name] = na + nb + i
    n = na + nb + len(GADGET_VERTICES)
    edges = list(a.graph.edges()) + [(u + na, v + na) for u, v in b.graph.edges()]
    for kind, x, y in gadget:
        u, v = names[x], names[y]
        if kind == "short":
            edges.append((u, v))
            continue
        chain = [u] + list(range(n, n + long_len - 1)) + [v]
        n += long_len - 1
        edges.extend(zip(chain, chain[1:]))
    c1, c2 = composed_parameters(k1, 0 if k2 is None else k2)
    return ProblemInstance(
        Graph(n, edges),
        names["s1'"], names["t1'"], names["s2'"], names["t2'"],
        at_most(c1),
        UNBOUNDED if k2 is None else at_most(c2),
    )


def make_no_instance(c1: LengthConstraint, c2: LengthConstraint) -> ProblemInstance:
    """Path 0-1-2 with both pairs (0, 2): each path needs both edges, so never solvable."""
    return ProblemInstance(Graph(3, [(0, 1), (1, 2)]), 0, 2, 0, 2, c1, c2)


@dataclass(frozen=True)
class CompositionReport:
    k1: int
    k2: int | None
    w: int
    padded_w: int
    d: int
    out_k1: int
    out_k2: int | None
    levels: list[dict] = field(default_factory=list)

    @staticmethod
    def closed_form(k1: int, k2: int, d: int) -> tuple[int, int]:
        return k1 + 4 * d, k2 + (3 * k1 + 1) * d + 6 * d * (d + 1)

    def as_text(self) -> str:
        rows = [
            f"k1={self.k1}",
            f"k2={'inf' if self.k2 is None else self.k2}",
            f"w={self.w}",
            f"padded_w={self.padded_w}",
            f"d={self.d}",
            f"out_k1={self.out_k1}",
            f"out_k2={'inf' if self.out_k2 is None else self.out_k2}",
        ]
        for i, level in enumerate(self.levels, start=1):
            rows.extend(f"level{i}.{key}={value}" for key, value in level.items())
        return "\n".join(rows) + "\n"


def or_compose_many(
    instances: Sequence[ProblemInstance], pad: bool = True
) -> tuple[ProblemInstance, CompositionReport]:
    """Pad to a power of two and compose pairwise, level by level."""
    if not instances:
        raise ValueError("nothing to compose")
    k1, k2 = _shared_parameters(instances[0])
    w = len(instances)
    size = 1
    while size < w:
        size *= 2
    if size != w and not pad:
        raise ValueError(f"{w} instances is not a power of two and padding is off")
    current = list(instances)
    filler = make_no_instance(instances[0].c1, instances[0].c2)
    current += [filler] * (size - w)
    levels = []
    while len(current) > 1:
        current = [or_compose_pair(x, y) for x, y in zip(current[::2], current[1::2])]
        head = current[0]
        levels.append({
            "instances": len(current),
            "k1": head.c1.k,
            "k2": "inf" if head.c2.k is None else head.c2.k,
            "max_vertices": max(x.graph.n for x in current),
            "max_edges": max(x.graph.m for x in current),
        })
    out = current[0]
    d = len(levels)
    report = CompositionReport(k1, k2, w, size, d, out.c1.k, out.c2.k, levels)
    return out, report
