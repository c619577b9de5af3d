"""Length constraints, problem instances, case classification and verification."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Union

from .graph import Graph, GraphFormatError, InvalidPath, Path, _ints, _tokens, read_graph_block, serialize_graph


class Kind(enum.Enum):
    AT_MOST = "le"
    EXACTLY = "eq"
    AT_LEAST = "ge"
    UNBOUNDED = "inf"


@dataclass(frozen=True)
class LengthConstraint:
    kind: Kind
    k: Optional[int] = None

    def __post_init__(self) -> None:
        if (self.kind is Kind.UNBOUNDED) != (self.k is None):
            raise ValueError("k must be given exactly when the constraint is bounded")
        if self.k is not None and self.k < 0:
            raise ValueError("k must be non-negative")

    def admits(self, length: int) -> bool:
        if self.kind is Kind.AT_MOST:
            return length <= self.k
        if self.kind is Kind.EXACTLY:
            return length == self.k
        if self.kind is Kind.AT_LEAST:
            return length >= self.k
        return True

    @property
    def max_length(self) -> Optional[int]:
        """Longest admissible length, or ``None`` if unbounded above."""
        return self.k if self.kind in (Kind.AT_MOST, Kind.EXACTLY) else None

    @classmethod
    def parse(cls, text: str) -> "LengthConstraint":
        """Parse ``"le K"``, ``"eq K"``, ``"ge K"`` or ``"inf"``."""
        parts = text.split()
        try:
            kind = Kind(parts[0]) if parts else None
        except ValueError:
            kind = None
        if kind is None:
            raise ValueError(f"bad constraint {text!r}")
        if kind is Kind.UNBOUNDED:
            if len(parts) != 1:
                raise ValueError(f"bad constraint {text!r}")
            return cls(kind)
        if len(parts) != 2 or not parts[1].isdigit():
            raise ValueError(f"bad constraint {text!r}")
        return cls(kind, int(parts[1]))

    def __str__(self) -> str:
        return "inf" if self.kind is Kind.UNBOUNDED else f"{self.kind.value} {self.k}"


def at_most(k: int) -> LengthConstraint:
    return LengthConstraint(Kind.AT_MOST, k)


def exactly(k: int) -> LengthConstraint:
    return LengthConstraint(Kind.EXACTLY, k)


def at_least(k: int) -> LengthConstraint:
    return LengthConstraint(Kind.AT_LEAST, k)


UNBOUNDED = LengthConstraint(Kind.UNBOUNDED)


@dataclass(frozen=True)
class ProblemInstance:
    graph: Graph
    s1: int
    t1: int
    s2: int
    t2: int
    c1: LengthConstraint
    c2: LengthConstraint

    def __post_init__(self) -> None:
        for v in (self.s1, self.t1, self.s2, self.t2):
            if not 0 <= v < self.graph.n:
                raise ValueError(f"terminal {v} out of range for n={self.graph.n}")

    def swapped(self) -> "ProblemInstance":
        return ProblemInstance(self.graph, self.s2, self.t2, self.s1, self.t1, self.c2, self.c1)


@dataclass(frozen=True)
class Solution:
    p1: Path
    p2: Path

    def swapped(self) -> "Solution":
        return Solution(self.p2, self.p1)


class Case(enum.Enum):
    SHORT_SHORT = "ShortShort"
    SHORT_EXACT = "ShortExact"
    EXACT_EXACT = "ExactExact"
    SHORT_UNBOUNDED = "ShortUnbounded"
    EXACT_UNBOUNDED = "ExactUnbounded"
    SHORT_LONG = "ShortLong"
    EXACT_LONG = "ExactLong"
    OPEN_LONG_UNBOUNDED = "OpenLongUnbounded"
    OPEN_LONG_LONG = "OpenLongLong"
    UNCONSTRAINED = "Unconstrained"

    @property
    def supported(self) -> bool:
        return self not in _OPEN


_OPEN = {Case.OPEN_LONG_UNBOUNDED, Case.OPEN_LONG_LONG, Case.UNCONSTRAINED}


@dataclass(frozen=True)
class CaseId:
    case: Case
    swapped: bool


# Normalized (first, second) kind pairs. Any pair not listed is handled by swapping.
_CASES = {
    (Kind.AT_MOST, Kind.AT_MOST): Case.SHORT_SHORT,
    (Kind.AT_MOST, Kind.EXACTLY): Case.SHORT_EXACT,
    (Kind.EXACTLY, Kind.EXACTLY): Case.EXACT_EXACT,
    (Kind.AT_MOST, Kind.UNBOUNDED): Case.SHORT_UNBOUNDED,
    (Kind.EXACTLY, Kind.UNBOUNDED): Case.EXACT_UNBOUNDED,
    (Kind.AT_MOST, Kind.AT_LEAST): Case.SHORT_LONG,
    (Kind.EXACTLY, Kind.AT_LEAST): Case.EXACT_LONG,
    (Kind.AT_LEAST, Kind.UNBOUNDED): Case.OPEN_LONG_UNBOUNDED,
    (Kind.AT_LEAST, Kind.AT_LEAST): Case.OPEN_LONG_LONG,
    (Kind.UNBOUNDED, Kind.UNBOUNDED): Case.UNCONSTRAINED,
}


def classify_case(c1: LengthConstraint, c2: LengthConstraint) -> CaseId:
    key = (c1.kind, c2.kind)
    if key in _CASES:
        return CaseId(_CASES[key], False)
    return CaseId(_CASES[key[::-1]], True)


# -- verification ------------------------------------------------------------


@dataclass(frozen=True)
class WrongEndpoint:
    which: int
    expected: tuple[int, int]
    actual: tuple[int, int]

    def __str__(self) -> str:
        return f"WrongEndpoint(path {self.which}: expected {self.expected}, got {self.actual})"


@dataclass(frozen=True)
class SharedEdge:
    edge: int
    ends: tuple[int, int]

    def __str__(self) -> str:
        return f"SharedEdge({self.edge}: {self.ends[0]}-{self.ends[1]})"


@dataclass(frozen=True)
class LengthViolation:
    which: int
    actual: int
    constraint: LengthConstraint

    def __str__(self) -> str:
        return f"LengthViolation(path {self.which}: length {self.actual}, needs {self.constraint})"


Violation = Union[WrongEndpoint, SharedEdge, LengthViolation]


@dataclass(frozen=True)
class Verdict:
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid


def verify_solution(inst: ProblemInstance, p1: Path, p2: Path) -> Verdict:
    """Check endpoints, edge-disjointness and both length constraints.

    The paths are first re-validated against ``inst.graph``; a path that is
    not a simple path of the graph raises :class:`InvalidPath`.
    """
    g = inst.graph
    p1 = g.path(p1.vertices)
    p2 = g.path(p2.vertices)
    found: list[Violation] = []
    for which, p, s, t in ((1, p1, inst.s1, inst.t1), (2, p2, inst.s2, inst.t2)):
        if (p.start, p.end) != (s, t):
            found.append(WrongEndpoint(which, (s, t), (p.start, p.end)))
    for e in sorted(set(p1.edges) & set(p2.edges)):
        found.append(SharedEdge(e, g.endpoints(e)))
    for which, p, c in ((1, p1, inst.c1), (2, p2, inst.c2)):
        if not c.admits(p.length):
            found.append(LengthViolation(which, p.length, c))
    return Verdict(tuple(found))


# -- file formats ------------------------------------------------------------


def parse_instance(text: str) -> ProblemInstance:
    """Parse a graph block followed by ``terminals``, ``c1`` and ``c2`` lines."""
    records = _tokens(text.splitlines())
    g = read_graph_block(records)
    fields_by_key: dict[str, tuple[int, list[str]]] = {}
    for line, fields in records:
        key = fields[0]
        if key not in ("terminals", "c1", "c2"):
            raise GraphFormatError("UnknownDirective", line, key)
        if key in fields_by_key:
            raise GraphFormatError("RepeatedDirective", line, key)
        fields_by_key[key] = (line, fields[1:])
    for key in ("terminals", "c1", "c2"):
        if key not in fields_by_key:
            raise GraphFormatError("MissingDirective", 0, key)
    line, fields = fields_by_key["terminals"]
    s1, t1, s2, t2 = _ints(fields, 4, line)
    cons = []
    for key in ("c1", "c2"):
        line, fields = fields_by_key[key]
        try:
            cons.append(LengthConstraint.parse(" ".join(fields)))
        except ValueError as exc:
            raise GraphFormatError("BadConstraint", line, str(exc)) from None
    try:
        return ProblemInstance(g, s1, t1, s2, t2, cons[0], cons[1])
    except ValueError as exc:
        raise GraphFormatError("BadTerminals", fields_by_key["terminals"][0], str(exc)) from None


def format_instance(inst: ProblemInstance) -> str:
    return (
        serialize_graph(inst.graph)
        + f"terminals {inst.s1} {inst.t1} {inst.s2} {inst.t2}\n"
        + f"c1 {inst.c1}\nc2 {inst.c2}\n"
    )


def format_solution(sol: Optional[Solution]) -> str:
    if sol is None:
        return "NO\n"
    return " ".join(map(str, sol.p1.vertices)) + "\n" + " ".join(map(str, sol.p2.vertices)) + "\n"


def parse_solution(text: str, g: Graph) -> Optional[Solution]:
    """Inverse of :func:`format_solution`; validates both paths against ``g``."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if lines == ["NO"]:
        return None
    if len(lines) != 2:
        raise ValueError("solution file must hold two vertex-sequence lines or NO")
    paths = []
    for ln in lines:
        try:
            vertices = [int(x) for x in ln.split()]
        except ValueError:
            raise ValueError(f"bad vertex sequence {ln!r}") from None
        paths.append(g.path(vertices))
    return Solution(paths[0], paths[1])


__all__ = [
    "Kind", "LengthConstraint", "at_most", "exactly", "at_least", "UNBOUNDED",
    "ProblemInstance", "Solution", "Case", "CaseId", "classify_case",
    "WrongEndpoint", "SharedEdge", "LengthViolation", "Verdict", "verify_solution",
    "parse_instance", "format_instance", "format_solution", "parse_solution", "InvalidPath",
]
