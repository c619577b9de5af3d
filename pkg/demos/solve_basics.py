"""
Solving two-path instances
==========================

Build a few tiny instances by hand, solve them, and check every answer
against the exhaustive oracle.
"""

from edpaths import (
    UNBOUNDED, Graph, ProblemInstance, Unsupported, at_least, at_most, classify_case, exactly, oracle_solve,
    solve, verify_solution,
)

# K4 has room for two disjoint short paths; the 4-cycle with crossing pairs does not.
k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
square = Graph(4, [(0, 1), (0, 2), (2, 3), (3, 1)])

cases = [
    ("K4, both short", ProblemInstance(k4, 0, 1, 2, 3, at_most(2), at_most(2))),
    ("C4, crossing pairs", ProblemInstance(c4, 0, 2, 1, 3, at_most(2), at_most(2))),
    ("square, short + any", ProblemInstance(square, 0, 1, 0, 1, at_most(1), UNBOUNDED)),
    ("square, exact + long", ProblemInstance(square, 0, 1, 0, 1, exactly(1), at_least(3))),
    # The long constraint comes first here; the solver swaps the pairs and back.
    ("square, long + exact", ProblemInstance(square, 0, 1, 0, 1, at_least(3), exactly(1))),
    ("K4, long + long", ProblemInstance(k4, 0, 1, 2, 3, at_least(2), at_least(2))),
]

for name, inst in cases:
    case = classify_case(inst.c1, inst.c2)
    answer = solve(inst)
    truth = oracle_solve(inst)
    if answer is None:
        shown = "NO"
    elif isinstance(answer, Unsupported):
        shown = str(answer)
    else:
        assert verify_solution(inst, answer.p1, answer.p2).valid
        shown = f"{answer.p1} | {answer.p2}"
    print(f"{name:24s} {case.case.value:16s} solver: {shown:36s} oracle: {'yes' if truth else 'no'}")
