import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from edpaths import (
    UNBOUNDED, Case, CaseId, GraphFormatError, InvalidPath, Kind, LengthConstraint, ProblemInstance,
    Solution, at_least, at_most, classify_case, exactly, format_instance, format_solution,
    parse_instance, parse_solution, verify_solution,
)
from edpaths.constraints import LengthViolation, SharedEdge, WrongEndpoint
from edpaths.oracle import is_valid_pair

from conftest import constraint, instances, k4, p


def test_constraint_admits():
    assert at_most(3).admits(3) and not at_most(3).admits(4)
    assert exactly(2).admits(2) and not exactly(2).admits(1)
    assert at_least(2).admits(5) and not at_least(2).admits(1)
    assert UNBOUNDED.admits(0)


def test_constraint_text_round_trip():
    for c in (at_most(0), exactly(7), at_least(3), UNBOUNDED):
        assert LengthConstraint.parse(str(c)) == c
    for bad in ("", "lt 3", "le", "le -1", "inf 2", "eq x"):
        with pytest.raises(ValueError):
            LengthConstraint.parse(bad)


def test_constraint_validation():
    with pytest.raises(ValueError):
        LengthConstraint(Kind.AT_MOST)
    with pytest.raises(ValueError):
        LengthConstraint(Kind.UNBOUNDED, 3)
    with pytest.raises(ValueError):
        at_most(-1)


def test_classify_examples():
    assert classify_case(at_most(3), UNBOUNDED) == CaseId(Case.SHORT_UNBOUNDED, False)
    cid = classify_case(at_least(2), at_most(3))
    assert (cid.case, cid.swapped) == (Case.SHORT_LONG, True)
    assert classify_case(at_least(2), UNBOUNDED).case is Case.OPEN_LONG_UNBOUNDED
    assert not Case.OPEN_LONG_LONG.supported


def test_classify_is_total_and_swap_consistent():
    kinds = list(Kind)
    seen = set()
    for a, b in itertools.product(kinds, kinds):
        c1, c2 = constraint(a, 2), constraint(b, 3)
        cid = classify_case(c1, c2)
        seen.add(cid.case)
        back = classify_case(c2, c1)
        assert back.case is cid.case
        if a is not b:
            assert back.swapped != cid.swapped
        else:
            assert not cid.swapped
    assert seen == set(Case)


def test_verify_examples():
    g = k4()
    inst = ProblemInstance(g, 0, 1, 2, 3, at_most(1), at_most(1))
    assert verify_solution(inst, g.path([0, 1]), g.path([2, 3])).valid

    p3 = p(3)
    inst = ProblemInstance(p3, 0, 2, 0, 2, at_most(2), at_most(2))
    path = p3.path([0, 1, 2])
    verdict = verify_solution(inst, path, path)
    assert [type(v) for v in verdict.violations] == [SharedEdge, SharedEdge]

    inst = ProblemInstance(g, 0, 1, 2, 3, at_most(2), UNBOUNDED)
    verdict = verify_solution(inst, g.path([0, 2, 3, 1]), g.path([2, 1, 0, 3]))
    assert verdict.violations == (LengthViolation(1, 3, at_most(2)),)


def test_verify_wrong_endpoints_and_foreign_path():
    g = k4()
    inst = ProblemInstance(g, 0, 1, 2, 3, UNBOUNDED, UNBOUNDED)
    verdict = verify_solution(inst, g.path([1, 0]), g.path([2, 3]))
    assert isinstance(verdict.violations[0], WrongEndpoint)
    with pytest.raises(InvalidPath):
        verify_solution(ProblemInstance(p(4), 0, 3, 0, 3, UNBOUNDED, UNBOUNDED),
                        g.path([0, 3]), g.path([0, 3]))


def test_instance_rejects_bad_terminals():
    with pytest.raises(ValueError):
        ProblemInstance(p(3), 0, 3, 0, 1, UNBOUNDED, UNBOUNDED)


def test_instance_file_round_trip():
    inst = ProblemInstance(k4(), 0, 1, 2, 3, exactly(2), at_least(1))
    text = format_instance(inst)
    assert text.endswith("terminals 0 1 2 3\nc1 eq 2\nc2 ge 1\n")
    assert parse_instance(text) == inst


@pytest.mark.parametrize(
    "tail, kind",
    [
        ("terminals 0 1 2 3\nc1 le 2\n", "MissingDirective"),
        ("terminals 0 1 2 3\nc1 le 2\nc2 inf\nc2 inf\n", "RepeatedDirective"),
        ("terminals 0 1 2 3\nc1 le 2\nc2 inf\nfoo 1\n", "UnknownDirective"),
        ("terminals 0 1 2 9\nc1 le 2\nc2 inf\n", "BadTerminals"),
        ("terminals 0 1 2 3\nc1 lt 2\nc2 inf\n", "BadConstraint"),
    ],
)
def test_instance_file_errors(tail, kind):
    with pytest.raises(GraphFormatError) as err:
        parse_instance("4 1\n0 1\n" + tail)
    assert err.value.kind == kind


def test_solution_file_round_trip():
    g = k4()
    sol = Solution(g.path([0, 1]), g.path([2, 3]))
    assert format_solution(sol) == "0 1\n2 3\n"
    assert parse_solution(format_solution(sol), g) == sol
    assert format_solution(None) == "NO\n"
    assert parse_solution("NO\n", g) is None
    with pytest.raises(ValueError):
        parse_solution("0 1\n", g)
    with pytest.raises(InvalidPath):
        parse_solution("0 1\n1 1\n", g)


@given(instances(max_n=6, max_m=9), st.data())
def test_verify_agrees_with_definition(inst, data):
    g = inst.graph

    def any_path(s, t):
        # Random walk that stops at t or when stuck; only simple prefixes are kept.
        walk = [s]
        while walk[-1] != t:
            options = [w for w in g.neighbors(walk[-1]) if w not in walk]
            if not options:
                break
            walk.append(data.draw(st.sampled_from(options)))
        return g.path(walk)

    p1, p2 = any_path(inst.s1, inst.t1), any_path(inst.s2, inst.t2)
    assert verify_solution(inst, p1, p2).valid == is_valid_pair(inst, p1, p2)


def test_swapped_instance_and_solution():
    g = k4()
    inst = ProblemInstance(g, 0, 1, 2, 3, exactly(1), at_least(1))
    assert inst.swapped().swapped() == inst
    sol = Solution(g.path([0, 1]), g.path([2, 3]))
    flip = sol.swapped()
    assert verify_solution(inst.swapped(), flip.p1, flip.p2).valid
