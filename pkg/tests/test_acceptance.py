"""Acceptance suite: one test per criterion, each reporting a PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py``; the lines appear in the
"acceptance criteria" section of the terminal summary.
"""
from __future__ import annotations

import math
import random
import time

from edpaths import (
    UNBOUNDED, Case, LimitsExceeded, PlantShape, ProblemInstance, SolveConfig,
    Unsupported, classify_case, at_least, at_most, compute_nearby, derandomized_solve, enumerate_paths, gen_planted,
    gen_random, minimal_valid_partner, oracle_solve, or_compose_many, or_compose_pair,
    ppt_from_exact_path, random_edge_partition, solve, verify_solution,
)
from edpaths.gadgets import CompositionReport, make_no_instance
from edpaths.generate import case_constraints
from edpaths.partition import partition_trial, prepare
from edpaths.rng import SplitMix64, mix_seed

from conftest import ACCEPTANCE_LINES

SUPPORTED = [c for c in Case if c.supported]


def record(number: int, ok: bool, title: str, detail: str) -> None:
    ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'}  [{number}] {title}: {detail}")


def random_case_instance(rng: random.Random, case: Case, max_n: int = 10, max_m: int = 16) -> ProblemInstance:
    """Random or planted instance of ``case`` within the size caps, pairs possibly swapped."""
    k1, k2 = rng.randint(1, 4), rng.randint(1, 4)
    c1, c2 = case_constraints(case, k1, k2)
    seed = rng.randrange(2**32)
    if rng.random() < 1 / 3:
        free = rng.randint(1, 4) if c2 == UNBOUNDED else None
        len2 = free if free is not None else k2
        base_n = k1 + len2 + 2
        extra_n = rng.randint(0, max(0, max_n - base_n))
        n = base_n + extra_n
        room = min(max_m - k1 - len2, n * (n - 1) // 2 - k1 - len2)
        if base_n <= max_n and room >= 0:
            inst, _ = gen_planted(PlantShape(case, k1, k2, extra_n, rng.randint(0, room), free), seed)
            return inst.swapped() if rng.random() < 0.5 else inst
    n = rng.randint(4, max_n)
    m = rng.randint(n - 1, min(max_m, n * (n - 1) // 2))
    rule = rng.choice(["distinct", "coincident", "crossing"] if m >= 4 else ["distinct", "coincident"])
    inst = gen_random(n, m, rule, c1, c2, seed)
    return inst.swapped() if rng.random() < 0.5 else inst


def test_1_oracle_equivalence_randomized():
    rng = random.Random(1)
    start = time.perf_counter()
    wrong, yes = [], 0
    total = 500
    for i in range(total):
        inst = random_case_instance(rng, SUPPORTED[i % len(SUPPORTED)])
        got = solve(inst, SolveConfig(delta=1e-9, seed=i))
        truth = oracle_solve(inst)
        yes += truth is not None
        if (got is None) != (truth is None) or (got is not None and not verify_solution(inst, got.p1, got.p2).valid):
            wrong.append(i)
    wall = time.perf_counter() - start
    ok = not wrong and wall < 300
    record(1, ok, "oracle equivalence, randomized mode",
           f"{total} instances over 7 cases ({yes} yes), {len(wrong)} disagreements, {wall:.1f}s (< 300s)")
    assert ok, wrong


def test_2_oracle_equivalence_derandomized():
    rng = random.Random(2)
    checked, wrong, yes, i = 0, [], 0, 0
    while checked < 200:
        inst = random_case_instance(rng, SUPPORTED[i % len(SUPPORTED)], max_n=9, max_m=14)
        i += 1
        problem = prepare(inst.swapped() if classify_case(inst.c1, inst.c2).swapped else inst)
        if len(problem.colorable) > 14:
            continue
        try:
            got = derandomized_solve(inst)
        except LimitsExceeded:
            wrong.append(("limits", i))
            continue
        checked += 1
        truth = oracle_solve(inst)
        yes += truth is not None
        if (got is None) != (truth is None) or (got is not None and not verify_solution(inst, got.p1, got.p2).valid):
            wrong.append(i)
    ok = not wrong
    record(2, ok, "oracle equivalence, derandomized mode",
           f"{checked} instances with <= 14 colorable edges ({yes} yes), {len(wrong)} disagreements")
    assert ok, wrong


def test_3_soundness_fuzz():
    rng = random.Random(3)
    calls, returned, bad = 0, 0, []
    while calls < 10_000:
        inst = random_case_instance(rng, rng.choice(SUPPORTED), max_n=10, max_m=18)
        got = solve(inst, SolveConfig(delta=rng.choice([0.5, 1e-2, 1e-9]), seed=calls))
        calls += 1
        assert not isinstance(got, Unsupported)
        if got is not None:
            returned += 1
            if not verify_solution(inst, got.p1, got.p2).valid:
                bad.append(calls)
    ok = not bad
    record(3, ok, "soundness fuzz", f"{calls} solve calls, {returned} pairs returned, {len(bad)} invalid")
    assert ok, bad


def _first_paths(inst: ProblemInstance) -> list:
    return enumerate_paths(inst.graph, inst.s1, inst.t1, max_len=inst.c1.k).paths


def _nearby_bound_run(number: int, title: str, rng_seed: int, partner_constraint, bound) -> None:
    rng = random.Random(rng_seed)
    yes_instances, pairs_checked, violations, worst = 0, 0, [], 0.0
    while yes_instances < 200:
        k1, k2 = rng.randint(1, 4), rng.randint(1, 4)
        n = rng.randint(4, 10)
        m = rng.randint(n, min(20, n * (n - 1) // 2))
        inst = gen_random(n, m, rng.choice(["distinct", "coincident", "crossing"]),
                          at_most(k1), UNBOUNDED, rng.randrange(2**32))
        g = inst.graph
        near = compute_nearby(g, inst.s1, inst.t1, k1)
        members = set(near.nearby_edges)
        any_pair = False
        for p1 in _first_paths(inst):
            if not set(p1.edges) <= members:
                violations.append(("P1 edge not nearby", p1))
            q = minimal_valid_partner(g, p1, inst.s2, inst.t2, partner_constraint(k2))
            if q is None:
                continue
            any_pair = True
            pairs_checked += 1
            count = sum(1 for e in q.edges if e in members)
            limit = bound(k1, k2)
            worst = max(worst, count / limit)
            if count > limit:
                violations.append((k1, k2, p1, q, count))
        yes_instances += any_pair
    ok = not violations
    record(number, ok, title,
           f"{yes_instances} yes-instances, {pairs_checked} (P1, minimal partner) pairs, "
           f"{len(violations)} violations, max count/bound {worst:.2f}")
    assert ok, violations[:5]


def test_4_nearby_bound_unconstrained_partner():
    _nearby_bound_run(4, "nearby-edge bound, unconstrained partner", 4,
               lambda k2: UNBOUNDED, lambda k1, k2: (k1 + 1) ** 2)


def test_5_nearby_bound_long_partner():
    _nearby_bound_run(5, "nearby-edge bound, long partner", 5,
               at_least, lambda k1, k2: k1 * k1 + 3 * k1 + 2 * k2)


def test_6_per_trial_success():
    rng = random.Random(6)
    trials = 10_000
    failures = []
    lowest = math.inf
    for j in range(20):
        k1 = rng.randint(1, 3)
        k2 = rng.randint(1, 6 - k1)
        extra_n = rng.randint(0, 8)
        n = k1 + k2 + 2 + extra_n
        extra_m = rng.randint(0, min(15, n * (n - 1) // 2 - k1 - k2))
        inst, _ = gen_planted(PlantShape(Case.SHORT_SHORT, k1, k2, extra_n, extra_m), seed=100 + j)
        problem = prepare(inst)
        hits = sum(
            partition_trial(problem, random_edge_partition(problem.colorable, SplitMix64(mix_seed(j, i))))
            is not None
            for i in range(trials)
        )
        p = 2.0 ** -(k1 + k2)
        floor = p - 3 * math.sqrt(p * (1 - p) / trials)
        rate = hits / trials
        lowest = min(lowest, rate / p)
        if rate < floor:
            failures.append((j, k1, k2, rate, floor))
    ok = not failures
    record(6, ok, "per-trial success on planted instances",
           f"20 instances x {trials} partitions, {len(failures)} below 2^-r - 3 sigma, "
           f"min rate/2^-r {lowest:.2f}")
    assert ok, failures


def _small_pair(rng: random.Random, k1: int, k2: int) -> ProblemInstance:
    n = rng.randint(3, 8)
    m = rng.randint(n - 1, min(12, n * (n - 1) // 2))
    rule = rng.choice(["distinct", "coincident"] + (["crossing"] if n >= 4 and m >= 4 else []))
    return gen_random(n, m, rule, at_most(k1), at_most(k2), rng.randrange(2**32))


def test_7_or_composition():
    rng = random.Random(7)
    wrong, param_wrong, yes = [], [], 0
    for i in range(100):
        k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
        a, b = _small_pair(rng, k1, k2), _small_pair(rng, k1, k2)
        if i % 4 == 0:
            b = make_no_instance(at_most(k1), at_most(k2))
        want = oracle_solve(a) is not None or oracle_solve(b) is not None
        out = or_compose_pair(a, b)
        got = oracle_solve(out, max_n=None) is not None
        yes += want
        if got != want:
            wrong.append(i)
        if (out.c1.k, out.c2.k) != (k1 + 4, k2 + 3 * (k1 + 4) + 1):
            param_wrong.append(i)
    multi = []
    for w in (2, 4, 8):
        k1, k2 = rng.randint(1, 3), rng.randint(1, 3)
        insts = [_small_pair(rng, k1, k2) for _ in range(w)]
        out, report = or_compose_many(insts)
        d = report.d
        expect = (k1 + 4 * d, k2 + (3 * k1 + 1) * d + 6 * d * (d + 1))
        if d != int(math.log2(w)) or (out.c1.k, out.c2.k) != expect or \
                CompositionReport.closed_form(k1, k2, d) != expect:
            multi.append(w)
    ok = not (wrong or param_wrong or multi)
    record(7, ok, "OR composition",
           f"100 pairs ({yes} yes), {len(wrong)} semantic and {len(param_wrong)} parameter mismatches; "
           f"closed forms for w in {{2,4,8}}: {'exact' if not multi else multi}")
    assert ok, (wrong, param_wrong, multi)


def test_8_ppt_gadget():
    rng = random.Random(8)
    wrong, size_wrong, yes = [], [], 0
    for i in range(100):
        n = rng.randint(2, 10)
        m = rng.randint(0, min(18, n * (n - 1) // 2))
        g = gen_random(n, m, seed=rng.randrange(2**32)).graph
        s, t = rng.sample(range(n), 2)
        k = rng.randint(1, n)
        exists = any(p.length == k for p in enumerate_paths(g, s, t).paths)
        inst = ppt_from_exact_path(g, s, t, k)
        yes += exists
        if (oracle_solve(inst) is not None) != exists:
            wrong.append(i)
        if (inst.graph.n, inst.graph.m) != (g.n + 2, g.m + 1):
            size_wrong.append(i)
    ok = not wrong and not size_wrong
    record(8, ok, "exact-path gadget",
           f"100 inputs ({yes} yes), {len(wrong)} answer and {len(size_wrong)} size mismatches")
    assert ok, (wrong, size_wrong)


def test_9_performance():
    inst, _ = gen_planted(PlantShape(Case.SHORT_SHORT, 4, 4, extra_n=50_000, extra_m=100_000 - 8), seed=9)
    start = time.perf_counter()
    sol = solve(inst, SolveConfig(delta=1e-6, seed=0))
    big = time.perf_counter() - start
    big_ok = sol is not None and verify_solution(inst, sol.p1, sol.p2).valid and big < 60

    inst2, _ = gen_planted(PlantShape(Case.SHORT_UNBOUNDED, 2, 0, extra_n=5_000, extra_m=10_000 - 7,
                                      free_length=5), seed=9)
    start = time.perf_counter()
    sol2 = solve(inst2, SolveConfig(delta=1e-6, seed=0))
    small = time.perf_counter() - start
    small_ok = sol2 is not None and verify_solution(inst2, sol2.p1, sol2.p2).valid and small < 60
    ok = big_ok and small_ok
    record(9, ok, "performance",
           f"ShortShort m={inst.graph.m} k=(4,4) {big:.1f}s, "
           f"ShortUnbounded m={inst2.graph.m} k1=2 {small:.2f}s (each < 60s)")
    assert ok
