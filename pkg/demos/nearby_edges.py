"""
Nearby edges and trial budgets
==============================

The unbounded and long cases only recolor edges close to the first pair.
This script shows how small that set is on a sparse random graph and what
that does to the number of trials.
"""

from edpaths import Case, PlantShape, SolveConfig, TrialPlan, compute_nearby, gen_planted
from edpaths.partition import prepare, randomized_search

inst, cert = gen_planted(PlantShape(Case.SHORT_UNBOUNDED, 2, 0, extra_n=2000, extra_m=4000,
                                    free_length=6), seed=1)
g = inst.graph
near = compute_nearby(g, inst.s1, inst.t1, inst.c1.k)
print(f"graph: n={g.n} m={g.m}")
print(f"nearby vertices: {near.vertex_count}, nearby edges: {near.edge_count}")

# Edges of any short first path are nearby; the planted one is no exception.
assert set(cert.p1.edges) <= set(near.nearby_edges)

problem = prepare(inst)
for delta in (1e-1, 1e-3, 1e-9):
    plan = TrialPlan.make(problem.exponent, delta, 0, len(problem.colorable))
    kind = "every coloring" if plan.exhaustive else "random colorings"
    print(f"delta={delta:g}: exponent {plan.exponent}, {plan.trials} trials over {kind}")

outcome = randomized_search(problem, SolveConfig(delta=1e-9))
print(f"solved after {outcome.trials_run} trial(s): {outcome.solution.p1} | {outcome.solution.p2}")
