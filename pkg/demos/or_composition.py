"""
OR composition of instances
===========================

Compose (<= k1, <= k2) instances pairwise into one instance that is solvable
exactly when one of the inputs is, and watch the parameters grow.
"""

from edpaths import (
    Graph, ProblemInstance, at_most, identify_compose, make_no_instance, oracle_solve,
    or_compose_many, or_compose_pair, PathInstance, ppt_from_exact_path,
)

k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
yes = ProblemInstance(k4, 0, 1, 2, 3, at_most(1), at_most(1))
no = make_no_instance(at_most(1), at_most(1))

for a_name, a in (("yes", yes), ("no", no)):
    for b_name, b in (("yes", yes), ("no", no)):
        out = or_compose_pair(a, b)
        got = oracle_solve(out, max_n=None) is not None
        print(f"{a_name:>3} OR {b_name:<3} -> {'yes' if got else 'no':3}  "
              f"(n={out.graph.n}, m={out.graph.m}, c1={out.c1}, c2={out.c2})")

_, report = or_compose_many([no, no, no, yes, no])
print("\nfive inputs, padded to a power of two:")
print(report.as_text(), end="")

# Two smaller transformers: identification of exact-path instances and the
# exact-path to two-path reduction.
p5 = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
merged = identify_compose([PathInstance(p5, 0, 4, 4), PathInstance(p5, 0, 4, 4)])
print(f"\nidentified two P5 copies: n={merged.graph.n}, m={merged.graph.m}")
for k in (3, 4):
    inst = ppt_from_exact_path(p5, 0, 4, k)
    print(f"P5 exact length {k}: two-path instance is {'yes' if oracle_solve(inst) else 'no'}")
