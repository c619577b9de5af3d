"""
How often does a single trial succeed?
======================================

For a planted pair with k1 + k2 edges, one random coloring puts every edge
of the pair in the right class with probability 2^-(k1+k2). Other solutions
can only help, so the measured rate should sit at or above that line.
"""

import numpy as np

from edpaths import Case, PlantShape, gen_planted, random_edge_partition
from edpaths.partition import partition_trial, prepare
from edpaths.rng import SplitMix64, mix_seed

trials = 4000
print("k1 k2   rate   2^-r   rate/2^-r")
for k1, k2 in [(1, 1), (1, 2), (2, 2), (2, 3), (3, 3)]:
    inst, _ = gen_planted(PlantShape(Case.SHORT_SHORT, k1, k2, extra_n=10, extra_m=20), seed=k1 * 10 + k2)
    problem = prepare(inst)
    hits = np.array([
        partition_trial(problem, random_edge_partition(problem.colorable, SplitMix64(mix_seed(0, i))))
        is not None
        for i in range(trials)
    ])
    bound = 2.0 ** -(k1 + k2)
    print(f"{k1:2d} {k2:2d} {hits.mean():7.4f} {bound:6.4f} {hits.mean() / bound:8.2f}")
