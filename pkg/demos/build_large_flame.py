"""
Growing a flame into a large flame
==================================

Generate a random acyclic digraph, grow a random flame inside it, and extend
that flame to a large one.  The trace shows which in-edges each step drops.
"""

import random

from flamekit import extend_to_large_flame, is_flame, is_large, local_edge_connectivity
from flamekit.verifier.instances import InstanceSpec, random_dag, random_flame

rng = random.Random(11)
D = random_dag(InstanceSpec(6, 14, max_parallel=2), rng)
print(D)

F = random_flame(D, rng, stop=0.3)
print("starting flame:", sorted(F))

# %%
L, trace = extend_to_large_flame(D, F)
for step in trace.steps:
    print(f"{step.vertex}: X={sorted(step.linked_set)} kept={sorted(step.kept)} "
          f"dropped={sorted(step.deleted)}")

# %%
# Check the result: it contains F, is a flame, is large, and has exactly one
# in-edge per unit of root connectivity.
total = sum(local_edge_connectivity(D, v) for v in D.nonroot)
print(F <= L, bool(is_flame(D, L)), is_large(D, L), len(L), total)

# Per-step invariants can be audited independently of the final checks.
print(trace.problems(D, F))
