"""
Searching small digraphs for counterexamples
============================================

Two statements are open: whether every maximal member of G(D) is a flame
(acyclic D), and whether every flame of a cyclic digraph extends to a large
flame.  Sweep small instances and re-check anything found.
"""

from flamekit.verifier import (InstanceSpec, reverify, search_conjecture_flame_extension_cyclic,
                               search_question_maximal_flames)
from flamekit.verifier import suites
from flamekit import parse_digraph

spec = InstanceSpec(3, 5, max_parallel=2, min_nonroot_vertices=0)
for search in (search_question_maximal_flames, search_conjecture_flame_extension_cyclic):
    report = search(spec)
    print(report.summary())
    print("all re-verify:", all(reverify(v) for v in report.violations))

# %%
# Without acyclicity the first statement fails already on five edges.  The
# maximal set {e1,e2,e3} covers the 2-cycle v1 <-> v2, yet inside it nothing
# reaches v1 or v2 from the root.
D = parse_digraph("""
root r
edge e1 r v3
edge e2 v1 v2
edge e3 v2 v1
edge e4 v3 v1
edge e5 v3 v2
""")
for finding in suites.question_findings(D):
    print(finding.certificate, reverify(finding))
