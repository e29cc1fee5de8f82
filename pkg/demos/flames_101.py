"""
Flames, linked sets and largeness on a small digraph
====================================================

Walk through the basic objects on a three-vertex digraph with a pair of
parallel edges.
"""

from flamekit import (is_flame, is_large, largest_v_linked_set, local_edge_connectivity,
                      maximal_g_elements, parse_digraph)

D = parse_digraph("""
root r
edge e1 r a
edge e2 r a
edge e3 a b
edge e4 r b
""")
print(D)

# %%
# Local connectivity from the root.  Both a and b can be reached along two
# edge-disjoint paths.
for v in D.nonroot:
    print(v, local_edge_connectivity(D, v))

# %%
# A flame keeps, for each vertex, only in-edges that end disjoint root paths
# inside the flame itself.  The certificate lists those paths per vertex.
cert = is_flame(D, {"e1", "e3", "e4"})
print(bool(cert), {v: str(w) for v, w in cert.witnesses.items()})

# {e3} is coverable in D (through e1), but not inside D({e3}).
print(bool(is_flame(D, {"e3"})), is_flame(D, {"e3"}).failed_at)

# %%
# That flame is not large: a lost one of its two root paths.
print(is_large(D, {"e1", "e3", "e4"}), is_large(D, D.edge_ids))

# The tail-containment test gives the same answers.
print(is_large(D, {"e1", "e3", "e4"}, method="char"))

# %%
# The largest b-linked set and its witnesses.  The fill paths end exactly on the
# boundary; the link paths start there and run to b.
res = largest_v_linked_set(D, "b")
print(sorted(res.linked_set), sorted(res.boundary))
print("fill:", res.fill_witness)
print("link:", res.link_witness)

# %%
# Here every in-edge fits, so the only maximal member of G(D) is E.
print(maximal_g_elements(D))
