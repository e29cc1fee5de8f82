"""Flames, large edge sets and linked sets in finite rooted digraphs."""
from .construct import ConstructionTrace, extend_to_large_flame, large_flame
from .errors import (AugmentationError, BoundExceededError, CycleError, DependentSetError,
                     FlameKitError, GraphFormatError, NotAFlameError, NotLargeError, NotLinkedError)
from .flames import (FlameCertificate, flame_failure, g_failure, g_membership, gammoid_independent,
                     is_flame, is_large, largeness_certificate, largeness_witness,
                     local_edge_connectivity, maximal_g_elements)
from .flow import (edge_connectivity, linkage_merge, max_edge_disjoint_paths, required_edge_paths,
                   residual_unreachable_set)
from .graph import (Edge, RootedDigraph, delta_in, delta_in_set, parse_digraph, parse_edge_set,
                    serialize_digraph, serialize_edge_set, topological_order)
from .linked import (LinkedSetResult, augment_fill_after_insert, covering_linked_witness,
                     cut_witness_via_fill, is_fillable, is_v_linked, largest_v_linked_set)
from .paths import CutWitness, PathSystem

__version__ = "0.1.0"
