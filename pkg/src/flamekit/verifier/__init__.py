"""Brute-force oracles, instance generators and theorem suites."""
from .instances import InstanceSpec, enumerate_instances, random_dag, random_digraph
from .oracles import brute_force_largest_v_linked
from .suites import (SweepReport, Violation, check_constructor, check_greedoid_exchange,
                     check_matroid_bases, check_maximal_elements_large, reverify,
                     search_conjecture_flame_extension_cyclic, search_question_maximal_flames)
