"""Small roots, low elements and the smallest Garside family of Artin-Tits monoids."""

from .automaton import CanonicalAutomaton, build_canonical_automaton
from .coxeter import CoxeterMatrix, catalog, gram_matrix, parse_coxeter_input
from .field import Scalar, ScalarField
from .low import GarsideFamily, LowSet, enumerate_low, extremal_elements, smallest_family, type_oracle, verify_family
from .monoid import GreedyNF, f_normal_form, left_divides, monoid_eq, right_lcm_simple, w_normal_form
from .roots import Root, RootSystem, SmallRootTable, enumerate_small_roots
from .weak_order import CoxeterGroup, Element, join_within

__all__ = [
    "CanonicalAutomaton", "CoxeterGroup", "CoxeterMatrix", "Element", "GarsideFamily", "GreedyNF",
    "LowSet", "Root", "RootSystem", "Scalar", "ScalarField", "SmallRootTable",
    "build_canonical_automaton", "catalog", "enumerate_low", "enumerate_small_roots",
    "extremal_elements", "f_normal_form", "gram_matrix", "join_within", "left_divides",
    "monoid_eq", "parse_coxeter_input", "right_lcm_simple", "smallest_family", "type_oracle",
    "verify_family", "w_normal_form",
]
