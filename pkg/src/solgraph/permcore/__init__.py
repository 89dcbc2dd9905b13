"""Permutation-group engine."""

from .chain import StabilizerChain
from .group import (
    DEFAULT_CAP, ConjugacyClass, CosetMap, DirectProduct, Group, SeriesReport,
    centralizer_of, conjugacy_classes, contains, derived_series, derived_subgroup,
    direct_product, elements, group_from_generators, is_abelian, is_metabelian,
    is_metacyclic, is_nilpotent, is_soluble, lower_central_series,
    normal_closure, normalizer_of_cyclic, order, quotient_by, radical_from_members,
    soluble_radical,
    subgroup_from_elements, trivial_group, wreath_s2,
)
from .perm import Permutation, parse_cycle_string

__all__ = [
    "DEFAULT_CAP", "ConjugacyClass", "CosetMap", "DirectProduct", "Group",
    "Permutation", "SeriesReport", "StabilizerChain", "centralizer_of",
    "conjugacy_classes", "contains", "derived_series", "derived_subgroup",
    "direct_product", "elements", "group_from_generators", "is_abelian",
    "is_metabelian", "is_metacyclic", "is_nilpotent", "is_soluble",
    "lower_central_series", "normal_closure", "normalizer_of_cyclic", "order",
    "parse_cycle_string", "quotient_by", "radical_from_members", "soluble_radical",
    "subgroup_from_elements", "trivial_group", "wreath_s2",
]
