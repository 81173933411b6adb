"""Brute-force construction of small finite groups and Sylow-number oracles."""

from .constructions import alternating_group, frobenius_affine, psl, psl_order, sp4_2
from .core import CapExceeded, FiniteGroup, NotASubgroup, closure, default_cap, perm_inverse, perm_mul
from .sylow import (
    SylowMethod,
    SylowPreconditionError,
    SylowReport,
    count_sylow_by_conjugacy,
    count_sylow_by_elements,
    element_order,
    find_sylow_subgroup,
    normalizer_order,
)
