"""cofinj: exact arithmetic for cofinite eventually-shift partial
injections of the positive integers."""

from .algebra import (
    GreenReport,
    SHIFT_DOWN,
    SHIFT_UP,
    Thresholds,
    cn_decompose,
    cn_element,
    compose,
    green,
    idempotent_factorization,
    invert,
    is_idempotent,
    make_idempotent,
    member,
    natural_leq,
    ray_idempotent,
    ray_part,
    thresholds,
)
from .congruence import (
    CongruenceClass,
    ReductionCertificate,
    classify_congruence,
    isolated_bump,
    min_group_related,
    min_group_witness,
    reduce_idempotent_pair,
    related_under,
    shift_index,
)
from .core import (
    Element,
    Flavor,
    IDENTITY,
    SupportSummary,
    TruncatedMap,
    canonicalize,
    element,
    oracle_compose,
    support_summary,
    truncate,
    validate,
)
from .expr import parse_element, parse_expression, render
from .topology import (
    BasicNbhd,
    ContainmentReport,
    check_product_containment,
    nbhd_contains,
    product_anchor_data,
    sample_nbhd_member,
)
from .witnesses import (
    SolutionSet,
    h_class_members,
    is_factorization,
    power_factorization,
    simplicity_witness,
    solve_left,
    solve_right,
)

__version__ = "0.1.0"

__all__ = [
    "BasicNbhd",
    "CongruenceClass",
    "ContainmentReport",
    "Element",
    "Flavor",
    "GreenReport",
    "IDENTITY",
    "ReductionCertificate",
    "SHIFT_DOWN",
    "SHIFT_UP",
    "SolutionSet",
    "SupportSummary",
    "Thresholds",
    "TruncatedMap",
    "canonicalize",
    "check_product_containment",
    "classify_congruence",
    "cn_decompose",
    "cn_element",
    "compose",
    "element",
    "green",
    "h_class_members",
    "idempotent_factorization",
    "invert",
    "is_factorization",
    "is_idempotent",
    "isolated_bump",
    "make_idempotent",
    "member",
    "min_group_related",
    "min_group_witness",
    "natural_leq",
    "nbhd_contains",
    "oracle_compose",
    "parse_element",
    "parse_expression",
    "power_factorization",
    "product_anchor_data",
    "ray_idempotent",
    "ray_part",
    "reduce_idempotent_pair",
    "related_under",
    "render",
    "sample_nbhd_member",
    "shift_index",
    "simplicity_witness",
    "solve_left",
    "solve_right",
    "support_summary",
    "thresholds",
    "truncate",
    "validate",
]
