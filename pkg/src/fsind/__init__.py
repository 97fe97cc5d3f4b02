"""Exact structure, character theory and Frobenius-Schur indicators for
the groups G = Z_(2^l) x| D_k and their Drinfel'd doubles."""

from .group import (
    GroupElement,
    GroupError,
    GroupParams,
    conjugate,
    element,
    element_order,
    enumerate_group,
    gen_a,
    gen_u,
    gen_v,
    group_exponent,
    identity,
    inverse,
    make_group,
    multiply,
    power,
)
from .structure import (
    CENTRAL,
    TYPE_I_EVEN,
    TYPE_I_ODD,
    TYPE_II,
    TYPE_III,
    ConjugacyClass,
    Subgroup,
    VerificationError,
    center,
    centralizer,
    conjugacy_classes,
    is_completely_real,
    is_generated_by_involutions,
)
from .characters import (
    CharacterTable,
    ClassFunction,
    inner_product,
    irreducible_characters_of_G,
    irreducible_characters_of_centralizer,
)
from .group_indicators import IndicatorValue, nu_group_bruteforce, nu_group_closed
from .double_indicators import (
    DoubleModuleLabel,
    all_labels,
    find_negative_indicators,
    gm_bruteforce,
    gm_closed,
    nu_double,
    z_m,
)

__version__ = "0.1.0"

__all__ = [
    "GroupElement",
    "GroupError",
    "GroupParams",
    "conjugate",
    "element",
    "element_order",
    "enumerate_group",
    "gen_a",
    "gen_u",
    "gen_v",
    "group_exponent",
    "identity",
    "inverse",
    "make_group",
    "multiply",
    "power",
    "CENTRAL",
    "TYPE_I_EVEN",
    "TYPE_I_ODD",
    "TYPE_II",
    "TYPE_III",
    "ConjugacyClass",
    "Subgroup",
    "VerificationError",
    "center",
    "centralizer",
    "conjugacy_classes",
    "is_completely_real",
    "is_generated_by_involutions",
    "CharacterTable",
    "ClassFunction",
    "inner_product",
    "irreducible_characters_of_G",
    "irreducible_characters_of_centralizer",
    "IndicatorValue",
    "nu_group_bruteforce",
    "nu_group_closed",
    "DoubleModuleLabel",
    "all_labels",
    "find_negative_indicators",
    "gm_bruteforce",
    "gm_closed",
    "nu_double",
    "z_m",
]
