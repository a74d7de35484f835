"""Monomial ideals generated by pattern-avoiding permutations.

The package builds the ideals, their Alexander duals and the labelled
posets supporting their resolutions, counts standard monomials through
parking-function families, and checks the resulting sequences against
OEIS b-files.
"""

from .enumeration import (
    RootedForest,
    a_closed_form,
    a_poly,
    a_value,
    enumerate_forests,
    forest_avoids,
    permanent,
    stirling_first,
    stirling_second,
)
from .monomials import (
    MonomialIdeal,
    WeightConfig,
    alexander_dual,
    count_standard_monomials,
    dual_of_family,
    family_ideal,
    standard_monomials,
)
from .oeis import BFile, SequenceReport, fetch_bfile, match_sequence, parse_bfile
from .parking import family_members, family_predicate, parking_functions
from .permclasses import FAMILIES, avoiders, contains_pattern
from .posets import LabeledPoset, build_poset, chain_sum_dimension, family_poset

__version__ = "0.1.0"
