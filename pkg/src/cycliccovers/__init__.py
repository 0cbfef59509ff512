"""Counting ell-cyclic covers of the projective line over finite fields.

Exact enumeration of covers by conductor degree, splitting conditions,
point-count distributions, generating-series identities, and an
independent local-data counting oracle, all over F_q with q = 1 mod ell.
"""

from .ffield import BudgetError, FieldError, FieldSpec, make_field
from .places import (
    INERT,
    INFINITY,
    Place,
    RAMIFIED,
    SPLIT,
    finite_place,
    places_up_to,
    splitting_type,
)
from .covers import (
    Conductor,
    KummerClass,
    conductor_of,
    count_conditioned,
    count_extensions,
    count_tuples,
    enumerate_classes,
    enumerate_extensions,
    genus_of,
    point_count,
    point_distribution,
    zeta_numerator,
)
from .series import (
    character_count_series,
    conditioned_series,
    constant_C,
    local_density,
    main_term_ratio,
    quadratic_exact,
    series_A,
    series_B,
)
from .model import compare_distributions, rv_distribution, sum_distribution
from .idele import crosscheck_counts, enumerate_maps, residue_generator

__version__ = "0.1.0"

__all__ = [
    "BudgetError",
    "FieldError",
    "FieldSpec",
    "make_field",
    "INERT",
    "INFINITY",
    "Place",
    "RAMIFIED",
    "SPLIT",
    "finite_place",
    "places_up_to",
    "splitting_type",
    "Conductor",
    "KummerClass",
    "conductor_of",
    "count_conditioned",
    "count_extensions",
    "count_tuples",
    "enumerate_classes",
    "enumerate_extensions",
    "genus_of",
    "point_count",
    "point_distribution",
    "zeta_numerator",
    "character_count_series",
    "conditioned_series",
    "constant_C",
    "local_density",
    "main_term_ratio",
    "quadratic_exact",
    "series_A",
    "series_B",
    "compare_distributions",
    "rv_distribution",
    "sum_distribution",
    "crosscheck_counts",
    "enumerate_maps",
    "residue_generator",
    "__version__",
]
