"""p-adic path set fractals: presentations, arithmetic closure constructions,
set operations and Hausdorff dimension."""

from .arithmetic import (
    add_rational,
    div_coprime_int,
    minkowski_sum,
    mul_coprime_int,
    mul_p_power,
    mul_rational,
    negate,
    singleton_set,
    zero_set,
)
from .core import (
    PathSet,
    Presentation,
    ValidationReport,
    apply_digit_map,
    determinize,
    equivalent,
    split_right_separating,
    standardize,
    trim,
    validate,
)
from .dimension import adjacency_matrix, hausdorff_dim, scc_dimensions, spectral_radius
from .errors import (
    EmptySet,
    EnumerationTooLarge,
    NotCoprime,
    NotPIntegral,
    NotSingleton,
    NumericalFailure,
    PathSetError,
    PMismatch,
    StructuralError,
)
from .oracle import check_arith, count_prefixes, empirical_dim, prefixes
from .rational import RationalExpansion, p_adic_digits, parse_rational, recognize_singleton, singleton
from .setops import decimate, intersect, shift, union

__version__ = "0.1.0"
