"""Exact-arithmetic analysis of f^(k) = (f^(j1))...(f^(jd)).

Construct and verify formal Laurent series solutions, classify what the
indicial root structure proves about meromorphic solutions, and census the
admissible exponent vectors at scale.  Everything is exact: unbounded
integers and rationals throughout.
"""

from .census import (
    CensusRow,
    CensusSummary,
    census_summary,
    census_total,
    count_compositions,
    enumerate_A,
    iter_census_rows,
    large_root_histogram,
    tuple_roots,
    write_census_csv,
)
from .classify import (
    ALL_LABELS,
    W_COMPATIBLE,
    Classification,
    EvidenceItem,
    classify,
    classify_with_roots,
)
from .equation import (
    Equation,
    InvalidEquation,
    PoleProfile,
    from_factors,
    parse_equation,
    pole_multiplicity,
)
from .exact import Rational, falling, format_rational, gcd_list, parse_rational
from .indicial import (
    IndicialData,
    build_p,
    gcd_of_roots,
    indicial_data,
    l1_equation,
    l1_roots_closed_form,
    p_at_m,
    reduce_if_a0_zero,
    roots_in_N,
)
from .laurent import (
    LaurentWindow,
    SeriesSolution,
    VerificationReport,
    build_series,
    default_order,
    leading_value,
    series_differentiate,
    series_multiply,
    series_power,
    series_scale,
    shape_check,
    verify_series,
)

__all__ = [
    "ALL_LABELS",
    "CensusRow",
    "CensusSummary",
    "Classification",
    "Equation",
    "EvidenceItem",
    "IndicialData",
    "InvalidEquation",
    "LaurentWindow",
    "PoleProfile",
    "Rational",
    "SeriesSolution",
    "VerificationReport",
    "W_COMPATIBLE",
    "build_p",
    "build_series",
    "census_summary",
    "census_total",
    "classify",
    "classify_with_roots",
    "count_compositions",
    "default_order",
    "enumerate_A",
    "falling",
    "format_rational",
    "from_factors",
    "gcd_list",
    "gcd_of_roots",
    "indicial_data",
    "iter_census_rows",
    "l1_equation",
    "l1_roots_closed_form",
    "large_root_histogram",
    "leading_value",
    "p_at_m",
    "parse_equation",
    "parse_rational",
    "pole_multiplicity",
    "reduce_if_a0_zero",
    "roots_in_N",
    "series_differentiate",
    "series_multiply",
    "series_power",
    "series_scale",
    "shape_check",
    "tuple_roots",
    "verify_series",
    "write_census_csv",
]
