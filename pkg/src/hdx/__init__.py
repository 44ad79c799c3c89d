"""Exact Hilbert-depth computation for monomial ideals.

The package computes the Hilbert depth of a graded (monomial) ideal in a
polynomial ring by exact integer arithmetic, emits a decomposition
certificate witnessing the answer, and cross-checks it against an
independent truncated-series search. A FastAPI service and the ``hdx``
CLI expose the same request/response surface.
"""

__version__ = "0.1.0"

from .crosscheck import max_nonnegative_power
from .depth import (
    DecompositionTerm,
    DepthReport,
    HilbertDecomposition,
    TraceEntry,
    counts_to_multiplicities,
    hdepth_from_series,
    hdepth_squarefree,
    hdepth_via_lexification,
    numerator_to_multiplicities,
    validate_certificate,
)
from .errors import CrossCheckError, InputError, MacaulayViolationError, ParseError
from .ideal import (
    MonomialIdeal,
    SquarefreeCounts,
    format_ideal,
    layer_counts_from_numerator,
    parse_ideal,
    squarefree_shift_ideal,
)
from .intpoly import (
    IntPolynomial,
    binomial,
    format_poly,
    parse_poly,
    pow_one_minus_t,
    series_div,
)
from .lexify import (
    HilbertFunctionView,
    ideal_view,
    lex_segment,
    lexify,
    segment_shadow_size,
)
from .monomial import (
    Monomial,
    format_monomial,
    lex_compare,
    monomial_at_rank,
    parse_monomial,
    rank_in_degree,
    squarefree_shift,
)

__all__ = [
    "__version__",
    "IntPolynomial",
    "binomial",
    "pow_one_minus_t",
    "series_div",
    "parse_poly",
    "format_poly",
    "Monomial",
    "lex_compare",
    "squarefree_shift",
    "parse_monomial",
    "format_monomial",
    "rank_in_degree",
    "monomial_at_rank",
    "MonomialIdeal",
    "SquarefreeCounts",
    "squarefree_shift_ideal",
    "layer_counts_from_numerator",
    "parse_ideal",
    "format_ideal",
    "HilbertFunctionView",
    "ideal_view",
    "lexify",
    "lex_segment",
    "segment_shadow_size",
    "DecompositionTerm",
    "HilbertDecomposition",
    "TraceEntry",
    "DepthReport",
    "counts_to_multiplicities",
    "numerator_to_multiplicities",
    "hdepth_squarefree",
    "hdepth_from_series",
    "hdepth_via_lexification",
    "validate_certificate",
    "max_nonnegative_power",
    "InputError",
    "ParseError",
    "MacaulayViolationError",
    "CrossCheckError",
]
