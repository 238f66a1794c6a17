"""Regularity bounds for deficiency modules via posets of component sums.

The package turns a squarefree monomial ideal, a graph (through its
binomial edge ideal), or a user-described abstract poset into the finite
poset of iterated sums of primary components, computes reduced homology of
the open intervals below the virtual top over an exact field, and reads
off degreewise upper bounds for the regularity of the deficiency modules
of the quotient, together with filtration layers, hypothesis checks, and
nonvanishing witnesses.
"""

from .binomial_edge import (
    AlreadyPrime,
    CliquePrime,
    CliqueUnionIdeal,
    Graph,
    as_prime,
    build_Q_poset,
    contains,
    decompose,
    is_prime,
    minimal_primes_graph,
    ring_for,
    sum_ideals,
)
from .bounds import (
    ASSUMPTION_TEXT,
    BoundEntry,
    BoundReport,
    ConditionReport,
    FiltrationLayer,
    MultiplicityTable,
    SJSet,
    analyze,
    check_conditions,
    filtration_report,
    multiplicities,
    murai_terai_level,
    nonvanishing_witnesses,
    regularity_bound,
    s_set,
)
from .complexes import (
    DEFAULT_MAX_FACES,
    FaceBudgetExceeded,
    HomologyProfile,
    SimplicialComplex,
    boundary_matrix,
    reduced_homology,
)
from .exactfield import (
    DenominatorDividesP,
    ExactMatrix,
    FieldSpec,
    rank,
)
from .monomial import (
    FacePrime,
    SquarefreeIdeal,
    ZeroIdeal,
    build_monomial_poset,
    face_sum,
    minimal_primes,
)
from .posets import (
    DEFAULT_MAX_ELEMENTS,
    AbstractIdeal,
    AnalysisPoset,
    ClosureBudgetExceeded,
    IdealNode,
    MissingDecomposer,
    RingContext,
    UnknownElement,
    join_closure,
    order_complex,
)
from .ultrametric import (
    NEG_INF,
    ExtendedInt,
    MixedRanks,
    UltrametricValue,
    filtration_fold,
    zero_value,
)

__version__ = "0.1.0"

__all__ = [
    "ASSUMPTION_TEXT",
    "AbstractIdeal",
    "AlreadyPrime",
    "AnalysisPoset",
    "BoundEntry",
    "BoundReport",
    "CliquePrime",
    "CliqueUnionIdeal",
    "ClosureBudgetExceeded",
    "ConditionReport",
    "DEFAULT_MAX_ELEMENTS",
    "DEFAULT_MAX_FACES",
    "DenominatorDividesP",
    "ExactMatrix",
    "ExtendedInt",
    "FaceBudgetExceeded",
    "FacePrime",
    "FieldSpec",
    "FiltrationLayer",
    "Graph",
    "HomologyProfile",
    "IdealNode",
    "MissingDecomposer",
    "MixedRanks",
    "MultiplicityTable",
    "NEG_INF",
    "RingContext",
    "SJSet",
    "SimplicialComplex",
    "SquarefreeIdeal",
    "UltrametricValue",
    "UnknownElement",
    "ZeroIdeal",
    "analyze",
    "as_prime",
    "boundary_matrix",
    "build_Q_poset",
    "build_monomial_poset",
    "check_conditions",
    "contains",
    "decompose",
    "face_sum",
    "filtration_fold",
    "filtration_report",
    "is_prime",
    "join_closure",
    "minimal_primes",
    "minimal_primes_graph",
    "multiplicities",
    "murai_terai_level",
    "nonvanishing_witnesses",
    "order_complex",
    "rank",
    "reduced_homology",
    "regularity_bound",
    "ring_for",
    "s_set",
    "sum_ideals",
    "zero_value",
    "__version__",
]
