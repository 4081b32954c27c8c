"""TOPSIS decision analysis over intuitionistic fuzzy values.

The package splits into a small functional core and two frontends:

* values, orders, measures: IFV arithmetic, the admissible linear
  orders, and the order-compatible parametric distances plus the
  classical similarity measures they replace.
* topsis: the monotone weighted-similarity ranking together with the
  two baseline methods it is compared against, and the shared problem
  model.
* ranker: a scikit-learn style estimator over the same machinery.
* problem_io, repro, cli: file formats, the named reproduction checks
  and seeded fuzzers, and the command-line tool.
"""

from .errors import (
    ConfigMismatch,
    DegenerateProblem,
    DomainError,
    IFTopsisError,
    LengthMismatch,
    ProblemFormatError,
    UnknownCheck,
    WeightError,
)
from .measures import (
    AdmissibleMetric,
    AggMetric,
    KGammaMetric,
    XYMetric,
    ZXMetric,
    d_euclidean,
    d_hamming,
    d_minkowski,
    d_sh,
    rho,
    s_ck,
    sim_classical,
    weighted_similarity,
)
from .orders import (
    AggregationOrder,
    AtanassovOrder,
    KGammaOrder,
    LinearOrder,
    XYOrder,
    ZXOrder,
    cmp_xy,
    cmp_zx,
    partial_cmp,
)
from .problem_io import (
    dump_problem,
    load_problem,
    parse_problem,
    problem_from_csv,
    save_problem,
)
from .ranker import TopsisRanker
from .repro import (
    CHECK_IDS,
    CheckReport,
    FuzzConfig,
    bundled_problem,
    fuzz_metric_axioms,
    fuzz_monotonicity,
    run_all_checks,
    run_check,
)
from .topsis import (
    Attribute,
    DecisionProblem,
    IdealPoints,
    IfvWeights,
    RankingResult,
    ScalarWeights,
    ideal_points,
    normalize,
    rank_closeness,
    topsis_chen,
    topsis_li,
    topsis_proposed,
)
from .values import (
    IFV,
    Aggregation,
    apply_aggregation,
    complement,
    join,
    k_gamma,
    make_ifv,
    meet,
    power,
    prob_product,
    prob_sum,
    scale,
)

__version__ = "0.1.0"

__all__ = [
    "IFV",
    "Aggregation",
    "AggMetric",
    "AggregationOrder",
    "AdmissibleMetric",
    "AtanassovOrder",
    "Attribute",
    "CHECK_IDS",
    "CheckReport",
    "ConfigMismatch",
    "DecisionProblem",
    "DegenerateProblem",
    "DomainError",
    "FuzzConfig",
    "IFTopsisError",
    "IdealPoints",
    "IfvWeights",
    "KGammaMetric",
    "KGammaOrder",
    "LengthMismatch",
    "LinearOrder",
    "ProblemFormatError",
    "RankingResult",
    "ScalarWeights",
    "TopsisRanker",
    "UnknownCheck",
    "WeightError",
    "XYMetric",
    "XYOrder",
    "ZXMetric",
    "ZXOrder",
    "apply_aggregation",
    "bundled_problem",
    "cmp_xy",
    "cmp_zx",
    "complement",
    "d_euclidean",
    "d_hamming",
    "d_minkowski",
    "d_sh",
    "dump_problem",
    "fuzz_metric_axioms",
    "fuzz_monotonicity",
    "ideal_points",
    "join",
    "k_gamma",
    "load_problem",
    "make_ifv",
    "meet",
    "normalize",
    "parse_problem",
    "partial_cmp",
    "power",
    "prob_product",
    "prob_sum",
    "problem_from_csv",
    "rank_closeness",
    "rho",
    "run_all_checks",
    "run_check",
    "s_ck",
    "save_problem",
    "scale",
    "sim_classical",
    "topsis_chen",
    "topsis_li",
    "topsis_proposed",
    "weighted_similarity",
]
