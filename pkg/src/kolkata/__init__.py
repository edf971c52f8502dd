"""Lorenz curves, the Kolkata index and related inequality measures."""

__version__ = "0.1.0"

from .distributions import (
    AnalyticDistribution,
    CircleArc,
    Exponential,
    GroupedDistribution,
    IncomeGroup,
    Pareto,
    PiecewiseLorenz,
    PowerLawLorenz,
    TwoGroup,
    Uniform,
    from_groups,
    from_raw_samples,
    make_analytic,
)
from .dominance import DominanceResult, IndexKind, Verdict, compare, rank_by_index
from .errors import *  # noqa: F401,F403
from .hindex import CitationProfile, citation_curve_fixed_point, h_index_from_fixed_point, hirsch_index
from .indices import (
    Coincidence,
    IndexReport,
    coincidence_check,
    disparity,
    gini,
    kolkata,
    normalized_k,
    pietra,
    pietra_arg,
    report,
)
from .io import DatasetFormat, export_curve, parse_dataset, read_report, write_grouped, write_report
from .lorenz import LorenzCurve, eval_complementary, eval_lorenz, inverse_lorenz, lorenz_curve, sample_curve
from .tailfit import TailFit, fit_tail, fit_tail_empirical
