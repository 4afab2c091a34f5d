"""perispec - Index theory of end-periodic operators and exact Seifert homology sphere invariants."""

from importlib.metadata import PackageNotFoundError, version

try:
    __version__ = version("perispec")
except PackageNotFoundError:
    # Package not installed (e.g., running from source)
    __version__ = "0.0.0+dev"

from hother.perispec.core import DEFAULTS, Logger, NumericDefaults, StdlibLoggerAdapter
from hother.perispec.core.exceptions import PerispecError
from hother.perispec.endperiodic import (
    AffineLogSymbol,
    CapEntry,
    CrossingEvent,
    EndPeriodicOperator,
    FlowResult,
    LaurentSymbol,
    Sequence,
    SpectralCurve,
    SymbolPath,
    d_value,
    fl_inverse,
    fl_transform,
    index,
    index_change,
    is_fredholm,
    spectral_flow,
    symbol_zeros,
    track_spectral_curves,
    truncation_kernels,
    weighted_norm,
)
from hother.perispec.family import (
    AffineFamily,
    JordanChainSet,
    LaurentData,
    SpectralPoint,
    compact_reduction,
    jordan_chain_dim,
    laurent_coefficients,
    residue_projection,
    resolvent,
    spectral_set,
)
from hother.perispec.numerics import (
    CircleContour,
    ExactRational,
    PolyEigenResult,
    ToleranceConfig,
    contour_integrate,
    mat_rank,
    poly_eigenvalues,
)
from hother.perispec.seifert import (
    EtaPair,
    InvariantReport,
    PlumbingGraph,
    SeifertData,
    casson,
    check_barmu,
    dedekind_sum,
    eta_invariants,
    euler_orbifold,
    invariant_report,
    lambda_sw_mapping_tori,
    mu_bar,
    plumbing_graph,
    vortex_count,
    w_correction,
)

__all__ = [
    "__version__",
    # Configuration and logging
    "DEFAULTS",
    "Logger",
    "NumericDefaults",
    "StdlibLoggerAdapter",
    "ToleranceConfig",
    # Exceptions
    "PerispecError",
    # Numerics
    "CircleContour",
    "ExactRational",
    "PolyEigenResult",
    "contour_integrate",
    "mat_rank",
    "poly_eigenvalues",
    # Affine families
    "AffineFamily",
    "JordanChainSet",
    "LaurentData",
    "SpectralPoint",
    "compact_reduction",
    "jordan_chain_dim",
    "laurent_coefficients",
    "residue_projection",
    "resolvent",
    "spectral_set",
    # End-periodic operators
    "AffineLogSymbol",
    "CapEntry",
    "CrossingEvent",
    "EndPeriodicOperator",
    "FlowResult",
    "LaurentSymbol",
    "Sequence",
    "SpectralCurve",
    "SymbolPath",
    "d_value",
    "fl_inverse",
    "fl_transform",
    "index",
    "index_change",
    "is_fredholm",
    "spectral_flow",
    "symbol_zeros",
    "track_spectral_curves",
    "truncation_kernels",
    "weighted_norm",
    # Seifert homology spheres
    "EtaPair",
    "InvariantReport",
    "PlumbingGraph",
    "SeifertData",
    "casson",
    "check_barmu",
    "dedekind_sum",
    "eta_invariants",
    "euler_orbifold",
    "invariant_report",
    "lambda_sw_mapping_tori",
    "mu_bar",
    "plumbing_graph",
    "vortex_count",
    "w_correction",
]
