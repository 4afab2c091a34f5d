"""Discrete end-periodic operators: symbols, weighted index, index change and spectral flow."""

from hother.perispec.endperiodic.codec import (
    cap_from_json,
    load_cap,
    load_path,
    load_symbol,
    path_from_json,
    path_to_json,
    symbol_from_json,
    symbol_to_json,
    write_curves_csv,
    write_events_csv,
)
from hother.perispec.endperiodic.flow import (
    CrossingEvent,
    FlowResult,
    SpectralCurve,
    SymbolPath,
    spectral_flow,
    track_spectral_curves,
)
from hother.perispec.endperiodic.operator import (
    CapEntry,
    EndPeriodicOperator,
    TruncationResult,
    d_value,
    index,
    index_change,
    is_fredholm,
    symbol_zeros,
    truncation_kernels,
)
from hother.perispec.endperiodic.sequence import (
    SampledTransform,
    Sequence,
    circle_energy,
    fl_inverse,
    fl_transform,
    weighted_norm,
)
from hother.perispec.endperiodic.sweep import (
    IndexChangeCheck,
    IndexChangeSweep,
    check_index_change,
    index_change_sweep,
    sweep_guard,
)
from hother.perispec.endperiodic.symbol import AffineLogSymbol, LaurentSymbol

__all__ = [
    "AffineLogSymbol",
    "CapEntry",
    "CrossingEvent",
    "EndPeriodicOperator",
    "FlowResult",
    "IndexChangeCheck",
    "IndexChangeSweep",
    "LaurentSymbol",
    "SampledTransform",
    "Sequence",
    "SpectralCurve",
    "SymbolPath",
    "TruncationResult",
    "cap_from_json",
    "check_index_change",
    "circle_energy",
    "d_value",
    "fl_inverse",
    "fl_transform",
    "index",
    "index_change",
    "index_change_sweep",
    "is_fredholm",
    "load_cap",
    "load_path",
    "load_symbol",
    "path_from_json",
    "path_to_json",
    "spectral_flow",
    "sweep_guard",
    "symbol_from_json",
    "symbol_to_json",
    "symbol_zeros",
    "track_spectral_curves",
    "truncation_kernels",
    "weighted_norm",
    "write_curves_csv",
    "write_events_csv",
]
