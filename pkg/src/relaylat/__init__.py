"""Latency of point-to-point, decode-forward, and amplify-forward
transmission of a finite payload over a Gaussian relay channel.

The package answers one question: how many channel uses does it take to
deliver B bits with error probability below epsilon, with and without a
relay, and when does the relay actually help?
"""

from .channel import (
    ChannelSpec,
    Geometry,
    SnrSet,
    af_gain,
    channel_from_geometry,
    db_to_linear,
    derive_snrs,
    gains_from_geometry,
    linear_to_db,
)
from .errors import DomainError, InfeasibleError, RelayLatError
from .exponent import (
    RHO_MIN,
    RhoSolution,
    Workload,
    best_error_exponent,
    error_exponent,
    min_latency,
)
from .highsnr import (
    HighSnrReport,
    af_bound_single_block,
    af_latency_condition,
    approx_latency,
    df_bound_single_block,
    df_latency_condition,
    high_snr_report,
    rate_comparison,
)
from .mc import McConfig, McReport, simulate_af, simulate_df, validate_plan
from .schemes import (
    AF,
    DF,
    P2P,
    AfPlan,
    DfPlan,
    LatencyResult,
    SchemeComparison,
    SearchDiagnostics,
    af_latency,
    compare_schemes,
    df_block_lengths,
    df_latency,
    df_schedule,
    ordering_from_values,
    p2p_latency,
)

__version__ = "0.1.0"

__all__ = [
    "AF",
    "AfPlan",
    "ChannelSpec",
    "DF",
    "DfPlan",
    "DomainError",
    "Geometry",
    "HighSnrReport",
    "InfeasibleError",
    "LatencyResult",
    "McConfig",
    "McReport",
    "P2P",
    "RHO_MIN",
    "RelayLatError",
    "RhoSolution",
    "SchemeComparison",
    "SearchDiagnostics",
    "SnrSet",
    "Workload",
    "af_bound_single_block",
    "af_gain",
    "af_latency",
    "af_latency_condition",
    "approx_latency",
    "best_error_exponent",
    "channel_from_geometry",
    "compare_schemes",
    "db_to_linear",
    "derive_snrs",
    "df_block_lengths",
    "df_bound_single_block",
    "df_latency",
    "df_latency_condition",
    "df_schedule",
    "error_exponent",
    "gains_from_geometry",
    "high_snr_report",
    "linear_to_db",
    "min_latency",
    "ordering_from_values",
    "p2p_latency",
    "rate_comparison",
    "simulate_af",
    "simulate_df",
    "validate_plan",
]
