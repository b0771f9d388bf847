"""High-SNR approximations, single-block latency bounds, and the
latency-vs-rate comparison conditions.

At high SNR the latency function collapses to (2B - 2 ln eps) / log2(snr),
which yields closed-form upper bounds for DF and AF at L = 1 and the two
sufficient conditions under which relaying beats the direct link. Those
latency conditions are strictly harder to meet than the corresponding
information-theoretic rate conditions, which is the point of exposing both
side by side.

Every formula here requires SNR > 1 (log2 must be positive); anything
else raises DomainError. SNRs below 10 dB are flagged in the report as
outside the approximation's comfort zone, not rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .channel import SnrSet
from .errors import DomainError
from .exponent import Workload

__all__ = [
    "LOW_SNR_WARN_DB",
    "HighSnrReport",
    "approx_latency",
    "df_bound_single_block",
    "af_bound_single_block",
    "df_latency_condition",
    "af_latency_condition",
    "rate_comparison",
    "high_snr_report",
]

LOW_SNR_WARN_DB = 10.0


def _log2_checked(snr: float, name: str) -> float:
    if not (math.isfinite(snr) and snr > 1.0):
        raise DomainError(
            f"high-SNR approximation undefined: {name} must be > 1, got {snr}"
        )
    return math.log2(snr)


def approx_latency(w: Workload, snr: float) -> float:
    """(2B - 2 ln eps) / log2(snr), the high-SNR latency approximation."""
    return (2.0 * w.bits - 2.0 * math.log(w.epsilon)) / _log2_checked(snr, "snr")


def df_bound_single_block(w: Workload, snrs: SnrSet) -> float:
    """High-SNR DF latency bound from one block and an even error split:
    [2B - 2 ln(eps/2)] * [1/log2(snr_df1) + 1/log2(snr_df2)].
    """
    c1 = _log2_checked(snrs.snr_df1, "snr_df1")
    c2 = _log2_checked(snrs.snr_df2, "snr_df2")
    return (2.0 * w.bits - 2.0 * math.log(w.epsilon / 2.0)) * (1.0 / c1 + 1.0 / c2)


def af_bound_single_block(w: Workload, snrs: SnrSet) -> float:
    """High-SNR AF latency bound from one block:
    (4B - 4 ln eps) / log2(snr_af).
    """
    return (4.0 * w.bits - 4.0 * math.log(w.epsilon)) / _log2_checked(
        snrs.snr_af, "snr_af"
    )


def df_latency_condition(snrs: SnrSet) -> bool:
    """True iff 1/log2(snr_df1) + 1/log2(snr_df2) < 1/log2(snr_p2p),
    the sufficient high-SNR condition for DF to beat P2P on latency.
    """
    c1 = _log2_checked(snrs.snr_df1, "snr_df1")
    c2 = _log2_checked(snrs.snr_df2, "snr_df2")
    c0 = _log2_checked(snrs.snr_p2p, "snr_p2p")
    return 1.0 / c1 + 1.0 / c2 < 1.0 / c0


def af_latency_condition(snrs: SnrSet) -> bool:
    """True iff 2/log2(snr_af) < 1/log2(snr_p2p), the sufficient high-SNR
    condition for AF to beat P2P on latency.
    """
    ca = _log2_checked(snrs.snr_af, "snr_af")
    c0 = _log2_checked(snrs.snr_p2p, "snr_p2p")
    return 2.0 / ca < 1.0 / c0


def rate_comparison(snrs: SnrSet) -> tuple[float, float, bool, bool]:
    """Information-theoretic rates and whether each relaying scheme beats
    the direct link in rate.

    Returns (r_p2p, r_df, rate_condition_df, rate_condition_af) with
    r_df = 0.5 * log2(min(snr_df1, snr_df2)) and r_p2p = 0.5 * log2(snr_p2p).
    """
    c1 = _log2_checked(snrs.snr_df1, "snr_df1")
    c2 = _log2_checked(snrs.snr_df2, "snr_df2")
    c0 = _log2_checked(snrs.snr_p2p, "snr_p2p")
    ca = _log2_checked(snrs.snr_af, "snr_af")
    r_df = 0.5 * min(c1, c2)
    r_p2p = 0.5 * c0
    return r_p2p, r_df, r_df > r_p2p, ca > c0


@dataclass(frozen=True)
class HighSnrReport:
    n_p2p_approx: float
    n_df_bound: float
    n_af_bound: float
    df_latency_condition: bool
    af_latency_condition: bool
    r_p2p: float
    r_df: float
    rate_condition_df: bool
    rate_condition_af: bool
    low_snr_warnings: tuple[str, ...] = field(default_factory=tuple)


def high_snr_report(w: Workload, snrs: SnrSet) -> HighSnrReport:
    """All high-SNR quantities for one operating point, plus warnings for
    any SNR below 10 dB where the approximations get loose.
    """
    r_p2p, r_df, rc_df, rc_af = rate_comparison(snrs)
    warnings = tuple(
        name
        for name, val in (
            ("snr_p2p", snrs.snr_p2p),
            ("snr_df1", snrs.snr_df1),
            ("snr_df2", snrs.snr_df2),
            ("snr_af", snrs.snr_af),
        )
        if 10.0 * math.log10(val) < LOW_SNR_WARN_DB
    )
    return HighSnrReport(
        n_p2p_approx=approx_latency(w, snrs.snr_p2p),
        n_df_bound=df_bound_single_block(w, snrs),
        n_af_bound=af_bound_single_block(w, snrs),
        df_latency_condition=df_latency_condition(snrs),
        af_latency_condition=af_latency_condition(snrs),
        r_p2p=r_p2p,
        r_df=r_df,
        rate_condition_df=rc_df,
        rate_condition_af=rc_af,
        low_snr_warnings=warnings,
    )
