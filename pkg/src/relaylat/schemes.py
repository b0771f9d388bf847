"""Latency of the three transmission schemes and their optimizers.

Point-to-point uses the direct link only. Decode-forward (DF) splits the
payload into L equal blocks, relays each block after decoding it, and
budgets the per-block error probability eps/L between the relay (fraction
1-delta) and the destination (fraction delta). Amplify-forward (AF) skips
decoding at the relay, which removes delta but lowers the effective SNR.

DF block lengths for a split (L, delta):

    n1 = min_latency(bits/L, snr_df1, (1-delta) * eps / L)   uplink
    n2 = min_latency(bits/L, snr_df2, delta * eps / L)       downlink

and the schedule starts the relay at tau = max(n1, L*n1 - (L-1)*n2) so the
last relaying block is free of source interference, giving a total of
max(n1 + L*n2, L*n1 + n2) channel uses. AF uses equal block lengths
n3 = min_latency(bits/L, snr_af, eps/L) for a total of (L+1)*n3.

All optimizer output is real-valued; the optional integer mode ceils the
per-block lengths before the schedule formulas as a deployment-facing
variant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from .channel import ChannelSpec, SnrSet, derive_snrs
from .errors import DomainError, InfeasibleError
from .exponent import RhoSolution, Workload, _min_latency_raw

__all__ = [
    "P2P",
    "DF",
    "AF",
    "SCHEMES",
    "DEFAULT_L_MAX",
    "DfPlan",
    "AfPlan",
    "SearchDiagnostics",
    "LatencyResult",
    "SchemeComparison",
    "p2p_latency",
    "df_block_lengths",
    "df_schedule",
    "df_latency",
    "af_latency",
    "ordering_from_values",
    "compare_schemes",
]

P2P = "P2P"
DF = "DF"
AF = "AF"
SCHEMES = (P2P, DF, AF)

DEFAULT_L_MAX = 4096
TIE_REL_TOL = 1e-9


@dataclass(frozen=True)
class DfPlan:
    """Optimal decode-forward operating point."""

    l: int
    delta: float
    n1: float
    n2: float
    tau: float
    total: float


@dataclass(frozen=True)
class AfPlan:
    """Optimal amplify-forward operating point."""

    l: int
    n3: float
    total: float


@dataclass(frozen=True)
class SearchDiagnostics:
    evaluations: int
    converged: bool
    stopped_early: bool = False
    hit_l_cap: bool = False


@dataclass(frozen=True)
class LatencyResult:
    scheme: str
    latency: float
    plan: RhoSolution | DfPlan | AfPlan
    diagnostics: SearchDiagnostics
    latency_ceil: float | None = None
    plan_ceil: DfPlan | AfPlan | None = None


@dataclass(frozen=True)
class SchemeComparison:
    """Per-scheme latencies at one operating point (inf = infeasible)."""

    n_p2p: float
    n_df: float
    n_af: float
    best: str
    ordering: str
    tied: bool
    results: dict[str, LatencyResult | None]


def _check_l(l: int) -> int:
    if l != int(l) or l < 1:
        raise DomainError(f"block count must be a positive integer, got {l}")
    return int(l)


def p2p_latency(spec: ChannelSpec, w: Workload, integer_blocks: bool = False) -> LatencyResult:
    """Latency of ignoring the relay and coding over the direct link."""
    snr = derive_snrs(spec).snr_p2p
    if snr <= 0.0:
        raise InfeasibleError("P2P infeasible: direct link has zero gain")
    rho, val, evals = _min_latency_raw(w.bits, w.epsilon, snr)
    return LatencyResult(
        scheme=P2P,
        latency=val,
        plan=RhoSolution(rho=rho, objective=val),
        diagnostics=SearchDiagnostics(evaluations=evals, converged=True),
        latency_ceil=float(math.ceil(val)) if integer_blocks else None,
    )


def df_block_lengths(w: Workload, snrs: SnrSet, l: int, delta: float) -> tuple[float, float]:
    """Uplink and downlink block lengths for a given (L, delta)."""
    l = _check_l(l)
    if not 0.0 < delta < 1.0:
        raise DomainError(f"delta must lie in (0, 1), got {delta}")
    if snrs.snr_df1 <= 0.0 or snrs.snr_df2 <= 0.0:
        raise InfeasibleError("DF infeasible: a relay-path gain is zero")
    bits_pb = w.bits / l
    _, n1, _ = _min_latency_raw(bits_pb, (1.0 - delta) * w.epsilon / l, snrs.snr_df1)
    _, n2, _ = _min_latency_raw(bits_pb, delta * w.epsilon / l, snrs.snr_df2)
    return n1, n2


def df_schedule(n1: float, n2: float, l: int) -> tuple[float, float]:
    """Relay start offset and total duration for L blocks.

    tau = max(n1, L*n1 - (L-1)*n2) guarantees the last relaying block
    starts no earlier than the end of the last source block, so it is
    received free of interference.
    """
    l = _check_l(l)
    if n1 <= 0.0 or n2 <= 0.0:
        raise DomainError("block lengths must be positive")
    tau = max(n1, l * n1 - (l - 1) * n2)
    total = max(n1 + l * n2, l * n1 + n2)
    return tau, total


def _ceil_df(plan: DfPlan) -> DfPlan:
    n1 = float(math.ceil(plan.n1))
    n2 = float(math.ceil(plan.n2))
    tau, total = df_schedule(n1, n2, plan.l)
    return DfPlan(l=plan.l, delta=plan.delta, n1=n1, n2=n2, tau=tau, total=total)


def df_latency(spec: ChannelSpec, w: Workload, l_max: int = DEFAULT_L_MAX,
               integer_blocks: bool = False) -> LatencyResult:
    """Minimize the DF duration over block count and error split.

    Outer integer loop over L with early stopping after 8 consecutive
    non-improving values, inner continuous delta search per L (coarse grid
    plus golden-section refinement).
    """
    l_max = _check_l(l_max)
    snrs = derive_snrs(spec)
    if snrs.snr_df1 <= 0.0 or snrs.snr_df2 <= 0.0:
        raise InfeasibleError("DF infeasible: a relay-path gain is zero")
    l, delta, n1, n2, tau, total, evals, stopped_early, hit_cap = _kernels.df_search(
        float(w.bits), float(w.epsilon), snrs.snr_df1, snrs.snr_df2, l_max
    )
    plan = DfPlan(l=int(l), delta=float(delta), n1=float(n1), n2=float(n2),
                  tau=float(tau), total=float(total))
    plan_ceil = _ceil_df(plan) if integer_blocks else None
    return LatencyResult(
        scheme=DF,
        latency=plan.total,
        plan=plan,
        diagnostics=SearchDiagnostics(
            evaluations=int(evals), converged=True,
            stopped_early=bool(stopped_early), hit_l_cap=bool(hit_cap),
        ),
        latency_ceil=plan_ceil.total if plan_ceil else None,
        plan_ceil=plan_ceil,
    )


def af_latency(spec: ChannelSpec, w: Workload, l_max: int = DEFAULT_L_MAX,
               integer_blocks: bool = False) -> LatencyResult:
    """Minimize (L+1) * n3(L) over the AF block count."""
    l_max = _check_l(l_max)
    snrs = derive_snrs(spec)
    if snrs.snr_af <= 0.0:
        raise InfeasibleError("AF infeasible: effective relay-path SNR is zero")
    l, n3, total, evals, stopped_early, hit_cap = _kernels.af_search(
        float(w.bits), float(w.epsilon), snrs.snr_af, l_max
    )
    plan = AfPlan(l=int(l), n3=float(n3), total=float(total))
    plan_ceil = None
    if integer_blocks:
        n3c = float(math.ceil(plan.n3))
        plan_ceil = AfPlan(l=plan.l, n3=n3c, total=(plan.l + 1) * n3c)
    return LatencyResult(
        scheme=AF,
        latency=plan.total,
        plan=plan,
        diagnostics=SearchDiagnostics(
            evaluations=int(evals), converged=True,
            stopped_early=bool(stopped_early), hit_l_cap=bool(hit_cap),
        ),
        latency_ceil=plan_ceil.total if plan_ceil else None,
        plan_ceil=plan_ceil,
    )


def ordering_from_values(n_p2p: float, n_df: float, n_af: float) -> tuple[str, str, bool]:
    """Best scheme, full ordering label, and a tie flag for three latencies.

    Ties within 1e-9 relative (and pairs of infinities) keep the fixed
    order P2P, DF, AF and set the flag.
    """
    values = {P2P: n_p2p, DF: n_df, AF: n_af}
    order = sorted(SCHEMES, key=lambda s: (values[s], SCHEMES.index(s)))
    tied = False
    for a, b in zip(order, order[1:]):
        va, vb = values[a], values[b]
        if math.isinf(va) and math.isinf(vb):
            tied = True
        elif abs(va - vb) <= TIE_REL_TOL * max(abs(va), abs(vb)):
            tied = True
    return order[0], "<".join(order), tied


def compare_schemes(spec: ChannelSpec, w: Workload, l_max: int = DEFAULT_L_MAX,
                    integer_blocks: bool = False) -> SchemeComparison:
    """Latencies of all three schemes with the best scheme and full ordering.

    Infeasible schemes enter the comparison as +inf. Ties within 1e-9
    relative are broken by the fixed order P2P, DF, AF and flagged.
    """
    results: dict[str, LatencyResult | None] = {}
    values: dict[str, float] = {}
    for name, fn in ((P2P, p2p_latency), (DF, df_latency), (AF, af_latency)):
        try:
            if name == P2P:
                res = fn(spec, w, integer_blocks=integer_blocks)
            else:
                res = fn(spec, w, l_max=l_max, integer_blocks=integer_blocks)
        except InfeasibleError:
            results[name] = None
            values[name] = math.inf
            continue
        results[name] = res
        if integer_blocks and res.latency_ceil is not None:
            values[name] = res.latency_ceil
        else:
            values[name] = res.latency
    if all(math.isinf(v) for v in values.values()):
        raise InfeasibleError("no scheme is feasible at this operating point")

    best, ordering, tied = ordering_from_values(values[P2P], values[DF], values[AF])
    return SchemeComparison(
        n_p2p=values[P2P],
        n_df=values[DF],
        n_af=values[AF],
        best=best,
        ordering=ordering,
        tied=tied,
        results=results,
    )
