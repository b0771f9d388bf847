"""Seeded Monte Carlo validation of the block error accounting.

The simulator works at the block-outcome level: each block independently
errs at the relay with probability p_relay and at the destination with
probability p_dest, a block is bad if either event fires, and a trial
fails if any of its L blocks is bad (worst-case propagation through
backward decoding: a late error invalidates everything before it). This
validates the union-bound accounting L * (p_relay + p_dest) and the
delta budget split, not the underlying coding bound; inputs are the
budget-limit probabilities, never waveforms.

Reproducibility contract: trials are partitioned into fixed 8192-trial
chunks and every chunk draws from counter-based Philox streams keyed by
(seed, chunk index, source), so reports are bit-identical for any worker
count. The destination stream is drawn column by column (one column per
block) and separately from the relay stream, which makes results under a
shared seed exactly monotone in L, p_relay, and p_dest, and makes the AF
simulator coincide with DF at p_relay = 0 draw for draw.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .errors import DomainError
from .exponent import Workload
from .schemes import AfPlan, DfPlan

__all__ = [
    "CHUNK_TRIALS",
    "WILSON_Z",
    "McConfig",
    "McReport",
    "simulate_df",
    "simulate_af",
    "validate_plan",
]

CHUNK_TRIALS = 8192
WILSON_Z = 1.959963984540054  # two-sided 95%


@dataclass(frozen=True)
class McConfig:
    """Trial count, RNG seed, block count, and per-block error probabilities."""

    trials: int
    seed: int
    l: int
    p_relay: float
    p_dest: float

    def __post_init__(self):
        if self.trials < 1:
            raise DomainError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must fit an unsigned 64-bit integer")
        if self.l < 1:
            raise DomainError(f"block count must be >= 1, got {self.l}")
        for name in ("p_relay", "p_dest"):
            v = getattr(self, name)
            if not (math.isfinite(v) and 0.0 <= v <= 1.0):
                raise DomainError(f"{name} must lie in [0, 1], got {v}")


@dataclass(frozen=True)
class McReport:
    """Empirical failure rate with its Wilson interval and the union bound."""

    trials: int
    failures: int
    empirical_pe: float
    wilson_ci: tuple[float, float]
    union_bound: float
    bound_satisfied: bool
    epsilon_target: float | None = None
    within_target: bool | None = None


def wilson_interval(failures: int, trials: int, z: float = WILSON_Z) -> tuple[float, float]:
    """Wilson score interval for a binomial proportion."""
    p = failures / trials
    z2 = z * z
    denom = 1.0 + z2 / trials
    center = (p + z2 / (2.0 * trials)) / denom
    half = z * math.sqrt(p * (1.0 - p) / trials + z2 / (4.0 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


def _chunk_stream(seed: int, chunk: int, source: int) -> np.random.Generator:
    # Philox key has two 64-bit words; pack (chunk, source) into the second.
    return np.random.Generator(
        np.random.Philox(key=np.array([seed, 2 * chunk + source], dtype=np.uint64))
    )


def _chunk_failures(seed: int, chunk: int, size: int, l: int,
                    p_relay: float, p_dest: float, with_relay: bool) -> int:
    dest = _chunk_stream(seed, chunk, 0)
    bad = np.zeros(size, dtype=bool)
    for _ in range(l):
        bad |= dest.random(size) < p_dest
    if with_relay:
        relay = _chunk_stream(seed, chunk, 1)
        for _ in range(l):
            bad |= relay.random(size) < p_relay
    return int(np.count_nonzero(bad))


def _simulate(cfg: McConfig, with_relay: bool, workers: int) -> McReport:
    n_chunks = (cfg.trials + CHUNK_TRIALS - 1) // CHUNK_TRIALS
    sizes = [
        min(CHUNK_TRIALS, cfg.trials - k * CHUNK_TRIALS) for k in range(n_chunks)
    ]

    def run(k: int) -> int:
        return _chunk_failures(
            cfg.seed, k, sizes[k], cfg.l, cfg.p_relay, cfg.p_dest, with_relay
        )

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            failures = sum(pool.map(run, range(n_chunks)))
    else:
        failures = sum(run(k) for k in range(n_chunks))

    pe = failures / cfg.trials
    ci = wilson_interval(failures, cfg.trials)
    p_relay = cfg.p_relay if with_relay else 0.0
    union = cfg.l * (p_relay + cfg.p_dest)
    half = 0.5 * (ci[1] - ci[0])
    return McReport(
        trials=cfg.trials,
        failures=failures,
        empirical_pe=pe,
        wilson_ci=ci,
        union_bound=union,
        bound_satisfied=pe <= min(1.0, union) + 4.0 * half,
    )


def simulate_df(cfg: McConfig, workers: int = 1) -> McReport:
    """Decode-forward trial simulation: both error sources active."""
    return _simulate(cfg, with_relay=True, workers=workers)


def simulate_af(cfg: McConfig, workers: int = 1) -> McReport:
    """Amplify-forward trial simulation: p_relay is ignored, only the
    destination decodes."""
    return _simulate(cfg, with_relay=False, workers=workers)


def validate_plan(plan: DfPlan | AfPlan, w: Workload, trials: int, seed: int,
                  workers: int = 1) -> McReport:
    """Run the matching simulator at the plan's budget-limit probabilities.

    DF plans use p_relay = (1-delta)*eps/L and p_dest = delta*eps/L; AF
    plans use p_dest = eps/L. The verdict states whether the empirical
    overall error is consistent with staying at or below eps. This checks
    the accounting logic at the budget limits, not the coding bound.
    """
    if isinstance(plan, DfPlan):
        cfg = McConfig(
            trials=trials, seed=seed, l=plan.l,
            p_relay=(1.0 - plan.delta) * w.epsilon / plan.l,
            p_dest=plan.delta * w.epsilon / plan.l,
        )
        report = simulate_df(cfg, workers=workers)
    elif isinstance(plan, AfPlan):
        cfg = McConfig(
            trials=trials, seed=seed, l=plan.l,
            p_relay=0.0, p_dest=w.epsilon / plan.l,
        )
        report = simulate_af(cfg, workers=workers)
    else:
        raise DomainError(f"unsupported plan type {type(plan).__name__}")
    within = report.empirical_pe <= w.epsilon or report.wilson_ci[0] <= w.epsilon
    return McReport(
        trials=report.trials,
        failures=report.failures,
        empirical_pe=report.empirical_pe,
        wilson_ci=report.wilson_ci,
        union_bound=report.union_bound,
        bound_satisfied=report.bound_satisfied,
        epsilon_target=w.epsilon,
        within_target=within,
    )
