"""Gaussian random-coding exponent and the finite-payload latency function.

The latency of delivering ``bits`` with error probability below ``epsilon``
over an AWGN link at a given linear SNR is

    min over rho in [RHO_MIN, 1] of
        (rho * bits - ln(epsilon)) / ((rho / 2) * log2(1 + snr / (1 + rho)))

Note the mixed log bases: the rate term is log2 (bits per channel use),
the reliability term is a natural log. Results are real-valued channel
uses; nothing is rounded at this layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _kernels
from ._kernels import RHO_MIN
from .errors import DomainError

__all__ = [
    "RHO_MIN",
    "Workload",
    "RhoSolution",
    "error_exponent",
    "best_error_exponent",
    "min_latency",
]


@dataclass(frozen=True)
class Workload:
    """Payload size in bits and the end-to-end error probability target."""

    bits: float
    epsilon: float

    def __post_init__(self):
        if not (math.isfinite(self.bits) and self.bits >= 0.0):
            raise DomainError(f"bits must be finite and >= 0, got {self.bits}")
        if not (0.0 < self.epsilon < 1.0):
            raise DomainError(f"epsilon must lie in (0, 1), got {self.epsilon}")


@dataclass(frozen=True)
class RhoSolution:
    """Minimizer and minimum of the latency objective."""

    rho: float
    objective: float


def _check_snr(snr: float) -> float:
    snr = float(snr)
    if not (math.isfinite(snr) and snr > 0.0):
        raise DomainError(f"snr must be finite and > 0, got {snr}")
    return snr


def error_exponent(rate: float, snr: float, rho: float) -> float:
    """Exponent achieved at a fixed rho:
    (rho/2) * log2(1 + snr/(1+rho)) - rho * rate.
    """
    snr = _check_snr(snr)
    if not 0.0 <= rho <= 1.0:
        raise DomainError(f"rho must lie in [0, 1], got {rho}")
    if not (math.isfinite(rate) and rate >= 0.0):
        raise DomainError(f"rate must be finite and >= 0, got {rate}")
    return float(_kernels.exponent_objective(rate, snr, rho))


def best_error_exponent(rate: float, snr: float) -> tuple[float, float]:
    """Maximize the exponent over rho in [0, 1].

    Returns (rho_star, exponent). Uses the same two-phase search as the
    latency minimizer (coarse grid, then golden section in the best cell).
    """
    snr = _check_snr(snr)
    if not (math.isfinite(rate) and rate >= 0.0):
        raise DomainError(f"rate must be finite and >= 0, got {rate}")
    rho, val, _ = _kernels.exponent_max(float(rate), snr)
    return float(rho), float(val)


def _min_latency_raw(bits: float, epsilon: float, snr: float) -> tuple[float, float, int]:
    """Unvalidated two-phase search; returns (rho, latency, evaluations)."""
    rho, val, evals = _kernels.latency_min_canonical(
        float(bits), -math.log(epsilon), float(snr)
    )
    if not math.isfinite(val) or val <= 0.0:
        raise DomainError(
            f"latency search did not converge for bits={bits}, "
            f"epsilon={epsilon}, snr={snr}"
        )
    return float(rho), float(val), int(evals)


def min_latency(workload: Workload, snr: float) -> RhoSolution:
    """Minimum channel uses to deliver the workload over a link at ``snr``."""
    snr = _check_snr(snr)
    rho, val, _ = _min_latency_raw(workload.bits, workload.epsilon, snr)
    return RhoSolution(rho=rho, objective=val)
