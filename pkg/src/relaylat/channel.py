"""Channel parameterization and derived SNR quantities.

A channel is either given directly by its three amplitude gains (source to
destination h0, source to relay h1, relay to destination h2) plus the two
transmit powers, or by node geometry with a path-loss exponent. Distances
map to amplitude gains via h = d**(-exponent/2) so that received power
scales as d**(-exponent).

All powers and SNRs are linear inside the package; dB conversion happens
at the boundary (CLI flags, presets).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError

__all__ = [
    "ChannelSpec",
    "Geometry",
    "SnrSet",
    "db_to_linear",
    "linear_to_db",
    "gains_from_geometry",
    "channel_from_geometry",
    "derive_snrs",
    "af_gain",
]

Point = tuple[float, float]


def db_to_linear(db: float) -> float:
    return 10.0 ** (db / 10.0)


def linear_to_db(linear: float) -> float:
    if linear <= 0.0:
        raise DomainError(f"cannot express non-positive value {linear} in dB")
    return 10.0 * math.log10(linear)


@dataclass(frozen=True)
class ChannelSpec:
    """Amplitude gains and transmit powers (all linear).

    Gains may be zero or negative (only their squares are used); powers
    must be strictly positive.
    """

    h0: float
    h1: float
    h2: float
    p: float
    pr: float

    def __post_init__(self):
        for name in ("h0", "h1", "h2"):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(f"{name} must be finite")
        if not (math.isfinite(self.p) and self.p > 0.0):
            raise DomainError(f"source power must be > 0, got {self.p}")
        if not (math.isfinite(self.pr) and self.pr > 0.0):
            raise DomainError(f"relay power must be > 0, got {self.pr}")


@dataclass(frozen=True)
class Geometry:
    """Node positions in normalized distance units plus a path-loss exponent."""

    source_pos: Point
    dest_pos: Point
    relay_pos: Point
    pathloss_exponent: float = 3.0

    def __post_init__(self):
        if not (math.isfinite(self.pathloss_exponent) and self.pathloss_exponent > 0.0):
            raise DomainError(
                f"path-loss exponent must be > 0, got {self.pathloss_exponent}"
            )
        if _dist(self.source_pos, self.dest_pos) == 0.0:
            raise DomainError("source and destination positions coincide")
        if _dist(self.relay_pos, self.source_pos) == 0.0:
            raise DomainError("relay coincides with the source (infinite gain)")
        if _dist(self.relay_pos, self.dest_pos) == 0.0:
            raise DomainError("relay coincides with the destination (infinite gain)")


@dataclass(frozen=True)
class SnrSet:
    """Every SNR the schemes need, derived from one ChannelSpec."""

    snr_p2p: float
    snr_df1: float
    snr_df2: float
    snr_af: float


def _dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def gains_from_geometry(geom: Geometry) -> tuple[float, float, float]:
    """Amplitude gains (h0, h1, h2) from node distances, h = d**(-eta/2)."""
    half = 0.5 * geom.pathloss_exponent
    h0 = _dist(geom.source_pos, geom.dest_pos) ** -half
    h1 = _dist(geom.relay_pos, geom.source_pos) ** -half
    h2 = _dist(geom.relay_pos, geom.dest_pos) ** -half
    return h0, h1, h2


def channel_from_geometry(geom: Geometry, p: float, pr: float) -> ChannelSpec:
    h0, h1, h2 = gains_from_geometry(geom)
    return ChannelSpec(h0=h0, h1=h1, h2=h2, p=p, pr=pr)


def derive_snrs(spec: ChannelSpec) -> SnrSet:
    """All four SNRs.

    snr_p2p = h0^2 P, snr_df1 = h1^2 P, snr_df2 = h2^2 Pr, and
    snr_af = h1^2 h2^2 P Pr / (1 + h1^2 P + h2^2 Pr). A zero gain yields a
    zero SNR; downstream latency calls reject those as infeasible.
    """
    s1 = spec.h1 * spec.h1 * spec.p
    s2 = spec.h2 * spec.h2 * spec.pr
    return SnrSet(
        snr_p2p=spec.h0 * spec.h0 * spec.p,
        snr_df1=s1,
        snr_df2=s2,
        snr_af=s1 * s2 / (1.0 + s1 + s2),
    )


def af_gain(spec: ChannelSpec) -> float:
    """Relay amplification factor sqrt(Pr / (1 + h1^2 P)).

    This is the scaling that makes the relay meet its power constraint when
    it retransmits its noisy observation; exposed for reporting.
    """
    return math.sqrt(spec.pr / (1.0 + spec.h1 * spec.h1 * spec.p))
