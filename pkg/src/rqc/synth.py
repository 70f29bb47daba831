"""Powers of one fixed rotation angle approximating arbitrary angles.

For irrational phi/pi the orbit {k*phi mod 2pi} is dense, so some power
F(phi)^k = F(k*phi mod 2pi) lands within any eps of a target angle.
synthesize finds the smallest such k by scanning a float64 orbit table
that is re-anchored against high-precision arithmetic every
_ANCHOR_SPACING steps, keeping table drift two orders of magnitude under
the 1e-12 candidate margin; every candidate is then confirmed (and the
achieved angle reported) in high precision, so the result matches a
brute-force scan exactly.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np
from mpmath import mp, mpf

from .circuit import circular_distance

DEFAULT_PHI = math.tau * (math.sqrt(5.0) - 1.0) / 2.0

_ANCHOR_SPACING = 512
_SEGMENT = 1 << 16
_MARGIN = 1e-12


@dataclass(frozen=True)
class SynthConfig:
    """Fixed gate angle phi, per-gate angular tolerance, and search cutoff."""

    phi: float = DEFAULT_PHI
    eps: float = 1e-3
    k_max: int = 10**6

    def __post_init__(self):
        if not math.isfinite(self.phi):
            raise ValueError("phi must be finite")
        if not self.eps > 0.0:
            raise ValueError("eps must be positive")
        if self.k_max < 1:
            raise ValueError("k_max must be at least 1")


@dataclass(frozen=True)
class SynthesisResult:
    """One approximation F(phi)^k: the count, k*phi mod 2pi, and its error."""

    k: int
    achieved: float
    error: float


class NotReachable(Exception):
    """No k <= k_max lands within eps of the target; carries the closest miss."""

    def __init__(self, theta: float, best_k: int, best_error: float):
        super().__init__(
            f"no power reaches theta={theta!r} "
            f"(closest: k={best_k}, error={best_error:.3e}); raise k_max or eps"
        )
        self.theta = theta
        self.best_k = best_k
        self.best_error = best_error
        self.gate_index: int | None = None


def orbit_angle(k: int, phi: float) -> float:
    """k*phi mod 2pi evaluated in high precision, rounded once to float64."""
    with mp.workdps(40):
        v = mp.fmod(k * mpf(phi), 2 * mp.pi)
        if v < 0:
            v += 2 * mp.pi
        return float(v)


class _OrbitTable:
    """Lazily grown float64 view of the orbit of one phi.

    values[i] approximates (i+1)*phi mod 2pi; each _ANCHOR_SPACING block
    starts from a fresh high-precision anchor, so the accumulated float
    error stays below about 5e-13 everywhere.
    """

    def __init__(self, phi: float):
        self.phi = phi
        self.values = np.empty(0, dtype=np.float64)
        self.lock = threading.Lock()

    def ensure(self, count: int) -> np.ndarray:
        with self.lock:
            if count <= len(self.values):
                return self.values
            target = -(-count // _SEGMENT) * _SEGMENT
            have = len(self.values)
            out = np.empty(target, dtype=np.float64)
            out[:have] = self.values
            step = np.arange(_ANCHOR_SPACING, dtype=np.float64) * self.phi
            for base in range(have, target, _ANCHOR_SPACING):
                block = min(_ANCHOR_SPACING, target - base)
                anchor = orbit_angle(base + 1, self.phi)
                out[base:base + block] = np.mod(anchor + step[:block], math.tau)
            self.values = out
            return out


_tables: dict[float, _OrbitTable] = {}
_tables_lock = threading.Lock()


def _orbit(phi: float) -> _OrbitTable:
    with _tables_lock:
        table = _tables.get(phi)
        if table is None:
            table = _tables[phi] = _OrbitTable(phi)
        return table


def synthesize(theta: float, cfg: SynthConfig | None = None) -> SynthesisResult:
    """Smallest k in [1, k_max] with k*phi mod 2pi within eps of theta.

    The float64 table admits candidates with a 1e-12 margin and each one
    is re-checked in high precision before acceptance, so the returned k
    is exactly the brute-force minimum and the reported error is exact
    to float64 rounding.
    """
    if cfg is None:
        cfg = SynthConfig()
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    target = math.fmod(theta, math.tau)
    if target < 0.0:
        target += math.tau
    table = _orbit(cfg.phi)
    best_k, best_d = 1, math.inf
    done = 0
    while done < cfg.k_max:
        hi = min(done + _SEGMENT, cfg.k_max)
        values = table.ensure(hi)
        d = np.abs(values[done:hi] - target)
        d = np.minimum(d, math.tau - d)
        for idx in np.flatnonzero(d <= cfg.eps + _MARGIN):
            k = done + int(idx) + 1
            achieved = orbit_angle(k, cfg.phi)
            error = circular_distance(achieved, target)
            if error <= cfg.eps:
                return SynthesisResult(k, achieved, error)
        i = int(np.argmin(d))
        if d[i] < best_d:
            best_d = float(d[i])
            best_k = done + i + 1
        done = hi
    best_error = circular_distance(orbit_angle(best_k, cfg.phi), target)
    raise NotReachable(theta, best_k, best_error)


def synthesis_error_to_gate_error(delta: float) -> float:
    """Operator-norm distance between two plane rotations delta apart."""
    return 2.0 * abs(math.sin(0.5 * delta))


def budget(errors) -> float:
    """Upper bound on the final-state l2 deviation of a synthesized circuit:
    the sum of per-gate operator-norm errors (triangle inequality)."""
    return float(sum(synthesis_error_to_gate_error(e) for e in errors))
