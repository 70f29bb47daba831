"""Bijection between complex states and real states one qubit larger.

A complex amplitude vector of length 2^n maps to a real vector of length
2^{n+1}: the lower half holds real parts, the upper half imaginary parts.
Seen as a register, a tag ancilla at index num_data reads 0 for the real
component of each amplitude and 1 for the imaginary one, and data qubits
keep their original indices. Lowered circuits add one more ancilla at
num_data + 1, held in |1> and used only as a control.
"""

from __future__ import annotations

from typing import ClassVar
from dataclasses import dataclass

import numpy as np

from .circuit import Gate, GateKind
from .sim import ComplexState, RealState


@dataclass(frozen=True)
class EncodedLayout:
    """Register bookkeeping for encoded circuits."""

    num_data: int
    has_work: bool = False

    # basis value of the tag ancilla that marks real parts
    R_VALUE: ClassVar[int] = 0

    @property
    def ri_ancilla(self) -> int:
        return self.num_data

    @property
    def work_ancilla(self) -> int | None:
        return self.num_data + 1 if self.has_work else None

    @property
    def num_qubits(self) -> int:
        return self.num_data + (2 if self.has_work else 1)


class AncillaLeakError(ValueError):
    """The work ancilla picked up weight on |0>; controls must never move it."""


def encode(s: ComplexState) -> RealState:
    """Split amplitudes into (real, imaginary) component pairs.

    Entry j of the input lands at encoded indices (j, tag=0) and
    (j, tag=1); the map is a norm- and distribution-preserving
    real-linear isomorphism.
    """
    return RealState(s.num_qubits + 1, np.concatenate([s.amps.real, s.amps.imag]))


def decode(s: RealState, layout: EncodedLayout | None = None) -> ComplexState:
    """Exact inverse of encode; the input must not carry a work ancilla."""
    if layout is None:
        layout = EncodedLayout(s.num_qubits - 1)
    if layout.has_work or layout.num_qubits != s.num_qubits:
        raise ValueError("decode expects a data-plus-tag register")
    half = 1 << layout.num_data
    return ComplexState(layout.num_data, s.amps[:half] + 1j * s.amps[half:])


def add_work_ancilla(s: RealState) -> RealState:
    """Append a control ancilla in |1> at the top of the register."""
    out = np.zeros(2 * len(s.amps), dtype=np.float64)
    out[len(s.amps):] = s.amps
    return RealState(s.num_qubits + 1, out)


def strip_work_ancilla(s: RealState, tol: float = 1e-9) -> RealState:
    """Project out the |1> work ancilla, refusing if it leaked onto |0>."""
    half = len(s.amps) >> 1
    leak = float(s.amps[:half] @ s.amps[:half])
    if leak > tol:
        raise AncillaLeakError(f"work-ancilla leaked: probability {leak:.3e} on |0>")
    return RealState(s.num_qubits - 1, s.amps[half:])


def marginal_distribution(s: RealState, layout: EncodedLayout) -> np.ndarray:
    """Distribution over data outcomes with ancilla outcomes summed out.

    Matches distribution(decode(s)) on encoded states. With a work
    ancilla present, its weight must sit entirely on |1> (within 1e-9);
    anything else means a lowered circuit moved it.
    """
    if layout.num_qubits != s.num_qubits:
        raise ValueError("layout does not match the state register")
    p = s.amps ** 2
    if layout.has_work:
        half = len(p) >> 1
        leak = float(p[:half].sum())
        if leak > 1e-9:
            raise AncillaLeakError(f"work-ancilla leaked: probability {leak:.3e} on |0>")
        p = p[:half] + p[half:]
    n = 1 << layout.num_data
    return p[:n] + p[n:]


def global_phase_gate(alpha: float, layout: EncodedLayout) -> Gate:
    """ry(alpha) on the tag ancilla.

    The tag-ancilla rotation turns every (Re, Im) pair by alpha, which is
    exactly multiplication of the decoded state by e^{i alpha}. This
    identity is not part of the translation rules proper and is pinned by
    its own oracle test.
    """
    return Gate(GateKind.RY, (layout.ri_ancilla,), float(alpha))
