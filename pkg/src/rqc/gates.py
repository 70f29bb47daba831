"""Gate matrices, realness classification, and ZYZ normal form.

Matrix conventions (the encoding rewrite rules are exact identities only
under these):

    rz(t)     = diag(1, e^{it})                      asymmetric phase
    ry(t)     = [[cos t, -sin t], [sin t, cos t]]    full-angle rotation
    rx(t)     = exp(-i t X / 2)                      half-angle rotation
    f(t)      = identity on the control-0 block, ry(t) on the target
                when the control bit is set
    gphase(a) = the 1x1 matrix [e^{ia}]

Two-qubit matrices index basis states as 2*control + target, so the
control is the first operand everywhere.
"""

from __future__ import annotations

import cmath
import math

import numpy as np

from .circuit import Gate, GateKind

_SQ2 = math.sqrt(0.5)


def _unit_phase(t: float) -> complex:
    # exact +-1 at floating-point multiples of pi, so is_real and the
    # matrix entries can never disagree about realness
    if math.remainder(t, math.pi) == 0.0:
        return complex(1.0) if math.cos(t) > 0.0 else complex(-1.0)
    return complex(math.cos(t), math.sin(t))


def _ry_block(t: float) -> np.ndarray:
    c, s = math.cos(t), math.sin(t)
    return np.array([[c, -s], [s, c]], dtype=np.complex128)


def gate_matrix(g: Gate) -> np.ndarray:
    """The exact unitary of one gate: 2x2, 4x4, or 1x1 for gphase."""
    k = g.kind
    t = g.param
    if k is GateKind.X:
        return np.array([[0, 1], [1, 0]], dtype=np.complex128)
    if k is GateKind.Y:
        return np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
    if k is GateKind.Z:
        return np.array([[1, 0], [0, -1]], dtype=np.complex128)
    if k is GateKind.H:
        return np.array([[_SQ2, _SQ2], [_SQ2, -_SQ2]], dtype=np.complex128)
    if k is GateKind.S:
        return np.array([[1, 0], [0, 1j]], dtype=np.complex128)
    if k is GateKind.SDG:
        return np.array([[1, 0], [0, -1j]], dtype=np.complex128)
    if k is GateKind.T:
        return np.array([[1, 0], [0, cmath.exp(0.25j * math.pi)]], dtype=np.complex128)
    if k is GateKind.TDG:
        return np.array([[1, 0], [0, cmath.exp(-0.25j * math.pi)]], dtype=np.complex128)
    if k is GateKind.RX:
        c, s = math.cos(0.5 * t), math.sin(0.5 * t)
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=np.complex128)
    if k is GateKind.RY:
        return _ry_block(t)
    if k is GateKind.RZ:
        return np.array([[1, 0], [0, _unit_phase(t)]], dtype=np.complex128)
    if k is GateKind.CX:
        m = np.eye(4, dtype=np.complex128)
        m[2:, 2:] = [[0, 1], [1, 0]]
        return m
    if k is GateKind.CZ:
        return np.diag([1, 1, 1, -1]).astype(np.complex128)
    if k is GateKind.F:
        m = np.eye(4, dtype=np.complex128)
        m[2:, 2:] = _ry_block(t)
        return m
    if k is GateKind.GPHASE:
        return np.array([[_unit_phase(t)]], dtype=np.complex128)
    raise ValueError(f"unknown gate kind {k!r}")


_ALWAYS_REAL = frozenset(
    {GateKind.X, GateKind.Z, GateKind.H, GateKind.RY, GateKind.CX, GateKind.CZ, GateKind.F}
)
_NEVER_REAL = frozenset(
    {GateKind.Y, GateKind.S, GateKind.SDG, GateKind.T, GateKind.TDG}
)


def is_real(g: Gate) -> bool:
    """True iff every entry of gate_matrix(g) is exactly real.

    Classification is symbolic per kind; rz and gphase are real exactly
    when the angle is a floating-point multiple of pi (where the matrix
    builder snaps e^{it} to +-1), rx only at angle 0 where sin(t/2) is
    exactly zero.
    """
    if g.kind in _ALWAYS_REAL:
        return True
    if g.kind in _NEVER_REAL:
        return False
    if g.kind is GateKind.RX:
        return g.param == 0.0
    return math.remainder(g.param, math.pi) == 0.0


def _arg(z: complex) -> float:
    # +0.0 components so the phase of -1 - 0j comes out +pi, not -pi
    return cmath.phase(complex(z.real + 0.0, z.imag + 0.0))


def _wrap(t: float) -> float:
    """Wrap an angle into [-pi, pi], normalizing away -0.0."""
    return math.remainder(t, math.tau) + 0.0


def zyz_angles(u: np.ndarray) -> tuple[float, float, float, float]:
    """ZYZ angles of a 2x2 unitary: u = e^{i alpha} rz(a) ry(b) rz(c).

    Branch selection is deterministic. Diagonal input fixes b = 0, c = 0;
    anti-diagonal input fixes b = pi/2, a = 0 (which keeps plain bit
    flips free of gphase items: x comes out as ry(pi/2) after rz(pi)).
    """
    if abs(u[1, 0]) == 0.0:
        alpha = _arg(u[0, 0])
        return (alpha, _wrap(_arg(u[1, 1]) - alpha), 0.0, 0.0)
    if abs(u[0, 0]) == 0.0:
        alpha = _arg(u[1, 0])
        return (alpha, 0.0, 0.5 * math.pi, _wrap(_arg(-u[0, 1]) - alpha))
    b = math.atan2(abs(u[1, 0]), abs(u[0, 0]))
    alpha = _arg(u[0, 0])
    a = _wrap(_arg(u[1, 0]) - alpha)
    c = _wrap(_arg(-u[0, 1]) - alpha)
    return (alpha, a, b, c)


def zyz_normalize(g: Gate) -> tuple[float, float, float, float]:
    """(alpha, a, b, c) with gate_matrix(g) = e^{i alpha} rz(a) ry(b) rz(c),
    rz(c) applied first in time.

    ry and rz come back as identity embeddings; every other single-qubit
    kind goes through the generic matrix path.
    """
    if g.kind is GateKind.RY:
        return (0.0, 0.0, g.param, 0.0)
    if g.kind is GateKind.RZ:
        return (0.0, g.param, 0.0, 0.0)
    if g.kind.num_operands != 1:
        raise ValueError(f"zyz_normalize needs a single-qubit gate, got {g.kind.mnemonic}")
    return zyz_angles(gate_matrix(g))


def zyz_matrix(alpha: float, a: float, b: float, c: float) -> np.ndarray:
    """Reconstruct e^{i alpha} rz(a) ry(b) rz(c) as a dense 2x2."""
    rz_a = np.array([[1, 0], [0, _unit_phase(a)]], dtype=np.complex128)
    rz_c = np.array([[1, 0], [0, _unit_phase(c)]], dtype=np.complex128)
    m = rz_a @ _ry_block(b) @ rz_c
    if alpha != 0.0:
        m = _unit_phase(alpha) * m
    return m
