"""Equivalence checking between a circuit and its lowered forms.

The reference run uses the complex engine on the original circuit; each
lowered stage runs on the real engine from the encoded initial state.
Comparison is full statevector distance after decoding, not only
distributions, so phase errors that distributions cannot see still fail.
Reports serialize to stable key: value text for golden-file comparison.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .circuit import Circuit, require_valid
from .encoding import (
    EncodedLayout,
    add_work_ancilla,
    decode,
    encode,
    marginal_distribution,
    strip_work_ancilla,
)
from .sim import distribution, init_basis, run_complex, run_real
from .synth import SynthConfig, budget
from .textio import emit
from .transpile import (
    LoweringLevel,
    SynthesizedGate,
    achieved_circuit,
    encode_pass,
    lower_ry_pass,
    normalize_pass,
    synthesize_all,
)

# the exact stages must reproduce the reference to accumulation error
EXACT_STAGE_TOL = 1e-9


def tv_distance(p: np.ndarray, q: np.ndarray) -> float:
    """Total variation distance: half the l1 distance between distributions."""
    p = np.asarray(p, dtype=np.float64)
    q = np.asarray(q, dtype=np.float64)
    if p.shape != q.shape:
        raise ValueError("distributions have different outcome counts")
    return 0.5 * float(np.abs(p - q).sum())


@dataclass(frozen=True)
class Stages:
    """Lowered forms of one circuit, as far down as requested.

    The level-'g' entry is the achieved-angle stand-in for the fixed-gate
    circuit (see transpile.achieved_circuit); fixed_gate_count records the
    size the materialized circuit would have.
    """

    l1: Circuit
    l2: Circuit | None
    l3: Circuit | None
    syntheses: tuple[SynthesizedGate, ...]
    budget: float | None

    @property
    def fixed_gate_count(self) -> int | None:
        if self.l3 is None:
            return None
        return sum(s.result.k for s in self.syntheses)

    @property
    def max_k(self) -> int | None:
        if not self.syntheses:
            return None
        return max(s.result.k for s in self.syntheses)


def prepare_stages(c: Circuit, cfg: SynthConfig, level: LoweringLevel) -> Stages:
    """Transpile through the requested level, keeping every stage."""
    l1 = encode_pass(normalize_pass(c))
    if level is LoweringLevel.REAL_ENCODED:
        return Stages(l1, None, None, (), None)
    l2 = lower_ry_pass(l1)
    if level is LoweringLevel.F_ONLY:
        return Stages(l1, l2, None, (), None)
    synths = synthesize_all(l2, cfg)
    l3 = achieved_circuit(l2, synths)
    return Stages(l1, l2, l3, tuple(synths), budget(s.result.error for s in synths))


@dataclass(frozen=True)
class StageResult:
    """Distances of one lowered stage against the complex reference."""

    gate_count: int
    state_distance: float
    tv_distance: float


@dataclass(frozen=True)
class VerificationReport:
    """Stage-by-stage equivalence record with a PASS/FAIL judgement."""

    digest: str
    num_qubits: int
    num_gates: int
    init_index: int
    level: LoweringLevel
    phi: float
    eps: float
    k_max: int
    real: StageResult
    f: StageResult | None
    g: StageResult | None
    fixed_gate_count: int | None
    max_k: int | None
    budget: float | None
    status: str
    reason: str | None

    @property
    def passed(self) -> bool:
        return self.status == "PASS"

    def to_text(self) -> str:
        """Stable key: value serialization, byte-identical per input."""
        out = [
            f"digest: {self.digest}",
            f"num_qubits: {self.num_qubits}",
            f"num_gates: {self.num_gates}",
            f"init_index: {self.init_index}",
            f"level: {self.level.value}",
            f"phi: {self.phi:.17g}",
            f"eps: {self.eps:.17g}",
            f"k_max: {self.k_max}",
            f"real_gate_count: {self.real.gate_count}",
            f"real_state_distance: {self.real.state_distance:.17g}",
            f"real_tv_distance: {self.real.tv_distance:.17g}",
        ]
        if self.f is not None:
            out += [
                f"f_gate_count: {self.f.gate_count}",
                f"f_state_distance: {self.f.state_distance:.17g}",
                f"f_tv_distance: {self.f.tv_distance:.17g}",
            ]
        if self.g is not None:
            out += [
                f"g_gate_count: {self.fixed_gate_count}",
                f"g_max_k: {self.max_k if self.max_k is not None else 0}",
                f"g_budget: {self.budget:.17g}",
                f"g_state_distance: {self.g.state_distance:.17g}",
                f"g_tv_distance: {self.g.tv_distance:.17g}",
            ]
        out.append(f"status: {self.status}")
        if self.reason is not None:
            out.append(f"reason: {self.reason}")
        return "\n".join(out) + "\n"


def circuit_digest(c: Circuit) -> str:
    """sha256 over the canonical text form."""
    return hashlib.sha256(emit(c).encode()).hexdigest()


def verify_circuit(
    c: Circuit,
    init_basis_index: int = 0,
    cfg: SynthConfig | None = None,
    level: LoweringLevel = LoweringLevel.G_ONLY,
) -> VerificationReport:
    """Run the complex reference and every lowered stage from the same
    basis input and measure state and distribution distances.

    PASS needs the exact stages within EXACT_STAGE_TOL on both metrics
    and the synthesized stage within its own error budget.
    """
    require_valid(c)
    if cfg is None:
        cfg = SynthConfig()
    ref = run_complex(c, init_basis(c.num_qubits, init_basis_index))
    ref_dist = distribution(ref)
    stages = prepare_stages(c, cfg, level)
    plain = EncodedLayout(c.num_qubits)
    worked = EncodedLayout(c.num_qubits, has_work=True)
    enc = encode(init_basis(c.num_qubits, init_basis_index))
    enc_worked = add_work_ancilla(enc)

    def measure(circuit: Circuit, layout: EncodedLayout) -> StageResult:
        final = run_real(circuit, enc_worked if layout.has_work else enc)
        marginal = marginal_distribution(final, layout)
        if layout.has_work:
            final = strip_work_ancilla(final)
        decoded = decode(final, plain)
        return StageResult(
            len(circuit.gates),
            float(np.linalg.norm(decoded.amps - ref.amps)),
            tv_distance(marginal, ref_dist),
        )

    real_res = measure(stages.l1, plain)
    f_res = measure(stages.l2, worked) if stages.l2 is not None else None
    g_res = measure(stages.l3, worked) if stages.l3 is not None else None

    reason = None
    for name, res in (("real", real_res), ("f", f_res)):
        if res is None:
            continue
        if res.state_distance > EXACT_STAGE_TOL or res.tv_distance > EXACT_STAGE_TOL:
            reason = f"stage '{name}' distance exceeds {EXACT_STAGE_TOL:g}"
            break
    if reason is None and g_res is not None and g_res.state_distance > stages.budget:
        reason = "budget violated"

    return VerificationReport(
        digest=circuit_digest(c),
        num_qubits=c.num_qubits,
        num_gates=len(c.gates),
        init_index=init_basis_index,
        level=level,
        phi=cfg.phi,
        eps=cfg.eps,
        k_max=cfg.k_max,
        real=real_res,
        f=f_res,
        g=g_res,
        fixed_gate_count=stages.fixed_gate_count,
        max_k=stages.max_k,
        budget=stages.budget,
        status="FAIL" if reason else "PASS",
        reason=reason,
    )
