"""Built-in circuits: canonical algorithms and a seeded random generator.

The controlled-phase and swap helpers splice their standard identities
over the front-end gate set instead of adding new kinds, keeping every
library circuit inside the transpiler's vocabulary.
"""

from __future__ import annotations

import math

import numpy as np

from .circuit import Circuit, Gate, GateKind


def controlled_phase(c: Circuit, control: int, target: int, angle: float) -> Circuit:
    """Append diag(1, 1, 1, e^{i angle}) using cx and the asymmetric rz."""
    c.cx(control, target)
    c.rz(target, -0.5 * angle)
    c.cx(control, target)
    c.rz(target, 0.5 * angle)
    c.rz(control, 0.5 * angle)
    return c


def swap(c: Circuit, a: int, b: int) -> Circuit:
    """Append a swap of two qubits as three cx gates."""
    return c.cx(a, b).cx(b, a).cx(a, b)


def qft(num_qubits: int) -> Circuit:
    """Quantum Fourier transform: matrix entry (k, j) is e^{2 pi i jk/N}/sqrt(N)."""
    c = Circuit(num_qubits, name=f"qft{num_qubits}")
    for q in reversed(range(num_qubits)):
        c.h(q)
        for p in range(q):
            controlled_phase(c, p, q, math.pi / (1 << (q - p)))
    for q in range(num_qubits // 2):
        swap(c, q, num_qubits - 1 - q)
    return c


def grover_two_qubit(marked: int = 3) -> Circuit:
    """One Grover iteration on two qubits; reaches |marked> with probability 1."""
    if not 0 <= marked < 4:
        raise ValueError("marked index must be in [0, 4)")
    c = Circuit(2, name=f"grover2-{marked}")
    c.h(0).h(1)
    _flip_unmarked(c, marked)
    c.cz(0, 1)
    _flip_unmarked(c, marked)
    c.h(0).h(1).x(0).x(1)
    c.cz(0, 1)
    c.x(0).x(1).h(0).h(1)
    return c


def _flip_unmarked(c: Circuit, marked: int) -> None:
    # map |marked> onto |11> so a cz phase-flips exactly the marked state
    for q in range(2):
        if not (marked >> q) & 1:
            c.x(q)


def random_circuit(num_qubits: int, num_gates: int, seed: int) -> Circuit:
    """Seeded circuit drawing uniformly from the full front-end vocabulary."""
    rng = np.random.default_rng(seed)
    kinds = list(GateKind)
    c = Circuit(num_qubits, name=f"random-{num_qubits}q-{seed}")
    while len(c.gates) < num_gates:
        kind = kinds[int(rng.integers(len(kinds)))]
        if kind.num_operands == 2:
            if num_qubits < 2:
                continue
            pick = rng.choice(num_qubits, size=2, replace=False)
            qubits = (int(pick[0]), int(pick[1]))
        elif kind.num_operands == 1:
            qubits = (int(rng.integers(num_qubits)),)
        else:
            qubits = ()
        param = float(rng.uniform(0.0, math.tau)) if kind.num_params else None
        c.gates.append(Gate(kind, qubits, param))
    return c


def bench_suite() -> list[tuple[str, Circuit]]:
    """Deterministic circuits for the bench command."""
    rows = [
        (f"random-{n}q", random_circuit(n, 24, seed=97 + n)) for n in range(2, 9)
    ]
    rows.append(("qft-3", qft(3)))
    rows.append(("grover-2", grover_two_qubit()))
    return rows
