"""
Lowering, stage by stage
========================

One circuit pushed through every level of the transpiler. Level 'real'
replaces complex gates by real ones on a register with a tag ancilla,
level 'f' leaves nothing but controlled rotations, and level 'g'
repeats a single fixed rotation until every angle is approximated.
"""

from rqc import Circuit, LoweringLevel, SynthConfig, emit, transpile, verify_circuit

c = Circuit(2, name="demo").h(0).t(0).cx(0, 1)
print("input ({} gates):".format(len(c.gates)))
print(emit(c))

for level in LoweringLevel:
    lowered, report = transpile(c, level, SynthConfig(eps=1e-2))
    print(f"--- level '{level.value}' ---")
    print(f"gates: {report.output_gate_count}   register: {lowered.num_qubits} qubits")
    if level is LoweringLevel.G_ONLY:
        print(f"distinct angles collapsed to powers of one gate, max k = {report.max_k}")
        print(f"l2 error budget: {report.budget:.3e}")
    else:
        print(emit(lowered))

# the verifier replays the original and every stage from the same input
report = verify_circuit(c, init_basis_index=0, cfg=SynthConfig(eps=1e-2))
print("--- verification ---")
print(report.to_text())
