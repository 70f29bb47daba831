"""
The .rqc text format
====================

One gate per line, angles as decimal literals, comments with '#'.
Emit always writes the canonical form: repr-quality angles that parse
back to the identical float, so emit(parse(emit(c))) is a fixed point.
"""

import math

from rqc import Circuit, ParseError, emit, parse

# hand-written source, deliberately untidy
source = """\
# bell pair, then a small twist
qubits 2

h 0
cx 0 1
rz 1 0.1  # trailing comment
"""

c = parse(source)
print(f"parsed: {c.num_qubits} qubits, {len(c.gates)} gates")
print()
print("canonical emission:")
print(emit(c), end="")
print()

# angles survive the round trip bit for bit
c2 = Circuit(1).rz(0, math.pi / 7).ry(0, 1e-300)
text = emit(c2)
back = parse(text)
print("angle round trip exact:", back.gates == c2.gates)
print(text, end="")
print()

# errors carry line and column, counted from 1
bad = "qubits 2\ncx 0 0\n"
try:
    parse(bad)
except ParseError as e:
    print(f"rejected: {e}")
