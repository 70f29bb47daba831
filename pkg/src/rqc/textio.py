"""Line-oriented circuit text format (.rqc files).

Grammar, one statement per line:

    qubits <n>                      header, required first statement
    <mnemonic> <operand...> [<angle>]

'#' starts a comment running to the end of the line; blank lines are
skipped; operands are qubit indices, control first; angles are plain
decimal literals in radians. Emission is canonical: LF line endings,
angles at 17 significant digits, trailing newline. The parser also
accepts CRLF input.
"""

from __future__ import annotations

import re

from .circuit import Circuit, Gate, GateKind

_MNEMONICS = {k.mnemonic: k for k in GateKind}
_INT_RE = re.compile(r"[+-]?\d+\Z")
_FLOAT_RE = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\Z")


class ParseError(ValueError):
    """Parse failure at a 1-based line and column of the offending token."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.message = message


def _tokens(raw: str) -> list[tuple[int, str]]:
    # (column, token) pairs; columns are 1-based into the original line
    cut = raw.find("#")
    if cut >= 0:
        raw = raw[:cut]
    out = []
    i = 0
    while i < len(raw):
        if raw[i].isspace():
            i += 1
            continue
        j = i
        while j < len(raw) and not raw[j].isspace():
            j += 1
        out.append((i + 1, raw[i:j]))
        i = j
    return out


def parse(text: str) -> Circuit:
    """Parse .rqc text into a validated circuit; raises ParseError at the
    first problem, with the line and column of the offending token."""
    circuit: Circuit | None = None
    for lineno, raw in enumerate(text.split("\n"), start=1):
        toks = _tokens(raw.rstrip("\r"))
        if not toks:
            continue
        col0, head = toks[0]
        if circuit is None:
            if head != "qubits":
                raise ParseError(lineno, col0, "first statement must be 'qubits <n>'")
            if len(toks) != 2:
                raise ParseError(lineno, col0, "'qubits' takes exactly one count")
            col, tok = toks[1]
            if not _INT_RE.match(tok) or int(tok) < 1:
                raise ParseError(lineno, col, f"qubit count must be a positive integer, got '{tok}'")
            circuit = Circuit(int(tok))
            continue
        if head == "qubits":
            raise ParseError(lineno, col0, "duplicate 'qubits' header")
        kind = _MNEMONICS.get(head)
        if kind is None:
            raise ParseError(lineno, col0, f"unknown gate '{head}'")
        if len(toks) - 1 != kind.num_operands + kind.num_params:
            raise ParseError(
                lineno, col0,
                f"'{head}' takes {kind.num_operands} operand(s) and "
                f"{kind.num_params} angle(s), got {len(toks) - 1} token(s)",
            )
        qubits = []
        for col, tok in toks[1:1 + kind.num_operands]:
            if not _INT_RE.match(tok):
                raise ParseError(lineno, col, f"operand must be an integer, got '{tok}'")
            q = int(tok)
            if q < 0 or q >= circuit.num_qubits:
                raise ParseError(
                    lineno, col,
                    f"operand {q} out of range for {circuit.num_qubits} qubit(s)",
                )
            qubits.append(q)
        if kind.num_operands == 2 and qubits[0] == qubits[1]:
            raise ParseError(lineno, toks[2][0], "duplicate operands")
        param = None
        if kind.num_params:
            col, tok = toks[-1]
            if not _FLOAT_RE.match(tok):
                raise ParseError(lineno, col, f"angle must be a decimal literal, got '{tok}'")
            param = float(tok)
            if param in (float("inf"), float("-inf")):
                raise ParseError(lineno, col, "angle overflows to infinity")
        circuit.gates.append(Gate(kind, tuple(qubits), param))
    if circuit is None:
        raise ParseError(1, 1, "missing 'qubits' header")
    return circuit


def emit(c: Circuit) -> str:
    """Canonical text for a valid circuit; parse(emit(c)) == c."""
    lines = [f"qubits {c.num_qubits}"]
    for g in c.gates:
        parts = [g.kind.mnemonic]
        parts += [str(q) for q in g.qubits]
        if g.kind.num_params:
            parts.append(format(g.param, ".17g"))
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n"
