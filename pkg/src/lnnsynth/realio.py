"""RevLib .real reading and writing.

Dialect: version 2.0 headers (.version .numvars .variables .inputs .outputs
.constants .garbage .begin .end), `#` comments, one gate per line with
controls first and target(s) last.  Gate tokens:

    t<k>  multiple-control Toffoli on k lines (t1 = NOT, t2 = CNOT)
    f<k>  multiple-control Fredkin on k lines (f2 = SWAP)
    p3    Peres: `p3 a b c` = t2({a,b},c) then t1({a},b)
    v/v+  controlled V / V-dagger (2 lines) or plain V box (1 line)
    h     Hadamard
    q<k>  root gate X^(1/2^(k-1)); 2 lines = controlled
    r<k>  phase rotation by 2*pi/2^k; 2 lines = controlled

Unknown directives produce a warning; unknown gate tokens are errors.
"""
from __future__ import annotations

import warnings

from .ir import Circuit, Gate, Kind, cv, cvdag, fredkin, h, mct, peres, swap


class RealFormatError(ValueError):
    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        prefix = f"line {lineno}: " if lineno is not None else ""
        super().__init__(prefix + message)


_KNOWN_DIRECTIVES = {".version", ".numvars", ".variables", ".inputs",
                     ".outputs", ".constants", ".garbage", ".begin", ".end"}


def _strip(line: str) -> str:
    return line.split("#", 1)[0].strip()


def parse_real(text: str | bytes) -> Circuit:
    """Parse .real text into a Circuit; raises RealFormatError with line numbers."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    n = None
    labels: list[str] = []
    inputs: tuple[str, ...] = ()
    outputs: tuple[str, ...] = ()
    constants = ""
    garbage = ""
    gates: list[Gate] = []
    in_body = False
    ended = False

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        tokens = line.split()
        head = tokens[0]

        if head.startswith("."):
            if head not in _KNOWN_DIRECTIVES:
                warnings.warn(f"unknown .real directive {head!r} ignored (line {lineno})")
                continue
            if head == ".version":
                continue
            if head == ".numvars":
                try:
                    n = int(tokens[1])
                except (IndexError, ValueError):
                    raise RealFormatError("bad .numvars", lineno)
                if n < 1:
                    raise RealFormatError("numvars must be positive", lineno)
            elif head == ".variables":
                labels = tokens[1:]
            elif head == ".inputs":
                inputs = tuple(tokens[1:])
            elif head == ".outputs":
                outputs = tuple(tokens[1:])
            elif head == ".constants":
                constants = tokens[1] if len(tokens) > 1 else ""
            elif head == ".garbage":
                garbage = tokens[1] if len(tokens) > 1 else ""
            elif head == ".begin":
                if n is None:
                    raise RealFormatError(".begin before .numvars", lineno)
                in_body = True
            elif head == ".end":
                ended = True
                break
            continue

        if not in_body:
            raise RealFormatError(f"gate line {head!r} outside .begin/.end", lineno)
        gates.append(_parse_gate(tokens, labels, n, lineno))

    if n is None:
        raise RealFormatError("missing .numvars header")
    if in_body and not ended:
        raise RealFormatError("missing .end")
    if not labels:
        labels = [f"x{i + 1}" for i in range(n)]
    if len(labels) != n:
        raise RealFormatError(f".variables lists {len(labels)} names for numvars {n}")

    return Circuit(n=n, gates=tuple(gates), labels=tuple(labels), inputs=inputs,
                   outputs=outputs, constants=constants, garbage=garbage)


def _parse_gate(tokens: list[str], labels: list[str], n: int, lineno: int) -> Gate:
    name, args = tokens[0].lower(), tokens[1:]
    index = {lab: i for i, lab in enumerate(labels)}

    def lines(names):
        out = []
        for v in names:
            if v.startswith("-"):
                raise RealFormatError(f"negative control {v!r} not supported", lineno)
            if v not in index:
                raise RealFormatError(f"unknown line {v!r}", lineno)
            out.append(index[v])
        return out

    def expect(count):
        if len(args) != count:
            raise RealFormatError(f"{name} expects {count} line(s), got {len(args)}", lineno)
        return lines(args)

    try:
        if name.startswith("t") and name[1:].isdigit():
            q = expect(int(name[1:]))
            return mct(q[:-1], q[-1])
        if name.startswith("f") and name[1:].isdigit():
            q = expect(int(name[1:]))
            if len(q) < 2:
                raise RealFormatError("fredkin needs >= 2 lines", lineno)
            return fredkin(q[:-2], q[-2], q[-1])
        if name == "p3":
            a, b, c = expect(3)
            return peres(a, b, c)
        if name == "v":
            q = lines(args)
            if len(q) == 1:
                return Gate(Kind.ROOT, (), (q[0],), k=2)
            if len(q) == 2:
                return cv(q[0], q[1])
        if name == "v+":
            q = lines(args)
            if len(q) == 2:
                return cvdag(q[0], q[1])
            raise RealFormatError("plain v+ box is not representable", lineno)
        if name == "h":
            (t,) = expect(1)
            return h(t)
        if name.startswith("q") and name[1:].isdigit():
            k, q = int(name[1:]), lines(args)
            if len(q) == 1:
                return Gate(Kind.ROOT, (), (q[0],), k=k)
            if len(q) == 2:
                return Gate(Kind.CROOT, (q[0],), (q[1],), k=k)
        if name.startswith("r") and name[1:].isdigit():
            k, q = int(name[1:]), lines(args)
            if len(q) == 1:
                return Gate(Kind.PHASE, (), (q[0],), k=k)
            if len(q) == 2:
                return Gate(Kind.CPHASE, (q[0],), (q[1],), k=k)
    except RealFormatError:
        raise
    except ValueError as exc:
        raise RealFormatError(str(exc), lineno)
    raise RealFormatError(f"unknown gate token {tokens[0]!r}", lineno)


def _gate_token(g: Gate) -> str:
    if g.kind is Kind.NOT:
        return "t1"
    if g.kind is Kind.CNOT:
        return "t2"
    if g.kind is Kind.TOFFOLI:
        return f"t{len(g.lines)}"
    if g.kind in (Kind.SWAP, Kind.FREDKIN):
        return f"f{len(g.lines)}"
    if g.kind is Kind.PERES:
        return "p3"
    if g.kind is Kind.CV:
        return "v"
    if g.kind is Kind.CVDAG:
        return "v+"
    if g.kind is Kind.H:
        return "h"
    if g.kind is Kind.ROOT and g.k == 2:
        return "v"
    if g.kind in (Kind.ROOT, Kind.CROOT):
        return f"q{g.k}"
    if g.kind is Kind.CROOTDAG:
        raise RealFormatError("crootdag has no .real token; decompose or relabel first")
    if g.kind in (Kind.PHASE, Kind.CPHASE):
        return f"r{g.k}"
    raise RealFormatError(f"no .real token for {g.kind}")


def write_real(c: Circuit) -> str:
    """Serialize a Circuit; parse_real(write_real(c)) == c at the IR level."""
    out = [".version 2.0", f".numvars {c.n}", ".variables " + " ".join(c.labels)]
    if c.inputs:
        out.append(".inputs " + " ".join(c.inputs))
    if c.outputs:
        out.append(".outputs " + " ".join(c.outputs))
    if c.constants:
        out.append(".constants " + c.constants)
    if c.garbage:
        out.append(".garbage " + c.garbage)
    out.append(".begin")
    for g in c.gates:
        out.append(" ".join([_gate_token(g)] + [c.labels[q] for q in g.lines]))
    out.append(".end")
    return "\n".join(out) + "\n"
