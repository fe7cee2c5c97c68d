"""Circuit IR: gate kinds, gates, circuits, cost-model configuration.

Contains:
    - Kind: enum of supported gate kinds (reversible + elementary quantum)
    - Gate: frozen (kind, controls, targets, k) with validation
    - Circuit: immutable gate list over n labeled lines plus .real metadata
    - CostModel / CircuitStats: cost parameters and reported metrics

Line indices are 0-based with line 0 drawn as the top line.  Basis states
are read with line 0 as the most significant bit.
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace
from enum import Enum


class Kind(Enum):
    NOT = "not"
    CNOT = "cnot"
    TOFFOLI = "toffoli"      # >= 2 controls
    FREDKIN = "fredkin"      # >= 1 control, 2 targets
    SWAP = "swap"            # 0-control Fredkin
    PERES = "peres"          # 1 control, 2 targets
    CV = "cv"
    CVDAG = "cvdag"
    H = "h"
    ROOT = "root"            # X^(1/2^(k-1)); k=1 is NOT, k=2 is V
    CROOT = "croot"
    CROOTDAG = "crootdag"
    PHASE = "phase"          # rotation by 2*pi/2^k
    CPHASE = "cphase"


# Kinds of quantum cost 1.  Uncontrolled ROOT/V boxes cost 1 as well but the
# elementary set proper is the 2-qubit-or-less library used by the synthesizer.
ELEMENTARY = frozenset({
    Kind.NOT, Kind.CNOT, Kind.CV, Kind.CVDAG, Kind.H,
    Kind.CROOT, Kind.CROOTDAG, Kind.PHASE, Kind.CPHASE,
})

# Parameterized kinds carry the root/phase order k.
PARAMETERIZED = frozenset({Kind.ROOT, Kind.CROOT, Kind.CROOTDAG, Kind.PHASE, Kind.CPHASE})

_N_CONTROLS = {
    Kind.NOT: 0, Kind.SWAP: 0, Kind.H: 0, Kind.ROOT: 0, Kind.PHASE: 0,
    Kind.CNOT: 1, Kind.CV: 1, Kind.CVDAG: 1, Kind.CROOT: 1, Kind.CROOTDAG: 1,
    Kind.CPHASE: 1, Kind.PERES: 1,
}
_N_TARGETS = {Kind.FREDKIN: 2, Kind.SWAP: 2, Kind.PERES: 2}


@dataclass(frozen=True)
class Gate:
    kind: Kind
    controls: tuple[int, ...] = ()
    targets: tuple[int, ...] = ()
    k: int | None = None

    def __post_init__(self):
        if set(self.controls) & set(self.targets):
            raise ValueError(f"controls and targets overlap: {self}")
        if len(set(self.controls)) != len(self.controls) or len(set(self.targets)) != len(self.targets):
            raise ValueError(f"repeated line in {self}")
        want_t = _N_TARGETS.get(self.kind, 1)
        if len(self.targets) != want_t:
            raise ValueError(f"{self.kind.value} needs {want_t} target(s): {self}")
        want_c = _N_CONTROLS.get(self.kind)
        if want_c is not None and len(self.controls) != want_c:
            raise ValueError(f"{self.kind.value} needs {want_c} control(s): {self}")
        if self.kind is Kind.TOFFOLI and len(self.controls) < 2:
            raise ValueError("toffoli needs >= 2 controls (use NOT/CNOT below that)")
        if self.kind is Kind.FREDKIN and len(self.controls) < 1:
            raise ValueError("fredkin needs >= 1 control (use SWAP below that)")
        if (self.k is None) == (self.kind in PARAMETERIZED):
            raise ValueError(f"parameter k mismatch for {self.kind.value}")
        if self.k is not None and self.k < 1:
            raise ValueError("k must be >= 1")

    @property
    def lines(self) -> tuple[int, ...]:
        return self.controls + self.targets

    @property
    def n_controls(self) -> int:
        return len(self.controls)

    def relabeled(self, perm: dict[int, int]) -> "Gate":
        """Remap line indices; lines absent from perm stay put."""
        return replace(
            self,
            controls=tuple(perm.get(c, c) for c in self.controls),
            targets=tuple(perm.get(t, t) for t in self.targets),
        )


# Constructors for the common cases keep call sites terse.
def x(t: int) -> Gate: return Gate(Kind.NOT, (), (t,))
def cx(c: int, t: int) -> Gate: return Gate(Kind.CNOT, (c,), (t,))
def mct(controls, t: int) -> Gate:
    cs = tuple(controls)
    if len(cs) == 0:
        return x(t)
    if len(cs) == 1:
        return cx(cs[0], t)
    return Gate(Kind.TOFFOLI, cs, (t,))
def fredkin(controls, t1: int, t2: int) -> Gate:
    cs = tuple(controls)
    if not cs:
        return swap(t1, t2)
    return Gate(Kind.FREDKIN, cs, (t1, t2))
def swap(a: int, b: int) -> Gate: return Gate(Kind.SWAP, (), (a, b))
def peres(c: int, t1: int, t2: int) -> Gate: return Gate(Kind.PERES, (c,), (t1, t2))
def cv(c: int, t: int) -> Gate: return Gate(Kind.CV, (c,), (t,))
def cvdag(c: int, t: int) -> Gate: return Gate(Kind.CVDAG, (c,), (t,))
def h(t: int) -> Gate: return Gate(Kind.H, (), (t,))
def root(k: int, t: int) -> Gate: return Gate(Kind.ROOT, (), (t,), k=k)
def croot(k: int, c: int, t: int) -> Gate: return Gate(Kind.CROOT, (c,), (t,), k=k)
def crootdag(k: int, c: int, t: int) -> Gate: return Gate(Kind.CROOTDAG, (c,), (t,), k=k)
def phase(k: int, t: int) -> Gate: return Gate(Kind.PHASE, (), (t,), k=k)
def cphase(k: int, c: int, t: int) -> Gate: return Gate(Kind.CPHASE, (c,), (t,), k=k)


@dataclass(frozen=True)
class Circuit:
    n: int
    gates: tuple[Gate, ...] = ()
    labels: tuple[str, ...] = ()
    inputs: tuple[str, ...] = ()
    outputs: tuple[str, ...] = ()
    constants: str = ""
    garbage: str = ""

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("circuit needs at least one line")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"x{i + 1}" for i in range(self.n)))
        if len(self.labels) != self.n:
            raise ValueError("label count != n")
        for g in self.gates:
            if any(not (0 <= q < self.n) for q in g.lines):
                raise ValueError(f"gate {g} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.gates)

    def __iter__(self):
        return iter(self.gates)

    def with_gates(self, gates) -> "Circuit":
        return replace(self, gates=tuple(gates))

    def relabeled(self, perm: dict[int, int]) -> "Circuit":
        """Remap every gate's lines (labels/flags keep their positions)."""
        return self.with_gates(g.relabeled(perm) for g in self.gates)

    def reversed_dagger(self) -> "Circuit":
        return self.with_gates(inverse_gate(g) for g in reversed(self.gates))


_INVERSE_KIND = {Kind.CV: Kind.CVDAG, Kind.CVDAG: Kind.CV,
                 Kind.CROOT: Kind.CROOTDAG, Kind.CROOTDAG: Kind.CROOT}


def inverse_gate(g: Gate) -> Gate:
    """Inverse of a single gate (self-inverse for the reversible kinds)."""
    if g.kind in _INVERSE_KIND:
        return replace(g, kind=_INVERSE_KIND[g.kind])
    if g.kind is Kind.ROOT and g.k >= 2:
        raise ValueError("uncontrolled root has no dagger kind in this IR")
    if g.kind in (Kind.PHASE, Kind.CPHASE):
        raise ValueError("phase gates have no dagger kind in this IR")
    if g.kind is Kind.PERES:
        raise ValueError("peres is not self-inverse; decompose first")
    return g


@dataclass(frozen=True)
class CostModel:
    swap_cost: int = 3

    def __post_init__(self):
        if self.swap_cost not in (1, 3):
            raise ValueError("swap_cost must be 1 or 3")


@dataclass(frozen=True)
class CircuitStats:
    n: int
    gc: int
    qc: int
    nnc: int
    swap_count: int
    overhead: float = 1.0

    def as_record(self) -> str:
        """Flat machine-readable key=value lines in fixed order."""
        return "\n".join([
            f"n={self.n}", f"gc={self.gc}", f"qc={self.qc}", f"nnc={self.nnc}",
            f"swap_count={self.swap_count}", f"overhead={self.overhead:.2f}",
        ])
