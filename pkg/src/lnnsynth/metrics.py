"""Nearest-neighbor cost and quantum cost of gates and circuits."""
from __future__ import annotations

from itertools import combinations

from .ir import Circuit, CircuitStats, CostModel, Gate, Kind
from .decompose import gate_cost


def gate_nnc(g: Gate) -> int:
    """Distance penalty: |c-t|-1 summed over control/target (and target pair).

    Zero exactly when the gate acts on one line or on adjacent lines only.
    """
    total = sum(abs(c - t) - 1 for c in g.controls for t in g.targets)
    total += sum(abs(a - b) - 1 for a, b in combinations(g.targets, 2))
    return total


def circuit_nnc(c: Circuit) -> int:
    return sum(gate_nnc(g) for g in c.gates)


def quantum_cost(c: Circuit, model: CostModel = CostModel()) -> int:
    return sum(gate_cost(g, c.n, model) for g in c.gates)


def swap_count(c: Circuit) -> int:
    return sum(1 for g in c.gates if g.kind is Kind.SWAP)


def stats(c: Circuit, model: CostModel = CostModel(),
          original_qc: int | None = None) -> CircuitStats:
    qc = quantum_cost(c, model)
    base = original_qc if original_qc is not None else qc
    return CircuitStats(n=c.n, gc=len(c.gates), qc=qc, nnc=circuit_nnc(c),
                        swap_count=swap_count(c),
                        overhead=qc / base if base else 1.0)
