"""Exact and floating-point circuit simulation for equivalence checking.

Two backends, selected automatically:
    - exact: Gaussian-rational entries (a + b*i)/2^k over integer numpy
      arrays; covers NOT/CNOT/Toffoli/Fredkin/Swap/Peres/CV/CVdag.
    - float: complex128; covers Hadamard, higher roots and phase gates.

Permutation-only circuits additionally simulate as plain index maps, which
keeps large-n bookkeeping tests cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .ir import Circuit, Gate, Kind

FLOAT_TOL = 1e-9
_OVERFLOW_LIMIT = 1 << 45

_PERMUTATION_KINDS = frozenset({Kind.NOT, Kind.CNOT, Kind.TOFFOLI, Kind.FREDKIN,
                                Kind.SWAP, Kind.PERES})
_EXACT_KINDS = _PERMUTATION_KINDS | {Kind.CV, Kind.CVDAG}


def _exactable(g: Gate) -> bool:
    if g.kind in _EXACT_KINDS:
        return True
    if g.kind in (Kind.ROOT, Kind.CROOT, Kind.CROOTDAG):
        return g.k <= 2
    return False


@dataclass
class ExactUnitary:
    """Matrix with entries (re + i*im) / 2^k, kept with k minimal."""
    re: np.ndarray
    im: np.ndarray
    k: int

    @classmethod
    def identity(cls, dim: int) -> "ExactUnitary":
        return cls(np.eye(dim, dtype=np.int64), np.zeros((dim, dim), dtype=np.int64), 0)

    def _canonical(self) -> "ExactUnitary":
        re, im, k = self.re, self.im, self.k
        while k > 0 and not (np.any(re & 1) or np.any(im & 1)):
            re, im, k = re >> 1, im >> 1, k - 1
        return ExactUnitary(re, im, k)

    def __matmul__(self, other: "ExactUnitary") -> "ExactUnitary":
        a, b = self, other
        if max(int(np.abs(a.re).max(initial=0)), int(np.abs(a.im).max(initial=0)),
               int(np.abs(b.re).max(initial=0)), int(np.abs(b.im).max(initial=0))) > _OVERFLOW_LIMIT:
            a = ExactUnitary(a.re.astype(object), a.im.astype(object), a.k)
        re = a.re @ b.re - a.im @ b.im
        im = a.re @ b.im + a.im @ b.re
        return ExactUnitary(re, im, a.k + b.k)._canonical()

    def dagger(self) -> "ExactUnitary":
        return ExactUnitary(self.re.T.copy(), -self.im.T.copy(), self.k)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactUnitary):
            return NotImplemented
        a, b = self._canonical(), other._canonical()
        return a.k == b.k and np.array_equal(a.re, b.re) and np.array_equal(a.im, b.im)

    def is_identity(self) -> bool:
        c = self._canonical()
        return c.k == 0 and np.array_equal(c.re, np.eye(c.re.shape[0], dtype=c.re.dtype)) \
            and not np.any(c.im)

    def to_complex(self) -> np.ndarray:
        return (self.re.astype(np.complex128) + 1j * self.im.astype(np.complex128)) / (2 ** self.k)

    def permutation(self) -> list[int] | None:
        """The column permutation if this is a 0/1 permutation matrix, else None."""
        c = self._canonical()
        if c.k != 0 or np.any(c.im):
            return None
        perm = []
        for col in range(c.re.shape[1]):
            rows = np.nonzero(c.re[:, col])[0]
            if len(rows) != 1 or c.re[rows[0], col] != 1:
                return None
            perm.append(int(rows[0]))
        return perm


def _bit(n: int, line: int) -> int:
    """Bit significance of a line: line 0 is the most significant bit."""
    return n - 1 - line


def _controls_mask(g: Gate, n: int) -> int:
    mask = 0
    for c in g.controls:
        mask |= 1 << _bit(n, c)
    return mask


def apply_gate_permutation(g: Gate, n: int, state: int) -> int:
    """Basis-state image under a permutation gate."""
    mask = _controls_mask(g, n)
    if g.kind in (Kind.NOT, Kind.CNOT, Kind.TOFFOLI):
        if state & mask == mask:
            state ^= 1 << _bit(n, g.targets[0])
        return state
    if g.kind in (Kind.SWAP, Kind.FREDKIN):
        if state & mask == mask:
            b1, b2 = _bit(n, g.targets[0]), _bit(n, g.targets[1])
            v1, v2 = (state >> b1) & 1, (state >> b2) & 1
            if v1 != v2:
                state ^= (1 << b1) | (1 << b2)
        return state
    if g.kind is Kind.PERES:
        c, t1, t2 = g.controls[0], g.targets[0], g.targets[1]
        bc, b1, b2 = _bit(n, c), _bit(n, t1), _bit(n, t2)
        if (state >> bc) & 1 and (state >> b1) & 1:
            state ^= 1 << b2
        if (state >> bc) & 1:
            state ^= 1 << b1
        return state
    raise ValueError(f"{g.kind} is not a permutation gate")


def circuit_permutation(c: Circuit) -> list[int] | None:
    """Index permutation for permutation-only circuits, else None."""
    if not all(g.kind in _PERMUTATION_KINDS for g in c.gates):
        return None
    perm = list(range(2 ** c.n))
    for g in c.gates:
        perm = [apply_gate_permutation(g, c.n, s) for s in perm]
    return perm


def _single_qubit_exact(g: Gate) -> tuple[np.ndarray, np.ndarray, int]:
    """(re, im, k) 2x2 for the exact subset."""
    if g.kind is Kind.NOT or (g.kind in (Kind.ROOT, Kind.CROOT) and g.k == 1) or g.kind is Kind.CNOT \
            or g.kind is Kind.TOFFOLI:
        return np.array([[0, 1], [1, 0]]), np.zeros((2, 2), dtype=np.int64), 0
    if g.kind is Kind.CV or (g.kind in (Kind.ROOT, Kind.CROOT) and g.k == 2):
        return np.array([[1, 1], [1, 1]]), np.array([[1, -1], [-1, 1]]), 1
    if g.kind is Kind.CVDAG or (g.kind is Kind.CROOTDAG and g.k == 2):
        return np.array([[1, 1], [1, 1]]), np.array([[-1, 1], [1, -1]]), 1
    raise ValueError(f"{g} has no exact single-qubit block")


def _single_qubit_float(g: Gate) -> np.ndarray:
    if g.kind is Kind.H:
        return np.array([[1, 1], [1, -1]], dtype=np.complex128) / math.sqrt(2)
    if g.kind in (Kind.PHASE, Kind.CPHASE):
        return np.diag([1.0, np.exp(2j * math.pi / 2 ** g.k)]).astype(np.complex128)
    if g.kind in (Kind.ROOT, Kind.CROOT, Kind.CROOTDAG):
        sign = -1 if g.kind is Kind.CROOTDAG else 1
        theta = sign * math.pi / 2 ** (g.k - 1)
        ph = np.exp(1j * theta / 2)
        return ph * np.array([[math.cos(theta / 2), -1j * math.sin(theta / 2)],
                              [-1j * math.sin(theta / 2), math.cos(theta / 2)]])
    re, im, k = _single_qubit_exact(g)
    return (re + 1j * im) / 2 ** k


def gate_unitary_exact(g: Gate, n: int) -> ExactUnitary:
    dim = 2 ** n
    if g.kind in _PERMUTATION_KINDS:
        re = np.zeros((dim, dim), dtype=np.int64)
        for col in range(dim):
            re[apply_gate_permutation(g, n, col), col] = 1
        return ExactUnitary(re, np.zeros((dim, dim), dtype=np.int64), 0)
    bre, bim, k = _single_qubit_exact(g)
    re = (np.eye(dim, dtype=np.int64) << k) if k else np.eye(dim, dtype=np.int64)
    im = np.zeros((dim, dim), dtype=np.int64)
    mask, tbit = _controls_mask(g, n), _bit(n, g.targets[0])
    for col in range(dim):
        if col & mask != mask:
            continue
        b = (col >> tbit) & 1
        other = col ^ (1 << tbit)
        re[col, col], im[col, col] = bre[b, b], bim[b, b]
        re[other, col], im[other, col] = bre[1 - b, b], bim[1 - b, b]
    return ExactUnitary(re, im, k)._canonical()


def gate_unitary_float(g: Gate, n: int) -> np.ndarray:
    dim = 2 ** n
    if g.kind in _PERMUTATION_KINDS:
        u = np.zeros((dim, dim), dtype=np.complex128)
        for col in range(dim):
            u[apply_gate_permutation(g, n, col), col] = 1.0
        return u
    block = _single_qubit_float(g)
    u = np.eye(dim, dtype=np.complex128)
    mask, tbit = _controls_mask(g, n), _bit(n, g.targets[0])
    for col in range(dim):
        if col & mask != mask:
            continue
        b = (col >> tbit) & 1
        other = col ^ (1 << tbit)
        u[col, col] = block[b, b]
        u[other, col] = block[1 - b, b]
    return u


def circuit_unitary(c: Circuit, mode: str = "auto") -> ExactUnitary | np.ndarray:
    """Product of gate unitaries in temporal order (leftmost gate applied first)."""
    exact = all(_exactable(g) for g in c.gates) if mode == "auto" else mode == "exact"
    if exact:
        if c.n > 8:
            raise ValueError("exact simulation limited to n <= 8")
        u = ExactUnitary.identity(2 ** c.n)
        for g in c.gates:
            u = gate_unitary_exact(g, c.n) @ u
        return u
    if c.n > 10:
        raise ValueError("float simulation limited to n <= 10")
    u = np.eye(2 ** c.n, dtype=np.complex128)
    for g in c.gates:
        u = gate_unitary_float(g, c.n) @ u
    return u


def equivalent(c1: Circuit, c2: Circuit, up_to_global_phase: bool = False) -> bool:
    """True iff the circuits realize the same unitary (width must match)."""
    if c1.n != c2.n:
        raise ValueError(f"width mismatch: {c1.n} != {c2.n}")
    p1, p2 = circuit_permutation(c1), circuit_permutation(c2)
    if p1 is not None and p2 is not None:
        return p1 == p2
    exact = all(_exactable(g) for g in c1.gates) and all(_exactable(g) for g in c2.gates)
    if exact and c1.n <= 8:
        if not up_to_global_phase:
            return circuit_unitary(c1, "exact") == circuit_unitary(c2, "exact")
        u1 = circuit_unitary(c1, "exact").to_complex()
        u2 = circuit_unitary(c2, "exact").to_complex()
    else:
        u1, u2 = circuit_unitary(c1, "float"), circuit_unitary(c2, "float")
        if isinstance(u1, ExactUnitary):
            u1 = u1.to_complex()
        if isinstance(u2, ExactUnitary):
            u2 = u2.to_complex()
    if up_to_global_phase:
        idx = np.unravel_index(np.abs(u1).argmax(), u1.shape)
        if abs(u2[idx]) < FLOAT_TOL:
            return False
        u2 = u2 * (u1[idx] / u2[idx])
    return bool(np.max(np.abs(u1 - u2)) < FLOAT_TOL)


def as_reversible_function(c: Circuit) -> list[int] | None:
    """The permutation computed by c, or None if outputs are not basis states."""
    fast = circuit_permutation(c)
    if fast is not None:
        return fast
    u = circuit_unitary(c, "exact" if all(_exactable(g) for g in c.gates) else "float")
    if isinstance(u, ExactUnitary):
        return u.permutation()
    perm = []
    for col in range(u.shape[1]):
        rows = np.nonzero(np.abs(u[:, col]) > FLOAT_TOL)[0]
        if len(rows) != 1 or abs(u[rows[0], col] - 1) > FLOAT_TOL:
            return None
        perm.append(int(rows[0]))
    return perm


def is_unitary(c: Circuit) -> bool:
    u = circuit_unitary(c)
    if isinstance(u, ExactUnitary):
        return (u @ u.dagger()).is_identity()
    return bool(np.max(np.abs(u @ u.conj().T - np.eye(u.shape[0]))) < FLOAT_TOL)
