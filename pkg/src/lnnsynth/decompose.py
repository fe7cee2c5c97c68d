"""Lowering of Toffoli/Fredkin/Peres gates to elementary gates.

Closed-form costs realized here (m = number of controls, n = circuit lines):
    t2                      -> 5 gates
    t_m, n >= 5, m <= ceil(n/2) -> 12m - 22   (NCV, m-2 borrowed lines)
    t_(n-2), n >= 7         -> 24n - 88       (two-gate split, 1 borrowed line)
    t_(n-1)                 -> 2^n - 3        (controlled-root ladder)
    f_m                     -> cost(t_(m+1)) + 2
    Peres                   -> 4

The cheapest applicable rule is always selected; configurations with no
applicable rule raise DecomposeError.

The 12m-22 network is built from two primitives verified by simulation:
    H(x, y -> z)  = V(x,z) V(y,z) X(x,y) Vdag(y,z)      flips z by x&y,
                    leaving x^y on the y line
    G(a; c -> z)  = V(a,z) X(c,a) Vdag(a,z)             half of a Toffoli
                    on (a, c -> z), leaving a^c on the a line
A relative flip W_k of z by c1&..&ck costs 6k-8 via W_k = [G, W_(k-1), G],
and t_m = [W_(m-1), G, W_(m-1)^dag, G] gives 12m-22; residual byproducts
cancel between the paired halves.
"""
from __future__ import annotations

import math

from .ir import (Circuit, Gate, Kind, CostModel, ELEMENTARY, croot, crootdag,
                 cv, cvdag, cx, mct)


class DecomposeError(ValueError):
    pass


def toffoli_cost(m: int, n: int) -> int | None:
    """Minimal applicable closed-form cost of t_m on n lines, None if no rule."""
    if m + 1 > n:
        return None
    if m <= 1:
        return 1
    if m == 2:
        return 5
    counts = []
    if n >= 5 and 3 <= m <= math.ceil(n / 2):
        counts.append(12 * m - 22)
    if m == n - 2 and n >= 7:
        counts.append(24 * n - 88)
    if m == n - 1:
        counts.append(2 ** n - 3)
    return min(counts) if counts else None


def gate_cost(g: Gate, n: int, model: CostModel) -> int:
    if g.kind is Kind.SWAP:
        return model.swap_cost
    if g.kind in ELEMENTARY or g.kind in (Kind.ROOT,):
        return 1
    if g.kind is Kind.PERES:
        return 4
    if g.kind is Kind.TOFFOLI:
        cost = toffoli_cost(g.n_controls, n)
    elif g.kind is Kind.FREDKIN:
        cost = toffoli_cost(g.n_controls + 1, n)
        cost = cost + 2 if cost is not None else None
    else:
        raise DecomposeError(f"unknown kind {g.kind}")
    if cost is None:
        raise DecomposeError(
            f"no decomposition rule covers {g.kind.value} with "
            f"{g.n_controls} controls on {n} lines")
    return cost


def _toffoli2(c1: int, c2: int, t: int) -> list[Gate]:
    """Standard 5-gate form; first-listed control keeps its single V."""
    return [cv(c1, t), cv(c2, t), cx(c1, c2), cvdag(c2, t), cx(c1, c2)]


def _h_block(x: int, y: int, z: int) -> list[Gate]:
    return [cv(x, z), cv(y, z), cx(x, y), cvdag(y, z)]


def _h_block_dag(x: int, y: int, z: int) -> list[Gate]:
    return [cv(y, z), cx(x, y), cvdag(y, z), cvdag(x, z)]


def _g_block(a: int, c: int, z: int) -> list[Gate]:
    # self-inverse: applying it twice restores both z and the a line
    return [cv(a, z), cx(c, a), cvdag(a, z)]


def _relative_flip(controls: tuple[int, ...], z: int, mediators: list[int],
                   dagger: bool = False) -> list[Gate]:
    """W_k: flip z by AND(controls) up to byproducts on controls/mediators."""
    if len(controls) == 2:
        x, y = controls
        return _h_block_dag(x, y, z) if dagger else _h_block(x, y, z)
    a, ck = mediators[0], controls[-1]
    inner = _relative_flip(controls[:-1], a, mediators[1:], dagger=dagger)
    wrap = _g_block(a, ck, z)
    return wrap + inner + wrap


def _toffoli_linear(controls: tuple[int, ...], t: int, free: list[int]) -> list[Gate]:
    """12m-22 construction, needs m-2 free lines."""
    m = len(controls)
    mediators = free[: m - 2]
    a = mediators[0]
    g = _g_block(a, controls[-1], t)
    w = _relative_flip(controls[:-1], a, mediators[1:])
    wdag = _relative_flip(controls[:-1], a, mediators[1:], dagger=True)
    return w + g + wdag + g


def _toffoli_split(controls: tuple[int, ...], t: int, free: list[int], n: int) -> list[Gate]:
    """24n-88 construction for t_(n-2): two overlapping halves through one free line."""
    f = free[0]
    m1 = math.ceil(n / 2)
    first = mct(controls[:m1], f)
    second = mct(controls[m1 - 1:] + (f,), t)
    out = []
    for g in (first, second, first, second):
        out.extend(decompose_gate(g, n))
    return out


def _toffoli_ladder(controls: tuple[int, ...], t: int) -> list[Gate]:
    """2^(m+1)-3 gray-code ladder of controlled roots, no free lines used."""
    m = len(controls)
    if m == 2:
        return _toffoli2(controls[0], controls[1], t)
    seq: list[Gate] = []
    prev = 0
    for i in range(1, 2 ** m):
        g = i ^ (i >> 1)
        top = g.bit_length() - 1
        if prev:
            delta = (g ^ prev).bit_length() - 1
            src = prev.bit_length() - 1 if top != prev.bit_length() - 1 else delta
            seq.append(cx(controls[src], controls[top]))
        rk = croot if bin(g).count("1") % 2 else crootdag
        seq.append(rk(m, controls[top], t))
        prev = g
    return seq


def decompose_gate(g: Gate, n: int) -> list[Gate]:
    """Elementary-gate realization of g on an n-line circuit."""
    if g.kind in ELEMENTARY or g.kind in (Kind.ROOT, Kind.SWAP):
        return [g]
    if g.kind is Kind.PERES:
        c, t1, t2 = g.controls[0], g.targets[0], g.targets[1]
        return [cv(c, t2), cv(t1, t2), cx(c, t1), cvdag(t1, t2)]
    if g.kind is Kind.FREDKIN:
        t1, t2 = g.targets
        inner = mct(g.controls + (t1,), t2)
        return [cx(t2, t1)] + decompose_gate(inner, n) + [cx(t2, t1)]
    if g.kind is not Kind.TOFFOLI:
        raise DecomposeError(f"cannot decompose {g}")

    m = g.n_controls
    cost = toffoli_cost(m, n)
    if cost is None:
        raise DecomposeError(
            f"no decomposition rule covers toffoli with {m} controls on {n} lines")
    if m == 2:
        return _toffoli2(g.controls[0], g.controls[1], g.targets[0])
    free = sorted(set(range(n)) - set(g.lines))
    t = g.targets[0]
    if cost == 12 * m - 22:
        return _toffoli_linear(g.controls, t, free)
    if cost == 24 * n - 88:
        return _toffoli_split(g.controls, t, free, n)
    return _toffoli_ladder(g.controls, t)


def decompose_circuit(c: Circuit) -> Circuit:
    out: list[Gate] = []
    for g in c.gates:
        out.extend(decompose_gate(g, c.n))
    return c.with_gates(out)
