"""Fourier-Motzkin elimination over exact rationals.

An inequality is a pair (coeffs, rhs) meaning coeffs . x >= rhs, with all
entries Fractions.  Used for feasibility of positive functionals, exact
coordinate bounds of polyhedra, and recession-cone pointedness checks.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DimensionTooLarge

Ineq = tuple[tuple[Fraction, ...], Fraction]

# hard safety net on intermediate system size; desk-scale inputs stay tiny
MAX_INEQS = 200_000


class Infeasible(Exception):
    pass


def _norm(coeffs, rhs) -> Ineq:
    lead = next((c for c in coeffs if c != 0), None)
    if lead is None:
        return (tuple(coeffs), rhs)
    s = abs(lead)
    return (tuple(c / s for c in coeffs), rhs / s)


def make_system(rows, rhss) -> list[Ineq]:
    return [_norm([Fraction(c) for c in row], Fraction(r))
            for row, r in zip(rows, rhss, strict=True)]


def _eliminate(ineqs: list[Ineq], k: int) -> list[Ineq]:
    pos, neg, zero = [], [], []
    for coeffs, rhs in ineqs:
        c = coeffs[k]
        if c > 0:
            pos.append((coeffs, rhs))
        elif c < 0:
            neg.append((coeffs, rhs))
        else:
            zero.append((coeffs, rhs))
    out = set(zero)
    for pc, pr in pos:
        a = pc[k]
        for nc, nr in neg:
            b = -nc[k]
            coeffs = tuple(b * x + a * y for x, y in zip(pc, nc))
            out.add(_norm(coeffs, b * pr + a * nr))
    if len(out) > MAX_INEQS:
        raise DimensionTooLarge("Fourier-Motzkin blow-up beyond safety cap")
    return list(out)


def feasible_point(ineqs: list[Ineq], d: int) -> tuple[Fraction, ...] | None:
    """A rational point satisfying every inequality, or None."""
    systems = [None] * d
    cur = list(ineqs)
    for k in range(d - 1, -1, -1):
        systems[k] = cur
        cur = _eliminate(cur, k)
    for coeffs, rhs in cur:
        if rhs > 0:
            return None
    x: list[Fraction] = [Fraction(0)] * d
    for k in range(d):
        lo = hi = None
        for coeffs, rhs in systems[k]:
            c = coeffs[k]
            if c == 0:
                continue
            bound = (rhs - sum(coeffs[i] * x[i] for i in range(k))) / c
            if c > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        if lo is not None and hi is not None:
            if lo > hi:  # cannot happen for a consistent projection
                return None
            x[k] = lo
        elif lo is not None:
            x[k] = lo
        elif hi is not None:
            x[k] = min(hi, Fraction(0))
        else:
            x[k] = Fraction(0)
    return tuple(x)


def functional_bounds(ineqs: list[Ineq], d: int, phi) -> tuple:
    """Exact (min, max) of phi . x over the polyhedron.

    Returns (lo, hi) with None marking an unbounded side; raises Infeasible
    on an empty polyhedron.
    """
    phi = [Fraction(c) for c in phi]
    ext: list[Ineq] = [(tuple(coeffs) + (Fraction(0),), rhs)
                       for coeffs, rhs in ineqs]
    ext.append(_norm(phi + [Fraction(-1)], Fraction(0)))   # phi.x - t >= 0
    ext.append(_norm([-c for c in phi] + [Fraction(1)], Fraction(0)))
    cur = ext
    for k in range(d):
        cur = _eliminate(cur, k)
    lo = hi = None
    for coeffs, rhs in cur:
        c = coeffs[d]
        if c == 0:
            if rhs > 0:
                raise Infeasible
            continue
        bound = rhs / c
        if c > 0:
            lo = bound if lo is None else max(lo, bound)
        else:
            hi = bound if hi is None else min(hi, bound)
    if lo is not None and hi is not None and lo > hi:
        raise Infeasible
    return lo, hi
