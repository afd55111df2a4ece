"""Exact arithmetic for short rational generating functions in d variables.

A term is alpha * t^p / prod_j (1 - t^{a_j}); a RationalGF is a finite sum
of terms.  Series semantics: after normalizing every denominator vector to
satisfy ell.a > 0, each term denotes the product of geometric series.  No
canonical form is maintained; equality is decided by sublevel expansion or
weight specialization.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import fm, oracle
from .errors import (DegenerateDenominator, DegenerateWeight,
                     DimensionMismatch, RegionTooLarge)
from .linalg import Vec, ceil_log2, dot, vadd, vneg, vsub


@dataclass(frozen=True)
class GFTerm:
    alpha: Fraction
    p: Vec
    denoms: tuple[Vec, ...]

    def __post_init__(self):
        if any(all(x == 0 for x in a) for a in self.denoms):
            raise DegenerateDenominator("zero denominator vector")


@dataclass(frozen=True)
class RationalGF:
    dim: int
    terms: tuple[GFTerm, ...]

    def __post_init__(self):
        for t in self.terms:
            if len(t.p) != self.dim or any(len(a) != self.dim
                                           for a in t.denoms):
                raise DimensionMismatch("term dimension mismatch")


def monomial(dim: int, p: Vec, alpha=1) -> RationalGF:
    return RationalGF(dim, (GFTerm(Fraction(alpha), tuple(p), ()),))


def zero_gf(dim: int) -> RationalGF:
    return RationalGF(dim, ())


def from_finite_set(dim: int, points) -> RationalGF:
    return RationalGF(dim, tuple(GFTerm(Fraction(1), tuple(p), ())
                                 for p in sorted(points)))


def normalize_term(term: GFTerm, ell: Vec) -> list[GFTerm]:
    """Flip denominators until every a_j satisfies ell.a_j > 0, via
    1/(1-t^a) = -t^{-a}/(1-t^{-a})."""
    alpha = term.alpha
    p = term.p
    denoms = []
    for a in term.denoms:
        la = dot(ell, a)
        if la == 0:
            raise DegenerateDenominator(
                f"denominator {a} is degenerate for ell={ell}")
        if la > 0:
            denoms.append(a)
        else:
            alpha = -alpha
            p = vadd(p, vneg(a))
            denoms.append(vneg(a))
    return [GFTerm(alpha, p, tuple(denoms))]


def normalize_gf(f: RationalGF, ell: Vec) -> RationalGF:
    out = []
    for t in f.terms:
        out.extend(normalize_term(t, ell))
    return RationalGF(f.dim, tuple(out))


def _count_representations(target: Vec, denoms: tuple[Vec, ...], ell: Vec,
                           memo: dict) -> int:
    """#{(n_1..n_k) in N^k : sum n_j a_j = target}; all ell.a_j > 0."""
    key = (target, len(denoms))
    hit = memo.get(key)
    if hit is not None:
        return hit
    if not denoms:
        res = 1 if all(x == 0 for x in target) else 0
    else:
        a = denoms[0]
        la = dot(ell, a)
        res = 0
        rem = target
        while dot(ell, rem) >= 0:
            res += _count_representations(rem, denoms[1:], ell, memo)
            rem = vsub(rem, a)
        # note: loop bound is exact since ell.a > 0 and the budget ell.rem
        # decreases by la each step
    memo[key] = res
    return res


def coefficient_at(f: RationalGF, v: Vec, ell: Vec) -> Fraction:
    """Exact series coefficient of t^v in the ell-normalized expansion."""
    total = Fraction(0)
    for term in f.terms:
        for t in normalize_term(term, ell):
            target = vsub(tuple(v), t.p)
            if dot(ell, target) < 0:
                continue
            denoms = tuple(sorted(t.denoms, key=lambda a: -dot(ell, a)))
            count = _count_representations(target, denoms, ell, {})
            total += t.alpha * count
    return total


def default_ell(f: RationalGF) -> Vec:
    """A functional strictly positive on every denominator vector.

    Exists only when all denominators already lie in a common open
    halfspace; callers with mixed denominators must supply ell explicitly.
    """
    vecs = sorted({a for t in f.terms for a in t.denoms})
    if not vecs:
        return tuple(1 for _ in range(f.dim))
    system = fm.make_system([list(a) for a in vecs], [1] * len(vecs))
    pt = fm.feasible_point(system, f.dim)
    if pt is None:
        raise DegenerateDenominator(
            "denominators span no common halfspace; supply ell explicitly")
    from math import gcd
    lcm = 1
    for c in pt:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return tuple(int(c * lcm) for c in pt)


def hadamard_monomial(f: RationalGF, p: Vec, ell: Vec | None = None
                      ) -> RationalGF:
    """f star t^p: the monomial coefficient_at(f, p) * t^p (or the zero GF)."""
    if ell is None:
        ell = default_ell(f)
    c = coefficient_at(f, p, ell)
    if c == 0:
        return zero_gf(f.dim)
    return monomial(f.dim, p, c)


def add(f: RationalGF, g: RationalGF) -> RationalGF:
    if f.dim != g.dim:
        raise DimensionMismatch("add: dimension mismatch")
    return RationalGF(f.dim, f.terms + g.terms)


def scale(f: RationalGF, c) -> RationalGF:
    c = Fraction(c)
    if c == 0:
        return zero_gf(f.dim)
    return RationalGF(f.dim, tuple(GFTerm(c * t.alpha, t.p, t.denoms)
                                   for t in f.terms))


def subtract(f: RationalGF, g: RationalGF) -> RationalGF:
    return add(f, scale(g, -1))


def shift(f: RationalGF, b: Vec) -> RationalGF:
    if len(b) != f.dim:
        raise DimensionMismatch("shift: dimension mismatch")
    return RationalGF(f.dim, tuple(GFTerm(t.alpha, vadd(t.p, tuple(b)),
                                          t.denoms) for t in f.terms))


def expand_in_sublevel(f: RationalGF, ell: Vec, level: int
                       ) -> dict[Vec, Fraction]:
    """Exact coefficient map on {v : ell.v <= level}; zeros are dropped."""
    cap = oracle.point_cap()
    coeffs: dict[Vec, Fraction] = {}
    visits = 0

    def walk(base: Vec, denoms: tuple[Vec, ...], alpha: Fraction) -> None:
        nonlocal visits
        visits += 1
        if visits > cap:
            raise RegionTooLarge("sublevel expansion exceeds the point cap")
        if not denoms:
            coeffs[base] = coeffs.get(base, Fraction(0)) + alpha
            return
        a = denoms[0]
        cur = base
        while dot(ell, cur) <= level:
            walk(cur, denoms[1:], alpha)
            cur = vadd(cur, a)

    for term in f.terms:
        for t in normalize_term(term, ell):
            if dot(ell, t.p) > level:
                continue
            denoms = tuple(sorted(t.denoms, key=lambda a: -dot(ell, a)))
            walk(t.p, denoms, t.alpha)
    return {v: c for v, c in coeffs.items() if c != 0}


def equals_on_sublevel(f: RationalGF, g: RationalGF, ell: Vec, level: int):
    """(True, None) or (False, first differing exponent in ell-then-lex
    order)."""
    mf = expand_in_sublevel(f, ell, level)
    mg = expand_in_sublevel(g, ell, level)
    diff = [v for v in set(mf) | set(mg) if mf.get(v, 0) != mg.get(v, 0)]
    if not diff:
        return True, None
    return False, min(diff, key=lambda v: (dot(ell, v), v))


def weight_specialize(f: RationalGF, w: Vec) -> RationalGF:
    """Substitute t_i <- z^{w_i}; exponent vectors map to dot products."""
    if len(w) != f.dim:
        raise DimensionMismatch("weight vector dimension mismatch")
    terms = []
    for t in f.terms:
        denoms = []
        for a in t.denoms:
            wa = dot(w, a)
            if wa == 0:
                raise DegenerateWeight(f"weight {w} kills denominator {a}")
            denoms.append((wa,))
        terms.append(GFTerm(t.alpha, (dot(w, t.p),), tuple(denoms)))
    return RationalGF(1, tuple(terms))


def gf_complexity(f: RationalGF) -> int:
    """|I|(1 + d + k d) plus exact ceil-log2 bit terms per the short-GF
    complexity formula; mixed-k inputs are summed per term."""
    total = 0
    d = f.dim
    for t in f.terms:
        k = len(t.denoms)
        total += 1 + d + k * d
        total += ceil_log2(t.alpha.numerator) + ceil_log2(t.alpha.denominator)
        total += sum(ceil_log2(x) for x in t.p)
        total += sum(ceil_log2(x) for a in t.denoms for x in a)
    return total


def is_mixed_k(f: RationalGF) -> bool:
    ks = {len(t.denoms) for t in f.terms}
    return len(ks) > 1
