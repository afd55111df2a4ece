"""Affine stratifications and desk-scale stratified-set algebra.

A stratum is a finite translate set F over an affine semigroup A with
linearly independent generators; a stratification is a disjoint list of
strata.  Set algebra (intersection of translates, carving a translate out
of a region, complements) produces new strata via exact lattice-coset
arithmetic plus bounded enumeration, and every construction is re-verified
pointwise on a sublevel before it is returned.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from . import fm, genfun, oracle
from .errors import (DimensionMismatch, DimensionTooLarge,
                     ContainmentViolated, OverlappingStrata,
                     OverlappingTranslates, RegionTooLarge,
                     UnsupportedGeometry, UnsupportedSemigroup)
from .linalg import (Vec, bits_unsigned, dot, is_zero, lattice_basis,
                     lattice_contains, lattice_intersection, left_nullspace,
                     nullspace, primitive, rank, rref, solve_diophantine,
                     solve_rational, unit, vadd, vneg, vsub)

INTERSECT_DIM_CAP = 4
CARVE_DIM_CAP = 3


# ---------------------------------------------------------------------------
# semigroups, strata, stratifications

@dataclass(frozen=True)
class AffineSemigroup:
    gens: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.gens[0]) if self.gens else 0

    def check(self, dim: int | None = None) -> None:
        if not self.gens:
            return
        d = self.dim
        if dim is not None and d != dim:
            raise DimensionMismatch("semigroup generator dimension mismatch")
        if any(len(g) != d for g in self.gens):
            raise DimensionMismatch("mixed generator dimensions")
        if any(is_zero(g) for g in self.gens):
            raise UnsupportedSemigroup("zero generator")
        if rank(list(self.gens)) != len(self.gens):
            raise UnsupportedSemigroup(
                "generators are linearly dependent; only simplicial "
                "semigroups are supported")

    def coords(self, v: Vec) -> tuple[Fraction, ...] | None:
        """Rational coordinates of v in the generator basis, or None when v
        is outside the span."""
        return solve_rational(list(self.gens), tuple(v))

    def contains(self, v: Vec) -> bool:
        x = self.coords(v)
        return x is not None and all(c.denominator == 1 and c >= 0
                                     for c in x)


Translate = tuple[Vec, AffineSemigroup]


def translate_contains(t: Translate, v: Vec) -> bool:
    b, a = t
    return a.contains(vsub(tuple(v), b))


def translates_disjoint(b1: Vec, b2: Vec, a: AffineSemigroup) -> bool:
    """b1 + A and b2 + A are disjoint iff b1 - b2 is not in ZA."""
    if b1 == b2:
        return False
    x = a.coords(vsub(b1, b2))
    return x is None or any(c.denominator != 1 for c in x)


@dataclass(frozen=True)
class Stratum:
    F: tuple[Vec, ...]
    A: AffineSemigroup

    def check(self, dim: int | None = None) -> None:
        self.A.check(dim)
        for b1, b2 in itertools.combinations(self.F, 2):
            if not translates_disjoint(b1, b2, self.A):
                raise OverlappingTranslates(
                    f"translates {b1}+A and {b2}+A overlap")

    def contains(self, v: Vec) -> bool:
        return any(self.A.contains(vsub(tuple(v), b)) for b in self.F)


@dataclass(frozen=True)
class AffineStratification:
    dim: int
    strata: tuple[Stratum, ...]

    def check(self) -> None:
        for s in self.strata:
            s.check(self.dim)

    def membership(self, v: Vec) -> int | None:
        hits = [i for i, s in enumerate(self.strata) if s.contains(v)]
        if len(hits) > 1:
            raise OverlappingStrata(f"{v} lies in strata {hits}")
        return hits[0] if hits else None

    def contains(self, v: Vec) -> bool:
        return self.membership(v) is not None

    def translates(self) -> list[Translate]:
        return [(b, s.A) for s in self.strata for b in s.F]


def semigroup_membership(a: AffineSemigroup, v: Vec) -> bool:
    return a.contains(v)


def stratum_membership(s: Stratum, v: Vec) -> bool:
    return s.contains(v)


def strat_membership(s: AffineStratification, v: Vec) -> int | None:
    return s.membership(v)


# ---------------------------------------------------------------------------
# complexity measures

def semigroup_complexity(a: AffineSemigroup) -> int:
    if not a.gens:
        return 0
    d = a.dim
    n = len(a.gens)
    return d * n + sum(bits_unsigned(x) for g in a.gens for x in g)


def strat_complexity(s: AffineStratification) -> int:
    total = 0
    for st in s.strata:
        d = s.dim
        total += d * (len(st.A.gens) + len(st.F))
        total += sum(bits_unsigned(x) for g in st.A.gens for x in g)
        total += sum(bits_unsigned(x) for b in st.F for x in b)
    return total


# ---------------------------------------------------------------------------
# compilation to a rational strategy

def compile_rational_strategy(s: AffineStratification) -> genfun.RationalGF:
    """f(P;t) = sum over strata, over b in F: t^b / prod(1 - t^{a_j})."""
    s.check()
    terms = []
    for st in s.strata:
        for b in st.F:
            terms.append(genfun.GFTerm(Fraction(1), tuple(b),
                                       tuple(st.A.gens)))
    return genfun.RationalGF(s.dim, tuple(terms))


# ---------------------------------------------------------------------------
# positive functionals over generator families

def positive_functional(vectors, d: int) -> Vec:
    vecs = [tuple(v) for v in vectors]
    if not vecs:
        return tuple(1 for _ in range(d))
    system = fm.make_system([list(v) for v in vecs], [1] * len(vecs))
    pt = fm.feasible_point(system, d)
    if pt is None:
        raise UnsupportedGeometry("no positive functional on the generators")
    lcm = 1
    for c in pt:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    return tuple(int(c * lcm) for c in pt)


# ---------------------------------------------------------------------------
# polyhedral regions over lattice cosets

@dataclass(frozen=True)
class Region:
    """{x : n.x >= c, e.x = c'} intersected with shift + Z{basis}."""

    dim: int
    ineqs: tuple[tuple[Vec, int], ...]
    eqs: tuple[tuple[Vec, int], ...]
    basis: tuple[Vec, ...]
    shift: Vec

    def contains(self, v: Vec) -> bool:
        v = tuple(v)
        return (all(dot(n, v) >= c for n, c in self.ineqs)
                and all(dot(n, v) == c for n, c in self.eqs)
                and lattice_contains(list(self.basis), vsub(v, self.shift)))

    def with_ineq(self, n: Vec, c: int) -> "Region":
        return Region(self.dim, self.ineqs + ((n, c),), self.eqs,
                      self.basis, self.shift)


def _coordinate_functionals(gens: list[Vec], d: int) -> list[Vec]:
    """Integer rows r_j with r_j . (sum x_i g_i) = s_j * x_j on span(gens)
    for positive integers s_j (Gram pseudo-inverse, denominators cleared)."""
    n = len(gens)
    gram = [[Fraction(dot(gens[i], gens[j])) for j in range(n)]
            for i in range(n)]
    aug = [row + [Fraction(1) if k == i else Fraction(0) for k in range(n)]
           for i, row in enumerate(gram)]
    red, pivots = rref(aug)
    inv = [[red[i][n + j] for j in range(n)] for i in range(n)]
    rows = []
    for j in range(n):
        row = [sum(inv[j][i] * gens[i][k] for i in range(n)) for k in range(d)]
        lcm = 1
        for x in row:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        rows.append(tuple(int(x * lcm) for x in row))
    return rows


def translate_region(t: Translate, d: int) -> Region:
    """The translate b + A as a region: coordinate inequalities, span
    equalities, and the lattice coset b + ZA."""
    b, a = t
    if not a.gens:
        eye = [unit(d, i) for i in range(d)]
        eqs = tuple((n, dot(n, b)) for n in eye)
        return Region(d, (), eqs, (), tuple(b))
    gens = list(a.gens)
    ineqs = tuple((r, dot(r, b)) for r in _coordinate_functionals(gens, d))
    eqs = tuple((n, dot(n, b)) for n in left_nullspace(gens, d))
    return Region(d, ineqs, eqs, tuple(gens), tuple(b))


def rays_of_cone(eq_normals: list[Vec], ineq_normals: list[Vec], d: int):
    """Extreme rays of {x : e.x = 0, n.x >= 0}; returns (rays, pointed)."""
    nb = nullspace(eq_normals, d) if eq_normals else \
        [unit(d, i) for i in range(d)]
    k = len(nb)
    if k == 0:
        return [], True
    g_rows = [tuple(dot(n, nb[j]) for j in range(k)) for n in ineq_normals]
    if nullspace(g_rows, k):
        return [], False  # the cone contains a line
    rays_y = set()
    if k == 1:
        sides = [r[0] for r in g_rows]
        if all(s >= 0 for s in sides):
            rays_y.add((1,))
        elif all(s <= 0 for s in sides):
            rays_y.add((-1,))
    else:
        for subset in itertools.combinations(range(len(g_rows)), k - 1):
            sub = [g_rows[i] for i in subset]
            kern = nullspace(sub, k)
            if len(kern) != 1:
                continue
            v = primitive(kern[0])
            sides = [dot(r, v) for r in g_rows]
            if all(s >= 0 for s in sides):
                rays_y.add(v)
            elif all(s <= 0 for s in sides):
                rays_y.add(vneg(v))
    rays = []
    for y in sorted(rays_y):
        x = tuple(sum(y[j] * nb[j][i] for j in range(k)) for i in range(d))
        rays.append(primitive(x))
    return sorted(set(rays)), True


def _fm_system(region: Region, extra=()):
    rows, rhss = [], []
    for n, c in list(region.ineqs) + list(extra):
        rows.append(list(n))
        rhss.append(c)
    for n, c in region.eqs:
        rows.append(list(n))
        rhss.append(c)
        rows.append([-x for x in n])
        rhss.append(-c)
    if region.basis:
        for n in left_nullspace(list(region.basis), region.dim):
            c = dot(n, region.shift)
            rows.append(list(n))
            rhss.append(c)
            rows.append([-x for x in n])
            rhss.append(-c)
    return fm.make_system(rows, rhss)


def _enumerate_region(region: Region, extra=()):
    """All lattice points of the region (plus extra inequalities); raises
    UnsupportedGeometry if a coordinate is unbounded."""
    d = region.dim
    system = _fm_system(region, extra)
    ranges = []
    for i in range(d):
        phi = [0] * d
        phi[i] = 1
        try:
            lo, hi = fm.functional_bounds(system, d, phi)
        except fm.Infeasible:
            return []
        if lo is None or hi is None:
            raise UnsupportedGeometry("enumeration region is unbounded")
        ranges.append(range(math.ceil(lo), math.floor(hi) + 1))
    count = 1
    for r in ranges:
        count *= len(r)
    if count > oracle.point_cap():
        raise RegionTooLarge(f"enumeration box has {count} candidates")
    extra_ok = lambda v: all(dot(n, v) >= c for n, c in extra)
    return [p for p in itertools.product(*ranges)
            if extra_ok(p) and region.contains(p)]


def _min_lattice_multiple(ray: Vec, basis: list[Vec]) -> Vec:
    """Smallest positive multiple of the primitive ray lying in the
    lattice."""
    coords = solve_rational(basis, tuple(ray))
    if coords is None:
        raise UnsupportedGeometry("recession ray outside the lattice span")
    t = 1
    for c in coords:
        t = t * c.denominator // gcd(t, c.denominator)
    return tuple(t * x for x in ray)


def module_from_region(region: Region):
    """Decompose the lattice points of a region into disjoint translates of
    one simplicial recession semigroup.

    Returns (translates, checked_points): the module generators paired with
    the semigroup, plus the point set enumerated during closure checking.
    """
    d = region.dim
    if not region.basis:
        pt = tuple(region.shift)
        trivial = AffineSemigroup(())
        if region.contains(pt):
            return [(pt, trivial)], [pt]
        return [], []
    eq_normals = [n for n, _ in region.eqs] + \
        left_nullspace(list(region.basis), d)
    ineq_normals = [n for n, _ in region.ineqs]
    rays, pointed = rays_of_cone(eq_normals, ineq_normals, d)
    if not pointed:
        raise UnsupportedGeometry("recession cone contains a line")
    if not rays:
        pts = _enumerate_region(region)
        trivial = AffineSemigroup(())
        return [(p, trivial) for p in sorted(pts)], sorted(pts)
    if rank(rays) != len(rays):
        raise UnsupportedGeometry("recession cone is not simplicial")
    gens = [_min_lattice_multiple(r, list(region.basis)) for r in rays]
    semigroup = AffineSemigroup(tuple(gens))
    ell = positive_functional(gens, d)
    system = _fm_system(region)
    try:
        lo, _ = fm.functional_bounds(system, d, ell)
    except fm.Infeasible:
        return [], []
    if lo is None:
        raise UnsupportedGeometry("functional unbounded below on the region")
    step = sum(dot(ell, g) for g in gens)
    bound = math.ceil(lo) + 2 * step + 8
    for _ in range(8):
        neg_ell = tuple(-x for x in ell)
        pts = _enumerate_region(region, extra=((neg_ell, -bound),))
        pts.sort(key=lambda p: (dot(ell, p), p))
        gens_f: list[Vec] = []
        for p in pts:
            if not any(semigroup.contains(vsub(p, f)) for f in gens_f):
                gens_f.append(p)
        if not gens_f:
            return [], []
        target = 2 * max(dot(ell, f) for f in gens_f) + step
        if target <= bound:
            break
        bound = target
    else:
        raise UnsupportedGeometry("module generators did not stabilize")
    for f1, f2 in itertools.combinations(gens_f, 2):
        x = semigroup.coords(vsub(f1, f2))
        if x is not None and all(c.denominator == 1 for c in x):
            raise UnsupportedGeometry(
                "module is not a disjoint union of semigroup translates")
    return [(f, semigroup) for f in gens_f], pts


# ---------------------------------------------------------------------------
# intersection of semigroup translates

def intersect_translates(t1: Translate, t2: Translate) -> list[Stratum]:
    """Exact decomposition of (b1 + A1) cap (b2 + A2) into disjoint strata,
    verified pointwise on the enumerated sublevel."""
    b1, a1 = t1
    b2, a2 = t2
    d = len(b1)
    if len(b2) != d:
        raise DimensionMismatch("translate dimension mismatch")
    if d > INTERSECT_DIM_CAP:
        raise DimensionTooLarge(
            f"translate intersection capped at d <= {INTERSECT_DIM_CAP}")
    a1.check(d)
    a2.check(d)
    if t1 == t2:
        return [Stratum((tuple(b1),), a1)]
    if not a1.gens:
        return [Stratum((tuple(b1),), a1)] if translate_contains(t2, b1) \
            else []
    if not a2.gens:
        return [Stratum((tuple(b2),), a2)] if translate_contains(t1, b2) \
            else []
    combined = list(a1.gens) + [vneg(g) for g in a2.gens]
    sol = solve_diophantine(combined, vsub(b2, b1))
    if sol is None:
        return []  # the lattice cosets are already disjoint
    n1 = len(a1.gens)
    c = tuple(b1[i] + sum(sol[j] * a1.gens[j][i] for j in range(n1))
              for i in range(d))
    common = lattice_intersection(list(a1.gens), list(a2.gens), d)
    r1 = translate_region(t1, d)
    r2 = translate_region(t2, d)
    region = Region(d, r1.ineqs + r2.ineqs, r1.eqs + r2.eqs,
                    tuple(common), c)
    translates, pts = module_from_region(region)
    for p in pts:
        inside = translate_contains(t1, p) and translate_contains(t2, p)
        covered = any(translate_contains(t, p) for t in translates)
        if inside != covered:
            raise UnsupportedGeometry(
                f"intersection verification failed at {p}")
    return _translates_to_strata(translates)


def _translates_to_strata(translates: list[Translate]) -> list[Stratum]:
    by_semigroup: dict[AffineSemigroup, list[Vec]] = {}
    for b, a in translates:
        by_semigroup.setdefault(a, []).append(tuple(b))
    out = []
    for a, fs in by_semigroup.items():
        st = Stratum(tuple(sorted(fs)), a)
        st.check()
        out.append(st)
    return out


# ---------------------------------------------------------------------------
# carving a translate out of a region

def _simplicial_facet_normals(gens: list[Vec], d: int) -> list[Vec]:
    """Inner facet normals of the full-dimensional simplicial cone spanned
    by d independent generators: scaled rows of the inverse matrix."""
    rows = _coordinate_functionals(gens, d)
    return [primitive(r) for r in rows]


def carve_complement(region_b: Region, translate: Translate) -> list[Stratum]:
    """Stratify B minus (b + A) for a translate contained in the region B."""
    b, a = translate
    d = region_b.dim
    if d > CARVE_DIM_CAP:
        raise DimensionTooLarge(f"carving capped at d <= {CARVE_DIM_CAP}")
    a.check(d)
    if len(a.gens) != d:
        raise UnsupportedGeometry(
            "carving requires a full-dimensional simplicial semigroup")
    gens = list(a.gens)
    if not region_b.contains(b):
        raise ContainmentViolated(f"translate base {b} is outside the region")
    for g in gens:
        ok = all(dot(n, g) >= 0 for n, _ in region_b.ineqs) and \
            all(dot(n, g) == 0 for n, _ in region_b.eqs) and \
            lattice_contains(list(region_b.basis), g)
        if not ok:
            raise ContainmentViolated(
                f"semigroup generator {g} leaves the region")
    out: list[Translate] = []
    region = region_b
    for n in _simplicial_facet_normals(gens, d):
        hyper_matched = any(primitive(nb) == n and dot(nb, b) == cb
                            for nb, cb in region.ineqs)
        if not hyper_matched:
            piece = region.with_ineq(vneg(n), -dot(n, b) + 1)
            piece_translates, _ = module_from_region(piece)
            out.extend(piece_translates)
            region = region.with_ineq(n, dot(n, b))
    out.extend(_coset_decomposition(region, b, a))
    return _translates_to_strata(out)


def _coset_decomposition(region: Region, b: Vec, a: AffineSemigroup
                         ) -> list[Translate]:
    """Final carving stage: the region now sits inside b + cone(A); write it
    as a disjoint union of A-cosets and drop the coset of b itself."""
    d = region.dim
    gens = list(a.gens)
    lo = [sum(min(0, g[i]) for g in gens) for i in range(d)]
    hi = [sum(max(0, g[i]) for g in gens) for i in range(d)]
    classes: list[Vec] = []
    for mu in itertools.product(*[range(lo[i], hi[i] + 1) for i in range(d)]):
        lam = a.coords(mu)
        if lam is None or not all(0 <= c < 1 for c in lam):
            continue
        pt = vadd(tuple(b), mu)
        if not lattice_contains(list(region.basis),
                                vsub(pt, region.shift)):
            continue
        classes.append(mu)
    translates = [(vadd(tuple(b), mu), a) for mu in sorted(classes)]
    # verification sweep: the carved-down region must equal the disjoint
    # union of all classes (including the removed coset of b)
    ell = positive_functional(gens, d)
    step = sum(dot(ell, g) for g in gens)
    mu_max = max((dot(ell, mu) for mu in classes), default=0)
    bound = dot(ell, b) + mu_max + 2 * step + 8
    neg_ell = tuple(-x for x in ell)
    pts = _enumerate_region(region, extra=((neg_ell, -bound),))
    all_translates = translates  # mu = 0 is among the classes
    for p in pts:
        hits = sum(1 for t in all_translates if translate_contains(t, p))
        if hits != 1:
            raise UnsupportedGeometry(
                f"coset decomposition failed verification at {p}")
    covered = set(pts)
    for t in all_translates:
        for p in _translate_points(t, ell, bound):
            if p not in covered:
                raise UnsupportedGeometry(
                    f"coset decomposition produced stray point {p}")
    return [(pt, sg) for pt, sg in translates if pt != tuple(b)]


def _translate_points(t: Translate, ell: Vec, bound: int) -> list[Vec]:
    """Points of b + A with ell-value at most bound (requires ell positive
    on the generators)."""
    b, a = t
    pts = []

    def walk(cur: Vec, idx: int) -> None:
        if idx == len(a.gens):
            pts.append(cur)
            return
        g = a.gens[idx]
        while dot(ell, cur) <= bound:
            walk(cur, idx + 1)
            cur = vadd(cur, g)

    if dot(ell, b) <= bound:
        walk(tuple(b), 0)
    return [p for p in pts if dot(ell, p) <= bound]


# ---------------------------------------------------------------------------
# complement of stratifications

def _intersect_translate_lists(l1: list[Translate], l2: list[Translate]
                               ) -> list[Translate]:
    out: list[Translate] = []
    for t1 in l1:
        for t2 in l2:
            for st in intersect_translates(t1, t2):
                out.extend((f, st.A) for f in st.F)
    return out


def complement_stratification(sa: AffineStratification,
                              sb: AffineStratification
                              ) -> AffineStratification:
    """Stratification of (points of sa) minus (points of sb); sb must be
    contained in sa.  Verified pointwise on a sublevel."""
    d = sa.dim
    if sb.dim != d:
        raise DimensionMismatch("stratification dimension mismatch")
    sa.check()
    sb.check()
    b_translates = sb.translates()
    if not b_translates:
        return sa
    out: list[Translate] = []
    for t in sa.translates():
        region_t = translate_region(t, d)
        per_v: list[list[Translate]] = []
        for v in b_translates:
            vt_strata = intersect_translates(v, t)
            vt = [(f, st.A) for st in vt_strata for f in st.F]
            if not vt:
                per_v.append([t])
                continue
            pieces = None
            for u in vt:
                carved = carve_complement(region_t, u)
                cur = [(f, st.A) for st in carved for f in st.F]
                pieces = cur if pieces is None else \
                    _intersect_translate_lists(pieces, cur)
            per_v.append(pieces)
        acc = per_v[0]
        for nxt in per_v[1:]:
            acc = _intersect_translate_lists(acc, nxt)
        out.extend(acc)
    result = AffineStratification(
        d, tuple(st for st in _translates_to_strata(out)))
    _verify_complement(sa, sb, result)
    return result


def _verify_complement(sa, sb, result) -> None:
    d = sa.dim
    all_translates = sa.translates() + sb.translates() + result.translates()
    gens = [g for _, a in all_translates for g in a.gens]
    ell = positive_functional(gens, d)
    base = max((abs(dot(ell, b)) for b, _ in all_translates), default=0)
    step = max((dot(ell, g) for g in gens), default=1)
    bound = base + 4 * step + 8
    candidates: set[Vec] = set()
    for t in all_translates:
        candidates.update(_translate_points(t, ell, bound))
    for p in sorted(candidates):
        in_a = sa.contains(p)
        in_b = sb.contains(p)
        if in_b and not in_a:
            raise ContainmentViolated(
                f"{p} lies in the subtrahend but not the ambient set")
        expected = in_a and not in_b
        if result.contains(p) != expected:
            raise UnsupportedGeometry(
                f"complement verification failed at {p}")


# ---------------------------------------------------------------------------
# validation against the oracle

@dataclass(frozen=True)
class StratificationReport:
    translate_disjointness: tuple[tuple[int, bool, str], ...]
    cross_disjoint: bool
    cross_witness: Vec | None
    matches_p_set: bool
    p_witness: Vec | None

    @property
    def ok(self) -> bool:
        return (all(flag for _, flag, _ in self.translate_disjointness)
                and self.cross_disjoint and self.matches_p_set)

    def describe(self) -> str:
        lines = []
        for idx, flag, msg in self.translate_disjointness:
            lines.append(f"stratum {idx}: "
                         + ("translates disjoint" if flag else msg))
        lines.append("strata pairwise disjoint on sublevel: "
                     f"{self.cross_disjoint}"
                     + ("" if self.cross_disjoint
                        else f" (witness {self.cross_witness})"))
        lines.append(f"covers exactly the P-positions: {self.matches_p_set}"
                     + ("" if self.matches_p_set
                        else f" (witness {self.p_witness})"))
        return "\n".join(lines)


def validate_stratification(s: AffineStratification, game,
                            level: int) -> StratificationReport:
    per_stratum = []
    for idx, st in enumerate(s.strata):
        try:
            st.check(s.dim)
            per_stratum.append((idx, True, ""))
        except (OverlappingTranslates, UnsupportedSemigroup,
                DimensionMismatch) as exc:
            per_stratum.append((idx, False, str(exc)))
    region = oracle.solve_sublevel(game, level)
    cross_ok, cross_witness = True, None
    matches, p_witness = True, None
    for p in sorted(region.labels):
        hits = sum(1 for st in s.strata if st.contains(p))
        if hits > 1 and cross_ok:
            cross_ok, cross_witness = False, p
        member = hits >= 1
        is_p = region.labels[p] == "P"
        if member != is_p and matches:
            matches, p_witness = False, p
    return StratificationReport(tuple(per_stratum), cross_ok, cross_witness,
                                matches, p_witness)
