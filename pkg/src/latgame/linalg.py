"""Exact integer and rational linear algebra used throughout the engine.

Vectors are plain tuples of ints.  Rational computations use
fractions.Fraction; nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vec = tuple[int, ...]


# ---------------------------------------------------------------------------
# vector helpers

def dot(u, v) -> int:
    return sum(a * b for a, b in zip(u, v, strict=True))


def vadd(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def vsub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def vneg(u: Vec) -> Vec:
    return tuple(-a for a in u)


def vscale(c: int, u: Vec) -> Vec:
    return tuple(c * a for a in u)


def is_zero(u: Vec) -> bool:
    return all(a == 0 for a in u)


def primitive(u: Vec) -> Vec:
    """Divide out the gcd of the entries; the zero vector is returned as is."""
    g = 0
    for a in u:
        g = gcd(g, abs(a))
    if g <= 1:
        return tuple(u)
    return tuple(a // g for a in u)


def unit(d: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(d))


# ---------------------------------------------------------------------------
# bit-length conventions for the complexity formulas

def bits_unsigned(x: int) -> int:
    """ceil(log2(|x| + 1)); zero entries contribute nothing."""
    return (abs(x)).bit_length() if x else 0


def bits_signed(x: int) -> int:
    """bits_unsigned plus one sign bit for negative entries."""
    return bits_unsigned(x) + (1 if x < 0 else 0)


def ceil_log2(x: int) -> int:
    """ceil(log2 |x|) with 0 and +-1 contributing nothing."""
    a = abs(x)
    if a <= 1:
        return 0
    return (a - 1).bit_length()


# ---------------------------------------------------------------------------
# rational elimination

def rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (rows, pivot column indices)."""
    rows = [list(r) for r in rows]
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: list[Vec]) -> int:
    rows = [[Fraction(a) for a in v] for v in vectors]
    _, pivots = rref(rows)
    return len(pivots)


def nullspace(rows: list[Vec] | list[list[Fraction]], ncols: int) -> list[Vec]:
    """Integer basis (denominators cleared) of the rational right nullspace
    of the matrix whose rows are given."""
    if not rows:
        return [unit(ncols, i) for i in range(ncols)]
    red, pivots = rref([[Fraction(a) for a in r] for r in rows])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -red[r][fc]
        lcm = 1
        for x in v:
            lcm = lcm * x.denominator // gcd(lcm, x.denominator)
        basis.append(tuple(int(x * lcm) for x in v))
    return basis


def left_nullspace(cols: list[Vec], dim: int) -> list[Vec]:
    """Integer basis of {n : n . c = 0 for every column c}."""
    return nullspace([tuple(col) for col in cols], dim)


def solve_rational(cols: list[Vec], v: Vec) -> tuple[Fraction, ...] | None:
    """Solve sum_j x_j * cols[j] = v over Q.

    Columns must be linearly independent; returns None when v is outside
    their span.
    """
    d = len(v)
    n = len(cols)
    if n == 0:
        return () if is_zero(v) else None
    aug = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(v[i])]
           for i in range(d)]
    red, pivots = rref(aug)
    if n in pivots:  # pivot in the augmented column: inconsistent
        return None
    if len(pivots) != n:
        raise ValueError("columns are linearly dependent")
    x = [Fraction(0)] * n
    for r, pc in enumerate(pivots):
        x[pc] = red[r][n]
    return tuple(x)


# ---------------------------------------------------------------------------
# integer column echelon (Hermite-style) with unimodular tracking

def column_echelon(gens: list[Vec], dim: int):
    """Bring the matrix with columns `gens` to column echelon form by
    unimodular column operations.

    Returns (H, V, pivots) where H is the echelon column list, V the n x n
    unimodular transform (as a list of columns over the input index set) with
    M * V = H, and pivots a list of (row, col) positions.
    """
    n = len(gens)
    H = [list(g) for g in gens]
    V = [[1 if i == j else 0 for i in range(n)] for j in range(n)]  # columns
    pivots = []
    pc = 0
    for r in range(dim):
        # gcd-eliminate row r across columns pc..n-1
        while True:
            nz = [j for j in range(pc, n) if H[j][r] != 0]
            if len(nz) <= 1:
                break
            j0 = min(nz, key=lambda j: abs(H[j][r]))
            for j in nz:
                if j == j0:
                    continue
                q = H[j][r] // H[j0][r]
                if q:
                    for i in range(dim):
                        H[j][i] -= q * H[j0][i]
                    for i in range(n):
                        V[j][i] -= q * V[j0][i]
        nz = [j for j in range(pc, n) if H[j][r] != 0]
        if not nz:
            continue
        j0 = nz[0]
        H[pc], H[j0] = H[j0], H[pc]
        V[pc], V[j0] = V[j0], V[pc]
        if H[pc][r] < 0:
            H[pc] = [-x for x in H[pc]]
            V[pc] = [-x for x in V[pc]]
        pivots.append((r, pc))
        pc += 1
        if pc == n:
            break
    return H, V, pivots


def integer_kernel(gens: list[Vec], dim: int) -> list[Vec]:
    """Basis of the lattice {x in Z^n : sum x_j gens[j] = 0}."""
    n = len(gens)
    H, V, pivots = column_echelon(gens, dim)
    pivot_cols = {pc for _, pc in pivots}
    return [tuple(V[j]) for j in range(n) if j not in pivot_cols]


def solve_diophantine(gens: list[Vec], v: Vec) -> Vec | None:
    """One integer solution x of sum x_j gens[j] = v, or None."""
    n = len(gens)
    d = len(v)
    if n == 0:
        return () if is_zero(v) else None
    H, V, pivots = column_echelon(gens, d)
    resid = list(v)
    y = [0] * n
    for r, pc in pivots:
        if resid[r] % H[pc][r] != 0:
            return None
        q = resid[r] // H[pc][r]
        y[pc] = q
        for i in range(d):
            resid[i] -= q * H[pc][i]
    if any(resid):
        return None
    x = [0] * n
    for j in range(n):
        if y[j]:
            for i in range(n):
                x[i] += y[j] * V[j][i]
    return tuple(x)


def lattice_basis(gens: list[Vec], dim: int) -> list[Vec]:
    """Reduce a generating set of a lattice to a basis (nonzero echelon
    columns)."""
    H, _, pivots = column_echelon(gens, dim)
    return [tuple(H[pc]) for _, pc in pivots]


def lattice_contains(basis: list[Vec], v: Vec) -> bool:
    """Membership in the lattice spanned by an independent basis."""
    if not basis:
        return is_zero(v)
    x = solve_rational(basis, v)
    return x is not None and all(c.denominator == 1 for c in x)


def lattice_intersection(g1: list[Vec], g2: list[Vec], dim: int) -> list[Vec]:
    """Basis of Z{g1} intersect Z{g2}."""
    if not g1 or not g2:
        return []
    stacked = [tuple(v) for v in g1] + [vneg(v) for v in g2]
    kern = integer_kernel(stacked, dim)
    n1 = len(g1)
    gens = []
    for k in kern:
        w = tuple(sum(k[j] * g1[j][i] for j in range(n1)) for i in range(dim))
        if not is_zero(w):
            gens.append(w)
    return lattice_basis(gens, dim)
