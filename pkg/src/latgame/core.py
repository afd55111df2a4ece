"""Data model for lattice games and exact validation of the rule-set axioms.

Positions are lattice points in Z^d, moves are translations p -> p - g for g
in the rule set, and the board is the cone lattice minus a finite order ideal
of defeated positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from . import fm
from .errors import DimensionTooLarge, PositionOffBoard, RuleSetAxiomViolation
from .linalg import (Vec, bits_signed, dot, is_zero, nullspace, primitive,
                     rank, unit, vsub)

FM_DIMENSION_CAP = 8


@dataclass(frozen=True)
class Cone:
    """Pointed full-dimensional rational cone given by extremal ray
    generators."""

    rays: tuple[Vec, ...]

    @classmethod
    def orthant(cls, d: int) -> "Cone":
        return cls(tuple(unit(d, i) for i in range(d)))

    @property
    def dim(self) -> int:
        return len(self.rays[0])

    def is_orthant(self) -> bool:
        return set(primitive(r) for r in self.rays) == \
            set(unit(self.dim, i) for i in range(self.dim))

    def facet_normals(self) -> tuple[Vec, ...]:
        return _facet_normals(self.rays)

    def contains(self, p: Vec) -> bool:
        return all(dot(n, p) >= 0 for n in self.facet_normals())

    def check(self) -> None:
        d = self.dim
        if not self.rays:
            raise ValueError("cone needs at least one ray")
        if any(len(r) != d for r in self.rays):
            raise ValueError("mixed ray dimensions")
        if any(is_zero(r) for r in self.rays):
            raise ValueError("zero ray")
        if rank(list(self.rays)) != d:
            raise ValueError("cone is not full-dimensional")
        if find_positive_functional_raw([], self.rays, d) is None:
            raise ValueError("cone is not pointed")


@lru_cache(maxsize=None)
def _facet_normals(rays: tuple[Vec, ...]) -> tuple[Vec, ...]:
    d = len(rays[0])
    prims = tuple(primitive(r) for r in rays)
    if set(prims) == set(unit(d, i) for i in range(d)):
        return tuple(unit(d, i) for i in range(d))  # orthant fast path
    if d == 1:
        return (prims[0],)
    normals = set()
    for subset in itertools.combinations(range(len(rays)), d - 1):
        sub = [rays[i] for i in subset]
        if rank(sub) != d - 1:
            continue
        kern = nullspace(sub, d)
        if len(kern) != 1:
            continue
        n = primitive(kern[0])
        sides = [dot(n, r) for r in rays]
        if all(s >= 0 for s in sides):
            pass
        elif all(s <= 0 for s in sides):
            n = tuple(-x for x in n)
            sides = [-s for s in sides]
        else:
            continue
        if rank([rays[i] for i, s in enumerate(sides) if s == 0]) == d - 1:
            normals.add(n)
    return tuple(sorted(normals))


@dataclass(frozen=True)
class RuleSet:
    gamma: tuple[Vec, ...]

    @property
    def dim(self) -> int:
        return len(self.gamma[0])

    def check(self) -> None:
        if not self.gamma:
            raise ValueError("empty rule set")
        d = self.dim
        if any(len(g) != d for g in self.gamma):
            raise ValueError("mixed move dimensions")
        if any(is_zero(g) for g in self.gamma):
            raise ValueError("zero move vector")


@dataclass(frozen=True)
class GameBoard:
    cone: Cone
    defeated_generators: tuple[Vec, ...]


@dataclass(frozen=True)
class LatticeGame:
    rules: RuleSet
    board: GameBoard
    ell: Vec

    @property
    def dim(self) -> int:
        return self.rules.dim

    @classmethod
    def create(cls, rules: RuleSet, board: GameBoard) -> "LatticeGame":
        """Validate both axioms and cache a positive functional."""
        report = validate_rule_set(rules, board.cone)
        if not report.valid:
            raise RuleSetAxiomViolation(report.describe(), report=report)
        d = rules.dim
        for g in board.defeated_generators:
            if len(g) != d:
                raise ValueError("defeated generator of wrong dimension")
            if not board.cone.contains(g):
                raise ValueError(f"defeated generator {g} outside the cone")
        return cls(rules, board, report.ell)


def find_positive_functional_raw(gamma, rays, d, dim_cap=FM_DIMENSION_CAP):
    """Integer ell with ell.v >= 1 on every move and ray, or None."""
    if d > dim_cap:
        raise DimensionTooLarge(f"dimension {d} exceeds elimination cap {dim_cap}")
    vectors = list(gamma) + list(rays)
    if not vectors:
        return tuple(0 for _ in range(d))
    ineqs = fm.make_system(vectors, [1] * len(vectors))
    pt = fm.feasible_point(ineqs, d)
    if pt is None:
        return None
    lcm = 1
    for c in pt:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ell = tuple(int(c * lcm) for c in pt)
    assert all(dot(ell, v) >= 1 for v in vectors)
    return ell


def find_positive_functional(rules: RuleSet, cone: Cone,
                             dim_cap: int = FM_DIMENSION_CAP) -> Vec | None:
    rules.check()
    cone.check()
    return find_positive_functional_raw(rules.gamma, cone.rays, rules.dim,
                                        dim_cap)


@dataclass(frozen=True)
class ValidationReport:
    ell: Vec | None
    # per cone ray, a witness move in the negative tangent cone (or None)
    ray_witnesses: tuple[tuple[Vec, Vec | None], ...]

    @property
    def valid(self) -> bool:
        return self.ell is not None and \
            all(w is not None for _, w in self.ray_witnesses)

    def describe(self) -> str:
        lines = []
        if self.ell is None:
            lines.append("axiom (1) fails: no positive linear functional")
        else:
            lines.append(f"axiom (1): ell = {self.ell}")
        for ray, w in self.ray_witnesses:
            if w is None:
                lines.append(f"axiom (2) fails on ray {ray}")
            else:
                lines.append(f"ray {ray}: witness {w}")
        return "\n".join(lines)


def validate_rule_set(rules: RuleSet, cone: Cone) -> ValidationReport:
    """Check both rule-set axioms; failures are reported, never raised."""
    rules.check()
    cone.check()
    ell = find_positive_functional_raw(rules.gamma, cone.rays, rules.dim)
    normals = cone.facet_normals()
    witnesses = []
    for ray in cone.rays:
        containing = [n for n in normals if dot(n, ray) == 0]
        witness = next((g for g in rules.gamma
                        if all(dot(n, g) <= 0 for n in containing)), None)
        witnesses.append((ray, witness))
    return ValidationReport(ell, tuple(witnesses))


def in_lattice_points(game: LatticeGame, p: Vec) -> bool:
    """p in Lambda = C cap Z^d."""
    return game.board.cone.contains(p)


@lru_cache(maxsize=None)
def defeated_set(game: LatticeGame) -> frozenset[Vec]:
    """Breadth-first closure of the defeated generators under p -> p - g."""
    cone = game.board.cone
    seen = set()
    frontier = [g for g in game.board.defeated_generators if cone.contains(g)]
    seen.update(frontier)
    while frontier:
        nxt = []
        for p in frontier:
            for g in game.rules.gamma:
                q = vsub(p, g)
                if q not in seen and cone.contains(q):
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def board_contains(game: LatticeGame, p: Vec) -> bool:
    return in_lattice_points(game, p) and p not in defeated_set(game)


def legal_moves(game: LatticeGame, p: Vec) -> list[Vec]:
    """Moves g with p - g still on the board, in rule-set order."""
    if not board_contains(game, p):
        raise PositionOffBoard(f"position {p} is not on the board")
    return [g for g in game.rules.gamma if board_contains(game, vsub(p, g))]


def input_complexity(game: LatticeGame) -> int:
    """Bit count of the d x (n + m) matrices defining the game.

    Signed binary length per entry: ceil(log2(|x|+1)) plus a sign bit,
    with zero entries free.
    """
    d = game.dim
    n = len(game.rules.gamma)
    m = len(game.board.defeated_generators)
    total = d * (m + n)
    for v in game.rules.gamma:
        total += sum(bits_signed(x) for x in v)
    for v in game.board.defeated_generators:
        total += sum(bits_signed(x) for x in v)
    return total
