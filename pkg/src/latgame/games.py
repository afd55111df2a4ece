"""Concrete game encoders: bounded-heap NIM, octal-style heap games, and
the five-dimensional misere example game.

Position coordinate i counts heaps of size i+1; removing a heap of size i
is the move e_i, shrinking i -> j is e_i - e_j, splitting i -> j + k is
e_i - e_j - e_k.

The play-mode tag selects the defeated set: one of the two modes uses
D = {} and the other D = {0}.  Which tag maps to which defeated set is
pinned empirically by the published P-set of two-heap NIM (P = 2N^2 for
mode "misere"); tests/test_games.py asserts the pairing, and a flip there
means the engine convention drifted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Cone, GameBoard, LatticeGame, RuleSet
from .linalg import Vec, unit

MAX_NIM_HEAP = 6


@dataclass(frozen=True)
class HeapGameSpec:
    max_heap: int
    # ("remove", i) | ("shrink", i, j) with j < i | ("split", i, j, k)
    moves: tuple[tuple, ...]
    play_mode: str = "misere"

    def check(self) -> None:
        if self.play_mode not in ("normal", "misere"):
            raise ValueError(f"unknown play mode {self.play_mode!r}")
        n = self.max_heap
        for mv in self.moves:
            kind = mv[0]
            if kind == "remove":
                (_, i) = mv
                if not 1 <= i <= n:
                    raise ValueError(f"remove size {i} out of range")
            elif kind == "shrink":
                (_, i, j) = mv
                if not (1 <= j < i <= n):
                    raise ValueError(f"shrink {i}->{j} must strictly shrink")
            elif kind == "split":
                (_, i, j, k) = mv
                if not (1 <= j <= k and k < i <= n and j + k < i):
                    raise ValueError(
                        f"split {i}->{j}+{k} must strictly lose tokens")
            else:
                raise ValueError(f"unknown move kind {kind!r}")


def _heap_gamma(spec: HeapGameSpec) -> tuple[Vec, ...]:
    n = spec.max_heap
    removes = sorted({mv[1] for mv in spec.moves if mv[0] == "remove"})
    shrinks = sorted({(mv[1], mv[2]) for mv in spec.moves
                      if mv[0] == "shrink"})
    splits = sorted({(mv[1], mv[2], mv[3]) for mv in spec.moves
                     if mv[0] == "split"})
    gamma = [unit(n, i - 1) for i in removes]
    for i, j in shrinks:
        g = list(unit(n, i - 1))
        g[j - 1] -= 1
        gamma.append(tuple(g))
    for i, j, k in splits:
        g = list(unit(n, i - 1))
        g[j - 1] -= 1
        g[k - 1] -= 1
        gamma.append(tuple(g))
    return tuple(gamma)


def octal(spec: HeapGameSpec) -> LatticeGame:
    """Build a heap game, checking both rule-set axioms; games whose octal
    code omits whole-heap removal for some size typically fail axiom (2)."""
    spec.check()
    n = spec.max_heap
    rules = RuleSet(_heap_gamma(spec))
    origin = tuple(0 for _ in range(n))
    defeated = () if spec.play_mode == "misere" else (origin,)
    board = GameBoard(Cone.orthant(n), defeated)
    return LatticeGame.create(rules, board)


def nim(n: int, mode: str = "misere") -> LatticeGame:
    """NIM with heaps of size at most n: remove any heap or shrink it."""
    if not 1 <= n <= MAX_NIM_HEAP:
        raise ValueError(f"heap size must be between 1 and {MAX_NIM_HEAP}")
    moves = [("remove", i) for i in range(1, n + 1)]
    moves += [("shrink", i, j) for i in range(2, n + 1) for j in range(1, i)]
    return octal(HeapGameSpec(n, tuple(moves), mode))


EX5_GAMMA: tuple[Vec, ...] = (
    (1, 0, 0, 0, 0),
    (0, 1, 0, 0, 0),
    (0, 0, 0, 1, 0),
    (0, 0, 0, 0, 1),
    (-1, 1, 0, 0, 0),
    (0, -1, 1, 0, 0),
    (0, 0, -1, 1, 0),
    (0, 0, 0, -1, 1),
)


def ex5() -> LatticeGame:
    """The misere lattice game on N^5 with the eight-move rule set."""
    rules = RuleSet(EX5_GAMMA)
    board = GameBoard(Cone.orthant(5), ((0, 0, 0, 0, 0),))
    return LatticeGame.create(rules, board)
