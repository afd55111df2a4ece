"""Acceptance suite: one printed pass/fail line per criterion, exact
comparisons at the stated tolerances and time budgets."""

import itertools
import random
import time
from fractions import Fraction

import pytest

from latgame import games, oracle
from latgame.core import (Cone, GameBoard, LatticeGame, RuleSet,
                          input_complexity, legal_moves, validate_rule_set)
from latgame.genfun import (GFTerm, RationalGF, add, coefficient_at,
                            equals_on_sublevel, expand_in_sublevel,
                            from_finite_set, gf_complexity,
                            hadamard_monomial)
from latgame.linalg import dot, vsub
from latgame.strat import (AffineSemigroup, AffineStratification, Stratum,
                           compile_rational_strategy,
                           complement_stratification, intersect_translates,
                           semigroup_complexity, strat_complexity)
from latgame.strategy import VerdictKind, congruent, is_p, winning_moves


def report(name, ok, elapsed=None, budget=None):
    timing = "" if elapsed is None else f" ({elapsed:.2f}s)"
    print(f"{'PASS' if ok else 'FAIL'}: {name}{timing}")
    assert ok, name
    if budget is not None:
        in_budget = elapsed <= budget
        print(f"{'PASS' if in_budget else 'FAIL'}: "
              f"{name} within {budget:g}s budget")
        assert in_budget, f"{name} took {elapsed:.2f}s > {budget}s"


def orthant_sg(d):
    return AffineSemigroup(tuple(tuple(1 if i == j else 0 for j in range(d))
                                 for i in range(d)))


EVEN_SG = AffineSemigroup(((2, 0), (0, 2)))
EVEN_STRAT = AffineStratification(2, (Stratum(((0, 0),), EVEN_SG),))


@pytest.fixture(autouse=True)
def fresh_cache():
    oracle.clear_cache()
    yield


def test_nim2_golden():
    start = time.perf_counter()
    game = games.nim(2, "misere")
    region = oracle.solve_sublevel(game, 40)
    ell = game.ell
    expected = {(a, b)
                for a in range(0, 41, 2) for b in range(0, 21, 2)
                if dot(ell, (a, b)) <= 40}
    ok = region.p_positions() == expected
    report("NIM2 golden: sublevel-40 P-set is exactly the even-even grid",
           ok, time.perf_counter() - start, 1.0)


def test_strategy_pipeline_round_trip():
    start = time.perf_counter()
    game = games.nim(2, "misere")
    f = compile_rational_strategy(EVEN_STRAT)
    coeffs = expand_in_sublevel(f, game.ell, 40)
    region = oracle.solve_sublevel(game, 40)
    set_ok = all(c in (0, 1) for c in coeffs.values()) and \
        {p for p, c in coeffs.items() if c == 1} == region.p_positions()
    agree = all(is_p(f, p, game.ell) == (oracle.classify(game, p) == "P")
                for p in region.labels)
    report("strategy pipeline: compiled GF matches the oracle on all "
           f"{len(region.labels)} sublevel-40 points",
           set_ok and agree, time.perf_counter() - start, 1.0)


def test_winning_moves_exhaustive():
    start = time.perf_counter()
    game = games.nim(2, "misere")
    f = compile_rational_strategy(EVEN_STRAT)
    region = oracle.solve_sublevel(game, 30)
    p_set = region.p_positions()
    ok = True
    for q, lab in region.labels.items():
        moves = winning_moves(game, f, q)
        if lab == "N":
            ok = ok and bool(moves) and \
                all(vsub(q, g) in p_set for g in moves)
        else:
            ok = ok and not moves
    report("winning moves: nonempty into P from every N-position, empty "
           "from every P-position on sublevel 30",
           ok, time.perf_counter() - start, 5.0)


def _brute_coefficient(f, v, bound=8):
    def count(target, denoms):
        if not denoms:
            return 1 if all(x == 0 for x in target) else 0
        head, rest = denoms[0], denoms[1:]
        total = 0
        for n in range(bound + 1):
            shifted = tuple(x - n * y for x, y in zip(target, head))
            total += count(shifted, rest)
        return total

    return sum((t.alpha * count(tuple(x - y for x, y in zip(v, t.p)),
                                t.denoms) for t in f.terms), Fraction(0))


def test_hadamard_contract():
    start = time.perf_counter()
    rng = random.Random(2024)
    checked = 0
    ok = True
    while checked < 200:
        d = rng.randint(1, 3)
        terms = []
        for _ in range(rng.randint(1, 3)):
            k = rng.randint(0, 3)
            denoms = tuple(tuple(rng.randint(0, 4) for _ in range(d))
                           for _ in range(k))
            if any(sum(a) == 0 for a in denoms):
                continue
            terms.append(GFTerm(Fraction(rng.randint(-4, 4)),
                                tuple(rng.randint(0, 4) for _ in range(d)),
                                denoms))
        if not terms:
            continue
        f = RationalGF(d, tuple(terms))
        ell = tuple(1 for _ in range(d))
        p = tuple(rng.randint(0, 6) for _ in range(d))
        g = hadamard_monomial(f, p, ell)
        ok = ok and coefficient_at(g, p, ell) == _brute_coefficient(f, p)
        checked += 1
    report("Hadamard-with-monomial coefficient matches brute-force series "
           "expansion on 200 random inputs",
           ok, time.perf_counter() - start, 30.0)


def test_union_identity():
    rng = random.Random(5)
    ok = True
    for _ in range(30):
        pts = [(rng.randint(0, 8), rng.randint(0, 8)) for _ in range(10)]
        a, b = set(pts[:5]), set(pts[5:]) - set(pts[:5])
        lhs = from_finite_set(2, a | b)
        inter = from_finite_set(2, a & b)  # empty by construction
        rhs = add(from_finite_set(2, a), from_finite_set(2, b))
        if inter.terms:
            ok = False
        eq, _ = equals_on_sublevel(lhs, rhs, (1, 1), 18)
        ok = ok and eq
    report("finite-set union identity f(A|B) = f(A) + f(B) - f(A&B) on "
           "random disjoint sets", ok)


def test_complement_stratifications():
    start = time.perf_counter()
    quadrant = AffineStratification(2, (Stratum(((0, 0),), orthant_sg(2)),))
    four = AffineStratification(
        2, (Stratum(((0, 0),), AffineSemigroup(((4, 0), (0, 4)))),))
    comp1 = complement_stratification(quadrant, EVEN_STRAT)
    comp2 = complement_stratification(EVEN_STRAT, four)
    ok = True
    for v in itertools.product(range(31), repeat=2):
        if v[0] + v[1] > 30:
            continue
        ok = ok and comp1.contains(v) == (not EVEN_STRAT.contains(v))
        ok = ok and comp2.contains(v) == (EVEN_STRAT.contains(v)
                                          and not four.contains(v))
    report("complement stratifications verify pointwise on sublevel 30 "
           "for quadrant-minus-even and even-minus-multiples-of-four",
           ok, time.perf_counter() - start, 5.0)


def test_intersect_translates_suite():
    def sg(*gens):
        return AffineSemigroup(tuple(gens))

    pairs = [
        (((0, 0), EVEN_SG), ((2, 0), orthant_sg(2))),
        (((0, 0), EVEN_SG), ((0, 0), sg((4, 0), (0, 4)))),
        (((1, 0), sg((2, 0))), ((0, 0), sg((2, 0)))),  # parity: empty
        (((0, 0), sg((1, 1))), ((0, 0), orthant_sg(2))),
        (((3, 1), sg((0, 2))), ((3, 0), sg((0, 1)))),
        (((0, 0), sg((2, 2))), ((1, 1), sg((2, 2)))),
    ]
    ok = True
    parity_empty = None
    for idx, (t1, t2) in enumerate(pairs):
        out = intersect_translates(t1, t2)
        if idx == 2:
            parity_empty = out == []
        s = AffineStratification(2, tuple(out))
        for v in itertools.product(range(21), repeat=2):
            if v[0] + v[1] > 20:
                continue
            expected = all(
                a.contains(tuple(x - y for x, y in zip(v, b)))
                for b, a in (t1, t2))
            ok = ok and s.contains(v) == expected
    report("translate intersections verify pointwise on sublevel 20 for "
           "6 hand-built pairs, including an empty parity case",
           ok and parity_empty)


def test_congruence_verdicts():
    start = time.perf_counter()
    game = games.nim(2, "misere")
    certified = congruent(game, (0, 0), (2, 0), stratification=EVEN_STRAT)
    distinguished = congruent(game, (0, 0), (1, 0),
                              stratification=EVEN_STRAT)
    ok = certified.kind is VerdictKind.CONGRUENT_CERTIFIED
    ok = ok and distinguished.kind is VerdictKind.DISTINGUISHED
    w = distinguished.witness
    if ok:
        labels = oracle.solve_sublevel(game, 40).labels
        ok = labels[(w[0], w[1])] != labels[(1 + w[0], w[1])]
    report("congruence: (0,0)~(2,0) certified, (0,0) vs (1,0) "
           "distinguished with a verifying witness",
           ok, time.perf_counter() - start, 2.0)


def test_ex5_sanity():
    start = time.perf_counter()
    game = games.ex5()
    valid = validate_rule_set(game.rules, game.board.cone).valid
    region = oracle.solve_sublevel(game, 10)
    p_set = region.p_positions()
    ok = valid
    for p, lab in region.labels.items():
        if lab == "D":
            continue
        p_moves = [g for g in legal_moves(game, p) if vsub(p, g) in p_set]
        ok = ok and (bool(p_moves) if lab == "N" else not p_moves)
    report("5-d example: rule set validates and the sublevel-10 labels "
           "satisfy both solved-region invariants",
           ok, time.perf_counter() - start, 30.0)


def test_complexity_values():
    nim2_with_origin = LatticeGame.create(
        RuleSet(((1, 0), (0, 1), (-1, 1))),
        GameBoard(Cone.orthant(2), ((0, 0),)))
    even_gf = RationalGF(
        2, (GFTerm(Fraction(1), (0, 0), ((2, 0), (0, 2))),))
    values = (input_complexity(nim2_with_origin), gf_complexity(even_gf),
              semigroup_complexity(EVEN_SG), strat_complexity(EVEN_STRAT))
    report(f"complexity formulas reproduce (13, 9, 8, 10); got {values}",
           values == (13, 9, 8, 10))
