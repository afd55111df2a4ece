"""latgame: exact solving and rational strategies for lattice games."""

from .core import (Cone, GameBoard, LatticeGame, RuleSet, ValidationReport,
                   board_contains, defeated_set, find_positive_functional,
                   input_complexity, legal_moves, validate_rule_set)
from .genfun import (GFTerm, RationalGF, add, coefficient_at,
                     equals_on_sublevel, expand_in_sublevel, gf_complexity,
                     hadamard_monomial, normalize_term, scale, shift,
                     subtract, weight_specialize)
from .oracle import SolvedRegion, classify, solve_sublevel
from .strat import (AffineSemigroup, AffineStratification, Stratum,
                    carve_complement, compile_rational_strategy,
                    complement_stratification, intersect_translates,
                    semigroup_complexity, semigroup_membership,
                    strat_complexity, strat_membership, stratum_membership,
                    validate_stratification)
from .strategy import CongruenceVerdict, VerdictKind, congruent, is_p, \
    winning_moves
from .games import HeapGameSpec, ex5, nim, octal

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
