"""P-position workbench for the square chocolate game.

Four independent routes to the same winning-cell pattern (XOR kernel,
exhaustive game solver, corner/center recursion, second-order cellular
automaton), exact fractal cross-sections that reproduce it, with-pass
Nim overlays, and a CLI plus HTTP service for playing and exploring.
"""

from .core import Cell, Pattern, cell_value, is_p_position, pattern
from .engine import (GameState, Move, analyze_move, apply_move, best_move,
                     legal_moves, nim_value, solve)
from .enumeration import g, sum_all, sum_odd, u
from .errors import CapacityError, DomainError, IllegalMoveError
from .recursion import Decomposition, decompose, dilate, pattern_recursive
from .automaton import CAGrid, ca_pattern, initial_grid, step_ca
from .sierpinski import (Diamond, Octa, Section, SimilarityMap, build,
                         check_half_congruence, fit_similarity, half_section,
                         integer_section, section, subdivide)
from .nim_pass import OverlayPattern, PassState, overlay, solve_pass

__version__ = "0.1.0"

__all__ = [
    "Cell", "Pattern", "cell_value", "is_p_position", "pattern",
    "GameState", "Move", "analyze_move", "apply_move", "best_move",
    "legal_moves", "nim_value", "solve",
    "g", "sum_all", "sum_odd", "u",
    "CapacityError", "DomainError", "IllegalMoveError",
    "Decomposition", "decompose", "dilate", "pattern_recursive",
    "CAGrid", "ca_pattern", "initial_grid", "step_ca",
    "Diamond", "Octa", "Section", "SimilarityMap", "build",
    "check_half_congruence", "fit_similarity", "half_section",
    "integer_section", "section", "subdivide",
    "OverlayPattern", "PassState", "overlay", "solve_pass",
    "__version__",
]
