"""snakelab: exact enumerative combinatorics of signed permutations,
generalized Euler numbers, weighted bicolored Motzkin paths, sign-reversing
involutions and snakes, with an exhaustive identity-verification harness."""

from snakelab.algebra import (
    CoefficientSchedule,
    Monomial,
    Poly,
    jfraction_series,
    q_derivative,
    q_int,
    sfraction_series,
    u_multiply,
)
from snakelab.eulerians import Q_poly, R_poly, euler_number, q_euler, springer_number
from snakelab.motzkin import WeightedPath, gen_shapes, gen_weighted, rho, weight_menu
from snakelab.permstats import StatRecord, generate, signed_enumerator, stats
from snakelab.snakes import Snake, generate_snakes, snake_enumerator

__version__ = "0.1.0"

__all__ = [
    "CoefficientSchedule",
    "Monomial",
    "Poly",
    "Q_poly",
    "R_poly",
    "Snake",
    "StatRecord",
    "WeightedPath",
    "euler_number",
    "gen_shapes",
    "gen_weighted",
    "generate",
    "generate_snakes",
    "jfraction_series",
    "q_derivative",
    "q_euler",
    "q_int",
    "rho",
    "sfraction_series",
    "signed_enumerator",
    "snake_enumerator",
    "springer_number",
    "stats",
    "u_multiply",
    "weight_menu",
    "__version__",
]
