"""Parity game solving with Small Progress Measures, including a one-pass
variant that yields winning strategies for both players."""

from .attractors import attractor, guarded_attractor
from .core import ParityGame, Player, build_game, dualize, min_priority, subgame
from .formats import parse_game, read_solution, write_dot, write_game, write_solution
from .generators import gen_figure1, gen_figure2, gen_figure4, gen_figure6, gen_random
from .lifting import InputOrder, Prefer, RoundRobin, SeededRandom, Worklist, parse_policy
from .measures import TOP, MeasureDomain, MeasureTable, cmp_lex, cmp_upto, lift, prog
from .onepass import solve_onepass
from .oracle import solve_bruteforce, solve_zielonka
from .playvalue import LassoPlay, max_value_solitaire, optimal_value_minmax, play_value
from .result import SolveResult
from .spm import extract_even_strategy, solve_spm, solve_two_pass
from .verify import Violation, verify_partition, verify_strategy

__version__ = "0.1.0"
