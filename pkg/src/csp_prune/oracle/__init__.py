from .backtracking import Backtracker, count_solutions, enumerate_solutions, has_partial_solution, solve
from .brute_force import brute_occurs
from .cross_check import CrossCheckReport, check_preprocessing, cross_check, injective_mappings

__all__ = [
    'Backtracker',
    'brute_occurs',
    'count_solutions',
    'enumerate_solutions',
    'has_partial_solution',
    'solve',
    'CrossCheckReport',
    'check_preprocessing',
    'cross_check',
    'injective_mappings',
]
