# csp-prune: forbidden-pattern preprocessing for binary CSPs

from .core import (
    EngineConfig,
    EliminationTrace,
    Instance,
    Pattern,
    RuleId,
    SolutionSet,
    get_pattern,
    make_instance,
)
from .core.algebra import equivalent, is_irreducible, occurs_at
from .core.transform import enforce_ac, greedy_solve, preprocess, recover_all, recover_one
from .oracle import count_solutions, solve
from .adapter import parse_instance, serialize_instance
from .fixtures import fixture

__all__ = [
    'EngineConfig',
    'EliminationTrace',
    'Instance',
    'Pattern',
    'RuleId',
    'SolutionSet',
    'get_pattern',
    'make_instance',
    'equivalent',
    'is_irreducible',
    'occurs_at',
    'enforce_ac',
    'greedy_solve',
    'preprocess',
    'recover_all',
    'recover_one',
    'count_solutions',
    'solve',
    'parse_instance',
    'serialize_instance',
    'fixture',
]
