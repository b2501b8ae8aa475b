from .arc_consistency import ACResult, enforce_ac, is_arc_consistent
from .reconstruction import extend_btp, extend_via_t, recover_all, recover_one
from .elimination import EliminationEngine, greedy_solve, preprocess

__all__ = [
    'ACResult',
    'enforce_ac',
    'is_arc_consistent',
    'extend_btp',
    'extend_via_t',
    'recover_all',
    'recover_one',
    'EliminationEngine',
    'greedy_solve',
    'preprocess',
]
