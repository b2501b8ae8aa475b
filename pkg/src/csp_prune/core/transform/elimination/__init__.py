from .detectors import VAL_DETECTORS, VAR_DETECTORS, val_detector, var_detector
from .variable_elimination import eliminate_variable, var_eliminable
from .value_elimination import eliminate_value, val_eliminable
from .pipeline import EliminationEngine, greedy_solve, preprocess

__all__ = [
    'VAL_DETECTORS',
    'VAR_DETECTORS',
    'val_detector',
    'var_detector',
    'eliminate_variable',
    'var_eliminable',
    'eliminate_value',
    'val_eliminable',
    'EliminationEngine',
    'greedy_solve',
    'preprocess',
]
