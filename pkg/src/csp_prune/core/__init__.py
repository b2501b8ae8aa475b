from .constants import RuleId
from .config import EngineConfig, PhasePolicy, ScheduledStep
from .errors import (
    ContractError,
    CspPruneError,
    EliminationError,
    FormatError,
    InstanceError,
    PatternError,
    ReconstructionError,
    SizeLimitError,
    TraceError,
    UnsupportedTraceError,
)
from .pattern import Pattern
from .instance import Instance, make_instance
from .catalog import CATALOG, get_pattern, rule_pattern
from .solution_set import SolutionSet
from .trace import ElimRecord, EliminationTrace, RecordKind, replay_trace, rewind

__all__ = [
    'RuleId',
    'EngineConfig',
    'PhasePolicy',
    'ScheduledStep',
    'ContractError',
    'CspPruneError',
    'EliminationError',
    'FormatError',
    'InstanceError',
    'PatternError',
    'ReconstructionError',
    'SizeLimitError',
    'TraceError',
    'UnsupportedTraceError',
    'Pattern',
    'Instance',
    'make_instance',
    'CATALOG',
    'get_pattern',
    'rule_pattern',
    'SolutionSet',
    'ElimRecord',
    'EliminationTrace',
    'RecordKind',
    'replay_trace',
    'rewind',
]
