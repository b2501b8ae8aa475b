import logging
from typing import List, Mapping, Optional

from ...constants import ALL_SOLUTION_RULES, BTP_STYLE_RULES, REASSIGNING_RULES, VALUE_A
from ...errors import ContractError, ReconstructionError, UnsupportedTraceError
from ...instance import Instance, Solution
from ...solution_set import SolutionSet
from ...trace import ElimRecord, EliminationTrace, RecordKind, replay_trace
from .extend import btp_value, reassignment

LOG = logging.getLogger(__name__)


def _materialised(original: Optional[Instance], trace: EliminationTrace) -> EliminationTrace:
    if trace.is_materialised:
        return trace
    if original is None:
        raise ContractError("Trace carries no restoration state; the original instance is required")
    _, full = replay_trace(original, trace)
    return full


def recover_one(
    original: Optional[Instance],
    trace: EliminationTrace,
    s: Mapping[int, int]
) -> Solution:
    """
    Turn a solution of the reduced instance into a solution of the original.

    Records are undone in reverse. Value and arc consistency removals keep
    every solution of the reduced instance a solution, so only variable
    records change the assignment: BTP and ExistsSubBTP add a compatible
    value for the reinstated variable, ExistsInvSubBTP and ExistsSnake assign
    the witness value and reassign its conflicting neighbours.

    Args:
        original: original instance; only needed when the trace was parsed from text
        trace: trace produced by preprocess
        s: solution of the reduced instance

    Returns:
        Solution of the original instance
    """
    trace = _materialised(original, trace)
    solution = dict(s)
    # updated in place; each record only looks at the neighbours of its variable
    for record in reversed(trace.records):
        if record.kind is not RecordKind.VAR:
            continue
        if record.rule in BTP_STYLE_RULES:
            solution[record.var] = btp_value(record.snapshot, solution)
        elif record.rule in REASSIGNING_RULES:
            d = record.mapping[VALUE_A]
            solution.update(reassignment(record.snapshot, solution, d))
            solution[record.var] = d
        else:
            raise ReconstructionError(f"Record {record!r} names no variable elimination rule")
    return solution


def _check_invertible(trace: EliminationTrace) -> None:
    for record in trace:
        if record.kind is not RecordKind.AC and record.rule not in ALL_SOLUTION_RULES:
            raise UnsupportedTraceError(record.rule)


def _reinstate_value(record: ElimRecord, solutions: List[Solution]) -> List[Solution]:
    x, b, a = record.var, record.val, record.mapping[VALUE_A]
    variants = []
    for solution in solutions:
        if solution[x] != a:
            continue
        if all(row[solution[z]] for z, row in record.edges.items() if z in solution):
            variant = dict(solution)
            variant[x] = b
            variants.append(variant)
    return solutions + variants


def recover_all(
    original: Optional[Instance],
    trace: EliminationTrace,
    solutions: SolutionSet
) -> SolutionSet:
    """
    All solutions of the original instance from all solutions of the reduced one.

    Only traces whose eliminations keep every solution recoverable are
    accepted: BTP and ExistsSubBTP for variables, NS and Exists2Triangle
    for values.
    """
    _check_invertible(trace)
    trace = _materialised(original, trace)
    variables = list(solutions.variables)
    current: List[Solution] = list(solutions)
    for record in reversed(trace.records):
        if record.kind is RecordKind.VAR:
            snapshot = record.snapshot
            current = [
                {**solution, record.var: d}
                for solution in current
                for d in snapshot.domain
                if snapshot.supports(d, solution)
            ]
            variables.append(record.var)
        elif record.kind is RecordKind.VAL:
            current = _reinstate_value(record, current)
    LOG.debug("Recovered %d solutions from %d", len(current), solutions.count)
    return SolutionSet(variables, current)
