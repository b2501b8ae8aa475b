from dataclasses import dataclass
from typing import Dict, FrozenSet, Mapping, Union

from ...errors import ContractError, ReconstructionError
from ...instance import Instance, PartialAssignment, Solution
from ...trace import VariableSnapshot


# Step-time state of the reinstated variable: an instance in which x is
# still present, or the snapshot taken when x was removed
StepState = Union[Instance, VariableSnapshot]


def _snapshot(step: StepState, x: int) -> VariableSnapshot:
    if isinstance(step, VariableSnapshot):
        if step.var != x:
            raise ContractError(f"Snapshot of variable {step.var} used to reinstate variable {x}")
        return step
    if not step.is_present(x):
        raise ContractError(f"Variable {x} is not in the step instance")
    return VariableSnapshot.capture(step, x)


def btp_value(snapshot: VariableSnapshot, s: Mapping[int, int]) -> int:
    """Least value of the snapshot variable compatible with all of s."""
    for d in snapshot.domain:
        if snapshot.supports(d, s):
            return d
    raise ReconstructionError(f"No value of variable {snapshot.var} extends {dict(s)}")


def reassignment(snapshot: VariableSnapshot, s: Mapping[int, int], d: int) -> Dict[int, int]:
    """New values for the assigned neighbours that conflict with <x, d>."""
    moves: Dict[int, int] = {}
    for z in sorted(snapshot.relations):
        matrix = snapshot.relations[z]
        if z not in s or matrix[d, s[z]]:
            continue
        # arc consistency at step time guarantees a support
        supports = [value for value in snapshot.neighbour_domains[z] if matrix[d, value]]
        if not supports:
            raise ReconstructionError(f"Value {d} of variable {snapshot.var} has no support at variable {z}")
        moves[z] = supports[0]
    return moves


@dataclass(frozen=True)
class ExtensionContext:
    """Split of the assigned variables by compatibility with <x, d>."""
    d: int
    compatible: FrozenSet[int]
    incompatible: FrozenSet[int]
    reassignment: Dict[int, int]


def extension_context(step: StepState, x: int, s: Mapping[int, int], d: int) -> ExtensionContext:
    snapshot = _snapshot(step, x)
    moves = reassignment(snapshot, s, d)
    incompatible = frozenset(moves)
    return ExtensionContext(d, frozenset(s) - incompatible, incompatible, moves)


def extend_btp(step: StepState, x: int, s: PartialAssignment) -> Solution:
    """
    Extend s by the least value of x compatible with all of it.

    Args:
        step: state of x when it was eliminated by BTP or ExistsSubBTP
        x: reinstated variable
        s: solution of the instance without x

    Returns:
        s with an assignment of x added
    """
    extended = dict(s)
    extended[x] = btp_value(_snapshot(step, x), s)
    return extended


def extend_via_t(step: StepState, x: int, s: PartialAssignment, d: int) -> Solution:
    """
    Assign d to x and move every variable incompatible with <x, d> to a supporting value.

    Used for ExistsInvSubBTP and ExistsSnake eliminations, where d is the
    witness value of the elimination. The variables already compatible with
    <x, d> keep their values.
    """
    snapshot = _snapshot(step, x)
    if d not in snapshot.domain:
        raise ContractError(f"Value {d} was not in the domain of variable {x}")
    extended = dict(s)
    extended.update(reassignment(snapshot, s, d))
    extended[x] = d
    return extended
