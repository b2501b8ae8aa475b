import logging
from typing import Optional

from ...constants import VALUE_A, RuleId
from ...errors import ContractError, EliminationError
from ...instance import Instance
from ...pattern import ValueMapping
from ...trace import ElimRecord, RecordKind, VariableSnapshot
from .detectors import var_detector

LOG = logging.getLogger(__name__)


def var_eliminable(instance: Instance, x: int, rule: RuleId) -> Optional[ValueMapping]:
    """
    Witness of absence for eliminating x by a variable elimination rule.

    Args:
        instance: arc-consistent instance
        x: present variable
        rule: one of the variable elimination rules

    Returns:
        The empty mapping for BTP, {a: d} for the least value d of x with no
        occurrence for existential rules, or None when the rule occurs for
        every choice.
    """
    detector = var_detector(rule)
    if not instance.is_present(x):
        raise ContractError(f"Variable {x} is not in the instance")
    # any variable of a two-variable arc-consistent instance can go
    trivial = instance.present_count <= 2
    if not detector.is_existential:
        if trivial or not detector.occurs(instance, x):
            return {}
        return None
    for d in instance.domain(x):
        if trivial or not detector.occurs(instance, x, d):
            return {VALUE_A: d}
    return None


def _check_licensed(instance: Instance, x: int, rule: RuleId, m: ValueMapping) -> None:
    detector = var_detector(rule)
    if not instance.is_present(x):
        raise EliminationError(f"Variable {x} is not in the instance")
    if instance.present_count <= 2:
        return
    if not detector.is_existential:
        if detector.occurs(instance, x):
            raise EliminationError(f"{rule} occurs at variable {x}")
        return
    if VALUE_A not in m or not instance.in_domain(x, m[VALUE_A]):
        raise EliminationError(f"Mapping {m} does not pick a value of variable {x}")
    if detector.occurs(instance, x, m[VALUE_A]):
        raise EliminationError(f"{rule} occurs at variable {x} under {m}")


def eliminate_variable(instance: Instance, x: int, rule: RuleId, m: ValueMapping) -> ElimRecord:
    """Remove x in place, keeping its column of compatibilities in the returned record."""
    _check_licensed(instance, x, rule, m)
    snapshot = VariableSnapshot.capture(instance, x)
    instance.remove_variable(x)
    LOG.debug("Eliminated variable %d by %s (m=%s)", x, rule, m)
    return ElimRecord(
        kind=RecordKind.VAR,
        var=x,
        rule=rule,
        mapping=dict(m),
        snapshot=snapshot,
    )
