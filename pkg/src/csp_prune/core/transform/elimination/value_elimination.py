import logging
from typing import List, Optional

from ...constants import VALUE_A, VALUE_B, RuleId
from ...errors import ContractError, EliminationError
from ...instance import Instance
from ...pattern import ValueMapping
from ...trace import ElimRecord, RecordKind, value_edges
from ..arc_consistency import ACResult, enforce_ac
from ..arc_consistency.revise import unsupported_values
from .detectors import val_detector

LOG = logging.getLogger(__name__)


def val_eliminable(instance: Instance, x: int, b: int, rule: RuleId) -> Optional[ValueMapping]:
    """Least-d mapping {a: d, b: b} under which the rule does not occur at x, if any."""
    detector = val_detector(rule)
    if not instance.is_present(x):
        raise ContractError(f"Variable {x} is not in the instance")
    if not instance.in_domain(x, b):
        raise ContractError(f"Value {b} is not in the domain of variable {x}")
    for d in instance.domain(x):
        if d != b and not detector.occurs(instance, x, d, b):
            return {VALUE_A: d, VALUE_B: b}
    return None


def _check_licensed(instance: Instance, x: int, b: int, rule: RuleId, m: ValueMapping) -> None:
    detector = val_detector(rule)
    if not instance.is_present(x) or not instance.in_domain(x, b):
        raise EliminationError(f"Value {b} is not in the domain of variable {x}")
    a = m.get(VALUE_A)
    if m.get(VALUE_B) != b or a is None or a == b or not instance.in_domain(x, a):
        raise EliminationError(f"Mapping {m} is not an injective mapping to values of variable {x}")
    if detector.occurs(instance, x, a, b):
        raise EliminationError(f"{rule} occurs at variable {x} under {m}")


def eliminate_value(
    instance: Instance,
    x: int,
    b: int,
    rule: RuleId,
    m: ValueMapping
) -> List[ElimRecord]:
    """
    Remove b from the domain of x in place, then restore arc consistency.

    Neighbourhood substitution keeps arc consistency, so no propagation
    follows an NS removal; the support of the neighbours of x is checked
    instead. The records returned are the val record followed by one ac
    record per propagated removal. A wipeout leaves an empty domain in the
    instance.
    """
    _check_licensed(instance, x, b, rule, m)
    record = ElimRecord(
        kind=RecordKind.VAL,
        var=x,
        val=b,
        rule=rule,
        mapping=dict(m),
        edges=value_edges(instance, x, b),
    )
    instance.remove_value(x, b)
    LOG.debug("Eliminated value %d of variable %d by %s (m=%s)", b, x, rule, m)

    if rule is RuleId.NS:
        for z in instance.neighbours(x):
            if unsupported_values(instance, z, x):
                raise EliminationError(
                    f"Removing value {b} of variable {x} left variable {z} without support"
                )
        return [record]

    result = enforce_ac(instance, touched=[x])
    return [record] + ac_records(result)


def ac_records(result: ACResult) -> List[ElimRecord]:
    return [ElimRecord(kind=RecordKind.AC, var=v, val=a) for v, a in result.removed]
