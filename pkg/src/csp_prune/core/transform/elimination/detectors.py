from typing import Dict, List, Optional

import numpy as np

from ...constants import RuleId
from ...errors import ContractError
from ...instance import Instance
from ...interfaces import ValueRule, VariableRule

# Straight-line occurrence checks for the catalog rules.
# Notation: Rxy is the relation of x and y over current domains,
# row(x, y, d) the compatibilities of <x, d> with the current values of y.
# Every incompatibility edge of a pattern forces the two variables to share
# a stored relation, which bounds the candidates for y and z.


def _row(instance: Instance, x: int, y: int, value: int) -> np.ndarray:
    return instance.relation(x, y)[value, instance.domain_array(y)]


def _second_neighbours(instance: Instance, x: int, y: int) -> List[int]:
    return [z for z in instance.neighbours(y) if z != x]


def _exists(matrix: np.ndarray) -> bool:
    return bool(np.any(matrix))


def _joins(left: np.ndarray, right: np.ndarray) -> np.ndarray:
    """[c, e] is True iff some row r has left[r, c] and right[r, e]."""
    return (left.astype(np.int32).T @ right.astype(np.int32)) > 0


class BTPRule(VariableRule):
    rule = RuleId.BTP

    def occurs(self, instance: Instance, x: int, a: Optional[int] = None) -> bool:
        neighbours = instance.neighbours(x)
        relations = {y: instance.live_relation(x, y) for y in neighbours}
        for i, y in enumerate(neighbours):
            rxy = relations[y]
            if rxy.all():
                continue
            for z in neighbours[i + 1:]:
                rxz = relations[z]
                if rxz.all():
                    continue
                ryz = instance.live_relation(y, z)
                # a sees e but not c, b sees c but not e
                through_a = _joins(~rxy, rxz)
                through_b = _joins(rxy, ~rxz)
                if _exists(ryz & through_a & through_b):
                    return True
        return False


class ExistsSubBTPRule(VariableRule):
    rule = RuleId.EXISTS_SUB_BTP

    def occurs(self, instance: Instance, x: int, a: Optional[int] = None) -> bool:
        neighbours = instance.neighbours(x)
        for y in neighbours:
            row_y = _row(instance, x, y, a)
            if row_y.all():
                continue
            rxy = instance.live_relation(x, y)
            for z in neighbours:
                if z == y:
                    continue
                rxz = instance.live_relation(x, z)
                if rxz.all():
                    continue
                ryz = instance.live_relation(y, z)
                through_b = _joins(rxy, ~rxz)
                if _exists(ryz & (~row_y)[:, None] & through_b):
                    return True
        return False


class ExistsInvSubBTPRule(VariableRule):
    rule = RuleId.EXISTS_INV_SUB_BTP

    def occurs(self, instance: Instance, x: int, a: Optional[int] = None) -> bool:
        for y in instance.neighbours(x):
            row_y = _row(instance, x, y, a)
            if row_y.all() or not row_y.any():
                continue
            for z in _second_neighbours(instance, x, y):
                row_z = _row(instance, x, z, a)
                ryz = instance.live_relation(y, z)
                if _exists(row_y[:, None] & row_z[None, :] & ~ryz):
                    return True
        return False


class ExistsSnakeRule(VariableRule):
    rule = RuleId.EXISTS_SNAKE

    def occurs(self, instance: Instance, x: int, a: Optional[int] = None) -> bool:
        for y in instance.neighbours(x):
            row_y = _row(instance, x, y, a)
            if row_y.all() or not row_y.any():
                continue
            for z in _second_neighbours(instance, x, y):
                ryz = instance.live_relation(y, z)
                p_side = ((~row_y)[:, None] & ryz).any(axis=0)
                q_side = (row_y[:, None] & ~ryz).any(axis=0)
                if _exists(p_side & q_side):
                    return True
        return False


class NSRule(ValueRule):
    rule = RuleId.NS

    def occurs(self, instance: Instance, x: int, a: int, b: int) -> bool:
        for y in instance.neighbours(x):
            if _exists(_row(instance, x, y, b) & ~_row(instance, x, y, a)):
                return True
        return False


class Exists2TriangleRule(ValueRule):
    rule = RuleId.EXISTS_2_TRIANGLE

    def occurs(self, instance: Instance, x: int, a: int, b: int) -> bool:
        neighbours = instance.neighbours(x)
        present = instance.variables()
        for y in neighbours:
            candidates = _row(instance, x, y, b) & ~_row(instance, x, y, a)
            if not candidates.any():
                continue
            constrained = sorted((set(neighbours) | set(instance.neighbours(y))) - {x, y})
            for z in constrained:
                row_z = _row(instance, x, z, b)
                ryz = instance.live_relation(y, z)
                if _exists(candidates[:, None] & row_z[None, :] & ryz):
                    return True
            # any variable related to neither x nor y closes the triangle
            if len(present) > len(constrained) + 2:
                return True
        return False


class Exists2InvSubBTPRule(ValueRule):
    rule = RuleId.EXISTS_2_INV_SUB_BTP

    def occurs(self, instance: Instance, x: int, a: int, b: int) -> bool:
        for y in instance.neighbours(x):
            row_a = _row(instance, x, y, a)
            if not row_a.any() or not _exists(_row(instance, x, y, b) & ~row_a):
                continue
            for z in _second_neighbours(instance, x, y):
                row_z = _row(instance, x, z, a)
                ryz = instance.live_relation(y, z)
                if _exists(row_a[:, None] & row_z[None, :] & ~ryz):
                    return True
        return False


class Exists2SnakeRule(ValueRule):
    rule = RuleId.EXISTS_2_SNAKE

    def occurs(self, instance: Instance, x: int, a: int, b: int) -> bool:
        for y in instance.neighbours(x):
            row_a = _row(instance, x, y, a)
            p_values = _row(instance, x, y, b) & ~row_a
            if not p_values.any() or not row_a.any():
                continue
            for z in _second_neighbours(instance, x, y):
                ryz = instance.live_relation(y, z)
                p_side = (p_values[:, None] & ryz).any(axis=0)
                q_side = (row_a[:, None] & ~ryz).any(axis=0)
                if _exists(p_side & q_side):
                    return True
        return False


VAR_DETECTORS: Dict[RuleId, VariableRule] = {
    detector.rule: detector
    for detector in (BTPRule(), ExistsSubBTPRule(), ExistsInvSubBTPRule(), ExistsSnakeRule())
}

VAL_DETECTORS: Dict[RuleId, ValueRule] = {
    detector.rule: detector
    for detector in (NSRule(), Exists2TriangleRule(), Exists2InvSubBTPRule(), Exists2SnakeRule())
}


def var_detector(rule: RuleId) -> VariableRule:
    if rule not in VAR_DETECTORS:
        raise ContractError(f"{rule} is not a variable elimination rule")
    return VAR_DETECTORS[rule]


def val_detector(rule: RuleId) -> ValueRule:
    if rule not in VAL_DETECTORS:
        raise ContractError(f"{rule} is not a value elimination rule")
    return VAL_DETECTORS[rule]
