from typing import List

import numpy as np

from ...instance import Instance


def unsupported_values(instance: Instance, v: int, w: int) -> List[int]:
    """Current values of v with no compatible value left in the domain of w."""
    live_v = instance.domain_array(v)
    live_w = instance.domain_array(w)
    if len(live_v) == 0:
        return []
    if len(live_w) == 0:
        return [int(a) for a in live_v]
    supported = instance.relation(v, w)[np.ix_(live_v, live_w)].any(axis=1)
    return [int(a) for a in live_v[~supported]]


def revise_pass(instance: Instance, v: int, w: int) -> List[int]:
    """
    Remove the values of v that lost their support at w.

    Args:
        instance: instance whose domains are mutated
        v: variable being revised
        w: variable providing support

    Returns:
        List of removed values, ascending
    """
    removed = unsupported_values(instance, v, w)
    for a in removed:
        instance.remove_value(v, a)
    return removed
