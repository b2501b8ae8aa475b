from collections import deque
from dataclasses import dataclass, field
import logging
from typing import Deque, Iterable, List, Optional, Set, Tuple

from ...instance import Instance
from .revise import revise_pass, unsupported_values

LOG = logging.getLogger(__name__)


@dataclass
class ACResult:
    removed: List[Tuple[int, int]] = field(default_factory=list)
    wipeout: Optional[int] = None

    @property
    def changed(self) -> bool:
        return bool(self.removed)


def enforce_ac(instance: Instance, touched: Optional[Iterable[int]] = None) -> ACResult:
    """
    Establish arc consistency in place.

    Arcs are queued in ascending (variable, neighbour) order and revised
    first in first out, so removals come out in a deterministic order.
    Only pairs with a stored relation can lose support; complete relations
    support every value while the other domain is non-empty.

    Args:
        instance: instance whose domains are reduced
        touched: restrict the initial queue to arcs pointing at these variables

    Returns:
        ACResult with the ordered removals and the wiped-out variable, if any
    """
    result = ACResult()
    queue: Deque[Tuple[int, int]] = deque()
    queued: Set[Tuple[int, int]] = set()

    def push(v: int, w: int) -> None:
        if (v, w) not in queued:
            queued.add((v, w))
            queue.append((v, w))

    if touched is None:
        for v in instance.variables():
            for w in instance.neighbours(v):
                push(v, w)
    else:
        for w in sorted(set(touched)):
            for v in instance.neighbours(w):
                push(v, w)

    while queue:
        v, w = queue.popleft()
        queued.discard((v, w))
        removed = revise_pass(instance, v, w)
        if not removed:
            continue
        result.removed.extend((v, a) for a in removed)
        if instance.domain_size(v) == 0:
            result.wipeout = v
            LOG.debug("Domain of variable %d wiped out", v)
            return result
        for u in instance.neighbours(v):
            if u != w:
                push(u, v)

    if result.removed:
        LOG.debug("Arc consistency removed %d values", len(result.removed))
    return result


def is_arc_consistent(instance: Instance) -> bool:
    """True iff enforce_ac would remove nothing."""
    for v in instance.variables():
        if instance.domain_size(v) == 0:
            return False
        for w in instance.neighbours(v):
            if unsupported_values(instance, v, w):
                return False
    return True
