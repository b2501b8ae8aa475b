import logging
from typing import Dict, Iterator, List, Optional

import numpy as np

from ..core.config import node_limit
from ..core.errors import SizeLimitError
from ..core.instance import Instance, Solution
from ..core.solution_set import SolutionSet

LOG = logging.getLogger(__name__)


class Backtracker:
    """
    Chronological backtracking with a forward feasibility check.

    Variables are assigned in ascending order and values tried ascending,
    so solutions come out in lexicographic order. Every tried value counts
    as a node; exceeding the node limit raises SizeLimitError.
    """

    def __init__(self, instance: Instance, limit: Optional[int] = None):
        self.instance = instance
        self.variables = instance.variables()
        self.position = {v: i for i, v in enumerate(self.variables)}
        self.limit = limit if limit is not None else node_limit()
        self.nodes = 0

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.limit:
            raise SizeLimitError(f"Search exceeded {self.limit} nodes")

    def _forward(self, v: int, a: int, domains: Dict[int, np.ndarray]) -> Optional[Dict[int, np.ndarray]]:
        pruned = dict(domains)
        for w in self.instance.neighbours(v):
            if self.position[w] <= self.position[v]:
                continue
            values = domains[w]
            kept = values[self.instance.relation(v, w)[a, values]]
            if len(kept) == 0:
                return None
            pruned[w] = kept
        return pruned

    def _extend(self, depth: int, partial: Dict[int, int], domains: Dict[int, np.ndarray]) -> Iterator[Solution]:
        if depth == len(self.variables):
            yield dict(partial)
            return
        v = self.variables[depth]
        for a in domains[v]:
            self._tick()
            pruned = self._forward(v, int(a), domains)
            if pruned is None:
                continue
            partial[v] = int(a)
            yield from self._extend(depth + 1, partial, pruned)
            del partial[v]

    def solutions(self) -> Iterator[Solution]:
        domains = {v: self.instance.domain_array(v) for v in self.variables}
        if any(len(values) == 0 for values in domains.values()):
            return
        yield from self._extend(0, {}, domains)


def solve(instance: Instance) -> Optional[Solution]:
    """Lexicographically least solution, or None if the instance is unsatisfiable."""
    return next(Backtracker(instance).solutions(), None)


def count_solutions(instance: Instance) -> int:
    search = Backtracker(instance)
    count = sum(1 for _ in search.solutions())
    LOG.debug("Counted %d solutions in %d nodes", count, search.nodes)
    return count


def enumerate_solutions(instance: Instance) -> SolutionSet:
    return SolutionSet(instance.variables(), Backtracker(instance).solutions())


def has_partial_solution(instance: Instance, variables: List[int]) -> bool:
    """Whether the sub-instance on the given present variables is satisfiable."""
    sub = instance.copy()
    for v in instance.variables():
        if v not in variables:
            sub.remove_variable(v)
    return solve(sub) is not None
