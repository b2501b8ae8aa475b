from itertools import permutations
from typing import Dict, List, Mapping, Optional, Tuple

from ..pattern import Assignment, Pattern

# Variable map and per-variable value maps found by an embedding search
Embedding = Tuple[Dict[int, int], Dict[int, Dict[int, int]]]


def _signature(pattern: Pattern) -> tuple:
    trues = sum(1 for _, value in pattern.edges() if value)
    return (
        pattern.var_count,
        tuple(sorted(len(values) for values in pattern.domains)),
        pattern.edge_count,
        trues,
        pattern.is_quantified,
        len(pattern.existential),
        pattern.distinguished_val is not None,
    )


class _EmbeddingSearch:
    """
    Backtracking search for an injective renaming of a pattern into another.

    Variables are mapped first, then the values of each mapped variable by an
    injective map; every defined edge of the source must land on an equally
    valued edge of the target. With exact=True the maps must be bijections,
    which makes the search an equivalence test.
    """

    def __init__(
        self,
        source: Pattern,
        target: Pattern,
        exact: bool = False,
        fixed_values: Optional[Mapping[int, int]] = None
    ):
        self.source = source
        self.target = target
        self.exact = exact
        self.fixed_values = dict(fixed_values or {})
        self.phi: Dict[int, int] = {}
        self.psi: Dict[int, Dict[int, int]] = {}
        self.order = self._variable_order()
        self.target_edges = target.edge_map()

    def _variable_order(self) -> List[int]:
        degree = [0] * self.source.var_count
        for ((v, _), (w, _)), _ in self.source.edges():
            degree[v] += 1
            degree[w] += 1
        rest = sorted(
            (v for v in range(self.source.var_count) if v != self.source.distinguished_var),
            key=lambda v: (-degree[v], v)
        )
        if self.source.distinguished_var is not None:
            return [self.source.distinguished_var] + rest
        return rest

    def _quantification_compatible(self) -> bool:
        source, target = self.source, self.target
        if source.is_quantified and not target.is_quantified:
            return False
        if source.distinguished_val is not None and target.distinguished_val is None:
            return False
        if self.exact:
            if source.is_quantified != target.is_quantified:
                return False
            if len(source.existential) != len(target.existential):
                return False
            if (source.distinguished_val is None) != (target.distinguished_val is None):
                return False
        return True

    def _candidate_vars(self, v: int) -> List[int]:
        if self.source.is_quantified and v == self.source.distinguished_var:
            return [self.target.distinguished_var]
        used = set(self.phi.values())
        candidates = []
        for w in range(self.target.var_count):
            if w in used or w == self.target.distinguished_var and self.source.is_quantified:
                continue
            size_v, size_w = len(self.source.domains[v]), len(self.target.domains[w])
            if size_v > size_w or self.exact and size_v != size_w:
                continue
            candidates.append(w)
        return candidates

    def _value_ok(self, v: int, a: int, w: int, image: int) -> bool:
        source, target = self.source, self.target
        if source.is_quantified and v == source.distinguished_var:
            if a in self.fixed_values and self.fixed_values[a] != image:
                return False
            if a in source.existential and image not in target.existential:
                return False
            if a == source.distinguished_val and image != target.distinguished_val:
                return False
            if self.exact and a not in source.existential and image in target.existential:
                return False
        return True

    def _edges_ok(self, v: int, w: int, value_map: Mapping[int, int]) -> bool:
        for a, image in value_map.items():
            for (u, c), value in self.source.neighbours((v, a)).items():
                if u == v or u not in self.phi:
                    continue
                target_p: Assignment = (w, image)
                target_q: Assignment = (self.phi[u], self.psi[u][c])
                key = (target_p, target_q) if w < self.phi[u] else (target_q, target_p)
                if self.target_edges.get(key) is not value:
                    return False
        return True

    def _search(self, index: int) -> bool:
        if index == len(self.order):
            return True
        v = self.order[index]
        values = self.source.domain(v)
        for w in self._candidate_vars(v):
            for images in permutations(self.target.domain(w), len(values)):
                value_map = dict(zip(values, images))
                if not all(self._value_ok(v, a, w, image) for a, image in value_map.items()):
                    continue
                if not self._edges_ok(v, w, value_map):
                    continue
                self.phi[v] = w
                self.psi[v] = value_map
                if self._search(index + 1):
                    return True
                del self.phi[v]
                del self.psi[v]
        return False

    def run(self) -> Optional[Embedding]:
        if self.source.var_count > self.target.var_count or not self._quantification_compatible():
            return None
        if self._search(0):
            return dict(self.phi), {v: dict(m) for v, m in self.psi.items()}
        return None


def find_embedding(
    source: Pattern,
    target: Pattern,
    fixed_values: Optional[Mapping[int, int]] = None
) -> Optional[Embedding]:
    """
    Find an injective renaming making source a sub-pattern of target.

    Args:
        source: pattern to embed
        target: pattern embedded into
        fixed_values: optional required images of the source's existential values

    Returns:
        Optional (variable map, per-variable value maps)
    """
    return _EmbeddingSearch(source, target, fixed_values=fixed_values).run()


def equivalent(first: Pattern, second: Pattern) -> bool:
    """True iff the patterns are identical up to injective renaming of variables and values."""
    if _signature(first) != _signature(second):
        return False
    return _EmbeddingSearch(first, second, exact=True).run() is not None
