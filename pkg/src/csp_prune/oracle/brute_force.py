from itertools import permutations, product
from typing import Dict, List, Mapping, Optional, Tuple

from ..core.algebra.occurrence import check_value_mapping
from ..core.config import node_limit
from ..core.errors import SizeLimitError
from ..core.instance import Instance
from ..core.pattern import Edge, Pattern


def _value_maps(pattern: Pattern, instance: Instance, v: int, w: int, fixed: Mapping[int, int]) -> List[Dict[int, int]]:
    values = sorted(pattern.domain(v))
    choices = [[fixed[a]] if a in fixed else list(instance.domain(w)) for a in values]
    return [dict(zip(values, images)) for images in product(*choices)]


def brute_occurs(
    pattern: Pattern,
    instance: Instance,
    x: Optional[int],
    m: Optional[Mapping[int, int]] = None,
    limit: Optional[int] = None
) -> bool:
    """
    Occurrence check by exhaustive enumeration, with no pruning.

    Every injective variable map sending the distinguished variable to x is
    paired with every combination of value maps, and each candidate is
    checked against all defined pattern edges.
    """
    m = dict(m or {})
    check_value_mapping(pattern, instance, x, m)
    limit = limit if limit is not None else node_limit()
    dv = pattern.distinguished_var if pattern.is_quantified else None
    targets = instance.variables()
    others = [v for v in range(pattern.var_count) if v != dv]
    edges: List[Tuple[Edge, bool]] = list(pattern.edges())

    nodes = 0
    pool = [w for w in targets if w != x] if dv is not None else targets
    for images in permutations(pool, len(others)):
        phi = dict(zip(others, images))
        if dv is not None:
            phi[dv] = x
        per_var = [
            _value_maps(pattern, instance, v, phi[v], m if v == dv else {})
            for v in range(pattern.var_count)
        ]
        for psis in product(*per_var):
            nodes += 1
            if nodes > limit:
                raise SizeLimitError(f"Brute-force occurrence check exceeded {limit} candidates")
            if all(
                bool(instance.relation(phi[v], phi[w])[psis[v][a], psis[w][b]]) is value
                for ((v, a), (w, b)), value in edges
            ):
                return True
    return False
