# Seeded random binary instances for property sweeps

import logging
from itertools import combinations
from typing import List, Optional, Tuple

import numpy as np

from ..core.errors import ContractError, InstanceError
from ..core.instance import Instance, make_instance
from ..core.transform.arc_consistency import enforce_ac

LOG = logging.getLogger(__name__)


def _check_ratio(name: str, value: float) -> None:
    if not 0.0 <= value <= 1.0:
        raise ContractError(f"{name} must be in [0, 1], got {value}")


def _compact(instance: Instance) -> Instance:
    """Fresh instance over the current domains, dropping constraints that became trivial."""
    domains = [instance.domain(v) for v in range(instance.var_count)]
    return make_instance(instance.var_count, domains, list(instance.constraints()))


def _draw(n: int, d: int, density: float, tightness: float, rng: np.random.Generator) -> Instance:
    constraints = []
    for v, w in combinations(range(n), 2):
        if rng.random() >= density:
            continue
        allowed = rng.random((d, d)) >= tightness
        rows, cols = np.nonzero(allowed)
        constraints.append((v, w, list(zip(rows.tolist(), cols.tolist()))))
    return make_instance(n, [range(d)] * n, constraints)


def random_instance(
    n: int,
    d: int,
    density: float,
    tightness: float,
    seed: Optional[int] = None,
    max_attempts: int = 100
) -> Instance:
    """
    Random arc-consistent instance.

    Each pair of variables is constrained with probability density, and each
    pair of values of a constrained pair is forbidden with probability
    tightness. The draw is closed under arc consistency; draws that wipe out
    are redrawn.

    Args:
        n: number of variables
        d: initial domain size
        density: constraint probability per variable pair
        tightness: forbidden probability per value pair
        seed: numpy seed; equal seeds give equal instances
        max_attempts: draws before giving up

    Returns:
        Arc-consistent instance, possibly with reduced domains
    """
    if n < 1 or d < 1:
        raise ContractError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    _check_ratio('density', density)
    _check_ratio('tightness', tightness)
    rng = np.random.default_rng(seed)
    for attempt in range(1, max_attempts + 1):
        instance = _draw(n, d, density, tightness, rng)
        result = enforce_ac(instance)
        if result.wipeout is None:
            if attempt > 1:
                LOG.debug("Arc-consistent draw after %d attempts (seed %s)", attempt, seed)
            return _compact(instance)
    raise InstanceError(
        f"No arc-consistent draw in {max_attempts} attempts (n={n}, d={d}, "
        f"density={density}, tightness={tightness})"
    )


def random_tree_instance(n: int, d: int, tightness: float, seed: Optional[int] = None) -> Instance:
    """Random instance whose constraint graph is a tree; every value keeps a support on each edge."""
    if n < 1 or d < 1:
        raise ContractError(f"Need n >= 1 and d >= 1, got n={n}, d={d}")
    _check_ratio('tightness', tightness)
    rng = np.random.default_rng(seed)
    constraints: List[Tuple[int, int, List[Tuple[int, int]]]] = []
    for child in range(1, n):
        parent = int(rng.integers(child))
        allowed = rng.random((d, d)) >= tightness
        for a in np.flatnonzero(~allowed.any(axis=1)):
            allowed[a, rng.integers(d)] = True
        for b in np.flatnonzero(~allowed.any(axis=0)):
            allowed[rng.integers(d), b] = True
        rows, cols = np.nonzero(allowed)
        constraints.append((parent, child, list(zip(rows.tolist(), cols.tolist()))))
    return make_instance(n, [range(d)] * n, constraints)
