from dataclasses import dataclass
from itertools import permutations
import logging
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union

from ..constants import MAX_PATTERN_ASSIGNMENTS
from ..errors import ContractError, SizeLimitError
from ..instance import Instance
from ..pattern import Pattern, ValueMapping
from .equivalence import find_embedding
from .reductions import reduction_closure

LOG = logging.getLogger(__name__)

# Largest target pattern occurs_generic will enumerate into
MAX_TARGET_ASSIGNMENTS = 64


@dataclass(frozen=True)
class OccurrenceWitness:
    """Injective variable map and per-variable value maps certifying an occurrence."""
    phi: Dict[int, int]
    psi: Dict[int, Dict[int, int]]

    def image(self) -> List[Tuple[int, int]]:
        """Target assignments hit by the occurrence."""
        return sorted({(self.phi[v], b) for v, values in self.psi.items() for b in values.values()})


def check_value_mapping(pattern: Pattern, instance: Instance, x: Optional[int], m: Mapping[int, int]) -> None:
    if not pattern.is_quantified:
        if m:
            raise ContractError("An unquantified pattern takes no value mapping")
        return
    if x is None or not 0 <= x < instance.var_count or not instance.is_present(x):
        raise ContractError(f"Variable {x} is not a variable of the instance")
    if set(m) != set(pattern.existential):
        raise ContractError(
            f"Value mapping must cover exactly the existential values {sorted(pattern.existential)}"
        )
    if len(set(m.values())) != len(m):
        raise ContractError(f"Value mapping {dict(m)} is not injective")
    for a, d in m.items():
        if not instance.in_domain(x, d):
            raise ContractError(f"Value mapping sends {a} to {d}, outside the domain of variable {x}")


class _HomomorphismSearch:
    """
    Backtracking search for an occurrence of a pattern in an instance.

    Pattern variables are mapped injectively (distinguished variable first,
    then ascending), and each pattern value to a live target value, possibly
    non-injectively. Candidates are tried in ascending order so the first
    witness found is the lexicographically least one.
    """

    def __init__(self, pattern: Pattern, instance: Instance, x: Optional[int], m: Mapping[int, int]):
        self.pattern = pattern
        self.instance = instance
        self.x = x
        self.m = dict(m)
        dv = pattern.distinguished_var
        self.order = ([dv] if dv is not None else []) + [v for v in range(pattern.var_count) if v != dv]
        self.targets = instance.variables()
        self.phi: Dict[int, int] = {}
        self.psi: Dict[int, Dict[int, int]] = {}

    def _candidate_vars(self, v: int) -> List[int]:
        if v == self.pattern.distinguished_var and self.x is not None:
            return [self.x]
        used = set(self.phi.values())
        return [w for w in self.targets if w not in used]

    def _assignment_ok(self, v: int, a: int, w: int, b: int) -> bool:
        for (u, c), value in self.pattern.neighbours((v, a)).items():
            if u != v and u in self.psi and c in self.psi[u]:
                if bool(self.instance.relation(w, self.phi[u])[b, self.psi[u][c]]) is not value:
                    return False
        return True

    def _assign_values(self, v: int, w: int, values: Tuple[int, ...], index: int) -> Iterator[None]:
        if index == len(values):
            yield None
            return
        a = values[index]
        if v == self.pattern.distinguished_var and a in self.m:
            candidates = [self.m[a]]
        else:
            candidates = self.instance.domain(w)
        for b in candidates:
            if not self._assignment_ok(v, a, w, b):
                continue
            self.psi[v][a] = b
            yield from self._assign_values(v, w, values, index + 1)
            del self.psi[v][a]

    def _search(self, index: int) -> Iterator[None]:
        if index == len(self.order):
            yield None
            return
        v = self.order[index]
        values = self.pattern.domain(v)
        for w in self._candidate_vars(v):
            self.phi[v] = w
            self.psi[v] = {}
            for _ in self._assign_values(v, w, values, 0):
                yield from self._search(index + 1)
            del self.phi[v]
            del self.psi[v]

    def witnesses(self) -> Iterator[OccurrenceWitness]:
        if self.pattern.var_count > len(self.targets):
            return
        for _ in self._search(0):
            yield OccurrenceWitness(dict(self.phi), {v: dict(m) for v, m in self.psi.items()})

    def first(self) -> Optional[OccurrenceWitness]:
        return next(self.witnesses(), None)


def occurs_at(
    pattern: Pattern,
    instance: Instance,
    x: Optional[int],
    m: Optional[Mapping[int, int]] = None
) -> Optional[OccurrenceWitness]:
    """
    Find an occurrence of the pattern at variable x with value mapping m.

    Args:
        pattern: quantified pattern (unquantified patterns are matched anywhere, x=None)
        instance: arc-consistent instance
        x: target of the distinguished variable
        m: images of the existential values; empty for flat patterns

    Returns:
        Optional[OccurrenceWitness]: least witness, or None when the pattern does not occur
    """
    m = dict(m or {})
    check_value_mapping(pattern, instance, x, m)
    if not pattern.is_quantified:
        x = None
    return _HomomorphismSearch(pattern, instance, x, m).first()


def occurs_anywhere(pattern: Pattern, instance: Instance) -> Optional[OccurrenceWitness]:
    """Occurrence at any variable under any injective value mapping."""
    if not pattern.is_quantified:
        return _HomomorphismSearch(pattern, instance, None, {}).first()
    existential = sorted(pattern.existential)
    for x in instance.variables():
        for images in permutations(instance.domain(x), len(existential)):
            witness = occurs_at(pattern, instance, x, dict(zip(existential, images)))
            if witness is not None:
                return witness
    return None


def verify_witness(
    pattern: Pattern,
    instance: Instance,
    x: Optional[int],
    m: Mapping[int, int],
    witness: OccurrenceWitness
) -> bool:
    """Re-check a witness from scratch."""
    phi, psi = witness.phi, witness.psi
    if set(phi) != set(range(pattern.var_count)) or len(set(phi.values())) != len(phi):
        return False
    if any(not instance.is_present(w) for w in phi.values()):
        return False
    dv = pattern.distinguished_var
    if dv is not None and x is not None and phi[dv] != x:
        return False
    for v in range(pattern.var_count):
        if set(psi.get(v, {})) != set(pattern.domains[v]):
            return False
        if any(not instance.in_domain(phi[v], b) for b in psi[v].values()):
            return False
    for a, d in m.items():
        if dv is None or psi[dv].get(a) != d:
            return False
    for ((v, a), (w, b)), value in pattern.edges():
        if bool(instance.relation(phi[v], phi[w])[psi[v][a], psi[w][b]]) is not value:
            return False
    return True


def occurs_generic(
    pattern: Pattern,
    target: Union[Pattern, Instance],
    x: Optional[int] = None,
    m: Optional[ValueMapping] = None
) -> bool:
    """
    Occurrence by definition: some reduction of the pattern is equivalent to a sub-pattern of the target.

    An instance target is viewed as a total pattern; a quantified pattern is
    matched at variable x with value mapping m (every x and every injective
    mapping when x is omitted).
    """
    if pattern.assignment_count() > MAX_PATTERN_ASSIGNMENTS:
        raise SizeLimitError(f"Pattern has {pattern.assignment_count()} assignments, limit {MAX_PATTERN_ASSIGNMENTS}")

    if isinstance(target, Instance):
        if pattern.is_quantified and x is None:
            existential = sorted(pattern.existential)
            for var in target.variables():
                for images in permutations(target.domain(var), len(existential)):
                    if occurs_generic(pattern, target, var, dict(zip(existential, images))):
                        return True
            return False
        m = dict(m or {})
        check_value_mapping(pattern, target, x, m)
        if pattern.is_quantified:
            dval = m[pattern.distinguished_val] if pattern.distinguished_val is not None else None
            target_pattern = target.to_pattern(x, m.values(), dval)
        else:
            target_pattern = target.to_pattern()
        return _occurs_in_pattern(pattern, target_pattern, m)

    return _occurs_in_pattern(pattern, target, {})


def _occurs_in_pattern(pattern: Pattern, target: Pattern, m: Mapping[int, int]) -> bool:
    if target.assignment_count() > MAX_TARGET_ASSIGNMENTS:
        raise SizeLimitError(
            f"Target has {target.assignment_count()} assignments, limit {MAX_TARGET_ASSIGNMENTS}"
        )
    closure = reduction_closure(pattern)
    LOG.debug("Reduction closure of %r has %d patterns", pattern, len(closure))
    for reduced in closure:
        fixed = {a: m[a] for a in reduced.existential if a in m}
        if find_embedding(reduced, target, fixed_values=fixed) is not None:
            return True
    return False
