import hashlib
from typing import Dict, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import ContractError, InstanceError
from .pattern import Assignment, Edge, Pattern

# Mapping from a subset of variables to values
PartialAssignment = Dict[int, int]
Solution = Dict[int, int]
# (i, j, allowed tuples) as accepted by make_instance
ConstraintSpec = Tuple[int, int, Iterable[Tuple[int, int]]]


class Instance:
    """
    A binary CSP instance with total compatibilities.

    Values are dense indices per variable, bounded by the largest value ever
    in the variable's domain. Relations are boolean matrices stored only for
    constrained pairs; a missing pair is the complete relation. Removing a
    value or a variable tombstones it, so indices stay stable and every
    removal can be undone.
    """

    def __init__(
        self,
        domains: Sequence[Iterable[int]],
        relations: Optional[Mapping[Tuple[int, int], np.ndarray]] = None
    ):
        masks: List[np.ndarray] = []
        for v, values in enumerate(domains):
            values = sorted(set(int(a) for a in values))
            if not values:
                raise InstanceError(f"Domain of variable {v} is empty")
            if values[0] < 0:
                raise InstanceError(f"Domain of variable {v} holds a negative value")
            mask = np.zeros(values[-1] + 1, dtype=bool)
            mask[values] = True
            masks.append(mask)

        self._bounds: Tuple[int, ...] = tuple(len(mask) for mask in masks)
        self._initial: List[np.ndarray] = masks
        self._alive: List[np.ndarray] = [mask.copy() for mask in masks]
        self._present = np.ones(len(masks), dtype=bool)
        self._relations: Dict[Tuple[int, int], np.ndarray] = {}
        self._adjacency: List[set] = [set() for _ in masks]

        for (v, w), matrix in (relations or {}).items():
            if v == w or not (0 <= v < self.var_count and 0 <= w < self.var_count):
                raise InstanceError(f"Invalid constraint scope ({v}, {w})")
            matrix = np.asarray(matrix, dtype=bool)
            if v > w:
                v, w, matrix = w, v, matrix.T
            if (v, w) in self._relations:
                raise InstanceError(f"Duplicate constraint on variables ({v}, {w})")
            if matrix.shape != (self._bounds[v], self._bounds[w]):
                raise InstanceError(
                    f"Relation on ({v}, {w}) has shape {matrix.shape}, "
                    f"expected {(self._bounds[v], self._bounds[w])}"
                )
            matrix = matrix.copy()
            matrix.setflags(write=False)
            self._relations[(v, w)] = matrix
            self._adjacency[v].add(w)
            self._adjacency[w].add(v)

    # ---- structure -----------------------------------------------------

    @property
    def var_count(self) -> int:
        return len(self._bounds)

    def variables(self) -> List[int]:
        """Variables not yet eliminated, ascending."""
        return [int(v) for v in np.flatnonzero(self._present)]

    @property
    def present_count(self) -> int:
        return int(self._present.sum())

    def is_present(self, v: int) -> bool:
        return bool(self._present[v])

    def bound(self, v: int) -> int:
        return self._bounds[v]

    def initial_domain(self, v: int) -> Tuple[int, ...]:
        return tuple(int(a) for a in np.flatnonzero(self._initial[v]))

    def domain(self, v: int) -> Tuple[int, ...]:
        return tuple(int(a) for a in np.flatnonzero(self._alive[v]))

    def domain_array(self, v: int) -> np.ndarray:
        return np.flatnonzero(self._alive[v])

    def domain_mask(self, v: int) -> np.ndarray:
        view = self._alive[v].view()
        view.setflags(write=False)
        return view

    def domain_size(self, v: int) -> int:
        return int(self._alive[v].sum())

    def in_domain(self, v: int, a: int) -> bool:
        return 0 <= a < self._bounds[v] and bool(self._alive[v][a])

    @property
    def max_domain_size(self) -> int:
        sizes = [self.domain_size(v) for v in self.variables()]
        return max(sizes) if sizes else 0

    def wiped_out(self) -> Optional[int]:
        """First present variable with an empty domain, if any."""
        for v in self.variables():
            if not self._alive[v].any():
                return v
        return None

    def neighbours(self, v: int) -> List[int]:
        """Present variables sharing a stored relation with v, ascending."""
        return sorted(w for w in self._adjacency[v] if self._present[w])

    def has_constraint(self, v: int, w: int) -> bool:
        return (min(v, w), max(v, w)) in self._relations

    def relation(self, v: int, w: int) -> np.ndarray:
        """Full relation matrix oriented as (values of v) x (values of w)."""
        if v == w:
            raise ContractError(f"No relation between variable {v} and itself")
        if v < w:
            matrix = self._relations.get((v, w))
            if matrix is None:
                return np.ones((self._bounds[v], self._bounds[w]), dtype=bool)
            return matrix
        matrix = self._relations.get((w, v))
        if matrix is None:
            return np.ones((self._bounds[v], self._bounds[w]), dtype=bool)
        return matrix.T

    def live_relation(self, v: int, w: int) -> np.ndarray:
        """Relation restricted to the current domains of v and w."""
        return self.relation(v, w)[np.ix_(self.domain_array(v), self.domain_array(w))]

    def stored_pairs(self) -> List[Tuple[int, int]]:
        return sorted(self._relations)

    # ---- queries -------------------------------------------------------

    def is_compatible(self, p: Assignment, q: Assignment) -> bool:
        (v, a), (w, b) = p, q
        if v == w:
            raise ContractError(f"Assignments {p} and {q} are on the same variable")
        for var, val in (p, q):
            if not 0 <= var < self.var_count or not 0 <= val < self._bounds[var] \
                    or not self._initial[var][val]:
                raise ContractError(f"Assignment {(var, val)} is not in the instance")
        return bool(self.relation(v, w)[a, b])

    def is_nontrivial(self, v: int, w: int) -> bool:
        """True iff the relation on (v, w) forbids a pair of current values."""
        if not self.has_constraint(v, w):
            return False
        return not bool(self.live_relation(v, w).all())

    def nontrivial_constraint_count(self) -> int:
        return sum(
            1 for v, w in self._relations
            if self._present[v] and self._present[w] and self.is_nontrivial(v, w)
        )

    def constraints(self) -> Iterator[Tuple[int, int, List[Tuple[int, int]]]]:
        """Non-trivial constraints between present variables with their allowed live tuples."""
        for v, w in sorted(self._relations):
            if not (self._present[v] and self._present[w]) or not self.is_nontrivial(v, w):
                continue
            dv, dw = self.domain_array(v), self.domain_array(w)
            sub = self.relation(v, w)[np.ix_(dv, dw)]
            rows, cols = np.nonzero(sub)
            yield v, w, [(int(dv[i]), int(dw[j])) for i, j in zip(rows, cols)]

    def is_partial_solution(self, s: Mapping[int, int]) -> bool:
        items = sorted(s.items())
        for v, a in items:
            if not 0 <= v < self.var_count or not self._present[v] or not self.in_domain(v, a):
                return False
        for i, (v, a) in enumerate(items):
            for w, b in items[i + 1:]:
                if not self.relation(v, w)[a, b]:
                    return False
        return True

    def is_solution(self, s: Mapping[int, int]) -> bool:
        return set(s) == set(self.variables()) and self.is_partial_solution(s)

    # ---- mutation ------------------------------------------------------

    def remove_value(self, v: int, a: int) -> None:
        if not self.in_domain(v, a):
            raise ContractError(f"Value {a} is not in the domain of variable {v}")
        self._alive[v][a] = False

    def restore_value(self, v: int, a: int) -> None:
        if not (0 <= a < self._bounds[v] and self._initial[v][a]):
            raise ContractError(f"Value {a} was never in the domain of variable {v}")
        self._alive[v][a] = True

    def remove_variable(self, v: int) -> None:
        if not self._present[v]:
            raise ContractError(f"Variable {v} is already eliminated")
        self._present[v] = False

    def restore_variable(self, v: int) -> None:
        self._present[v] = True

    def copy(self) -> 'Instance':
        clone = Instance.__new__(Instance)
        clone._bounds = self._bounds
        clone._initial = self._initial
        clone._alive = [mask.copy() for mask in self._alive]
        clone._present = self._present.copy()
        clone._relations = self._relations
        clone._adjacency = self._adjacency
        return clone

    # ---- views ---------------------------------------------------------

    def to_pattern(
        self,
        distinguished_var: Optional[int] = None,
        existential: Iterable[int] = (),
        distinguished_val: Optional[int] = None
    ) -> Pattern:
        """
        The instance as a pattern with a total cpt over present variables.

        Variables are renumbered densely in ascending order; a distinguished
        variable is given in the original numbering.
        """
        variables = self.variables()
        index = {v: i for i, v in enumerate(variables)}
        cpt: Dict[Edge, bool] = {}
        for i, v in enumerate(variables):
            for w in variables[i + 1:]:
                matrix = self.relation(v, w)
                for a in self.domain(v):
                    for b in self.domain(w):
                        cpt[((index[v], a), (index[w], b))] = bool(matrix[a, b])
        dv = index[distinguished_var] if distinguished_var is not None else None
        return Pattern([self.domain(v) for v in variables], cpt, dv, existential, distinguished_val)

    def microstructure(self) -> Tuple[List[Assignment], np.ndarray]:
        """
        Microstructure graph over the live assignments.

        Returns:
            Tuple of (assignment labels, symmetric adjacency matrix of compatible pairs)
        """
        labels = [(v, a) for v in self.variables() for a in self.domain(v)]
        size = len(labels)
        adjacency = np.zeros((size, size), dtype=bool)
        offsets: Dict[int, int] = {}
        position = 0
        for v in self.variables():
            offsets[v] = position
            position += self.domain_size(v)
        for v in self.variables():
            for w in self.variables():
                if v == w:
                    continue
                block = self.live_relation(v, w)
                rows = slice(offsets[v], offsets[v] + block.shape[0])
                cols = slice(offsets[w], offsets[w] + block.shape[1])
                adjacency[rows, cols] = block
        return labels, adjacency

    def fingerprint(self) -> str:
        """SHA-256 over the live view: present variables, domains and non-trivial relations."""
        digest = hashlib.sha256()
        digest.update(f'n={self.var_count};'.encode())
        for v in range(self.var_count):
            if self._present[v]:
                digest.update(f'd{v}:{",".join(map(str, self.domain(v)))};'.encode())
            else:
                digest.update(f'x{v};'.encode())
        for v, w, tuples in self.constraints():
            digest.update(f'c{v},{w}:'.encode())
            digest.update(np.asarray(tuples, dtype=np.int64).tobytes())
        return digest.hexdigest()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Instance):
            return NotImplemented
        if self.var_count != other.var_count or self.variables() != other.variables():
            return False
        if any(self.domain(v) != other.domain(v) for v in self.variables()):
            return False
        return list(self.constraints()) == list(other.constraints())

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return (
            f'<Instance vars={self.present_count}/{self.var_count} '
            f'd={self.max_domain_size} c={self.nontrivial_constraint_count()}>'
        )


def make_instance(
    var_count: int,
    domains: Sequence[Iterable[int]],
    constraint_list: Iterable[ConstraintSpec] = ()
) -> Instance:
    """
    Build an instance from domains and allowed-tuple constraints.

    Args:
        var_count: number of variables
        domains: value set of each variable
        constraint_list: (i, j, allowed tuples) triples; unlisted pairs are complete

    Returns:
        Instance with a total compatibility function
    """
    if var_count < 0 or len(domains) != var_count:
        raise InstanceError(f"Expected {var_count} domains, got {len(domains)}")
    value_sets = [set(int(a) for a in values) for values in domains]
    for v, values in enumerate(value_sets):
        if not values:
            raise InstanceError(f"Domain of variable {v} is empty")
    bounds = [max(values) + 1 for values in value_sets]

    relations: Dict[Tuple[int, int], np.ndarray] = {}
    for i, j, tuples in constraint_list:
        if i == j or not (0 <= i < var_count and 0 <= j < var_count):
            raise InstanceError(f"Invalid constraint scope ({i}, {j})")
        key = (min(i, j), max(i, j))
        if key in relations:
            raise InstanceError(f"Duplicate constraint on variables {key}")
        matrix = np.zeros((bounds[i], bounds[j]), dtype=bool)
        for a, b in tuples:
            if a not in value_sets[i] or b not in value_sets[j]:
                raise InstanceError(f"Tuple ({a}, {b}) on ({i}, {j}) lies outside the domains")
            matrix[a, b] = True
        relations[key] = matrix if i < j else matrix.T
    return Instance([sorted(values) for values in value_sets], relations)


def is_compatible(instance: Instance, p: Assignment, q: Assignment) -> bool:
    return instance.is_compatible(p, q)


def is_partial_solution(instance: Instance, s: Mapping[int, int]) -> bool:
    return instance.is_partial_solution(s)


def nontrivial_constraint_count(instance: Instance) -> int:
    return instance.nontrivial_constraint_count()
