from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from .errors import PatternError

# An assignment <v, a> of value a to variable v
Assignment = Tuple[int, int]
# A cpt key: two assignments on distinct variables, lower variable first
Edge = Tuple[Assignment, Assignment]
# Injective mapping from existential pattern values to target values
ValueMapping = Dict[int, int]


def edge_key(p: Assignment, q: Assignment) -> Edge:
    """Canonical key of the unordered pair {p, q}."""
    if p[0] == q[0]:
        raise PatternError(f"No compatibility between two assignments of variable {p[0]}")
    return (p, q) if p[0] < q[0] else (q, p)


class Pattern:
    """
    A partial binary CSP with optional quantification.

    The compatibility function may be undefined on some pairs of assignments.
    A quantified pattern has a distinguished variable; existential values are
    values of that variable that must be mapped through a fixed value mapping
    when the pattern is matched, and value elimination patterns additionally
    name one existential value as the distinguished value.
    """

    def __init__(
        self,
        domains: Sequence[Iterable[int]],
        cpt: Optional[Mapping[Edge, bool]] = None,
        distinguished_var: Optional[int] = None,
        existential: Iterable[int] = (),
        distinguished_val: Optional[int] = None
    ):
        self.domains: Tuple[FrozenSet[int], ...] = tuple(frozenset(values) for values in domains)
        self.distinguished_var = distinguished_var
        self.existential: FrozenSet[int] = frozenset(existential)
        self.distinguished_val = distinguished_val
        self._cpt: Dict[Edge, bool] = {}
        for (p, q), value in (cpt or {}).items():
            self._cpt[edge_key(p, q)] = bool(value)
        self._validate()

    @classmethod
    def build(
        cls,
        domains: Sequence[Iterable[int]],
        compatible: Iterable[Edge] = (),
        incompatible: Iterable[Edge] = (),
        distinguished_var: Optional[int] = None,
        existential: Iterable[int] = (),
        distinguished_val: Optional[int] = None
    ) -> 'Pattern':
        """Build a pattern from lists of compatible and incompatible assignment pairs."""
        cpt: Dict[Edge, bool] = {}
        for value, pairs in ((True, compatible), (False, incompatible)):
            for p, q in pairs:
                key = edge_key(p, q)
                if key in cpt and cpt[key] != value:
                    raise PatternError(f"Edge {key} listed as both compatible and incompatible")
                cpt[key] = value
        return cls(domains, cpt, distinguished_var, existential, distinguished_val)

    def _validate(self) -> None:
        for v, values in enumerate(self.domains):
            if not values:
                raise PatternError(f"Domain of variable {v} is empty")
            if any(a < 0 for a in values):
                raise PatternError(f"Domain of variable {v} holds a negative value")
        for (p, q) in self._cpt:
            for v, a in (p, q):
                if not 0 <= v < self.var_count or a not in self.domains[v]:
                    raise PatternError(f"Edge {(p, q)} uses an assignment outside the pattern")
        dv = self.distinguished_var
        if dv is not None and not 0 <= dv < self.var_count:
            raise PatternError(f"Distinguished variable {dv} does not exist")
        if self.existential:
            if dv is None:
                raise PatternError("Existential values need a distinguished variable")
            if not self.existential <= self.domains[dv]:
                raise PatternError("Existential values must lie in the distinguished variable's domain")
        if self.distinguished_val is not None and self.distinguished_val not in self.existential:
            raise PatternError("The distinguished value must be existential")

    @property
    def var_count(self) -> int:
        return len(self.domains)

    @property
    def is_quantified(self) -> bool:
        return self.distinguished_var is not None

    @property
    def is_flat(self) -> bool:
        return self.is_quantified and not self.existential

    @property
    def is_existential(self) -> bool:
        return bool(self.existential)

    def domain(self, v: int) -> Tuple[int, ...]:
        return tuple(sorted(self.domains[v]))

    def assignments(self) -> List[Assignment]:
        return [(v, a) for v in range(self.var_count) for a in self.domain(v)]

    def assignment_count(self) -> int:
        return sum(len(values) for values in self.domains)

    def cpt(self, p: Assignment, q: Assignment) -> Optional[bool]:
        return self._cpt.get(edge_key(p, q))

    def edges(self) -> Iterator[Tuple[Edge, bool]]:
        for key in sorted(self._cpt):
            yield key, self._cpt[key]

    @property
    def edge_count(self) -> int:
        return len(self._cpt)

    def edge_map(self) -> Dict[Edge, bool]:
        return dict(self._cpt)

    def neighbours(self, p: Assignment) -> Dict[Assignment, bool]:
        """Assignments whose compatibility with p is defined."""
        result: Dict[Assignment, bool] = {}
        for (q, r), value in self._cpt.items():
            if q == p:
                result[r] = value
            elif r == p:
                result[q] = value
        return result

    def is_existential_assignment(self, p: Assignment) -> bool:
        return p[0] == self.distinguished_var and p[1] in self.existential

    def with_quantification(
        self,
        distinguished_var: Optional[int] = None,
        existential: Iterable[int] = (),
        distinguished_val: Optional[int] = None
    ) -> 'Pattern':
        return Pattern(self.domains, self._cpt, distinguished_var, existential, distinguished_val)

    def flattened(self) -> 'Pattern':
        """Same pattern with its existential values dropped."""
        return Pattern(self.domains, self._cpt, self.distinguished_var)

    def without_assignment(self, p: Assignment) -> 'Pattern':
        v, a = p
        domains = [set(values) for values in self.domains]
        domains[v].discard(a)
        cpt = {key: value for key, value in self._cpt.items() if p not in key}
        existential = self.existential
        distinguished_val = self.distinguished_val
        if v == self.distinguished_var:
            existential = existential - {a}
            if distinguished_val == a:
                distinguished_val = None
        return Pattern(domains, cpt, self.distinguished_var, existential, distinguished_val)

    def relabel(
        self,
        var_order: Sequence[int],
        value_maps: Optional[Sequence[Mapping[int, int]]] = None
    ) -> 'Pattern':
        """
        Rename variables and values.

        Args:
            var_order: var_order[v] is the new index of variable v (a permutation)
            value_maps: optional per-variable injective renaming of values

        Returns:
            Pattern equivalent to this one
        """
        if sorted(var_order) != list(range(self.var_count)):
            raise PatternError("Variable relabelling must be a permutation")
        maps = [dict(m) for m in value_maps] if value_maps else [{a: a for a in d} for d in self.domains]

        def rename(p: Assignment) -> Assignment:
            return var_order[p[0]], maps[p[0]][p[1]]

        domains: List[FrozenSet[int]] = [frozenset()] * self.var_count
        for v, values in enumerate(self.domains):
            domains[var_order[v]] = frozenset(maps[v][a] for a in values)
        cpt = {edge_key(rename(p), rename(q)): value for (p, q), value in self._cpt.items()}
        dv = self.distinguished_var
        if dv is None:
            return Pattern(domains, cpt)
        existential = [maps[dv][a] for a in self.existential]
        dval = maps[dv][self.distinguished_val] if self.distinguished_val is not None else None
        return Pattern(domains, cpt, var_order[dv], existential, dval)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'domains': [self.domain(v) for v in range(self.var_count)],
            'edges': [(p, q, value) for (p, q), value in self.edges()],
            'distinguished_var': self.distinguished_var,
            'existential': sorted(self.existential),
            'distinguished_val': self.distinguished_val,
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Pattern):
            return NotImplemented
        return (
            self.domains == other.domains
            and self._cpt == other._cpt
            and self.distinguished_var == other.distinguished_var
            and self.existential == other.existential
            and self.distinguished_val == other.distinguished_val
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        quantifier = ''
        if self.is_quantified:
            quantifier = f' var={self.distinguished_var} e={sorted(self.existential)}'
            if self.distinguished_val is not None:
                quantifier += f' val={self.distinguished_val}'
        return f'<Pattern vars={self.var_count} assignments={self.assignment_count()} edges={self.edge_count}{quantifier}>'
