from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

import numpy as np

from .constants import RuleId
from .errors import ContractError, TraceError
from .instance import Instance
from .pattern import ValueMapping


class RecordKind(str, Enum):
    VAR = 'var'
    VAL = 'val'
    AC = 'ac'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, eq=False)
class VariableSnapshot:
    """
    State of an eliminated variable at the moment it was removed.

    Holds the live domain of the variable, its stored relations to the
    neighbours present at that time, and the live domains of those
    neighbours. Variables outside `relations` were unconstrained.
    """
    var: int
    domain: Tuple[int, ...]
    relations: Mapping[int, np.ndarray]
    neighbour_domains: Mapping[int, Tuple[int, ...]]

    @classmethod
    def capture(cls, instance: Instance, x: int) -> 'VariableSnapshot':
        neighbours = instance.neighbours(x)
        return cls(
            var=x,
            domain=instance.domain(x),
            relations={z: instance.relation(x, z) for z in neighbours},
            neighbour_domains={z: instance.domain(z) for z in neighbours},
        )

    def compatible(self, d: int, z: int, value: int) -> bool:
        matrix = self.relations.get(z)
        return True if matrix is None else bool(matrix[d, value])

    def supports(self, d: int, s: Mapping[int, int]) -> bool:
        """Whether <x, d> is compatible with every assignment of s."""
        return all(bool(matrix[d, s[z]]) for z, matrix in self.relations.items() if z in s)


@dataclass(frozen=True, eq=False)
class ElimRecord:
    kind: RecordKind
    var: int
    val: Optional[int] = None
    rule: Optional[RuleId] = None
    mapping: Optional[ValueMapping] = None
    # var records: the deleted column of compatibilities
    snapshot: Optional[VariableSnapshot] = None
    # val records: compatibilities of the deleted value with each stored neighbour
    edges: Optional[Mapping[int, np.ndarray]] = None

    def __post_init__(self):
        if self.kind is RecordKind.VAR and self.val is not None:
            raise ContractError("A variable record carries no value")
        if self.kind is not RecordKind.VAR and self.val is None:
            raise ContractError(f"A {self.kind} record needs a value")
        if self.kind is RecordKind.AC and (self.rule is not None or self.mapping):
            raise ContractError("An ac record carries no rule or mapping")
        if self.kind is not RecordKind.AC and self.rule is None:
            raise ContractError(f"A {self.kind} record needs a rule")

    @property
    def signature(self) -> Tuple:
        """Comparable identity of the step, without restoration state."""
        mapping = tuple(sorted(self.mapping.items())) if self.mapping else ()
        return (str(self.kind), self.var, self.val, self.rule, mapping)

    @property
    def is_materialised(self) -> bool:
        if self.kind is RecordKind.VAR:
            return self.snapshot is not None
        if self.kind is RecordKind.VAL:
            return self.edges is not None
        return True

    def __repr__(self) -> str:
        parts = [str(self.kind), str(self.var)]
        if self.val is not None:
            parts.append(str(self.val))
        if self.rule is not None:
            parts.append(f'rule={self.rule}')
        if self.mapping:
            parts.append('m=' + ','.join(f'{k}:{v}' for k, v in sorted(self.mapping.items())))
        return f"<ElimRecord {' '.join(parts)}>"


@dataclass
class TraceTally:
    var: Counter = field(default_factory=Counter)
    val: Counter = field(default_factory=Counter)
    ac: int = 0

    @property
    def total(self) -> int:
        return sum(self.var.values()) + sum(self.val.values()) + self.ac


class EliminationTrace:
    """Ordered elimination records against the fingerprint of the original instance."""

    def __init__(
        self,
        fingerprint: str,
        records: Optional[List[ElimRecord]] = None,
        wipeout: Optional[int] = None
    ):
        self.fingerprint = fingerprint
        self.records: List[ElimRecord] = list(records or [])
        # variable whose domain was emptied, if preprocessing proved unsatisfiability
        self.wipeout = wipeout

    def append(self, record: ElimRecord) -> None:
        self.records.append(record)

    def extend(self, records: List[ElimRecord]) -> None:
        self.records.extend(records)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self) -> Iterator[ElimRecord]:
        return iter(self.records)

    def of_kind(self, kind: RecordKind) -> List[ElimRecord]:
        return [record for record in self.records if record.kind is kind]

    @property
    def step_count(self) -> int:
        """Number of rule-licensed eliminations, excluding arc consistency."""
        return sum(1 for record in self.records if record.kind is not RecordKind.AC)

    @property
    def is_materialised(self) -> bool:
        return all(record.is_materialised for record in self.records)

    def rules_used(self) -> List[RuleId]:
        seen: Dict[RuleId, None] = {}
        for record in self.records:
            if record.rule is not None:
                seen.setdefault(record.rule, None)
        return list(seen)

    def tally(self) -> TraceTally:
        tally = TraceTally()
        for record in self.records:
            if record.kind is RecordKind.VAR:
                tally.var[record.rule] += 1
            elif record.kind is RecordKind.VAL:
                tally.val[record.rule] += 1
            else:
                tally.ac += 1
        return tally

    def signatures(self) -> List[Tuple]:
        return [record.signature for record in self.records]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EliminationTrace):
            return NotImplemented
        return (self.fingerprint == other.fingerprint
                and self.signatures() == other.signatures())

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        tally = self.tally()
        return (
            f'<EliminationTrace var={sum(tally.var.values())} '
            f'val={sum(tally.val.values())} ac={tally.ac}>'
        )


def value_edges(instance: Instance, x: int, b: int) -> Dict[int, np.ndarray]:
    """Compatibilities of <x, b> with every stored neighbour of x."""
    return {z: instance.relation(x, z)[b].copy() for z in instance.neighbours(x)}


def replay_trace(original: Instance, trace: EliminationTrace) -> Tuple[Instance, EliminationTrace]:
    """
    Re-execute a trace on the instance it was recorded against.

    Args:
        original: instance matching the trace fingerprint
        trace: records to apply, with or without restoration state

    Returns:
        Tuple of (reduced instance, trace with every record materialised)
    """
    if original.fingerprint() != trace.fingerprint:
        raise TraceError("Trace was recorded against a different instance")
    work = original.copy()
    records: List[ElimRecord] = []
    for index, record in enumerate(trace, start=1):
        try:
            if record.kind is RecordKind.VAR:
                snapshot = VariableSnapshot.capture(work, record.var)
                work.remove_variable(record.var)
                records.append(replace(record, snapshot=snapshot))
            elif record.kind is RecordKind.VAL:
                edges = value_edges(work, record.var, record.val)
                work.remove_value(record.var, record.val)
                records.append(replace(record, edges=edges))
            else:
                work.remove_value(record.var, record.val)
                records.append(record)
        except (ContractError, IndexError) as exc:
            raise TraceError(f"Record {index} {record!r} does not apply: {exc}") from exc
    return work, EliminationTrace(trace.fingerprint, records, work.wiped_out())


def rewind(reduced: Instance, trace: EliminationTrace) -> Instance:
    """Undo every record in reverse, returning a copy of the original instance."""
    work = reduced.copy()
    for record in reversed(trace.records):
        if record.kind is RecordKind.VAR:
            work.restore_variable(record.var)
        else:
            work.restore_value(record.var, record.val)
    if work.fingerprint() != trace.fingerprint:
        raise TraceError("Rewound instance does not match the trace fingerprint")
    return work
