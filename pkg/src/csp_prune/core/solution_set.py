from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Set, Tuple

from .errors import ContractError
from .instance import Instance, Solution


class SolutionSet:
    """
    Set of total assignments over a fixed list of variables.

    Rows are value tuples in the order of `variables` and are kept
    lexicographically sorted. Adding the same solution twice is an error.
    """

    def __init__(self, variables: Sequence[int], solutions: Iterable[Mapping[int, int]] = ()):
        self.variables: Tuple[int, ...] = tuple(sorted(variables))
        self._rows: Set[Tuple[int, ...]] = set()
        for solution in solutions:
            self.add(solution)

    def _row(self, solution: Mapping[int, int]) -> Tuple[int, ...]:
        if set(solution) != set(self.variables):
            raise ContractError(
                f"Solution over {sorted(solution)} does not match variables {list(self.variables)}"
            )
        return tuple(int(solution[v]) for v in self.variables)

    def add(self, solution: Mapping[int, int]) -> None:
        row = self._row(solution)
        if row in self._rows:
            raise ContractError(f"Duplicate solution {dict(solution)}")
        self._rows.add(row)

    def rows(self) -> List[Tuple[int, ...]]:
        return sorted(self._rows)

    @property
    def count(self) -> int:
        return len(self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self) -> Iterator[Solution]:
        for row in self.rows():
            yield dict(zip(self.variables, row))

    def __contains__(self, solution: object) -> bool:
        if not isinstance(solution, Mapping) or set(solution) != set(self.variables):
            return False
        return self._row(solution) in self._rows

    def validate(self, instance: Instance) -> bool:
        """Every member is a solution of the instance."""
        return all(instance.is_solution(solution) for solution in self)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SolutionSet):
            return NotImplemented
        return self.variables == other.variables and self._rows == other._rows

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f'<SolutionSet vars={len(self.variables)} count={self.count}>'

    def to_dict(self) -> Dict[str, list]:
        return {'variables': list(self.variables), 'rows': [list(row) for row in self.rows()]}
