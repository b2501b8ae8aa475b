from abc import ABC, abstractmethod
from typing import Optional

from .constants import RuleId
from .instance import Instance


class VariableRule(ABC):
    """Detector for a variable elimination pattern at a variable of an instance."""

    rule: RuleId

    @abstractmethod
    def occurs(self, instance: Instance, x: int, a: Optional[int] = None) -> bool:
        """Whether the pattern occurs at x with its existential value mapped to a (None when flat)."""
        pass

    @property
    def is_existential(self) -> bool:
        return self.rule is not RuleId.BTP


class ValueRule(ABC):
    """Detector for a value elimination pattern at a variable of an instance."""

    rule: RuleId

    @abstractmethod
    def occurs(self, instance: Instance, x: int, a: int, b: int) -> bool:
        """Whether the pattern occurs at x with a mapped to a and the distinguished value to b."""
        pass
