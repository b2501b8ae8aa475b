from dataclasses import dataclass, field
from enum import Enum
import os
from typing import Optional, Tuple

from .constants import DEFAULT_NODE_LIMIT, DEFAULT_RULE_ORDER, NODE_LIMIT_ENV, RuleId
from .errors import ContractError

# Try to load .env file if available
try:
    from dotenv import load_dotenv
    load_dotenv()
except ImportError:
    pass  # dotenv not available, use environment variables only


def node_limit(default: int = DEFAULT_NODE_LIMIT) -> int:
    """Node guard for exhaustive searches, overridable through the environment."""
    raw = os.getenv(NODE_LIMIT_ENV)
    if raw is None or raw.strip() == '':
        return default
    try:
        limit = int(raw.replace('_', ''))
    except ValueError:
        raise ContractError(f"{NODE_LIMIT_ENV} must be an integer, got '{raw}'")
    if limit <= 0:
        raise ContractError(f"{NODE_LIMIT_ENV} must be positive, got {limit}")
    return limit


class PhasePolicy(str, Enum):
    VAR_FIRST = 'var-first'
    VAL_FIRST = 'val-first'


@dataclass(frozen=True)
class ScheduledStep:
    """One elimination forced ahead of the canonical order."""
    kind: str  # 'var' or 'val'
    var: int
    val: Optional[int] = None
    rule: Optional[RuleId] = None

    def __post_init__(self):
        if self.kind not in ('var', 'val'):
            raise ContractError(f"Scheduled step kind must be 'var' or 'val', got '{self.kind}'")
        if self.kind == 'val' and self.val is None:
            raise ContractError("A scheduled value step needs a value")
        if self.kind == 'var' and self.val is not None:
            raise ContractError("A scheduled variable step takes no value")

    def __str__(self) -> str:
        parts = [self.kind, str(self.var)]
        if self.val is not None:
            parts.append(str(self.val))
        if self.rule is not None:
            parts.append(str(self.rule))
        return ' '.join(parts)


@dataclass(frozen=True)
class EngineConfig:
    rules: Tuple[RuleId, ...] = DEFAULT_RULE_ORDER
    var_elim: bool = True
    val_elim: bool = True
    phase_policy: PhasePolicy = PhasePolicy.VAR_FIRST
    max_steps: Optional[int] = None
    schedule: Tuple[ScheduledStep, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if len(set(self.rules)) != len(self.rules):
            raise ContractError("Enabled rules must not repeat")
        if self.max_steps is not None and self.max_steps < 0:
            raise ContractError("max_steps must be non-negative")

    @property
    def var_rules(self) -> Tuple[RuleId, ...]:
        if not self.var_elim:
            return ()
        return tuple(rule for rule in self.rules if rule.is_var_rule)

    @property
    def val_rules(self) -> Tuple[RuleId, ...]:
        if not self.val_elim:
            return ()
        return tuple(rule for rule in self.rules if rule.is_val_rule)
