# Rule identifiers and shared constants for preprocessing

from enum import Enum

from .errors import ContractError


class RuleId(str, Enum):
    # Variable elimination rules
    BTP = 'BTP'
    EXISTS_SUB_BTP = 'ExistsSubBTP'
    EXISTS_INV_SUB_BTP = 'ExistsInvSubBTP'
    EXISTS_SNAKE = 'ExistsSnake'

    # Value elimination rules
    NS = 'NS'
    EXISTS_2_TRIANGLE = 'Exists2Triangle'
    EXISTS_2_INV_SUB_BTP = 'Exists2InvSubBTP'
    EXISTS_2_SNAKE = 'Exists2Snake'

    def __str__(self) -> str:
        return self.value

    @property
    def is_var_rule(self) -> bool:
        return self in VAR_RULES

    @property
    def is_val_rule(self) -> bool:
        return self in VAL_RULES


# Canonical scan order within each phase
VAR_RULES = (
    RuleId.BTP,
    RuleId.EXISTS_SUB_BTP,
    RuleId.EXISTS_INV_SUB_BTP,
    RuleId.EXISTS_SNAKE,
)

# NS first: its eliminations keep every solution up to substitution
VAL_RULES = (
    RuleId.NS,
    RuleId.EXISTS_2_TRIANGLE,
    RuleId.EXISTS_2_INV_SUB_BTP,
    RuleId.EXISTS_2_SNAKE,
)

DEFAULT_RULE_ORDER = VAR_RULES + VAL_RULES

# Var records of these rules are reinstated by trying every value of x
BTP_STYLE_RULES = {RuleId.BTP, RuleId.EXISTS_SUB_BTP}

# Var records of these rules are reinstated by reassigning the neighbours of x
REASSIGNING_RULES = {RuleId.EXISTS_INV_SUB_BTP, RuleId.EXISTS_SNAKE}

# Rules whose eliminations can be inverted to recover every solution
ALL_SOLUTION_RULES = BTP_STYLE_RULES | {RuleId.NS, RuleId.EXISTS_2_TRIANGLE}

# Value names of catalog patterns at the distinguished variable
VALUE_A = 0
VALUE_B = 1
VALUE_LETTERS = {'a': VALUE_A, 'b': VALUE_B}

# Text document headers
INSTANCE_HEADER = 'bcsp 1'
PATTERN_HEADER = 'pattern 1'
TRACE_HEADER = 'bcsp-trace 1'

# Oracle guard
DEFAULT_NODE_LIMIT = 20_000_000
NODE_LIMIT_ENV = 'CSPPRUNE_NODE_LIMIT'

# Pattern algebra guards
MAX_CLOSURE_PATTERNS = 5_000
MAX_PATTERN_ASSIGNMENTS = 16

# CLI exit codes
EXIT_OK = 0
EXIT_UNSAT = 1
EXIT_USAGE = 2


def parse_rule(name: str) -> RuleId:
    """Look a rule up by its identifier, case-insensitively."""
    for rule in RuleId:
        if rule.value.lower() == name.strip().lower():
            return rule
    known = ', '.join(rule.value for rule in RuleId)
    raise ContractError(f"Unknown rule '{name}' (known: {known})")
