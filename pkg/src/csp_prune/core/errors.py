from typing import Optional


class CspPruneError(Exception):
    """Base class for every error raised by csp_prune."""


class ContractError(CspPruneError, ValueError):
    """A caller broke an operation's precondition."""


class InstanceError(CspPruneError, ValueError):
    """An instance could not be built from the supplied domains/constraints."""


class PatternError(CspPruneError, ValueError):
    """A pattern violates one of its structural invariants."""


class FormatError(CspPruneError, ValueError):
    """A text document could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            location = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{location}: {message}"
        super().__init__(message)


class TraceError(CspPruneError, ValueError):
    """A trace does not belong to the instance it is replayed on, or is malformed."""


class SizeLimitError(CspPruneError, RuntimeError):
    """An exhaustive search went past its node guard."""


class EliminationError(CspPruneError, RuntimeError):
    """An elimination was requested that the rule does not license."""


class ReconstructionError(CspPruneError, RuntimeError):
    """No value could be reinstated for an eliminated variable."""


class UnsupportedTraceError(ReconstructionError):
    """The trace contains a rule whose eliminations cannot be inverted for all solutions."""

    def __init__(self, rule: str):
        self.rule = rule
        super().__init__(f"Cannot recover all solutions through a {rule} elimination")
