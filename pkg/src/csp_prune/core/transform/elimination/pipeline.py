import logging
from typing import Optional, Set, Tuple

from ...constants import RuleId
from ...config import EngineConfig, PhasePolicy, ScheduledStep
from ...errors import ContractError, EliminationError
from ...instance import Instance, Solution
from ...pattern import ValueMapping
from ...trace import EliminationTrace
from ..arc_consistency import enforce_ac
from ..reconstruction import recover_one
from .value_elimination import ac_records, eliminate_value, val_eliminable
from .variable_elimination import eliminate_variable, var_eliminable

LOG = logging.getLogger(__name__)


class EliminationEngine:
    """
    Applies elimination rules to a fixpoint in the canonical order.

    Variables are scanned ascending with rules in their configured order;
    the first licensed elimination is applied and the scan restarts. Value
    eliminations are scanned by (variable, value, rule) once no variable can
    go, after which variable elimination is tried again. A variable found
    stable keeps that verdict until something within two constraints of it
    changes, which leaves the order of eliminations untouched.
    """

    def __init__(self, instance: Instance, config: EngineConfig, trace: EliminationTrace):
        self.instance = instance
        self.config = config
        self.trace = trace
        self._var_stable: Set[int] = set()
        self._val_stable: Set[int] = set()

    @property
    def wiped_out(self) -> bool:
        return self.trace.wipeout is not None

    def run(self) -> None:
        result = enforce_ac(self.instance)
        self.trace.extend(ac_records(result))
        if result.wipeout is not None:
            self.trace.wipeout = result.wipeout
            LOG.info("Arc consistency wiped out variable %d", result.wipeout)
            return

        for step in self.config.schedule:
            if self._budget_exhausted():
                return
            self._apply_scheduled(step)
            if self.wiped_out:
                return

        if self.config.phase_policy is PhasePolicy.VAR_FIRST:
            phases = (self._var_phase_step, self._val_phase_step)
        else:
            phases = (self._val_phase_step, self._var_phase_step)

        while not self._budget_exhausted():
            if not any(phase() for phase in phases):
                break
            if self.wiped_out:
                LOG.info("Domain of variable %d wiped out", self.trace.wipeout)
                break

    # ---- scans ---------------------------------------------------------

    def _var_phase_step(self) -> bool:
        """Apply the first licensed variable elimination, if any."""
        rules = self.config.var_rules
        if not rules:
            return False
        for x in self.instance.variables():
            if x in self._var_stable:
                continue
            for rule in rules:
                m = var_eliminable(self.instance, x, rule)
                if m is not None:
                    self._eliminate_variable(x, rule, m)
                    return True
            self._var_stable.add(x)
        return False

    def _val_phase_step(self) -> bool:
        """Apply the first licensed value elimination, if any."""
        rules = self.config.val_rules
        if not rules:
            return False
        for x in self.instance.variables():
            if x in self._val_stable:
                continue
            for b in self.instance.domain(x):
                for rule in rules:
                    m = val_eliminable(self.instance, x, b, rule)
                    if m is not None:
                        self._eliminate_value(x, b, rule, m)
                        return True
            self._val_stable.add(x)
        return False

    def _apply_scheduled(self, step: ScheduledStep) -> None:
        if step.kind == 'var':
            rules = self._scheduled_rules(step, var_rules=True)
            for rule in rules:
                m = var_eliminable(self.instance, step.var, rule)
                if m is not None:
                    self._eliminate_variable(step.var, rule, m)
                    return
        else:
            if not self.instance.in_domain(step.var, step.val):
                raise EliminationError(f"Scheduled step '{step}' names a value not in the domain")
            rules = self._scheduled_rules(step, var_rules=False)
            for rule in rules:
                m = val_eliminable(self.instance, step.var, step.val, rule)
                if m is not None:
                    self._eliminate_value(step.var, step.val, rule, m)
                    return
        raise EliminationError(f"Scheduled step '{step}' is not licensed by {', '.join(map(str, rules))}")

    def _scheduled_rules(self, step: ScheduledStep, var_rules: bool) -> Tuple[RuleId, ...]:
        if step.rule is not None:
            if step.rule.is_var_rule != var_rules:
                raise ContractError(f"Scheduled step '{step}' names a rule of the wrong kind")
            return (step.rule,)
        rules = tuple(rule for rule in self.config.rules if rule.is_var_rule == var_rules)
        if not rules:
            raise EliminationError(f"No enabled rule can license scheduled step '{step}'")
        return rules

    # ---- application ---------------------------------------------------

    def _eliminate_variable(self, x: int, rule: RuleId, m: ValueMapping) -> None:
        touched = self._ball(x)
        record = eliminate_variable(self.instance, x, rule, m)
        self.trace.append(record)
        self._var_stable.difference_update(touched)
        self._val_stable.clear()
        if self.instance.present_count <= 2:
            self._var_stable.clear()

    def _eliminate_value(self, x: int, b: int, rule: RuleId, m: ValueMapping) -> None:
        records = eliminate_value(self.instance, x, b, rule, m)
        self.trace.extend(records)
        for v in {record.var for record in records}:
            touched = self._ball(v)
            self._var_stable.difference_update(touched)
            self._val_stable.difference_update(touched)
        self.trace.wipeout = self.instance.wiped_out()

    def _ball(self, v: int) -> Set[int]:
        """v and the present variables within two constraints of it."""
        ball = {v}
        for w in self.instance.neighbours(v):
            ball.add(w)
            ball.update(self.instance.neighbours(w))
        return ball

    def _budget_exhausted(self) -> bool:
        limit = self.config.max_steps
        if limit is not None and self.trace.step_count >= limit:
            LOG.warning("Stopped after %d elimination steps", limit)
            return True
        return False


def preprocess(
    instance: Instance,
    config: Optional[EngineConfig] = None
) -> Tuple[Instance, EliminationTrace]:
    """
    Reduce an instance by arc consistency and the enabled elimination rules.

    The input is left untouched.

    Args:
        instance: instance to reduce
        config: enabled rules, phase policy, step budget and explicit schedule

    Returns:
        Tuple of (reduced instance, trace of every removal in order)
    """
    config = config or EngineConfig()
    reduced = instance.copy()
    trace = EliminationTrace(instance.fingerprint())
    EliminationEngine(reduced, config, trace).run()

    tally = trace.tally()
    LOG.info(
        "Preprocessing removed %d variables and %d values (%d by arc consistency)%s",
        sum(tally.var.values()), sum(tally.val.values()) + tally.ac, tally.ac,
        ', instance is unsatisfiable' if trace.wipeout is not None else ''
    )
    return reduced, trace


def greedy_solve(
    reduced: Instance,
    trace: EliminationTrace,
    original: Optional[Instance] = None
) -> Optional[Solution]:
    """
    Solve an instance that preprocessing left with at most one variable.

    Args:
        reduced: the instance returned by preprocess
        trace: its trace
        original: the original instance, needed only for a trace without restoration state

    Returns:
        A solution of the original instance, or None if preprocessing proved it unsatisfiable
    """
    if trace.wipeout is not None or reduced.wiped_out() is not None:
        return None
    remaining = reduced.variables()
    if len(remaining) > 1:
        raise ContractError(
            f"Reduced instance still has {len(remaining)} variables; solve it with the oracle"
        )
    residual = {v: reduced.domain(v)[0] for v in remaining}
    return recover_one(original, trace, residual)
