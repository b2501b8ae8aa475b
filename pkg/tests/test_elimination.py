from itertools import permutations

import pytest

from csp_prune.core.algebra import equivalent, occurs_at
from csp_prune.core.catalog import rule_pattern
from csp_prune.core.config import EngineConfig, PhasePolicy, ScheduledStep
from csp_prune.core.constants import VAL_RULES, VALUE_A, VALUE_B, VAR_RULES, RuleId
from csp_prune.core.errors import ContractError, EliminationError
from csp_prune.core.trace import RecordKind
from csp_prune.core.transform.elimination import (
    eliminate_value,
    eliminate_variable,
    greedy_solve,
    preprocess,
    val_detector,
    val_eliminable,
    var_detector,
    var_eliminable,
)
from csp_prune.fixtures import FIXTURE_NAMES, fixture
from csp_prune.oracle import check_preprocessing, count_solutions, solve

SNAKE = RuleId.EXISTS_2_SNAKE


def val_step(x, b, rule=SNAKE):
    return ScheduledStep('val', x, b, rule)


# ---- detectors agree with the generic occurrence search ------------------------

SMALL_FIXTURES = [name for name in FIXTURE_NAMES if fixture(name).instance.var_count <= 5]


@pytest.mark.parametrize('name', SMALL_FIXTURES)
def test_detectors_match_occurs_at(name):
    instance = fixture(name).instance
    for x in instance.variables():
        for rule in VAR_RULES:
            detector = var_detector(rule)
            pattern = rule_pattern(rule)
            if not detector.is_existential:
                assert detector.occurs(instance, x) == (occurs_at(pattern, instance, x) is not None)
                continue
            for d in instance.domain(x):
                expected = occurs_at(pattern, instance, x, {VALUE_A: d}) is not None
                assert detector.occurs(instance, x, d) == expected, (rule, x, d)
        for rule in VAL_RULES:
            detector = val_detector(rule)
            pattern = rule_pattern(rule)
            for a, b in permutations(instance.domain(x), 2):
                expected = occurs_at(pattern, instance, x, {VALUE_A: a, VALUE_B: b}) is not None
                assert detector.occurs(instance, x, a, b) == expected, (rule, x, a, b)


def test_wrong_kind_of_rule():
    with pytest.raises(ContractError):
        var_detector(RuleId.NS)
    with pytest.raises(ContractError):
        val_detector(RuleId.BTP)


# ---- single eliminations ------------------------------------------------------------

def test_btp_removes_leaves_only(path3):
    assert var_eliminable(path3, 0, RuleId.BTP) == {}
    assert var_eliminable(path3, 1, RuleId.BTP) is None


def test_two_variables_are_always_eliminable(path3):
    path3.remove_variable(0)
    assert var_eliminable(path3, 1, RuleId.BTP) == {}
    assert var_eliminable(path3, 1, RuleId.EXISTS_SNAKE) == {VALUE_A: 0}


def test_star_centre_is_eliminable():
    star = fixture('STAR', 5).instance
    for rule in (RuleId.EXISTS_SNAKE, RuleId.EXISTS_INV_SUB_BTP):
        assert var_eliminable(star, 0, rule) == {VALUE_A: 0}
    assert var_eliminable(star, 0, RuleId.BTP) is None


def test_eliminate_variable_keeps_snapshot(path3):
    record = eliminate_variable(path3, 0, RuleId.BTP, {})
    assert record.kind is RecordKind.VAR
    assert record.snapshot.domain == (0, 1)
    assert set(record.snapshot.relations) == {1}
    assert not path3.is_present(0)


def test_unlicensed_variable_elimination(path3):
    with pytest.raises(EliminationError):
        eliminate_variable(path3, 1, RuleId.BTP, {})
    assert path3.is_present(1)


def test_ns_picks_least_substitute():
    instance = fixture('I4K', 5).instance
    assert val_eliminable(instance, 3, 5, RuleId.NS) == {VALUE_A: 1, VALUE_B: 5}
    records = eliminate_value(instance, 3, 5, RuleId.NS, {VALUE_A: 1, VALUE_B: 5})
    # substitution keeps arc consistency
    assert len(records) == 1
    assert instance.domain(3) == (1, 2, 3, 4)


def test_val_elimination_propagates(bool3):
    rule = RuleId.EXISTS_2_INV_SUB_BTP
    m = val_eliminable(bool3, 0, 0, rule)
    assert m == {VALUE_A: 1, VALUE_B: 0}
    records = eliminate_value(bool3, 0, 0, rule, m)
    assert [record.signature for record in records] == [
        ('val', 0, 0, rule, ((0, 1), (1, 0))),
        ('ac', 1, 1, None, ()),
        ('ac', 2, 0, None, ()),
    ]
    assert [bool3.domain(v) for v in range(3)] == [(1,), (0,), (1,)]


def test_unlicensed_value_elimination(k3):
    with pytest.raises(EliminationError):
        eliminate_value(k3, 0, 0, RuleId.NS, {VALUE_A: 1, VALUE_B: 0})
    with pytest.raises(EliminationError):
        eliminate_value(k3, 0, 0, RuleId.EXISTS_2_TRIANGLE, {VALUE_A: 0, VALUE_B: 0})


def test_value_outside_domain(k4):
    with pytest.raises(ContractError):
        val_eliminable(k4, 1, 3, RuleId.NS)


# ---- worked examples ----------------------------------------------------------------

def test_k4_colouring_by_value_elimination(k4, snake_only):
    reduced, trace = preprocess(k4, snake_only)
    val = trace.of_kind(RecordKind.VAL)
    assert [(r.var, r.val, r.rule) for r in val] == [(0, 1, SNAKE), (0, 2, SNAKE), (0, 3, SNAKE)]
    assert [r.mapping for r in val] == [{0: 0, 1: 1}, {0: 0, 1: 2}, {0: 0, 1: 3}]
    assert [(r.var, r.val) for r in trace.of_kind(RecordKind.AC)] == [(1, 0), (2, 0), (3, 0)]
    assert [reduced.domain(v) for v in range(4)] == [(0,), (1,), (2,), (3,)]
    assert trace.wipeout is None
    assert k4.domain(0) == (0, 1, 2, 3)


def test_k4_default_configuration_keeps_a_solution(k4):
    assert check_preprocessing(k4) == []


def test_bool3_reduces_to_singletons(bool3):
    config = EngineConfig(rules=(RuleId.EXISTS_2_INV_SUB_BTP,), var_elim=False)
    reduced, trace = preprocess(bool3, config)
    assert [r.signature[:4] for r in trace] == [
        ('val', 0, 0, RuleId.EXISTS_2_INV_SUB_BTP),
        ('ac', 1, 1, None),
        ('ac', 2, 0, None),
    ]
    assert [reduced.domain(v) for v in range(3)] == [(1,), (0,), (1,)]


def test_k3_ends_in_wipeout(k3):
    reduced, trace = preprocess(k3)
    first = trace.of_kind(RecordKind.VAL)[0]
    assert (first.var, first.val, first.rule) == (0, 0, RuleId.EXISTS_2_TRIANGLE)
    assert first.mapping == {VALUE_A: 1, VALUE_B: 0}
    assert trace.wipeout is not None
    assert greedy_solve(reduced, trace) is None
    assert solve(k3) is None


def test_k3_scheduled_path_also_wipes_out(k3):
    config = EngineConfig(schedule=(val_step(0, 1, RuleId.EXISTS_2_TRIANGLE),))
    _, trace = preprocess(k3, config)
    assert trace.records[0].signature[:3] == ('val', 0, 1)
    assert trace.wipeout is not None


def test_nonconfluent_orders(nonconf, snake_only):
    schedule_a = (val_step(2, 1), val_step(0, 2), val_step(1, 2), val_step(2, 0))
    config_a = EngineConfig(rules=snake_only.rules, var_elim=False, schedule=schedule_a)
    reduced_a, trace_a = preprocess(nonconf, config_a)
    assert [r.mapping for r in trace_a.of_kind(RecordKind.VAL)] == [
        {0: 0, 1: 1}, {0: 0, 1: 2}, {0: 0, 1: 2}, {0: 2, 1: 0},
    ]
    assert [reduced_a.domain(v) for v in range(3)] == [(0,), (0,), (2,)]

    config_b = EngineConfig(rules=snake_only.rules, var_elim=False, schedule=(val_step(2, 0),))
    reduced_b, trace_b = preprocess(nonconf, config_b)
    assert [r.signature for r in trace_b] == [('val', 2, 0, SNAKE, ((0, 2), (1, 0)))]
    assert [reduced_b.domain(v) for v in range(3)] == [(0, 1, 2), (0, 1, 2), (1, 2)]

    assert reduced_a != reduced_b
    assert not equivalent(reduced_a.to_pattern(), reduced_b.to_pattern())
    assert count_solutions(reduced_a) == 1
    assert count_solutions(reduced_b) == 6


def test_unlicensed_scheduled_step(nonconf, snake_only):
    # <x2, 1> is the only support of <x0, 1>
    config = EngineConfig(rules=snake_only.rules, var_elim=False, schedule=(val_step(2, 1, RuleId.NS),))
    with pytest.raises(EliminationError):
        preprocess(nonconf, config)


def test_scheduled_value_must_be_present(nonconf):
    config = EngineConfig(schedule=(val_step(0, 7),))
    with pytest.raises(EliminationError):
        preprocess(nonconf, config)


@pytest.mark.parametrize('n', range(4, 11))
def test_star_centre_elimination(n):
    star = fixture('STAR', n).instance
    config = EngineConfig(rules=(RuleId.EXISTS_SNAKE,), max_steps=1)
    reduced, trace = preprocess(star, config)
    [record] = trace.records
    assert (record.var, record.rule, record.mapping) == (0, RuleId.EXISTS_SNAKE, {VALUE_A: 0})
    assert count_solutions(star) == 2
    assert count_solutions(reduced) == 2 ** (n - 1)


# ---- engine configuration -----------------------------------------------------------

def test_max_steps_counts_rule_steps(k4, snake_only):
    config = EngineConfig(rules=snake_only.rules, var_elim=False, max_steps=2)
    _, trace = preprocess(k4, config)
    assert trace.step_count == 2


def test_disabled_phases_remove_nothing(k4):
    reduced, trace = preprocess(k4, EngineConfig(var_elim=False, val_elim=False))
    assert len(trace) == 0
    assert reduced == k4


def test_val_first_policy(k4):
    config = EngineConfig(
        rules=(RuleId.BTP, RuleId.EXISTS_2_SNAKE), phase_policy=PhasePolicy.VAL_FIRST
    )
    _, trace = preprocess(k4, config)
    assert trace.of_kind(RecordKind.VAL)[0].signature[:3] == ('val', 0, 1)
    assert check_preprocessing(k4, config) == []


def test_config_rejects_repeated_rules():
    with pytest.raises(ContractError):
        EngineConfig(rules=(RuleId.NS, RuleId.NS))
    with pytest.raises(ContractError):
        EngineConfig(max_steps=-1)


def test_greedy_solve_needs_a_reduced_instance(k4):
    reduced, trace = preprocess(k4, EngineConfig(var_elim=False, val_elim=False))
    with pytest.raises(ContractError):
        greedy_solve(reduced, trace)


def test_preprocess_preserves_satisfiability_on_fixtures():
    for name in FIXTURE_NAMES:
        instance = fixture(name).instance
        reduced, trace = preprocess(instance)
        satisfiable = solve(instance) is not None
        if trace.wipeout is not None:
            assert not satisfiable, name
        else:
            assert (solve(reduced) is not None) == satisfiable, name
