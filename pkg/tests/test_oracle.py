import pytest

from csp_prune.core.catalog import rule_pattern
from csp_prune.core.constants import NODE_LIMIT_ENV, VALUE_A, VALUE_B, RuleId
from csp_prune.core.errors import ContractError, SizeLimitError
from csp_prune.oracle import (
    Backtracker,
    brute_occurs,
    check_preprocessing,
    count_solutions,
    cross_check,
    enumerate_solutions,
    has_partial_solution,
    injective_mappings,
    solve,
)
from csp_prune.fixtures import fixture


def test_solve_returns_least_solution(k4, nonconf):
    assert solve(k4) == {0: 0, 1: 1, 2: 2, 3: 3}
    assert solve(nonconf) == {0: 0, 1: 0, 2: 0}


def test_unsatisfiable(k3):
    assert solve(k3) is None
    assert count_solutions(k3) == 0
    assert len(enumerate_solutions(k3)) == 0


@pytest.mark.parametrize('name, count', [
    ('K4_COLOUR', 4), ('BOOL3', 4), ('NONCONF', 7), ('I2', 1), ('STAR', 2), ('I4K', 0),
])
def test_counts(name, count):
    assert count_solutions(fixture(name).instance) == count


def test_enumeration_is_lexicographic(nonconf):
    solutions = enumerate_solutions(nonconf)
    assert solutions.count == 7
    assert solutions.validate(nonconf)
    rows = [tuple(s[v] for v in range(3)) for s in solutions]
    assert rows == sorted(rows)


def test_eliminated_variables_are_ignored(path3):
    path3.remove_variable(1)
    assert count_solutions(path3) == 4
    assert enumerate_solutions(path3).variables == (0, 2)


def test_empty_instance_has_one_solution(path3):
    for v in range(3):
        path3.remove_variable(v)
    assert solve(path3) == {}
    assert count_solutions(path3) == 1


def test_has_partial_solution(k3):
    assert has_partial_solution(k3, [0, 1])
    assert not has_partial_solution(k3, [0, 1, 2])


def test_node_limit(monkeypatch, nonconf):
    monkeypatch.setenv(NODE_LIMIT_ENV, '3')
    with pytest.raises(SizeLimitError):
        count_solutions(nonconf)
    monkeypatch.setenv(NODE_LIMIT_ENV, 'many')
    with pytest.raises(ContractError):
        solve(nonconf)


def test_explicit_limit_wins(monkeypatch, k4):
    monkeypatch.setenv(NODE_LIMIT_ENV, '1')
    search = Backtracker(k4, limit=1_000)
    assert sum(1 for _ in search.solutions()) == 4
    assert 0 < search.nodes <= 1_000


# ---- brute-force occurrence -----------------------------------------------------------

def test_brute_occurs_agrees_on_worked_examples(k4, bool3):
    snake = rule_pattern(RuleId.EXISTS_2_SNAKE)
    assert not brute_occurs(snake, k4, 0, {VALUE_A: 0, VALUE_B: 1})
    assert brute_occurs(snake, k4, 0, {VALUE_A: 1, VALUE_B: 0})
    inv = rule_pattern(RuleId.EXISTS_2_INV_SUB_BTP)
    assert not brute_occurs(inv, bool3, 0, {VALUE_A: 1, VALUE_B: 0})


def test_brute_occurs_on_a_star():
    star = fixture('STAR', 4).instance
    assert brute_occurs(rule_pattern(RuleId.BTP), star, 0)
    assert not brute_occurs(rule_pattern(RuleId.BTP), star, 1)
    assert not brute_occurs(rule_pattern(RuleId.EXISTS_SNAKE), star, 0, {VALUE_A: 0})


def test_brute_occurs_limit(nonconf):
    with pytest.raises(SizeLimitError):
        brute_occurs(rule_pattern(RuleId.EXISTS_2_SNAKE), nonconf, 0, {VALUE_A: 0, VALUE_B: 1}, limit=0)


def test_injective_mappings(k4):
    pattern = rule_pattern(RuleId.NS)
    mappings = list(injective_mappings(pattern, k4, 0))
    assert len(mappings) == 12
    assert all(m[VALUE_A] != m[VALUE_B] for m in mappings)
    assert len(list(injective_mappings(rule_pattern(RuleId.BTP), k4, 0))) == 1


@pytest.mark.parametrize('name', ['K4_COLOUR', 'BOOL3', 'NONCONF', 'K3_2COL', 'I2'])
def test_cross_check_small_fixtures(name):
    report = cross_check(fixture(name).instance)
    assert report.ok, report.disagreements
    assert report.checked > 0


def test_cross_check_budget_skips(k4):
    report = cross_check(k4, names=['Exists2Snake', 'Triangle'], budget=0)
    assert report.skipped == 2
    assert report.checked == 0
    assert report.ok


def test_check_preprocessing_on_fixtures():
    for name in ('K4_COLOUR', 'BOOL3', 'NONCONF', 'K3_2COL', 'ISAT3', 'STAR'):
        assert check_preprocessing(fixture(name).instance) == [], name
