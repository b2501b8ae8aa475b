from dataclasses import replace

import pytest

from csp_prune.core.config import EngineConfig
from csp_prune.core.constants import RuleId
from csp_prune.core.errors import ContractError, ReconstructionError, UnsupportedTraceError
from csp_prune.core.instance import make_instance
from csp_prune.core.solution_set import SolutionSet
from csp_prune.core.trace import EliminationTrace, RecordKind, VariableSnapshot
from csp_prune.core.transform import extend_btp, extend_via_t, preprocess, recover_all, recover_one
from csp_prune.core.transform.reconstruction import extension_context
from csp_prune.fixtures import fixture
from csp_prune.oracle import enumerate_solutions, solve


@pytest.fixture
def substitutable():
    """<x0, 0> and <x0, 2> can both be replaced by <x0, 1>."""
    return make_instance(2, [(0, 1, 2), (0, 1)], [(0, 1, [(0, 0), (0, 1), (1, 0), (1, 1), (2, 0)])])


def bare(trace):
    records = [replace(record, snapshot=None, edges=None) for record in trace]
    return EliminationTrace(trace.fingerprint, records, trace.wipeout)


# ---- single reinstatement -----------------------------------------------------------

def test_extend_btp_picks_least_compatible_value(path3):
    assert extend_btp(path3, 0, {1: 0}) == {0: 1, 1: 0}
    assert extend_btp(path3, 1, {0: 1, 2: 1}) == {0: 1, 1: 0, 2: 1}


def test_extend_btp_without_candidate(path3):
    with pytest.raises(ReconstructionError):
        extend_btp(path3, 1, {0: 0, 2: 1})


def test_extend_via_t_reassigns_conflicts(path3):
    assert extend_via_t(path3, 1, {0: 0, 2: 0}, 0) == {0: 1, 1: 0, 2: 1}
    # compatible neighbours keep their values
    assert extend_via_t(path3, 1, {0: 1, 2: 0}, 0) == {0: 1, 1: 0, 2: 1}


def test_extension_context(path3):
    context = extension_context(path3, 1, {0: 1, 2: 0}, 0)
    assert context.compatible == {0}
    assert context.incompatible == {2}
    assert context.reassignment == {2: 1}


def test_extend_via_t_from_snapshot(path3):
    snapshot = VariableSnapshot.capture(path3, 1)
    path3.remove_variable(1)
    assert extend_via_t(snapshot, 1, {0: 1, 2: 1}, 1) == {0: 0, 1: 1, 2: 0}


def test_extend_rejects_bad_step(path3):
    with pytest.raises(ContractError):
        extend_via_t(path3, 1, {0: 0}, 2)
    snapshot = VariableSnapshot.capture(path3, 0)
    with pytest.raises(ContractError):
        extend_btp(snapshot, 1, {})
    path3.remove_variable(2)
    with pytest.raises(ContractError):
        extend_btp(path3, 2, {})


# ---- one solution -------------------------------------------------------------------

def test_recover_one_through_btp(path3):
    reduced, trace = preprocess(path3)
    assert reduced.present_count == 0
    solution = recover_one(None, trace, {})
    assert solution == {0: 0, 1: 1, 2: 0}
    assert path3.is_solution(solution)


def test_recover_one_keeps_value_eliminations(k4, snake_only):
    reduced, trace = preprocess(k4, snake_only)
    s = solve(reduced)
    assert s == {0: 0, 1: 1, 2: 2, 3: 3}
    assert recover_one(None, trace, s) == s


@pytest.mark.parametrize('n', [4, 7])
def test_recover_one_through_snake(n):
    star = fixture('STAR', n).instance
    reduced, trace = preprocess(star, EngineConfig(rules=(RuleId.EXISTS_SNAKE,), max_steps=1))
    solution = recover_one(None, trace, solve(reduced))
    assert solution == {0: 0, **{leaf: 1 for leaf in range(1, n)}}
    assert star.is_solution(solution)


@pytest.mark.parametrize('n', range(4, 11))
def test_recover_one_from_every_reduced_star_solution(n):
    star = fixture('STAR', n).instance
    reduced, trace = preprocess(star, EngineConfig(rules=(RuleId.EXISTS_SNAKE,), max_steps=1))
    reduced_solutions = enumerate_solutions(reduced)
    assert reduced_solutions.count == 2 ** (n - 1)
    for s in reduced_solutions:
        assert star.is_solution(recover_one(None, trace, s))


def test_recover_one_from_parsed_trace(path3):
    _, trace = preprocess(path3)
    with pytest.raises(ContractError):
        recover_one(None, bare(trace), {})
    assert recover_one(path3, bare(trace), {}) == {0: 0, 1: 1, 2: 0}


# ---- all solutions ------------------------------------------------------------------

def test_recover_all_through_btp(path3):
    reduced, trace = preprocess(path3)
    recovered = recover_all(None, trace, enumerate_solutions(reduced))
    assert recovered == enumerate_solutions(path3)
    assert recovered.count == 2


def test_recover_all_through_substitution(substitutable):
    config = EngineConfig(rules=(RuleId.NS,), var_elim=False)
    reduced, trace = preprocess(substitutable, config)
    assert [(r.var, r.val, r.mapping) for r in trace.of_kind(RecordKind.VAL)] == [
        (0, 0, {0: 1, 1: 0}), (0, 2, {0: 1, 1: 2}), (1, 0, {0: 1, 1: 0}),
    ]
    reduced_solutions = enumerate_solutions(reduced)
    assert reduced_solutions.count == 1
    recovered = recover_all(substitutable, bare(trace), reduced_solutions)
    assert recovered == enumerate_solutions(substitutable)
    assert recovered.count == 5
    assert recovered.validate(substitutable)


def test_recover_all_rejects_existential_rules(k4, snake_only):
    reduced, trace = preprocess(k4, snake_only)
    with pytest.raises(UnsupportedTraceError) as info:
        recover_all(None, trace, enumerate_solutions(reduced))
    assert info.value.rule == RuleId.EXISTS_2_SNAKE


def test_recover_all_rejects_star_elimination():
    star = fixture('STAR', 4).instance
    reduced, trace = preprocess(star, EngineConfig(rules=(RuleId.EXISTS_SNAKE,), max_steps=1))
    with pytest.raises(UnsupportedTraceError, match='ExistsSnake'):
        recover_all(star, trace, SolutionSet(reduced.variables()))
