import pytest

from csp_prune.core.errors import ContractError, InstanceError
from csp_prune.core.transform.arc_consistency import is_arc_consistent
from csp_prune.fixtures import (
    FIXTURE_NAMES,
    all_fixtures,
    canonical_name,
    fixture,
    random_instance,
    random_tree_instance,
    verify_fixture,
    wrap_with_selector,
)
from csp_prune.oracle import count_solutions


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_fixture_claims_hold(name):
    assert verify_fixture(fixture(name)) == []


@pytest.mark.parametrize('name, param', [
    ('STAR', 3), ('STAR', 6), ('I4K', 4), ('I4K', 6), ('ISAT3', 1), ('ISAT3', 4),
    ('ISAT2K1', 1), ('I3', 3), ('I32K', 2),
])
def test_parameter_variants(name, param):
    fx = fixture(name, param)
    assert fx.params == (param,)
    assert verify_fixture(fx) == []


def test_interchangeable_values_have_no_substitution_pattern():
    fx = fixture('I4K', 6)
    mappings = [claim.mapping for claim in fx.expected.absent_patterns if claim.pattern == 'NS']
    assert len(mappings) == 6
    assert {(m[0], m[1]) for m in mappings} == {(a, b) for a in (4, 5, 6) for b in (4, 5, 6) if a != b}
    assert verify_fixture(fx) == []


@pytest.mark.parametrize('inner, count', [('BOOL3', 5), ('I2', 2), ('K3', 1)])
def test_selector_wrapping(inner, count):
    fx = fixture('IJ', inner=inner)
    assert fx.expected.solution_count == count
    assert verify_fixture(fx) == []


def test_selector_adds_one_solution(k4):
    wrapped = wrap_with_selector(k4)
    assert wrapped.var_count == 5
    assert count_solutions(wrapped) == count_solutions(k4) + 1


def test_aliases():
    assert canonical_name('I∃4') == 'IE4'
    assert canonical_name('i3+') == 'I3PLUS'
    assert canonical_name('k4') == 'K4_COLOUR'
    assert fixture('K3').name == 'K3_2COL'


@pytest.mark.parametrize('call', [
    lambda: fixture('PENTAGON'),
    lambda: fixture('STAR', 2),
    lambda: fixture('I4K', 3),
    lambda: fixture('BOOL3', 1),
    lambda: fixture('STAR', 4, 5),
    lambda: fixture('IJ', 3),
])
def test_bad_lookups(call):
    with pytest.raises(ContractError):
        call()


def test_all_fixtures():
    fixtures = all_fixtures()
    assert [fx.name for fx in fixtures] == list(FIXTURE_NAMES)
    assert all(is_arc_consistent(fx.instance) for fx in fixtures)


# ---- random instances -----------------------------------------------------------------

def test_random_instance_is_seeded_and_arc_consistent():
    first = random_instance(5, 3, 0.6, 0.3, seed=11)
    second = random_instance(5, 3, 0.6, 0.3, seed=11)
    assert first == second
    assert first.fingerprint() == second.fingerprint()
    assert is_arc_consistent(first)


def test_random_instance_gives_up():
    with pytest.raises(InstanceError):
        random_instance(2, 2, 1.0, 1.0, seed=0, max_attempts=3)


def test_random_instance_checks_ratios():
    with pytest.raises(ContractError):
        random_instance(3, 2, 1.5, 0.2)
    with pytest.raises(ContractError):
        random_tree_instance(0, 2, 0.2)


@pytest.mark.parametrize('seed', range(5))
def test_random_tree_instance(seed):
    tree = random_tree_instance(6, 3, 0.5, seed=seed)
    assert is_arc_consistent(tree)
    assert tree.nontrivial_constraint_count() <= 5
    assert tree == random_tree_instance(6, 3, 0.5, seed=seed)
