import pytest

from csp_prune.core.instance import make_instance
from csp_prune.core.transform.arc_consistency import enforce_ac, is_arc_consistent
from csp_prune.core.transform.arc_consistency.revise import revise_pass, unsupported_values
from csp_prune.fixtures import FIXTURE_NAMES, fixture

NE = [(0, 1), (1, 0)]


def test_propagation_order():
    instance = make_instance(3, [(0,), (0, 1), (0, 1)], [(0, 1, NE), (1, 2, NE)])
    assert not is_arc_consistent(instance)
    result = enforce_ac(instance)
    assert result.removed == [(1, 0), (2, 1)]
    assert result.wipeout is None
    assert result.changed
    assert [instance.domain(v) for v in range(3)] == [(0,), (1,), (0,)]
    assert is_arc_consistent(instance)


def test_wipeout_stops_propagation():
    instance = make_instance(2, [(0,), (0,)], [(0, 1, NE)])
    result = enforce_ac(instance)
    assert result.wipeout == 0
    assert result.removed == [(0, 0)]
    assert not is_arc_consistent(instance)


def test_arc_consistent_instance_is_untouched(k4):
    before = k4.fingerprint()
    result = enforce_ac(k4)
    assert not result.changed
    assert k4.fingerprint() == before


def test_touched_restricts_initial_queue(path3):
    path3.remove_value(0, 1)
    result = enforce_ac(path3, touched=[0])
    assert result.removed == [(1, 0), (2, 1)]


def test_revise_pass():
    instance = make_instance(2, [(0, 1, 2), (0,)], [(0, 1, [(1, 0)])])
    assert unsupported_values(instance, 0, 1) == [0, 2]
    assert revise_pass(instance, 0, 1) == [0, 2]
    assert instance.domain(0) == (1,)
    assert revise_pass(instance, 0, 1) == []


def test_eliminated_variables_give_no_support_constraints():
    instance = make_instance(2, [(0,), (0, 1)], [(0, 1, [(0, 1)])])
    instance.remove_variable(0)
    assert is_arc_consistent(instance)


@pytest.mark.parametrize('name', FIXTURE_NAMES)
def test_fixtures_are_arc_consistent(name):
    assert is_arc_consistent(fixture(name).instance)
