import os
import sys

import pytest

# Add src to path so the tests run from a plain checkout
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', 'src')))

from csp_prune.core.config import EngineConfig  # noqa: E402
from csp_prune.core.constants import RuleId  # noqa: E402
from csp_prune.core.instance import make_instance  # noqa: E402
from csp_prune.fixtures import fixture  # noqa: E402


@pytest.fixture
def k4():
    return fixture('K4_COLOUR').instance


@pytest.fixture
def k3():
    return fixture('K3_2COL').instance


@pytest.fixture
def bool3():
    return fixture('BOOL3').instance


@pytest.fixture
def nonconf():
    return fixture('NONCONF').instance


@pytest.fixture
def path3():
    """x0 - x1 - x2 with inequality on both edges over {0, 1}."""
    ne = [(0, 1), (1, 0)]
    return make_instance(3, [(0, 1)] * 3, [(0, 1, ne), (1, 2, ne)])


@pytest.fixture
def snake_only():
    return EngineConfig(rules=(RuleId.EXISTS_2_SNAKE,), var_elim=False)
