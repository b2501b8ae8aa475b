from .named_instances import (
    AbsenceClaim,
    EliminationClaim,
    ExpectedProperties,
    Fixture,
    FIXTURE_NAMES,
    all_fixtures,
    canonical_name,
    fixture,
    verify_fixture,
    wrap_with_selector,
)
from .random_instances import random_instance, random_tree_instance

__all__ = [
    'AbsenceClaim',
    'EliminationClaim',
    'ExpectedProperties',
    'Fixture',
    'FIXTURE_NAMES',
    'all_fixtures',
    'canonical_name',
    'fixture',
    'verify_fixture',
    'wrap_with_selector',
    'random_instance',
    'random_tree_instance',
]
