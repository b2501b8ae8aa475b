import pytest

from csp_prune.core.algebra import (
    dangling_reduce,
    equivalent,
    find_embedding,
    is_dangling,
    is_irreducible,
    is_sub_pattern,
    merge,
    mergeable,
    occurs_at,
    occurs_generic,
    reduction_closure,
)
from csp_prune.core.catalog import get_pattern, rule_pattern
from csp_prune.core.constants import DEFAULT_RULE_ORDER
from csp_prune.core.errors import ContractError, PatternError
from csp_prune.core.pattern import Pattern
from csp_prune.fixtures import random_instance
from csp_prune.oracle import injective_mappings

X, Y, Z = 0, 1, 2
A, B = 0, 1
C = D = 0


def p1():
    return Pattern.build([{B}, {C}, {D}], incompatible=[((Y, C), (X, B)), ((Y, C), (Z, D))])


def p2():
    return Pattern.build(
        [{A, B}, {C}, {D}],
        compatible=[((Z, D), (X, A))],
        incompatible=[((Y, C), (Z, D)), ((Y, C), (X, B))],
    )


def p2_quantified():
    return p2().with_quantification(X, {A})


def p3():
    return Pattern.build(
        [{A, B}, {C}, {D}],
        compatible=[((Z, D), (X, A))],
        incompatible=[((Y, C), (Z, D)), ((Y, C), (X, B)), ((X, B), (Z, D))],
    )


def p4():
    return Pattern.build(
        [{B}, {C}, {D}],
        compatible=[((Z, D), (X, B))],
        incompatible=[((Y, C), (X, B)), ((Y, C), (Z, D))],
    )


ELIMINATION_PATTERNS = [
    'BTP', 'ExistsSubBTP', 'ExistsInvSubBTP', 'ExistsSnake',
    'NS', 'Exists2Triangle', 'Exists2InvSubBTP', 'Exists2Snake',
]


# ---- pattern invariants --------------------------------------------------------

def test_edge_on_missing_assignment():
    with pytest.raises(PatternError):
        Pattern.build([{0}, {0}], compatible=[((0, 0), (1, 1))])


def test_existential_value_needs_distinguished_variable():
    with pytest.raises(PatternError):
        Pattern([{0, 1}, {0}], existential={0})


def test_distinguished_value_must_be_existential():
    with pytest.raises(PatternError):
        Pattern([{0, 1}, {0}], distinguished_var=0, existential={0}, distinguished_val=1)


def test_conflicting_edge_listing():
    with pytest.raises(PatternError):
        Pattern.build([{0}, {0}], compatible=[((0, 0), (1, 0))], incompatible=[((1, 0), (0, 0))])


def test_relabel_gives_equivalent_pattern():
    pattern = get_pattern('ExistsSnake').pattern
    renamed = pattern.relabel([2, 0, 1], [{0: 5}, {0: 1, 1: 0}, {0: 3}])
    assert renamed != pattern
    assert equivalent(renamed, pattern)
    assert renamed.distinguished_var == 2
    assert renamed.existential == {5}


# ---- sub-patterns, merging and dangling assignments -----------------------------

def test_sub_pattern_chain():
    assert is_sub_pattern(p1(), p2())
    assert is_sub_pattern(p2(), p3())
    assert not is_sub_pattern(p3(), p2())


def test_quantification_and_sub_patterns():
    assert is_sub_pattern(p2(), p2_quantified())
    assert not is_sub_pattern(p2_quantified(), p2())


def test_mergeable():
    assert mergeable(p2(), X, A, B)
    assert not mergeable(p3(), X, A, B)
    quantified = p2_quantified()
    assert mergeable(quantified, X, B, A)
    assert not mergeable(quantified, X, A, B)


def test_mergeable_needs_two_values():
    with pytest.raises(ContractError):
        mergeable(p2(), X, A, A)


def test_merge_produces_p4():
    merged = merge(p2(), X, A, B)
    assert equivalent(merged, p4())
    # the edge moved from <x,a> to <x,b>
    assert not is_sub_pattern(merged, p2())


def test_distinguished_value_is_never_merged():
    pattern = Pattern([{A, B}, {0}], distinguished_var=X, existential={A, B}, distinguished_val=B)
    assert not mergeable(pattern, X, B, A)
    assert mergeable(pattern, X, A, B)


def test_dangling():
    assert is_dangling(p2(), (X, A))
    assert not is_dangling(p2_quantified(), (X, A))
    assert not is_dangling(p2(), (Y, C))
    assert equivalent(dangling_reduce(p2(), (X, A)), p1())


def test_dangling_reduce_rejects_non_dangling():
    with pytest.raises(PatternError):
        dangling_reduce(p3(), (X, B))


@pytest.mark.parametrize('name', ELIMINATION_PATTERNS)
def test_elimination_patterns_are_irreducible(name):
    assert is_irreducible(get_pattern(name).pattern)


def test_p2_is_reducible():
    assert not is_irreducible(p2())


def test_reduction_closure_contains_reductions():
    closure = reduction_closure(p2())
    assert any(equivalent(pattern, p1()) for pattern in closure)
    assert any(equivalent(pattern, p4()) for pattern in closure)
    assert equivalent(closure[0], p2())


# ---- equivalence and occurrence in patterns ---------------------------------------

def test_equivalence_is_renaming():
    assert equivalent(p2(), p2())
    assert not equivalent(p2(), p3())
    assert not equivalent(p2(), p2_quantified())
    assert find_embedding(p1(), p3()) is not None


def test_occurs_generic_in_patterns():
    assert occurs_generic(p1(), p3())
    # a reduction of p2 is equivalent to p1, itself a sub-pattern of p4
    assert occurs_generic(p2(), p4())
    assert not occurs_generic(p3(), p1())


# ---- search against the definition --------------------------------------------------

@pytest.mark.slow
@pytest.mark.parametrize('seed', range(60))
def test_occurs_at_agrees_with_definition(seed):
    n = 3 + seed % 2
    d = 2 + (seed // 2) % 2
    instance = random_instance(n, d, 0.8, 0.25, seed=seed)
    for rule in DEFAULT_RULE_ORDER:
        pattern = rule_pattern(rule)
        for x in instance.variables():
            for m in injective_mappings(pattern, instance, x):
                found = occurs_at(pattern, instance, x, m) is not None
                assert occurs_generic(pattern, instance, x, m) == found, (rule, x, m)
