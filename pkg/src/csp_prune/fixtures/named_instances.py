# Named instances with known properties: counterexamples showing that a
# pattern licenses no elimination, worked preprocessing examples, and the
# families used for solution recovery.

from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from ..core.algebra import occurs_anywhere, occurs_at
from ..core.catalog import get_pattern, rule_pattern
from ..core.constants import VALUE_A, VALUE_B, RuleId
from ..core.errors import ContractError, CspPruneError
from ..core.instance import Instance, PartialAssignment, make_instance
from ..core.transform.arc_consistency import is_arc_consistent
from ..oracle import count_solutions, solve

Tuples = List[Tuple[int, int]]


@dataclass(frozen=True)
class AbsenceClaim:
    """A pattern that does not occur at the focus variable (or anywhere)."""
    pattern: str
    # None: every injective mapping, with the distinguished value sent to the removable value
    mapping: Optional[Dict[int, int]] = None
    anywhere: bool = False


@dataclass(frozen=True)
class EliminationClaim:
    """A rule pattern absent at a variable under a mapping, and the solution count after the removal."""
    var: int
    rule: RuleId
    mapping: Dict[int, int]
    val: Optional[int] = None
    reduced_count: Optional[int] = None


@dataclass
class ExpectedProperties:
    satisfiable: bool
    solution_count: Optional[int] = None
    focus_var: Optional[int] = None
    # partial solution on every variable except focus_var
    partial_solution: Optional[PartialAssignment] = None
    # value of focus_var in some solution whose removal leaves no solution
    removable_value: Optional[int] = None
    absent_patterns: Tuple[AbsenceClaim, ...] = ()
    eliminations: Tuple[EliminationClaim, ...] = ()


@dataclass
class Fixture:
    name: str
    params: Tuple[int, ...]
    description: str
    instance: Instance
    expected: ExpectedProperties = field(default_factory=lambda: ExpectedProperties(True))

    def __repr__(self) -> str:
        params = f"({', '.join(map(str, self.params))})" if self.params else ''
        return f'<Fixture {self.name}{params} {self.instance!r}>'


# ---- relation helpers ------------------------------------------------------

def _pairs(left: Iterable[int], right: Iterable[int], allowed: Callable[[int, int], bool]) -> Tuples:
    right = list(right)
    return [(a, b) for a in left for b in right if allowed(a, b)]


BOOL = (0, 1)


def _clause(i: int, j: int, allowed: Callable[[int, int], bool], left=BOOL, right=BOOL):
    return (i, j, _pairs(left, right, allowed))


def _check_param(name: str, value: int, minimum: int) -> int:
    if not isinstance(value, int) or value < minimum:
        raise ContractError(f"Fixture {name} needs a parameter >= {minimum}, got {value}")
    return value


# ---- unsatisfiable instances with a partial solution ----------------------

def _k3_2col() -> Fixture:
    constraints = [_clause(i, j, lambda a, b: a != b) for i, j in ((0, 1), (0, 2), (1, 2))]
    return Fixture(
        'K3_2COL', (), '2-colouring of a triangle',
        make_instance(3, [BOOL] * 3, constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=2,
            partial_solution={0: 0, 1: 1},
            absent_patterns=tuple(
                AbsenceClaim(name, anywhere=True) for name in ('Diamond', 'Z', 'XL', 'Triangle')
            ),
        ),
    )


R_SWAP = {(0, 0), (1, 2), (2, 1)}


def _ie4() -> Fixture:
    low, x = (0, 1, 2), 3
    constraints = [(i, j, sorted(R_SWAP)) for i, j in ((0, 1), (0, 2), (1, 2))]
    constraints += [
        (i, x, _pairs(low, range(4), lambda a, b, i=i: a > 0 or b == i + 1)) for i in range(3)
    ]
    return Fixture(
        'IE4', (), 'three swap-related variables that each need x to point at them when zero',
        make_instance(4, [low] * 3 + [range(4)], constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=x,
            partial_solution={0: 0, 1: 0, 2: 0},
            absent_patterns=(
                AbsenceClaim('VPlusMinus', {VALUE_A: 0}),
                AbsenceClaim('TriangleAsym', {VALUE_A: 0}),
            ),
        ),
    )


def _i4() -> Fixture:
    x, values = 3, (1, 2, 3)
    constraints = [_clause(i, j, lambda a, b: bool(a or b)) for i, j in ((0, 1), (0, 2), (1, 2))]
    constraints += [
        (i, x, _pairs(BOOL, values, lambda a, b, i=i: bool(a) == (b == i + 1))) for i in range(3)
    ]
    return Fixture(
        'I4', (), 'pairwise disjunctions with x selecting the single true variable',
        make_instance(4, [BOOL] * 3 + [values], constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=x,
            partial_solution={0: 1, 1: 1, 2: 1},
            absent_patterns=(AbsenceClaim('KiteSym', {}),),
        ),
    )


def _izoa4() -> Fixture:
    x, values = 3, (1, 2, 3)
    constraints = [(i, j, _pairs(values, values, lambda a, b: a == b)) for i, j in ((0, 1), (0, 2), (1, 2))]
    constraints += [
        (i, x, _pairs(values, values, lambda a, b, i=i: a == i + 1 or b == i + 1)) for i in range(3)
    ]
    return Fixture(
        'IZOA4', (), 'three equal variables, each needing its own value or x to match',
        make_instance(4, [values] * 4, constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=x,
            partial_solution={0: 1, 1: 1, 2: 1},
            absent_patterns=(AbsenceClaim('KiteAsym', {}),),
        ),
    )


def _i7() -> Fixture:
    low, x = (0, 1, 2), 6
    r0 = [(0, 0), (1, 1), (2, 1)]
    r1 = [(0, 1), (1, 0), (2, 0)]
    constraints = []
    for group in ((0, 1, 2), (3, 4, 5)):
        constraints += [(group[i], group[j], sorted(R_SWAP)) for i, j in ((0, 1), (0, 2), (1, 2))]
    constraints += [(i, x, r0) for i in (0, 1, 2)]
    constraints += [(i, x, r1) for i in (3, 4, 5)]
    return Fixture(
        'I7', (), 'two swap-related triples pulling x to opposite values',
        make_instance(7, [low] * 6 + [BOOL], constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=x,
            partial_solution={v: 0 for v in range(6)},
            absent_patterns=(AbsenceClaim('RotSubBTP', {}),),
        ),
    )


def _isat4() -> Fixture:
    x = 3
    constraints = [
        _clause(0, 1, lambda a, b: a == b),
        _clause(0, 2, lambda a, b: a == b),
        _clause(1, 2, lambda a, b: bool(a or b)),
        _clause(1, x, lambda a, b: not a or bool(b)),
        _clause(2, x, lambda a, b: not a or not b),
    ]
    return Fixture(
        'ISAT4', (), '2SAT forcing x both true and false',
        make_instance(4, [BOOL] * 4, constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=x,
            partial_solution={0: 1, 1: 1, 2: 1},
            absent_patterns=(AbsenceClaim('PivotSym', {}),),
        ),
    )


def _isat6() -> Fixture:
    x = 5
    constraints = [
        _clause(0, 1, lambda a, b: not a or not b),
        _clause(0, 3, lambda a, b: not a or not b),
        _clause(0, 2, lambda a, b: bool(a) or not b),
        _clause(0, 4, lambda a, b: bool(a) or not b),
        _clause(1, x, lambda a, b: bool(a) or not b),
        _clause(3, x, lambda a, b: bool(a) or bool(b)),
        _clause(2, x, lambda a, b: bool(a) or not b),
        _clause(4, x, lambda a, b: bool(a) or bool(b)),
    ]
    return Fixture(
        'ISAT6', (), '2SAT in which either value of x forces a contradiction at x1',
        make_instance(6, [BOOL] * 6, constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=x,
            partial_solution={0: 0, 1: 0, 2: 0, 3: 0, 4: 0},
            absent_patterns=(
                AbsenceClaim('PivotAsym', {}),
                AbsenceClaim('Cycle3', anywhere=True),
            ),
        ),
    )


def _i4k(k: int = 5) -> Fixture:
    _check_param('I4K', k, 4)
    low, x, values = (0, 1, 2), 3, range(1, k + 1)
    constraints = [
        (i, j, _pairs(low, low, lambda a, b: a == 2 - b)) for i, j in ((0, 1), (0, 2), (1, 2))
    ]
    constraints += [
        (i, x, _pairs(low, values, lambda a, b, i=i: a != 1 or b == i + 1)) for i in range(3)
    ]
    eliminations: Tuple[EliminationClaim, ...] = ()
    absent: Tuple[AbsenceClaim, ...] = ()
    if k >= 5:
        # values 4..k of x have identical compatibilities
        absent = tuple(
            AbsenceClaim('NS', {VALUE_A: a, VALUE_B: b}) for a, b in permutations(range(4, k + 1), 2)
        )
        mapping = {VALUE_A: 4, VALUE_B: k}
        eliminations = (EliminationClaim(x, RuleId.NS, mapping, val=k, reduced_count=0),)
    return Fixture(
        'I4K', (k,), 'reflected triple with x in 1..k and interchangeable values above 3',
        make_instance(4, [low] * 3 + [values], constraints),
        ExpectedProperties(
            satisfiable=False, solution_count=0, focus_var=x,
            partial_solution={0: 1, 1: 1, 2: 1},
            absent_patterns=absent,
            eliminations=eliminations,
        ),
    )


# ---- satisfiable instances with an essential value ------------------------

def _isat3(k: int = 3) -> Fixture:
    _check_param('ISAT3', k, 1)
    x, values = 2, range(k + 1)
    constraints = [
        _clause(0, 1, lambda a, b: not a or not b),
        (0, x, _pairs(BOOL, values, lambda a, b: bool(a) or b == 0)),
        (1, x, _pairs(BOOL, values, lambda a, b: bool(a) or b == 0)),
    ]
    return Fixture(
        'ISAT3', (k,), 'x must be 0 because x1 and x2 cannot both be true',
        make_instance(3, [BOOL, BOOL, values], constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=3, focus_var=x, removable_value=0,
            absent_patterns=(AbsenceClaim('IMinus'),),
        ),
    )


def _isat2k1(k: int = 2) -> Fixture:
    _check_param('ISAT2K1', k, 1)
    x, values = 2 * k, range(k + 1)
    constraints = []
    for i in range(1, k + 1):
        first, second = 2 * i - 2, 2 * i - 1
        constraints.append(_clause(first, second, lambda a, b: not a or not b))
        for v in (first, second):
            constraints.append((v, x, _pairs(BOOL, values, lambda a, b, i=i: bool(a) or b != i)))
    return Fixture(
        'ISAT2K1', (k,), 'x = i forces an exclusive pair of variables true',
        make_instance(2 * k + 1, [BOOL] * (2 * k) + [values], constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=3 ** k, focus_var=x, removable_value=0,
            absent_patterns=(AbsenceClaim('IMinus'),),
        ),
    )


def _i3(k: int = 2) -> Fixture:
    _check_param('I3', k, 1)
    x, values = 2, range(k + 1)
    constraints = [
        (0, 1, _pairs(values, values, lambda a, b: a == 0 or b == 0)),
        (0, x, _pairs(values, values, lambda a, b: a == b)),
        (1, x, _pairs(values, values, lambda a, b: a == b)),
    ]
    return Fixture(
        'I3', (k,), 'x copied into two variables of which one must be zero',
        make_instance(3, [values] * 3, constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=1, focus_var=x, removable_value=0,
            absent_patterns=(
                AbsenceClaim('LPlusMinus'),
                AbsenceClaim('Triangle2'),
                AbsenceClaim('ExistsKite1'),
            ),
        ),
    )


def _i3plus(k: int = 2) -> Fixture:
    _check_param('I3PLUS', k, 1)
    x, values = 3, range(k + 1)
    equal = _pairs(values, values, lambda a, b: a == b)
    constraints = [
        (0, 1, _pairs(values, values, lambda a, b: a == 0 or b == 0)),
        (0, 2, equal),
        (1, 2, equal),
        (2, x, equal),
    ]
    return Fixture(
        'I3PLUS', (k,), 'x copied through x3 into two variables of which one must be zero',
        make_instance(4, [values] * 4, constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=1, focus_var=x, removable_value=0,
            absent_patterns=(AbsenceClaim('LMinus', {}),),
        ),
    )


def _i32k(k: int = 1) -> Fixture:
    _check_param('I32K', k, 1)
    x, values = 2, range(2 * k + 1)
    constraints = [
        (0, 1, _pairs(values, values, lambda a, b: a == 2 * k - b)),
        (0, x, _pairs(values, values, lambda a, b: a == b)),
        (1, x, _pairs(values, values, lambda a, b: a == b)),
    ]
    return Fixture(
        'I32K', (k,), 'x copied into two variables that must sum to 2k',
        make_instance(3, [values] * 3, constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=1, focus_var=x, removable_value=k,
            absent_patterns=(
                AbsenceClaim('Triangle1'),
                AbsenceClaim('ExistsKite'),
                AbsenceClaim('ExistsKiteAsym'),
                AbsenceClaim('Diamond', anywhere=True),
                AbsenceClaim('Z', anywhere=True),
            ),
        ),
    )


def _i2() -> Fixture:
    return Fixture(
        'I2', (), 'two equal variables with singleton domains',
        make_instance(2, [(0,), (0,)], [(0, 1, [(0, 0)])]),
        ExpectedProperties(satisfiable=True, solution_count=1, focus_var=0, removable_value=0),
    )


# ---- worked preprocessing examples -----------------------------------------

def _k4_colour() -> Fixture:
    domains = [(0, 1, 2, 3), (0, 1), (0, 2), (0, 3)]
    constraints = [
        (i, j, _pairs(domains[i], domains[j], lambda a, b: a != b))
        for i in range(4) for j in range(i + 1, 4)
    ]
    return Fixture(
        'K4_COLOUR', (), 'list colouring of K4',
        make_instance(4, domains, constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=4, focus_var=0,
            eliminations=(
                EliminationClaim(0, RuleId.EXISTS_2_SNAKE, {VALUE_A: 0, VALUE_B: 1}, val=1, reduced_count=3),
            ),
        ),
    )


def _bool3() -> Fixture:
    x, y, z = 0, 1, 2
    constraints = [
        _clause(x, z, lambda a, c: not a or bool(c)),
        _clause(y, z, lambda b, c: bool(b) or bool(c)),
        _clause(x, y, lambda a, b: not a or not b),
    ]
    return Fixture(
        'BOOL3', (), 'three Boolean clauses reduced to singletons',
        make_instance(3, [BOOL] * 3, constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=4, focus_var=x,
            eliminations=(
                EliminationClaim(x, RuleId.EXISTS_2_INV_SUB_BTP, {VALUE_A: 1, VALUE_B: 0}, val=0, reduced_count=1),
            ),
        ),
    )


R_NONCONF = [(0, 0), (0, 2), (1, 1), (2, 1), (2, 2)]


def _nonconf() -> Fixture:
    low = (0, 1, 2)
    constraints = [
        (0, 1, _pairs(low, low, lambda a, b: a != 2 or b != 2)),
        (0, 2, R_NONCONF),
        (1, 2, R_NONCONF),
    ]
    return Fixture(
        'NONCONF', (), 'value eliminations whose result depends on their order',
        make_instance(3, [low] * 3, constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=7, focus_var=2,
            eliminations=(
                EliminationClaim(2, RuleId.EXISTS_2_SNAKE, {VALUE_A: 0, VALUE_B: 1}, val=1, reduced_count=4),
                EliminationClaim(2, RuleId.EXISTS_2_SNAKE, {VALUE_A: 2, VALUE_B: 0}, val=0, reduced_count=6),
            ),
        ),
    )


# ---- solution recovery -------------------------------------------------------

def _star(n: int = 4) -> Fixture:
    _check_param('STAR', n, 3)
    constraints = [_clause(0, leaf, lambda a, b: a != b) for leaf in range(1, n)]
    leaves_free = 2 ** (n - 1)
    return Fixture(
        'STAR', (n,), f'2-colouring of a star with centre 0 and {n - 1} leaves',
        make_instance(n, [BOOL] * n, constraints),
        ExpectedProperties(
            satisfiable=True, solution_count=2, focus_var=0,
            eliminations=(
                EliminationClaim(0, RuleId.EXISTS_INV_SUB_BTP, {VALUE_A: 0}, reduced_count=leaves_free),
                EliminationClaim(0, RuleId.EXISTS_SNAKE, {VALUE_A: 0}, reduced_count=leaves_free),
            ),
        ),
    )


def wrap_with_selector(inner: Instance) -> Instance:
    """
    Add a Boolean selector x (last variable) to an instance.

    Every value v of the inner instance becomes v + 1 and a new value 0,
    compatible with everything, is added. x = 0 allows only 0 elsewhere and
    x = 1 allows only the shifted inner values, so the result has one
    solution more than the inner instance.
    """
    n = inner.var_count
    domains: List[Sequence[int]] = [[0] + [a + 1 for a in inner.domain(v)] for v in range(n)]
    constraints = []
    for v, w in inner.stored_pairs():
        matrix = inner.relation(v, w)
        allowed = [(0, b) for b in domains[w]] + [(a, 0) for a in domains[v] if a]
        allowed += [(a + 1, b + 1) for a in inner.domain(v) for b in inner.domain(w) if matrix[a, b]]
        constraints.append((v, w, allowed))
    for v in range(n):
        constraints.append((v, n, [(0, 0)] + [(a, 1) for a in domains[v] if a]))
    return make_instance(n + 1, domains + [BOOL], constraints)


def _ij(inner: Optional[Fixture] = None) -> Fixture:
    inner = inner or _k3_2col()
    x = inner.instance.var_count
    inner_count = inner.expected.solution_count
    if inner_count is None:
        inner_count = count_solutions(inner.instance)
    return Fixture(
        'IJ', inner.params, f'selector wrapped around {inner.name}',
        wrap_with_selector(inner.instance),
        ExpectedProperties(
            satisfiable=True, solution_count=1 + inner_count, focus_var=x,
            eliminations=tuple(
                EliminationClaim(x, rule, {VALUE_A: 0, VALUE_B: 1}, val=1, reduced_count=1)
                for rule in (RuleId.EXISTS_2_INV_SUB_BTP, RuleId.EXISTS_2_SNAKE)
            ),
        ),
    )


_BUILDERS: Dict[str, Callable[..., Fixture]] = {
    'K3_2COL': _k3_2col,
    'IE4': _ie4,
    'I4': _i4,
    'IZOA4': _izoa4,
    'I7': _i7,
    'ISAT4': _isat4,
    'ISAT6': _isat6,
    'I4K': _i4k,
    'ISAT3': _isat3,
    'ISAT2K1': _isat2k1,
    'I3': _i3,
    'I3PLUS': _i3plus,
    'I32K': _i32k,
    'I2': _i2,
    'K4_COLOUR': _k4_colour,
    'BOOL3': _bool3,
    'NONCONF': _nonconf,
    'STAR': _star,
    'IJ': _ij,
}

FIXTURE_NAMES: Tuple[str, ...] = tuple(_BUILDERS)

_ALIASES = {'I∃4': 'IE4', 'I3+': 'I3PLUS', 'K4': 'K4_COLOUR', 'K3': 'K3_2COL'}


def canonical_name(name: str) -> str:
    key = name.strip().upper()
    key = _ALIASES.get(key, key)
    if key not in _BUILDERS:
        raise ContractError(f"Unknown fixture '{name}' (known: {', '.join(FIXTURE_NAMES)})")
    return key


def fixture(name: str, *params: int, inner: Optional[str] = None) -> Fixture:
    """
    Build a named instance together with its expected properties.

    Args:
        name: fixture name, case-insensitive
        params: size parameter (k or n) for the parameterised families
        inner: for IJ, the fixture wrapped by the selector

    Returns:
        Fixture with an arc-consistent instance
    """
    key = canonical_name(name)
    builder = _BUILDERS[key]
    if key == 'IJ':
        if params:
            raise ContractError("IJ takes no size parameter; pass the inner fixture instead")
        result = builder(fixture(inner) if inner else None)
    else:
        if len(params) > 1:
            raise ContractError(f"Fixture {key} takes at most one parameter")
        try:
            result = builder(*params)
        except TypeError:
            raise ContractError(f"Fixture {key} takes no parameter")
    if not is_arc_consistent(result.instance):
        raise CspPruneError(f"Fixture {key} is not arc-consistent")
    return result


def all_fixtures() -> List[Fixture]:
    """Every fixture with its default parameters."""
    return [fixture(name) for name in FIXTURE_NAMES]


# ---- verification ------------------------------------------------------------

def _mappings(claim: AbsenceClaim, fx: Fixture) -> List[Dict[int, int]]:
    pattern = get_pattern(claim.pattern).pattern
    if claim.mapping is not None:
        return [dict(claim.mapping)]
    x = fx.expected.focus_var
    existential = sorted(pattern.existential)
    fixed: Dict[int, int] = {}
    if pattern.distinguished_val is not None and fx.expected.removable_value is not None:
        fixed[pattern.distinguished_val] = fx.expected.removable_value
    free = [a for a in existential if a not in fixed]
    result = []
    for images in permutations(fx.instance.domain(x), len(free)):
        mapping = dict(fixed)
        mapping.update(zip(free, images))
        if len(set(mapping.values())) == len(mapping):
            result.append(mapping)
    return result


def _without_value(instance: Instance, v: int, a: int) -> Instance:
    reduced = instance.copy()
    reduced.remove_value(v, a)
    return reduced


def _with_only_value(instance: Instance, v: int, a: int) -> Instance:
    reduced = instance.copy()
    for b in instance.domain(v):
        if b != a:
            reduced.remove_value(v, b)
    return reduced


def verify_fixture(fx: Fixture) -> List[str]:
    """Check every expected property of a fixture; returns the failures, empty when all hold."""
    problems: List[str] = []
    instance, expected = fx.instance, fx.expected
    x = expected.focus_var

    if not is_arc_consistent(instance):
        problems.append("instance is not arc-consistent")
    solution = solve(instance)
    if (solution is not None) != expected.satisfiable:
        problems.append(f"expected satisfiable={expected.satisfiable}")
    if solution is not None and not instance.is_solution(solution):
        problems.append(f"oracle returned a non-solution {solution}")
    if expected.solution_count is not None:
        count = count_solutions(instance)
        if count != expected.solution_count:
            problems.append(f"expected {expected.solution_count} solutions, found {count}")

    if expected.partial_solution is not None:
        others = set(instance.variables()) - {x}
        if set(expected.partial_solution) != others:
            problems.append("partial solution does not cover every other variable")
        elif not instance.is_partial_solution(expected.partial_solution):
            problems.append(f"{expected.partial_solution} is not a partial solution")

    if expected.removable_value is not None:
        b = expected.removable_value
        if solve(_with_only_value(instance, x, b)) is None:
            problems.append(f"no solution assigns {b} to variable {x}")
        if len(instance.domain(x)) > 1 and solve(_without_value(instance, x, b)) is not None:
            problems.append(f"removing value {b} of variable {x} keeps the instance satisfiable")

    for claim in expected.absent_patterns:
        pattern = get_pattern(claim.pattern).pattern
        if claim.anywhere:
            if occurs_anywhere(pattern, instance) is not None:
                problems.append(f"{claim.pattern} occurs in the instance")
            continue
        for mapping in _mappings(claim, fx):
            if occurs_at(pattern, instance, x, mapping) is not None:
                problems.append(f"{claim.pattern} occurs at variable {x} under {mapping}")

    for claim in expected.eliminations:
        if occurs_at(rule_pattern(claim.rule), instance, claim.var, claim.mapping) is not None:
            problems.append(f"{claim.rule} occurs at variable {claim.var} under {claim.mapping}")
        if claim.reduced_count is None:
            continue
        reduced = instance.copy()
        if claim.val is None:
            reduced.remove_variable(claim.var)
        else:
            reduced.remove_value(claim.var, claim.val)
        count = count_solutions(reduced)
        if count != claim.reduced_count:
            problems.append(
                f"expected {claim.reduced_count} solutions after the {claim.rule} elimination, found {count}"
            )
    return problems
