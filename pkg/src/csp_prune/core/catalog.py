# Named patterns: the elimination rules and the fixture patterns that are not elimination rules

from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple

from .constants import RuleId, VALUE_A, VALUE_B
from .errors import ContractError
from .pattern import Pattern


class PatternKind(str, Enum):
    VAR_ELIM = 'var-elim'
    VAL_ELIM = 'val-elim'
    NON_ELIM = 'non-elim-fixture'


@dataclass(frozen=True, eq=False)
class CatalogEntry:
    name: str
    label: str
    pattern: Pattern
    kind: PatternKind
    # name of the quantified entry this one flattens
    derived_from: Optional[str] = None

    def __repr__(self) -> str:
        return f'<CatalogEntry {self.name} ({self.kind.value})>'


# Variable positions shared by every three-variable pattern below
X, Y, Z = 0, 1, 2
A, B = VALUE_A, VALUE_B


def _btp() -> Pattern:
    return Pattern.build(
        [{A, B}, {0}, {0}],
        compatible=[((Y, 0), (Z, 0)), ((Y, 0), (X, B)), ((Z, 0), (X, A))],
        incompatible=[((Y, 0), (X, A)), ((Z, 0), (X, B))],
        distinguished_var=X,
    )


def _exists_sub_btp() -> Pattern:
    return Pattern.build(
        [{A, B}, {0}, {0}],
        compatible=[((Y, 0), (Z, 0)), ((Y, 0), (X, B))],
        incompatible=[((Y, 0), (X, A)), ((Z, 0), (X, B))],
        distinguished_var=X,
        existential={A},
    )


# y values p and q
P, Q = 0, 1


def _exists_inv_sub_btp() -> Pattern:
    return Pattern.build(
        [{A}, {P, Q}, {0}],
        compatible=[((Y, Q), (X, A)), ((Z, 0), (X, A))],
        incompatible=[((Y, P), (X, A)), ((Z, 0), (Y, Q))],
        distinguished_var=X,
        existential={A},
    )


def _exists_snake() -> Pattern:
    return Pattern.build(
        [{A}, {P, Q}, {0}],
        compatible=[((Y, Q), (X, A)), ((Y, P), (Z, 0))],
        incompatible=[((Y, P), (X, A)), ((Z, 0), (Y, Q))],
        distinguished_var=X,
        existential={A},
    )


def _ns() -> Pattern:
    return Pattern.build(
        [{A, B}, {0}],
        compatible=[((Y, 0), (X, B))],
        incompatible=[((Y, 0), (X, A))],
        distinguished_var=X,
        existential={A, B},
        distinguished_val=B,
    )


def _exists_2_triangle() -> Pattern:
    return Pattern.build(
        [{A, B}, {0}, {0}],
        compatible=[((Y, 0), (Z, 0)), ((Y, 0), (X, B)), ((Z, 0), (X, B))],
        incompatible=[((Y, 0), (X, A))],
        distinguished_var=X,
        existential={A, B},
        distinguished_val=B,
    )


def _exists_2_inv_sub_btp() -> Pattern:
    return Pattern.build(
        [{A, B}, {P, Q}, {0}],
        compatible=[((Y, P), (X, B)), ((Y, Q), (X, A)), ((Z, 0), (X, A))],
        incompatible=[((Y, P), (X, A)), ((Z, 0), (Y, Q))],
        distinguished_var=X,
        existential={A, B},
        distinguished_val=B,
    )


def _exists_2_snake() -> Pattern:
    return Pattern.build(
        [{A, B}, {P, Q}, {0}],
        compatible=[((Y, P), (X, B)), ((Y, Q), (X, A)), ((Y, P), (Z, 0))],
        incompatible=[((Y, P), (X, A)), ((Z, 0), (Y, Q))],
        distinguished_var=X,
        existential={A, B},
        distinguished_val=B,
    )


# ---- patterns that license no elimination -------------------------------
# Lower value 0, upper value 1 in every domain of two values.

def _pivot_sym() -> Pattern:
    return Pattern.build(
        [{0}, {0}, {0}],
        incompatible=[((Y, 0), (X, 0)), ((Z, 0), (X, 0))],
        distinguished_var=X,
    )


def _pivot_asym() -> Pattern:
    return Pattern.build(
        [{0}, {0}, {0}],
        incompatible=[((Z, 0), (Y, 0)), ((Y, 0), (X, 0))],
        distinguished_var=X,
    )


def _cycle_3() -> Pattern:
    a, b, c = 0, 1, 2
    return Pattern.build(
        [{0, 1}, {0, 1}, {0, 1}],
        incompatible=[((a, 1), (b, 1)), ((a, 0), (c, 1)), ((b, 0), (c, 0))],
    )


def _kite_sym() -> Pattern:
    return Pattern.build(
        [{0}, {0, 1}, {0, 1}],
        compatible=[((Y, 0), (X, 0)), ((Z, 0), (X, 0)), ((Y, 0), (Z, 1)), ((Y, 1), (Z, 0))],
        incompatible=[((Y, 1), (Z, 1))],
        distinguished_var=X,
    )


def _kite_asym() -> Pattern:
    return Pattern.build(
        [{0, 1}, {0, 1}, {0}],
        compatible=[((Y, 0), (X, 1)), ((Y, 0), (Z, 0)), ((Y, 1), (X, 0)), ((Z, 0), (X, 0))],
        incompatible=[((Y, 1), (X, 1))],
        distinguished_var=X,
    )


def _rot_sub_btp() -> Pattern:
    return Pattern.build(
        [{0}, {0, 1}, {0}],
        compatible=[((Y, 1), (Z, 0)), ((Z, 0), (X, 0))],
        incompatible=[((Z, 0), (Y, 0)), ((Y, 1), (X, 0))],
        distinguished_var=X,
    )


def _v_plus_minus() -> Pattern:
    other = 1
    return Pattern.build(
        [{A, other}, {0}],
        compatible=[((Y, 0), (X, A))],
        incompatible=[((Y, 0), (X, other))],
        distinguished_var=X,
        existential={A},
    )


def _triangle_asym() -> Pattern:
    return Pattern.build(
        [{A}, {0}, {0}],
        compatible=[((Y, 0), (Z, 0)), ((Z, 0), (X, A))],
        incompatible=[((Y, 0), (X, A))],
        distinguished_var=X,
        existential={A},
    )


def _triangle() -> Pattern:
    return Pattern.build(
        [{0}, {0}, {0}],
        compatible=[((0, 0), (1, 0)), ((0, 0), (2, 0)), ((1, 0), (2, 0))],
    )


def _diamond() -> Pattern:
    left, middle, right = 0, 1, 2
    return Pattern.build(
        [{0}, {0, 1}, {0}],
        compatible=[((middle, 0), (right, 0)), ((middle, 1), (right, 0)), ((middle, 0), (left, 0))],
        incompatible=[((middle, 1), (left, 0))],
    )


def _z() -> Pattern:
    return Pattern.build(
        [{0, 1}, {0, 1}],
        compatible=[((0, 1), (1, 1)), ((0, 0), (1, 1)), ((0, 0), (1, 0))],
        incompatible=[((0, 1), (1, 0))],
    )


def _xl() -> Pattern:
    a, b, c = 0, 1, 2
    return Pattern.build(
        [{0, 1}, {0, 1}, {0}],
        compatible=[((a, 1), (b, 0)), ((a, 0), (b, 1)), ((c, 0), (b, 0))],
        incompatible=[((a, 1), (b, 1)), ((c, 0), (a, 0))],
    )


def _i_minus() -> Pattern:
    return Pattern.build(
        [{B}, {0}],
        incompatible=[((Y, 0), (X, B))],
        distinguished_var=X,
        existential={B},
        distinguished_val=B,
    )


def _l_minus() -> Pattern:
    return Pattern.build(
        [{0, 1}, {0}, {0}],
        incompatible=[((Y, 0), (X, 1)), ((Z, 0), (X, 0))],
        distinguished_var=X,
    )


def _l_plus_minus() -> Pattern:
    return Pattern.build(
        [{B}, {0}, {0}],
        compatible=[((Y, 0), (X, B))],
        incompatible=[((Y, 0), (Z, 0))],
        distinguished_var=X,
        existential={B},
        distinguished_val=B,
    )


# the non-existential value of x in the single-existential patterns
U = 0


def _triangle_1() -> Pattern:
    return Pattern.build(
        [{U, B}, {0}, {0}],
        compatible=[((Y, 0), (X, B)), ((Y, 0), (Z, 0)), ((Z, 0), (X, U))],
        incompatible=[((Y, 0), (X, U))],
        distinguished_var=X,
        existential={B},
        distinguished_val=B,
    )


def _triangle_2() -> Pattern:
    return Pattern.build(
        [{U, B}, {0, 1}, {0}],
        compatible=[((Y, 1), (X, U)), ((Y, 0), (X, B)), ((Y, 1), (Z, 0)), ((Z, 0), (X, U))],
        incompatible=[((Y, 0), (X, U))],
        distinguished_var=X,
        existential={B},
        distinguished_val=B,
    )


def _exists_kite() -> Pattern:
    return Pattern.build(
        [{B}, {0, 1}, {0, 1}],
        compatible=[((Y, 0), (X, B)), ((Y, 1), (Z, 0)), ((Y, 0), (Z, 1)), ((Z, 0), (X, B))],
        incompatible=[((Y, 1), (Z, 1))],
        distinguished_var=X,
        existential={B},
        distinguished_val=B,
    )


def _exists_kite_asym() -> Pattern:
    return Pattern.build(
        [{U, B}, {0, 1}, {0}],
        compatible=[((Y, 0), (X, U)), ((Y, 1), (X, B)), ((Y, 0), (Z, 0)), ((Z, 0), (X, B))],
        incompatible=[((Y, 1), (X, U))],
        distinguished_var=X,
        existential={B},
        distinguished_val=B,
    )


def _exists_kite_1() -> Pattern:
    return Pattern.build(
        [{U, B}, {0, 1}, {0, 1}],
        compatible=[((Y, 0), (X, B)), ((Y, 0), (Z, 1)), ((Y, 1), (Z, 0)), ((Z, 0), (X, U))],
        incompatible=[((Y, 0), (X, U)), ((Y, 1), (Z, 1))],
        distinguished_var=X,
        existential={B},
        distinguished_val=B,
    )


_ENTRIES: Tuple[Tuple[str, str, object, PatternKind], ...] = (
    ('BTP', 'BTP', _btp, PatternKind.VAR_ELIM),
    ('ExistsSubBTP', '∃subBTP', _exists_sub_btp, PatternKind.VAR_ELIM),
    ('ExistsInvSubBTP', '∃invsubBTP', _exists_inv_sub_btp, PatternKind.VAR_ELIM),
    ('ExistsSnake', '∃snake', _exists_snake, PatternKind.VAR_ELIM),
    ('InvSubBTP', 'invsubBTP', lambda: _exists_inv_sub_btp().flattened(), PatternKind.VAR_ELIM),
    ('Snake', 'snake', lambda: _exists_snake().flattened(), PatternKind.VAR_ELIM),
    ('NS', 'NS', _ns, PatternKind.VAL_ELIM),
    ('Exists2Triangle', '∃2triangle', _exists_2_triangle, PatternKind.VAL_ELIM),
    ('Exists2InvSubBTP', '∃2invsubBTP', _exists_2_inv_sub_btp, PatternKind.VAL_ELIM),
    ('Exists2Snake', '∃2snake', _exists_2_snake, PatternKind.VAL_ELIM),
    ('PivotSym', 'Pivot(sym)', _pivot_sym, PatternKind.NON_ELIM),
    ('PivotAsym', 'Pivot(asym)', _pivot_asym, PatternKind.NON_ELIM),
    ('Cycle3', 'Cycle(3)', _cycle_3, PatternKind.NON_ELIM),
    ('KiteSym', 'Kite(sym)', _kite_sym, PatternKind.NON_ELIM),
    ('KiteAsym', 'Kite(asym)', _kite_asym, PatternKind.NON_ELIM),
    ('RotSubBTP', 'rotsubBTP', _rot_sub_btp, PatternKind.NON_ELIM),
    ('VPlusMinus', 'V(+−)', _v_plus_minus, PatternKind.NON_ELIM),
    ('TriangleAsym', 'Triangle(asym)', _triangle_asym, PatternKind.NON_ELIM),
    ('Triangle', 'Triangle', _triangle, PatternKind.NON_ELIM),
    ('Diamond', 'Diamond', _diamond, PatternKind.NON_ELIM),
    ('Z', 'Z', _z, PatternKind.NON_ELIM),
    ('XL', 'XL', _xl, PatternKind.NON_ELIM),
    ('IMinus', 'I(−)', _i_minus, PatternKind.NON_ELIM),
    ('LMinus', 'L(−)', _l_minus, PatternKind.NON_ELIM),
    ('LPlusMinus', 'L(+−)', _l_plus_minus, PatternKind.NON_ELIM),
    ('Triangle1', 'triangle1', _triangle_1, PatternKind.NON_ELIM),
    ('Triangle2', 'triangle2', _triangle_2, PatternKind.NON_ELIM),
    ('ExistsKite', '∃Kite', _exists_kite, PatternKind.NON_ELIM),
    ('ExistsKiteAsym', '∃Kite(asym)', _exists_kite_asym, PatternKind.NON_ELIM),
    ('ExistsKite1', '∃Kite1', _exists_kite_1, PatternKind.NON_ELIM),
)

_FLATTENED: Dict[str, str] = {
    'InvSubBTP': 'ExistsInvSubBTP',
    'Snake': 'ExistsSnake',
}

CATALOG: Dict[str, CatalogEntry] = {
    name: CatalogEntry(name, label, factory(), kind, _FLATTENED.get(name))  # type: ignore[operator]
    for name, label, factory, kind in _ENTRIES
}

_ALIASES: Dict[str, str] = {}
for _entry in CATALOG.values():
    _ALIASES[_entry.name.lower()] = _entry.name
    _ALIASES[_entry.label.lower()] = _entry.name
    _ALIASES[_entry.label.replace('−', '-').lower()] = _entry.name


def get_pattern(name) -> CatalogEntry:
    """Look up a catalog entry by identifier, display label or rule."""
    key = name.value if isinstance(name, RuleId) else str(name)
    canonical = _ALIASES.get(key.strip().lower())
    if canonical is None:
        raise ContractError(f"Unknown pattern '{name}'")
    return CATALOG[canonical]


def rule_pattern(rule: RuleId) -> Pattern:
    return CATALOG[rule.value].pattern


def list_catalog() -> Dict[PatternKind, List[str]]:
    """Catalog names grouped by kind, main entries first and derived flat entries after them."""
    result: Dict[PatternKind, List[str]] = {kind: [] for kind in PatternKind}
    for entry in sorted(CATALOG.values(), key=lambda e: e.derived_from is not None):
        result[entry.kind].append(entry.name)
    return result
