from .sub_pattern import is_sub_pattern
from .equivalence import equivalent, find_embedding
from .reductions import (
    mergeable,
    merge,
    is_dangling,
    dangling_reduce,
    is_irreducible,
    reduction_steps,
    reduction_closure,
)
from .occurrence import (
    OccurrenceWitness,
    occurs_at,
    occurs_anywhere,
    occurs_generic,
    verify_witness,
)

__all__ = [
    'is_sub_pattern',
    'equivalent',
    'find_embedding',
    'mergeable',
    'merge',
    'is_dangling',
    'dangling_reduce',
    'is_irreducible',
    'reduction_steps',
    'reduction_closure',
    'OccurrenceWitness',
    'occurs_at',
    'occurs_anywhere',
    'occurs_generic',
    'verify_witness',
]
