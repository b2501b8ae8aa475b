from typing import List

from ..constants import MAX_CLOSURE_PATTERNS
from ..errors import ContractError, PatternError, SizeLimitError
from ..pattern import Assignment, Pattern, edge_key
from .equivalence import equivalent


def mergeable(pattern: Pattern, v: int, a: int, b: int) -> bool:
    """True iff value a of v can be merged into value b (order matters)."""
    if a == b or a not in pattern.domains[v] or b not in pattern.domains[v]:
        raise ContractError(f"Values {a} and {b} must be distinct values of variable {v}")
    edges_a = pattern.neighbours((v, a))
    edges_b = pattern.neighbours((v, b))
    for q, value in edges_a.items():
        if q in edges_b and edges_b[q] != value:
            return False
    if v == pattern.distinguished_var:
        if a in pattern.existential and b not in pattern.existential:
            return False
        if a == pattern.distinguished_val:
            return False
    return True


def merge(pattern: Pattern, v: int, a: int, b: int) -> Pattern:
    """Merge value a of v into b: b inherits the edges it does not already define."""
    if not mergeable(pattern, v, a, b):
        raise PatternError(f"Value {a} of variable {v} cannot be merged into {b}")
    cpt = {}
    for (p, q), value in pattern.edges():
        if (v, a) not in (p, q):
            cpt[(p, q)] = value
    for q, value in pattern.neighbours((v, a)).items():
        key = edge_key((v, b), q)
        if key not in cpt:
            cpt[key] = value
    domains = [set(values) for values in pattern.domains]
    domains[v].discard(a)
    existential = pattern.existential - {a} if v == pattern.distinguished_var else pattern.existential
    return Pattern(domains, cpt, pattern.distinguished_var, existential, pattern.distinguished_val)


def is_dangling(pattern: Pattern, p: Assignment) -> bool:
    if pattern.is_existential_assignment(p):
        return False
    edges = pattern.neighbours(p)
    if len(edges) > 1:
        return False
    return all(edges.values())


def dangling_reduce(pattern: Pattern, p: Assignment) -> Pattern:
    if not is_dangling(pattern, p):
        raise PatternError(f"Assignment {p} is not dangling")
    if len(pattern.domains[p[0]]) < 2:
        raise PatternError(f"Removing {p} would empty the domain of variable {p[0]}")
    return pattern.without_assignment(p)


def reduction_steps(pattern: Pattern) -> List[Pattern]:
    """Every pattern reachable by one merge or dangling reduction."""
    results = []
    for v in range(pattern.var_count):
        values = pattern.domain(v)
        for a in values:
            for b in values:
                if a != b and mergeable(pattern, v, a, b):
                    results.append(merge(pattern, v, a, b))
        if len(values) >= 2:
            for a in values:
                if is_dangling(pattern, (v, a)):
                    results.append(pattern.without_assignment((v, a)))
    return results


def is_irreducible(pattern: Pattern) -> bool:
    return not reduction_steps(pattern)


def reduction_closure(pattern: Pattern, limit: int = MAX_CLOSURE_PATTERNS) -> List[Pattern]:
    """
    The pattern and all its reductions, deduplicated up to equivalence.

    Every reduction removes an assignment, so the closure is finite.
    """
    closure = [pattern]
    frontier = [pattern]
    while frontier:
        next_frontier = []
        for current in frontier:
            for reduced in reduction_steps(current):
                if any(equivalent(reduced, seen) for seen in closure):
                    continue
                closure.append(reduced)
                next_frontier.append(reduced)
                if len(closure) > limit:
                    raise SizeLimitError(f"Reduction closure exceeds {limit} patterns")
        frontier = next_frontier
    return closure
