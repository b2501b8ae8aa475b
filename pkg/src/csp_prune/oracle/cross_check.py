import logging
from dataclasses import dataclass, field
from itertools import permutations
from math import perm, prod
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from ..core.algebra import occurs_at
from ..core.catalog import CATALOG
from ..core.config import EngineConfig
from ..core.errors import ReconstructionError
from ..core.instance import Instance
from ..core.pattern import Pattern
from ..core.transform.elimination import greedy_solve, preprocess
from ..core.transform.reconstruction import recover_one
from .backtracking import solve
from .brute_force import brute_occurs

LOG = logging.getLogger(__name__)

# Largest brute-force candidate space checked per (pattern, variable, mapping)
DEFAULT_CANDIDATE_BUDGET = 200_000


@dataclass
class CrossCheckReport:
    checked: int = 0
    skipped: int = 0
    disagreements: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements


def injective_mappings(pattern: Pattern, instance: Instance, x: int) -> Iterator[Dict[int, int]]:
    """Every injective map of the existential values of the pattern into the domain of x."""
    existential = sorted(pattern.existential)
    for images in permutations(instance.domain(x), len(existential)):
        yield dict(zip(existential, images))


def candidate_count(pattern: Pattern, instance: Instance) -> int:
    """Upper bound on the candidates brute_occurs enumerates for one mapping."""
    others = pattern.var_count - (1 if pattern.is_quantified else 0)
    pool = instance.present_count - (1 if pattern.is_quantified else 0)
    if others > pool:
        return 0
    d = max(instance.max_domain_size, 1)
    return perm(pool, others) * prod(d ** len(pattern.domains[v]) for v in range(pattern.var_count))


def cross_check(
    instance: Instance,
    names: Optional[Iterable[str]] = None,
    budget: int = DEFAULT_CANDIDATE_BUDGET
) -> CrossCheckReport:
    """
    Compare occurs_at with brute_occurs over catalog patterns.

    Quantified patterns are checked at every variable under every injective
    mapping; unquantified ones once, anywhere. Combinations whose candidate
    space exceeds the budget are counted as skipped.
    """
    report = CrossCheckReport()
    entries = [CATALOG[name] for name in names] if names is not None else list(CATALOG.values())
    for entry in entries:
        pattern = entry.pattern
        if candidate_count(pattern, instance) > budget:
            report.skipped += 1
            continue
        cases: List[Tuple[Optional[int], Dict[int, int]]] = []
        if pattern.is_quantified:
            cases = [(x, m) for x in instance.variables() for m in injective_mappings(pattern, instance, x)]
        else:
            cases = [(None, {})]
        for x, m in cases:
            fast = occurs_at(pattern, instance, x, m) is not None
            slow = brute_occurs(pattern, instance, x, m)
            report.checked += 1
            if fast != slow:
                report.disagreements.append(
                    f"{entry.name} at {x} under {m}: occurs_at={fast}, brute force={slow}"
                )
    LOG.debug(
        "Cross-checked %d cases (%d patterns skipped), %d disagreements",
        report.checked, report.skipped, len(report.disagreements)
    )
    return report


def check_preprocessing(instance: Instance, config: Optional[EngineConfig] = None) -> List[str]:
    """
    Preprocess and compare against the oracle; returns the problems found.

    Satisfiability must be preserved, and a solution of the reduced
    instance must map back to a solution of the original.
    """
    problems: List[str] = []
    reduced, trace = preprocess(instance, config)
    original_solution = solve(instance)
    if trace.wipeout is not None:
        if original_solution is not None:
            problems.append(f"preprocessing wiped out variable {trace.wipeout} of a satisfiable instance")
        return problems

    reduced_solution = solve(reduced)
    if (reduced_solution is None) != (original_solution is None):
        problems.append(
            f"satisfiability changed: original {original_solution is not None}, "
            f"reduced {reduced_solution is not None}"
        )
        return problems
    if reduced_solution is None:
        return problems

    try:
        if reduced.present_count <= 1:
            recovered = greedy_solve(reduced, trace)
        else:
            recovered = recover_one(None, trace, reduced_solution)
    except ReconstructionError as exc:
        problems.append(f"solution recovery failed: {exc}")
        return problems
    if recovered is None or not instance.is_solution(recovered):
        problems.append(f"recovered assignment {recovered} is not a solution of the original")
    return problems
