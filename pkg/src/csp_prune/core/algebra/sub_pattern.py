from ..pattern import Pattern


def is_sub_pattern(sub: Pattern, pattern: Pattern) -> bool:
    """
    Identity-embedding sub-pattern test.

    Variables and values keep their indices. A quantified sub-pattern needs
    the same distinguished variable and existential values drawn from the
    pattern's; a distinguished value must be matched exactly.
    """
    if sub.var_count > pattern.var_count:
        return False
    for v in range(sub.var_count):
        if not sub.domains[v] <= pattern.domains[v]:
            return False
    for (p, q), value in sub.edges():
        if pattern.cpt(p, q) is not value:
            return False

    if sub.is_quantified:
        if not pattern.is_quantified or sub.distinguished_var != pattern.distinguished_var:
            return False
        if not sub.existential <= pattern.existential:
            return False
    if sub.distinguished_val is not None and sub.distinguished_val != pattern.distinguished_val:
        return False
    return True
