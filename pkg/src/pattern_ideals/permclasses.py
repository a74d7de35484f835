"""Pattern-avoiding permutation classes.

Permutations are plain tuples of 1-based values in one-line notation, so
``(2, 3, 1)`` sends 1 -> 2, 2 -> 3, 3 -> 1.  A permutation doubles as a
pattern.
"""

from itertools import permutations

__all__ = [
    "FAMILIES",
    "as_permutation",
    "family_patterns",
    "contains_pattern",
    "avoiders",
    "hypercubic_membership",
]

# Defining pattern sets of the named classes.  ``FULL`` avoids nothing.
FAMILIES = {
    "FULL": frozenset(),
    "W": frozenset({(1, 3, 2), (3, 1, 2)}),
    "S1": frozenset({(1, 2, 3), (1, 3, 2), (3, 1, 2)}),
    "S2": frozenset({(1, 2, 3), (2, 1, 3), (2, 3, 1)}),
    "S3": frozenset({(1, 3, 2), (2, 1, 3), (2, 3, 1)}),
    "T1": frozenset({(1, 2, 3), (1, 3, 2), (2, 3, 1)}),
    "T2": frozenset({(2, 1, 3), (3, 1, 2), (3, 2, 1)}),
    "U": frozenset({(1, 2, 3), (2, 3, 1), (3, 1, 2)}),
}
FAMILIES["PERM"] = FAMILIES["FULL"]


def as_permutation(values):
    """Return ``values`` as a tuple, raising ValueError unless it permutes [n]."""
    perm = tuple(int(v) for v in values)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{values!r} is not a permutation of [{len(perm)}]")
    return perm


def parse_pattern(text):
    """Parse ``"132"`` or ``"1,3,2"`` into a pattern tuple."""
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    return as_permutation(parts)


def family_patterns(family):
    try:
        return FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILIES)}") from None


def contains_pattern(sigma, tau):
    """True iff some subsequence of ``sigma`` is order-isomorphic to ``tau``."""
    k = len(tau)
    if k == 0:
        raise ValueError("pattern must be nonempty")
    n = len(sigma)
    if k > n:
        return False

    def extend(start, chosen):
        depth = len(chosen)
        if depth == k:
            return True
        t = tau[depth]
        # room must remain for the rest of the pattern
        for pos in range(start, n - (k - depth) + 1):
            v = sigma[pos]
            if all((tau[i] < t) == (chosen[i] < v) for i in range(depth)):
                if extend(pos + 1, chosen + (v,)):
                    return True
        return False

    return extend(0, ())


def avoiders(n, patterns):
    """All permutations of [n] avoiding every pattern, in lexicographic order.

    ``patterns`` is either a family tag (``"W"``, ``"S1"``, ...) or an
    iterable of pattern tuples.
    """
    if n < 1:
        raise ValueError("avoiders needs n >= 1")
    if isinstance(patterns, str):
        patterns = family_patterns(patterns)
    patterns = [tuple(p) for p in patterns]
    # itertools.permutations of a sorted input is already lexicographic
    return [
        sigma
        for sigma in permutations(range(1, n + 1))
        if not any(contains_pattern(sigma, tau) for tau in patterns)
    ]


def hypercubic_membership(sigma):
    """Direct test for membership in the 132/312-avoiding class.

    Every value after the first must be adjacent (differ by one) to some
    earlier value, i.e. the prefixes always occupy an interval.
    """
    seen = set()
    for j, value in enumerate(sigma):
        if j and value + 1 not in seen and value - 1 not in seen:
            return False
        seen.add(value)
    return True
