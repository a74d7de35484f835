"""Parking-function families and their standard-monomial descriptions."""

from collections import Counter
from itertools import product
from math import factorial

from .monomials import WeightConfig, hypercubic_mu, unimodal_nu

__all__ = [
    "FAMILY_PREDICATES",
    "FAMILY_CLASS",
    "lambda_parking_functions",
    "restricted_parking_functions",
    "lambda_from_config",
    "is_parking",
    "is_lambda_parking",
    "elimination_feasible",
    "is_restricted_lambda_parking",
    "family_predicate",
    "parking_functions",
    "family_members",
    "stratified_counts",
    "stratified_formula",
]


def lambda_from_config(cfg):
    return cfg.lam()


def is_parking(p):
    return all(v < j for j, v in enumerate(sorted(p), start=1))


def is_lambda_parking(p, lam):
    if len(p) != len(lam):
        raise ValueError(f"sequence length {len(p)} != lambda length {len(lam)}")
    if any(x < y for x, y in zip(lam, lam[1:])) or min(lam) < 1:
        raise ValueError(f"lambda {tuple(lam)} must be weakly decreasing and positive")
    n = len(p)
    # j-th smallest entry against lambda_(n-j+1)
    return all(v < lam[n - j] for j, v in enumerate(sorted(p), start=1))


def elimination_feasible(p, threshold):
    """Decide whether the coordinates of ``p`` can be removed one at a time.

    Starting from the full set, a coordinate ``j`` of the remaining set
    ``T`` may be removed when ``p_j < threshold(j, T)``.  ``T`` is passed
    as a sorted tuple.  Decided over subsets (bitmasks) rather than orders.
    """
    n = len(p)
    full = (1 << n) - 1
    ok = bytearray(1 << n)
    ok[0] = 1
    # masks in increasing numeric order: every proper submask comes first
    for mask in range(1, full + 1):
        T = tuple(j + 1 for j in range(n) if mask >> j & 1)
        for j in T:
            bit = 1 << (j - 1)
            if ok[mask ^ bit] and p[j - 1] < threshold(j, T):
                ok[mask] = 1
                break
    return bool(ok[full])


def is_restricted_lambda_parking(p, cfg):
    if len(p) != cfg.n:
        raise ValueError(f"sequence length {len(p)} != n={cfg.n}")
    if not is_lambda_parking(p, cfg.lam()):
        return False
    return elimination_feasible(p, lambda j, T: hypercubic_mu(j, T, cfg.u, cfg.c))


def _pf1(p):
    n = len(p)
    for i in range(1, n + 1):
        if p[i - 1] > i:
            return False
        if p[i - 1] == i and not any(p[j - 1] == 0 for j in range(i, n + 1)):
            return False
    return True


def _pf2(p):
    n = len(p)
    for i in range(1, n + 1):
        if p[i - 1] >= i and any(p[j - 1] >= j - 1 for j in range(i + 1, n + 1)):
            return False
    return True


def _pf3(p):
    n = len(p)
    for i in range(1, n + 1):
        if p[i - 1] >= i and any(p[j - 1] >= n - (j - i) for j in range(i + 1, n + 1)):
            return False
    return True


def _hpf1(p):
    n = len(p)
    for i in range(1, n + 1):
        if p[i - 1] > i:
            return False
        if p[i - 1] == i and not p[n - 1] < i:
            return False
    return True


def _hpf2(p):
    n = len(p)
    for t in range(1, n):
        if p[n - t - 1] > t:
            return False
        if p[n - t - 1] == t and not p[n - 1] < t:
            return False
    return True


def _bar(p):
    n = len(p)
    return elimination_feasible(p, lambda j, T: unimodal_nu(j, T, n))


FAMILY_PREDICATES = {
    "PF1": _pf1,
    "PF2": _pf2,
    "PF3": _pf3,
    "HPF1": _hpf1,
    "HPF2": _hpf2,
    "BAR": _bar,
}

# which permutation class each parking family describes
FAMILY_CLASS = {"PF1": "S1", "PF2": "S2", "PF3": "S3", "HPF1": "T1", "HPF2": "T2", "BAR": "U"}


def family_predicate(family, p):
    """Membership of the parking function ``p`` in a named subfamily."""
    try:
        pred = FAMILY_PREDICATES[family]
    except KeyError:
        raise ValueError(f"unknown parking family {family!r}") from None
    p = tuple(p)
    if not is_parking(p):
        raise ValueError(f"{p} is not a parking function")
    return pred(p)


def _multiset_permutations(items):
    counts = Counter(items)
    keys = sorted(counts)
    n = len(items)
    out = []

    def rec(prefix):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for k in keys:
            if counts[k]:
                counts[k] -= 1
                prefix.append(k)
                rec(prefix)
                prefix.pop()
                counts[k] += 1

    rec([])
    return out


def parking_functions(n):
    """All parking functions of length ``n`` (there are ``(n+1)^(n-1)``), sorted."""
    if n < 0:
        raise ValueError("n must be >= 0")
    sorted_seqs = []

    def rec(seq):
        j = len(seq)
        if j == n:
            sorted_seqs.append(tuple(seq))
            return
        lo = seq[-1] if seq else 0
        for v in range(lo, j + 1):
            seq.append(v)
            rec(seq)
            seq.pop()

    rec([])
    result = []
    for s in sorted_seqs:
        result.extend(_multiset_permutations(s))
    return sorted(result)


def family_members(family, n):
    """Predicate scan over all parking functions of length ``n``."""
    pred = FAMILY_PREDICATES[family]
    return [p for p in parking_functions(n) if pred(p)]


def lambda_parking_functions(lam):
    """Every lambda-parking function, by scanning the box below ``lambda_1``."""
    return [p for p in product(range(lam[0]), repeat=len(lam)) if is_lambda_parking(p, lam)]


def restricted_parking_functions(cfg):
    lam = cfg.lam()
    return [p for p in lambda_parking_functions(lam) if is_restricted_lambda_parking(p, cfg)]


def _pf1_stratum(p):
    fixed = [t for t in range(1, len(p) + 1) if p[t - 1] == t]
    return max(fixed) if fixed else 0


def stratified_counts(family, n):
    """Counts of a family split by its natural statistic.

    ``PF1``: by the largest ``t`` with ``p_t = t`` (0 if none).
    ``HPF1``: by the value of ``p_n``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if family == "PF1":
        key = _pf1_stratum
    elif family == "HPF1":
        key = lambda p: p[-1]
    else:
        raise ValueError(f"no stratification defined for {family!r}")
    counts = Counter(key(p) for p in family_members(family, n))
    return {s: counts.get(s, 0) for s in range(n)}


def stratified_formula(family, n):
    f = factorial
    if family == "PF1":
        return {s: f(n) if s == 0 else (n - s) * f(n - 1) for s in range(n)}
    if family == "HPF1":
        return {t: f(n) // (t + 1) for t in range(n)}
    raise ValueError(f"no stratification defined for {family!r}")
