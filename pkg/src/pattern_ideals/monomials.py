"""Monomial ideals, Alexander duality and standard monomials.

Monomials are exponent tuples.  An ideal is stored by its minimal
generators, sorted lexicographically, so two ideals are equal exactly when
their generator tuples are.
"""

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Optional, Sequence, Tuple

from .permclasses import avoiders, family_patterns

Exponent = Tuple[int, ...]

__all__ = [
    "MonomialIdeal",
    "WeightConfig",
    "divides",
    "minimalize",
    "ideal_from_permutations",
    "contains",
    "alexander_dual",
    "hypercubic_mu",
    "unimodal_nu",
    "hypercubic_dual_generators",
    "permutohedron_dual_generators",
    "family_dual_generators",
    "family_ideal",
    "dual_of_family",
    "standard_monomials",
    "count_standard_monomials",
]


def divides(g, m):
    return all(a <= b for a, b in zip(g, m))


def minimalize(gens):
    """Divisibility-minimal elements of ``gens``, deduplicated and sorted."""
    unique = sorted(set(tuple(g) for g in gens), key=lambda g: (sum(g), g))
    kept = []
    for g in unique:
        # anything dividing g has total degree <= deg g, so it is already placed
        if not any(divides(h, g) for h in kept):
            kept.append(g)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    generators: Tuple[Exponent, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("ideal needs at least one variable")
        gens = minimalize(self.generators)
        for g in gens:
            if len(g) != self.n or min(g) < 0:
                raise ValueError(f"bad exponent vector {g} for n={self.n}")
        object.__setattr__(self, "generators", gens)

    def __contains__(self, m):
        return contains(self, m)

    def __len__(self):
        return len(self.generators)

    def pure_powers(self):
        """Map coordinate -> smallest pure-power exponent present."""
        powers = {}
        for g in self.generators:
            support = [i for i, e in enumerate(g) if e]
            if not support:
                # the unit ideal: every coordinate is bounded by 0
                return {i: 0 for i in range(self.n)}
            if len(support) == 1:
                i = support[0]
                powers[i] = min(powers.get(i, g[i]), g[i])
        return powers

    def to_dict(self):
        return {"n": self.n, "generators": [list(g) for g in self.generators]}

    def to_json(self):
        return json.dumps(self.to_dict(), separators=(",", ":"))

    @classmethod
    def from_dict(cls, data):
        return cls(int(data["n"]), tuple(tuple(int(e) for e in g) for g in data["generators"]))

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))


@dataclass(frozen=True)
class WeightConfig:
    """Weights ``1 <= u_1 < ... < u_n`` and a shift ``c >= 1``.

    The dual is taken with respect to ``(u_n + c - 1, ..., u_n + c - 1)``.
    """

    u: Tuple[int, ...]
    c: int = 1
    b: Optional[int] = None

    def __post_init__(self):
        u = tuple(int(x) for x in self.u)
        object.__setattr__(self, "u", u)
        if not u:
            raise ValueError("weight vector must be nonempty")
        if u[0] < 1 or any(x >= y for x, y in zip(u, u[1:])):
            raise ValueError(f"weights must be strictly increasing positive integers: {u}")
        if self.c < 1:
            raise ValueError("shift c must be >= 1")
        if self.b is not None:
            if self.b < 1 or any(y - x != self.b for x, y in zip(u, u[1:])):
                raise ValueError(f"weights {u} are not an arithmetic progression with step {self.b}")

    @property
    def n(self):
        return len(self.u)

    @classmethod
    def standard(cls, n, c=1):
        return cls(tuple(range(1, n + 1)), c, 1)

    @classmethod
    def arithmetic(cls, n, b, c=1, start=1):
        return cls(tuple(start + i * b for i in range(n)), c, b)

    @property
    def corner(self):
        top = self.u[-1] + self.c - 1
        return (top,) * self.n

    def lam(self):
        """Thresholds ``lambda_i = u_n - u_i + c`` (weakly decreasing)."""
        return tuple(self.u[-1] - ui + self.c for ui in self.u)


def ideal_from_permutations(perms, u=None):
    """Ideal generated by ``x^(u_sigma(1), ..., u_sigma(n))`` for sigma in ``perms``."""
    perms = list(perms)
    if not perms:
        raise ValueError("need at least one permutation")
    n = len(perms[0])
    if u is None:
        u = tuple(range(1, n + 1))
    if any(len(s) != n for s in perms) or len(u) != n:
        raise ValueError("permutations and weights must share one length")
    return MonomialIdeal(n, tuple(tuple(u[s - 1] for s in sigma) for sigma in perms))


def contains(ideal, m):
    if len(m) != ideal.n:
        raise ValueError(f"monomial {tuple(m)} has length {len(m)}, ideal has n={ideal.n}")
    return any(divides(g, m) for g in ideal.generators)


def alexander_dual(ideal, a):
    """Alexander dual with respect to ``x^a`` by direct search.

    Each ``b <= a`` with ``x^b`` outside the ideal and every single bump
    ``b + e_i`` (``b_i < a_i``) inside contributes ``x^(a - b)``.
    """
    a = tuple(a)
    if len(a) != ideal.n or min(a) < 1:
        raise ValueError(f"corner {a} must have {ideal.n} positive entries")
    for g in ideal.generators:
        if not divides(g, a):
            raise ValueError(f"generator {g} does not divide x^{a}")
    gens = []
    for b in product(*(range(ai + 1) for ai in a)):
        if contains(ideal, b):
            continue
        maximal = True
        for i in range(ideal.n):
            if b[i] < a[i]:
                bumped = b[:i] + (b[i] + 1,) + b[i + 1:]
                if not contains(ideal, bumped):
                    maximal = False
                    break
        if maximal:
            gens.append(tuple(ai - bi for ai, bi in zip(a, b)))
    return MonomialIdeal(ideal.n, tuple(gens))


def hypercubic_mu(j, subset, u, c):
    """Exponent of ``x_j`` in the dual generator indexed by ``subset``.

    ``subset`` is a sorted tuple of 1-based coordinates containing ``j``.
    The smallest element gets ``u_n - u_t + c``; the i-th smallest
    (i >= 2) gets ``u_n - u_(t + j - i) + c`` where ``t = |subset|``.
    """
    t = len(subset)
    i = subset.index(j) + 1
    un = u[-1]
    if i == 1:
        return un - u[t - 1] + c
    return un - u[t + j - i - 1] + c


def unimodal_nu(j, subset, n):
    """Exponent of ``x_j`` in the generator of the U-dual indexed by ``subset``."""
    i = subset.index(j)
    if i == 0:
        return n - (subset[-1] - subset[0])
    return subset[i] - subset[i - 1]


def _nonempty_subsets(n):
    for t in range(1, n + 1):
        yield from combinations(range(1, n + 1), t)


def _vector(n, entries):
    v = [0] * n
    for j, e in entries.items():
        v[j - 1] = e
    return tuple(v)


def hypercubic_dual_generators(cfg):
    n = cfg.n
    gens = [
        _vector(n, {j: hypercubic_mu(j, T, cfg.u, cfg.c) for j in T})
        for T in _nonempty_subsets(n)
    ]
    return MonomialIdeal(n, tuple(gens))


def permutohedron_dual_generators(cfg):
    n = cfg.n
    un = cfg.u[-1]
    gens = [
        _vector(n, {j: un - cfg.u[len(T) - 1] + cfg.c for j in T})
        for T in _nonempty_subsets(n)
    ]
    return MonomialIdeal(n, tuple(gens))


def _family_terms(family, n):
    """Closed-form generators of the dual w.r.t. ``(n, ..., n)`` as coordinate maps."""
    if family == "S1":
        yield from ({l: l + 1} for l in range(1, n))
        for i in range(1, n + 1):
            yield {i: i, **{j: 1 for j in range(i + 1, n + 1)}}
    elif family == "S2":
        yield from ({l: n} for l in range(1, n + 1))
        yield from ({i: i, j: j - 1} for i, j in combinations(range(1, n + 1), 2))
    elif family == "S3":
        yield from ({l: n} for l in range(1, n + 1))
        yield from ({i: i, j: n - (j - i)} for i, j in combinations(range(1, n + 1), 2))
    elif family == "T1":
        yield from ({l: l + 1} for l in range(1, n))
        yield {n: n}
        yield from ({i: i, n: i} for i in range(1, n))
    elif family == "T2":
        yield from ({l: n - l + 1} for l in range(1, n))
        yield {n: n}
        yield from ({i: n - i, n: n - i} for i in range(1, n))
    elif family == "U":
        for A in _nonempty_subsets(n):
            yield {j: unimodal_nu(j, A, n) for j in A}
    else:
        raise ValueError(f"no closed-form dual for family {family!r}")


def family_dual_generators(family, n):
    """Closed-form dual (w.r.t. ``(n, ..., n)``) of the ideal of a named class."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return MonomialIdeal(n, tuple(_vector(n, terms) for terms in _family_terms(family, n)))


def family_ideal(family, n, u=None):
    """``I_S(u)`` for the named class S of permutations of [n]."""
    family_patterns(family)
    return ideal_from_permutations(avoiders(n, family), u)


def dual_of_family(family, n, cfg=None):
    """Closed-form dual for any family tag, including ``W`` and ``PERM``.

    ``W`` and ``PERM`` accept a WeightConfig; the other classes are only
    defined for ``u = (1, ..., n)``, ``c = 1``.
    """
    if family in ("W", "PERM", "FULL"):
        cfg = cfg or WeightConfig.standard(n)
        if cfg.n != n:
            raise ValueError(f"weight vector has length {cfg.n}, expected {n}")
        if family == "W":
            return hypercubic_dual_generators(cfg)
        return permutohedron_dual_generators(cfg)
    if cfg is not None and (cfg.u, cfg.c) != (tuple(range(1, n + 1)), 1):
        raise ValueError(f"family {family} only supports u=(1..n), c=1")
    return family_dual_generators(family, n)


def _box(ideal):
    powers = ideal.pure_powers()
    missing = [i + 1 for i in range(ideal.n) if i not in powers]
    if missing:
        raise ValueError(
            f"ideal is not Artinian: no pure power of x_{missing[0]} among the generators"
        )
    return [powers[i] for i in range(ideal.n)]


def standard_monomials(ideal):
    """All exponent vectors outside the ideal, in lexicographic order.

    The search stays inside the box cut out by the pure powers and stops
    raising a coordinate as soon as the zero-padded prefix lands in the
    ideal (the complement of an ideal is closed under division).
    """
    box = _box(ideal)
    n = ideal.n
    gens = ideal.generators
    out = []
    current = [0] * n

    def descend(i, live):
        # live: generators not yet excluded by coordinates < i
        if i == n:
            out.append(tuple(current))
            return
        for v in range(box[i]):
            current[i] = v
            still = [g for g in live if g[i] <= v]
            # any g with zeros beyond i and g <= prefix means the ideal contains it
            if any(not any(g[i + 1:]) for g in still):
                break
            descend(i + 1, still)
        current[i] = 0

    descend(0, list(gens))
    return out


def count_standard_monomials(ideal):
    return len(standard_monomials(ideal))
