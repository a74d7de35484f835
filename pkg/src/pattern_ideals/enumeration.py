"""Exact counting: Stirling numbers, permanents, the a_n recurrences, forests.

Everything is computed with Python integers; nothing here touches floats.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import factorial
from typing import Tuple

from .permclasses import contains_pattern, family_patterns

__all__ = [
    "stirling_first",
    "stirling_second",
    "permanent",
    "kumar_roy_matrix",
    "ordered_cycle_count",
    "rising",
    "RisingFactorialPoly",
    "a_poly",
    "a_value",
    "a_closed_form",
    "RootedForest",
    "prufer_decode",
    "enumerate_forests",
    "forest_avoids",
]


@lru_cache(maxsize=None)
def stirling_first(n, r):
    """Signless Stirling number of the first kind (permutations of [n] with r cycles)."""
    if n < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    if r > n:
        return 0
    if n == 0:
        return 1
    if r == 0:
        return 0
    return (n - 1) * stirling_first(n - 1, r) + stirling_first(n - 1, r - 1)


@lru_cache(maxsize=None)
def stirling_second(n, r):
    """Stirling number of the second kind (partitions of [n] into r blocks)."""
    if n < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    if r > n:
        return 0
    if n == 0:
        return 1
    if r == 0:
        return 0
    return r * stirling_second(n - 1, r) + stirling_second(n - 1, r - 1)


def permanent(matrix):
    """Exact permanent by Ryser's formula, O(2^n n^2)."""
    rows = [list(r) for r in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("permanent needs a square matrix")
    if n > 20:
        raise ValueError("permanent limited to n <= 20")
    if n == 0:
        return 1
    total = 0
    for k in range(1, n + 1):
        sign = (-1) ** k
        for cols in combinations(range(n), k):
            prod = 1
            for r in rows:
                s = sum(r[j] for j in cols)
                if not s:
                    prod = 0
                    break
                prod *= s
            total += sign * prod
    return (-1) ** n * total


def kumar_roy_matrix(n):
    """``n x n`` matrix with ``i`` on the diagonal (1-based) and 1 elsewhere."""
    return [[i + 1 if i == j else 1 for j in range(n)] for i in range(n)]


def ordered_cycle_count(n):
    """``sum_r r! s(n, r)``: permutations of [n] with their cycles ordered."""
    return sum(factorial(r) * stirling_first(n, r) for r in range(n + 1))


def rising(x, b, r):
    """``x (x + b) ... (x + (r - 1) b)``; the empty product is 1."""
    out = 1
    for q in range(r):
        out *= x + q * b
    return out


@dataclass(frozen=True)
class RisingFactorialPoly:
    """``sum_r coefficients[r] * x (x + b) ... (x + (r - 1) b)``."""

    coefficients: Tuple[int, ...]
    b: int = 1

    def __call__(self, x):
        return sum(a * rising(x, self.b, r) for r, a in enumerate(self.coefficients))

    def power_coefficients(self):
        """Coefficients in the monomial basis, constant term first."""
        out = [0] * max(1, len(self.coefficients))
        for r, a in enumerate(self.coefficients):
            basis = [1]
            for q in range(r):
                # multiply by (x + q b)
                nxt = [0] * (len(basis) + 1)
                for k, e in enumerate(basis):
                    nxt[k] += q * self.b * e
                    nxt[k + 1] += e
                basis = nxt
            for k, e in enumerate(basis):
                out[k] += a * e
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return tuple(out)


def a_poly(n, b=1):
    """``a~_n(x)`` in the step-``b`` rising basis: coefficient ``b^(n-r) s(n, r)``."""
    if n < 0 or b < 1:
        raise ValueError("need n >= 0 and b >= 1")
    return RisingFactorialPoly(tuple(b ** (n - r) * stirling_first(n, r) for r in range(n + 1)), b)


@lru_cache(maxsize=None)
def a_value(n, b=1, c=1):
    """``a~_n(c) = (n-1) b a~_(n-1)(c) + c a~_(n-1)(c + b)``, ``a~_0 = 1``."""
    if n < 0 or b < 1 or c < 0:
        raise ValueError("need n >= 0, b >= 1, c >= 0")
    if n == 0:
        return 1
    return (n - 1) * b * a_value(n - 1, b, c) + c * a_value(n - 1, b, c + b)


def a_closed_form(n, b=1, c=1):
    return sum(b ** (n - r) * stirling_first(n, r) * rising(c, b, r) for r in range(n + 1))


@dataclass(frozen=True)
class RootedForest:
    """Forest on [n]; ``parent[v - 1]`` is the parent of ``v``, 0 for a root."""

    parent: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.parent)
        for v in range(1, n + 1):
            seen = set()
            w = v
            while w:
                if w in seen or not 0 <= w <= n:
                    raise ValueError(f"parent map {self.parent} is not a forest")
                seen.add(w)
                w = self.parent[w - 1]

    @property
    def n(self):
        return len(self.parent)

    def children(self):
        kids = {v: [] for v in range(self.n + 1)}
        for v, p in enumerate(self.parent, start=1):
            kids[p].append(v)
        return kids

    def roots(self):
        return [v for v, p in enumerate(self.parent, start=1) if p == 0]

    def maximal_paths(self):
        """Label sequences from a root down to each leaf."""
        kids = self.children()
        paths = []
        stack = [(r, (r,)) for r in kids[0]]
        while stack:
            v, path = stack.pop()
            if kids[v]:
                stack.extend((w, path + (w,)) for w in kids[v])
            else:
                paths.append(path)
        return sorted(paths)


def prufer_decode(seq, vertices):
    """Labelled tree on ``0..vertices-1`` from a Prüfer sequence, as an edge list."""
    degree = [1] * vertices
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(w for w in range(vertices) if degree[w] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = [x for x in range(vertices) if degree[x] == 1]
    edges.append((u, w))
    return edges


def _forest_from_tree(edges, n):
    adj = {v: [] for v in range(n + 1)}
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    parent = [0] * (n + 1)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                parent[w] = v
                stack.append(w)
    return RootedForest(tuple(parent[1:]))


def enumerate_forests(n):
    """All rooted labelled forests on [n]: trees on {0..n} with 0 removed."""
    if not 1 <= n <= 7:
        raise ValueError("forest enumeration supports 1 <= n <= 7")
    if n == 1:
        return [RootedForest((0,))]
    forests = [_forest_from_tree(prufer_decode(seq, n + 1), n) for seq in product(range(n + 1), repeat=n - 1)]
    return sorted(forests, key=lambda f: f.parent)


def forest_avoids(forest, patterns):
    """True iff no root-to-vertex label path contains any of the patterns."""
    if isinstance(patterns, str):
        patterns = family_patterns(patterns)
    patterns = [tuple(p) for p in patterns]
    # a pattern inside a prefix also sits inside the full root-to-leaf path
    return not any(
        contains_pattern(path, tau) for path in forest.maximal_paths() for tau in patterns
    )
