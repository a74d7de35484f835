"""Slow brute-force counterparts of the library routines.

Each one works straight from a definition and shares no code path with the
function it checks beyond plain data types.
"""

from itertools import combinations, permutations, product
from math import factorial


def divides(g, m):
    return all(a <= b for a, b in zip(g, m))


def in_ideal(gens, m):
    return any(divides(g, m) for g in gens)


def antichain(vectors):
    vs = set(map(tuple, vectors))
    return sorted(v for v in vs if not any(w != v and divides(w, v) for w in vs))


def box_scan(gens, box):
    """Every exponent vector below ``box`` (exclusive) not in the ideal."""
    return [m for m in product(*(range(b) for b in box)) if not in_ideal(gens, m)]


def dual_by_complement(gens, a):
    """Alexander dual via ``x^m`` outside the dual iff ``x^(a - m)`` in I (m <= a)."""
    inside = [m for m in product(*(range(t + 1) for t in a)) if not in_ideal(gens, tuple(x - y for x, y in zip(a, m)))]
    return antichain(inside)


def contains_brute(sigma, tau):
    order = sorted(range(len(tau)), key=lambda i: tau[i])
    for idx in combinations(range(len(sigma)), len(tau)):
        vals = [sigma[i] for i in idx]
        if sorted(range(len(tau)), key=lambda i: vals[i]) == order:
            return True
    return False


def avoiders_brute(n, patterns):
    return [s for s in permutations(range(1, n + 1)) if not any(contains_brute(s, t) for t in patterns)]


def cycle_count(sigma):
    seen, cycles = set(), 0
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        cycles += 1
        v = start
        while v not in seen:
            seen.add(v)
            v = sigma[v - 1]
    return cycles


def stirling_first_brute(n, r):
    return sum(1 for s in permutations(range(1, n + 1)) if cycle_count(s) == r)


def set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def stirling_second_brute(n, r):
    return sum(1 for p in set_partitions(list(range(n))) if len(p) == r)


def permanent_naive(matrix):
    n = len(matrix)
    total = 0
    for s in permutations(range(n)):
        prod = 1
        for i in range(n):
            prod *= matrix[i][s[i]]
        total += prod
    return total


def eliminable_by_orders(p, threshold):
    """Try every removal order of the coordinates of ``p``."""
    n = len(p)
    for order in permutations(range(1, n + 1)):
        remaining = list(range(1, n + 1))
        ok = True
        for j in order:
            if not p[j - 1] < threshold(j, tuple(remaining)):
                ok = False
                break
            remaining.remove(j)
        if ok:
            return True
    return False


def chains_brute(elements, less):
    """All nonempty chains as sorted-bottom-to-top tuples, by subset testing."""
    out = []
    for k in range(1, len(elements) + 1):
        for subset in combinations(elements, k):
            ordered = sorted(subset, key=lambda e: sum(less(f, e) for f in subset))
            if all(less(a, b) for a, b in zip(ordered, ordered[1:])):
                out.append(tuple(ordered))
    return out


def _rank_mod(rows, p=1000003):
    rows = [r[:] for r in rows]
    rank = 0
    ncol = len(rows[0]) if rows else 0
    for c in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], p - 2, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def _reduced_homology(faces, top_dim):
    """Ranks of reduced homology of a complex given as {dim: [faces]}, dim >= -1."""
    boundary_rank = {}
    for d in range(0, top_dim + 1):
        lower = {f: i for i, f in enumerate(faces.get(d - 1, []))}
        rows = []
        for f in faces.get(d, []):
            row = [0] * len(lower)
            for k in range(len(f)):
                row[lower[f[:k] + f[k + 1:]]] = (-1) ** k
            rows.append(row)
        boundary_rank[d] = _rank_mod(rows) if rows and lower else 0
    return {
        d: len(faces.get(d, [])) - boundary_rank.get(d, 0) - boundary_rank.get(d + 1, 0)
        for d in range(-1, top_dim + 1)
    }


def koszul_betti(gens):
    """Total graded Betti numbers from the upper Koszul simplicial complexes.

    beta_(i, b) = dim H~_(i-1)(K^b) with K^b = {F : x^(b - F) in I}; every
    multidegree with nonzero Betti number lies below the lcm of the
    generators (computed over GF(p), exact for these small squarefree-ish cases).
    """
    n = len(gens[0])
    top = tuple(max(col) for col in zip(*gens))
    betti = {}
    for b in product(*(range(t + 1) for t in top)):
        if not in_ideal(gens, b):
            continue
        support = [i for i in range(n) if b[i] > 0]
        faces = {}
        for k in range(len(support) + 1):
            for F in combinations(support, k):
                m = tuple(b[i] - (i in F) for i in range(n))
                if in_ideal(gens, m):
                    faces.setdefault(k - 1, []).append(F)
        for d, v in _reduced_homology(faces, n).items():
            if v:
                betti[d + 1] = betti.get(d + 1, 0) + v
    return [betti.get(i, 0) for i in range(max(betti) + 1)]


def harmonic_count(n):
    return sum(factorial(n) // t for t in range(1, n + 1))
