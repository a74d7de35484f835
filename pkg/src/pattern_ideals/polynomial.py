"""Sparse multivariate polynomials with integer coefficients."""

from collections import defaultdict


class SparsePoly:
    """Map from exponent tuple to nonzero integer coefficient."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {}
        for exp, coeff in (terms or {}).items():
            if coeff:
                self.terms[tuple(exp)] = coeff

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls(len(exp), {tuple(exp): coeff})

    @classmethod
    def from_monomials(cls, n, exps):
        acc = defaultdict(int)
        for e in exps:
            acc[tuple(e)] += 1
        return cls(n, acc)

    @classmethod
    def one_minus_x_product(cls, n):
        """``(1 - x_1)(1 - x_2)...(1 - x_n)``."""
        out = cls.monomial((0,) * n)
        for i in range(n):
            e = [0] * n
            e[i] = 1
            out = out * cls(n, {(0,) * n: 1, tuple(e): -1})
        return out

    def __add__(self, other):
        acc = defaultdict(int, self.terms)
        for e, c in other.terms.items():
            acc[e] += c
        return SparsePoly(self.n, acc)

    def __sub__(self, other):
        return self + SparsePoly(other.n, {e: -c for e, c in other.terms.items()})

    def __mul__(self, other):
        acc = defaultdict(int)
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                acc[tuple(a + b for a, b in zip(e1, e2))] += c1 * c2
        return SparsePoly(self.n, acc)

    def __eq__(self, other):
        return isinstance(other, SparsePoly) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def evaluate(self, point):
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term *= x ** k
            total += term
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            mono = "*".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}" for i, k in enumerate(e) if k)
            parts.append(f"{self.terms[e]}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)
