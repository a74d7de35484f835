"""Labelled posets, their order complexes and the chain-sum formulas.

A face of the order complex is a chain, stored bottom-to-top as a tuple of
nodes.  The monomial label of a face is the lcm (componentwise max) of its
node labels.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Optional, Tuple

from .enumeration import a_value
from .monomials import (
    MonomialIdeal,
    WeightConfig,
    dual_of_family,
    hypercubic_mu,
    standard_monomials,
    unimodal_nu,
)
from .polynomial import SparsePoly

__all__ = [
    "POSET_KINDS",
    "FAMILY_POSETS",
    "Node",
    "LabeledPoset",
    "NonMinimalResolutionError",
    "build_poset",
    "family_poset",
    "chains",
    "covers_ground_set",
    "tops_at",
    "chain_label",
    "face_counts",
    "chain_sum_dimension",
    "PruningReport",
    "chain_pruning_check",
    "minimality_check",
    "betti_by_faces",
    "order_monomial_check",
    "hilbert_numerator",
    "hilbert_numerator_check",
    "export_dot",
]

POSET_KINDS = ("SIGMA_N", "SIGMA_S1", "SIGMA_S2", "SIGMA_S3", "SIGMA_T1", "SIGMA_T2", "LAMBDA_N")

# family tag -> (poset kind, labelling used on Sigma_n)
FAMILY_POSETS = {
    "W": ("SIGMA_N", "W"),
    "PERM": ("SIGMA_N", "PERM"),
    "U": ("SIGMA_N", "U"),
    "S1": ("SIGMA_S1", None),
    "S2": ("SIGMA_S2", None),
    "S3": ("SIGMA_S3", None),
    "T1": ("SIGMA_T1", None),
    "T2": ("SIGMA_T2", None),
}


class NonMinimalResolutionError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Node:
    """Poset element: a subset of [n] tagged with the poset it belongs to."""

    tag: str
    members: Tuple[int, ...]

    def __str__(self):
        sep = "," if self.members and self.members[-1] > 9 else ""
        return sep.join(str(m) for m in self.members)


@dataclass
class LabeledPoset:
    n: int
    kind: str
    elements: Tuple[Node, ...]
    covers: FrozenSet[Tuple[Node, Node]]
    labels: Dict[Node, Tuple[int, ...]]
    _above: Dict[Node, FrozenSet[Node]] = field(init=False, repr=False)

    def __post_init__(self):
        elems = set(self.elements)
        for lo, hi in self.covers:
            if lo not in elems or hi not in elems:
                raise ValueError(f"cover ({lo}, {hi}) uses an unknown element")
        missing = [e for e in self.elements if e not in self.labels]
        if missing:
            raise ValueError(f"no label on {missing[0]}")
        up = {e: set() for e in self.elements}
        for lo, hi in self.covers:
            up[lo].add(hi)
        above = {}

        def close(e, trail):
            if e in above:
                return above[e]
            if e in trail:
                raise ValueError("cover relation has a cycle")
            acc = set()
            for f in up[e]:
                acc.add(f)
                acc |= close(f, trail | {e})
            above[e] = frozenset(acc)
            return above[e]

        for e in self.elements:
            close(e, frozenset())
        self._above = above

    def __len__(self):
        return len(self.elements)

    def less(self, a, b):
        return b in self._above[a]

    def above(self, a):
        return self._above[a]

    def upper_bounds(self, a, b):
        ua = self._above[a] | {a}
        ub = self._above[b] | {b}
        return ua & ub

    def hasse_covers(self):
        """Transitive reduction of the order (should equal ``covers``)."""
        out = set()
        for a in self.elements:
            for b in self._above[a]:
                if not any(b in self._above[m] for m in self._above[a]):
                    out.add((a, b))
        return frozenset(out)

    def ideal(self):
        return MonomialIdeal(self.n, tuple(self.labels.values()))

    def pure_power(self, j):
        for e in self.elements:
            if e.members == (j,):
                return self.labels[e][j - 1]
        raise ValueError(f"poset {self.kind} has no singleton element {{{j}}}")


def _vec(n, entries):
    v = [0] * n
    for j, e in entries.items():
        v[j - 1] = e
    return tuple(v)


def _subsets(n):
    for t in range(1, n + 1):
        yield from combinations(range(1, n + 1), t)


def _sigma_label(labelling, n, cfg):
    if labelling == "W":
        return lambda T: _vec(n, {j: hypercubic_mu(j, T, cfg.u, cfg.c) for j in T})
    if labelling == "PERM":
        return lambda T: _vec(n, {j: cfg.u[-1] - cfg.u[len(T) - 1] + cfg.c for j in T})
    if labelling == "U":
        return lambda T: _vec(n, {j: unimodal_nu(j, T, n) for j in T})
    raise ValueError(f"unknown labelling {labelling!r} for SIGMA_N")


def _inclusion_covers(nodes):
    out = set()
    for nd in nodes:
        s = set(nd.members)
        for other in nodes:
            if len(other.members) == len(s) + 1 and s < set(other.members):
                out.add((nd, other))
    return out


def build_poset(kind, n, cfg=None, labelling="W"):
    """Construct one of the labelled posets attached to the dual ideals.

    ``labelling`` only matters for ``SIGMA_N``: ``"W"`` (hypercubic
    exponents, weights from ``cfg``), ``"PERM"`` (tree-ideal exponents) or
    ``"U"``.  ``LAMBDA_N`` is labelled like ``SIGMA_N`` with ``"W"``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if kind not in POSET_KINDS:
        raise ValueError(f"unknown poset kind {kind!r}")
    cfg = cfg or WeightConfig.standard(n)
    if cfg.n != n:
        raise ValueError(f"weight vector has length {cfg.n}, expected {n}")

    def node(*members):
        return Node(kind, tuple(sorted(set(members))))

    labels = {}
    covers = set()

    if kind == "SIGMA_N":
        lab = _sigma_label(labelling, n, cfg)
        for T in _subsets(n):
            labels[node(*T)] = lab(T)
        covers = _inclusion_covers(list(labels))

    elif kind == "LAMBDA_N":
        if n < 2:
            raise ValueError("LAMBDA_N needs n >= 2")
        lab = _sigma_label("W", n, cfg)
        lower = [node(*T) for T in _subsets(n - 1)]
        upper = [node(*T, n) for T in _subsets(n - 1)]
        for nd in lower + upper:
            labels[nd] = lab(nd.members)
        covers = _inclusion_covers(lower) | _inclusion_covers(upper)
        covers.add((node(*range(1, n)), node(*range(1, n + 1))))

    elif kind == "SIGMA_S1":
        single = {l: node(l) for l in range(1, n)}
        tail = {i: node(*range(i, n + 1)) for i in range(1, n + 1)}
        for l, nd in single.items():
            labels[nd] = _vec(n, {l: l + 1})
        for i, nd in tail.items():
            labels[nd] = _vec(n, {i: i, **{j: 1 for j in range(i + 1, n + 1)}})
        for l in single:
            if l + 1 in single:
                covers.add((single[l + 1], single[l]))
            if l + 2 in tail:
                covers.add((tail[l + 2], single[l]))
        for i in tail:
            if i in single:
                covers.add((single[i], tail[i]))
            if i + 1 in tail:
                covers.add((tail[i + 1], tail[i]))

    elif kind in ("SIGMA_S2", "SIGMA_S3"):
        single = {l: node(l) for l in range(1, n + 1)}
        pair = {(i, j): node(i, j) for i, j in combinations(range(1, n + 1), 2)}
        for l, nd in single.items():
            labels[nd] = _vec(n, {l: n})
        for (i, j), nd in pair.items():
            second = j - 1 if kind == "SIGMA_S2" else n - (j - i)
            labels[nd] = _vec(n, {i: i, j: second})
        for (i, j), nd in pair.items():
            if kind == "SIGMA_S2":
                lower = [(i, j + 1), (j, j + 1)]
                if j == n:
                    covers.add((single[i], nd))
                    covers.add((single[n], nd))
            else:
                lower = [(i, j - 1), (i + 1, j)]
                if j == i + 1:
                    covers.add((single[i], nd))
                    covers.add((single[j], nd))
            for key in lower:
                if key in pair:
                    covers.add((pair[key], nd))

    else:  # SIGMA_T1, SIGMA_T2
        single = {l: node(l) for l in range(1, n)}
        with_n = {i: node(i, n) for i in range(1, n + 1)}
        if kind == "SIGMA_T1":
            for l, nd in single.items():
                labels[nd] = _vec(n, {l: l + 1})
            for i, nd in with_n.items():
                labels[nd] = _vec(n, {n: n}) if i == n else _vec(n, {i: i, n: i})
            for l in single:
                if l + 1 in single:
                    covers.add((single[l + 1], single[l]))
            for i in with_n:
                if i in single:
                    covers.add((single[i], with_n[i]))
                if i + 1 in with_n:
                    covers.add((with_n[i + 1], with_n[i]))
        else:
            for l, nd in single.items():
                labels[nd] = _vec(n, {l: n - l + 1})
            for i, nd in with_n.items():
                labels[nd] = _vec(n, {n: n}) if i == n else _vec(n, {i: n - i, n: n - i})
            for l in single:
                if l - 1 in single:
                    covers.add((single[l - 1], single[l]))
            for i in range(1, n):
                covers.add((single[i], with_n[i]))
                if i - 1 >= 1:
                    covers.add((with_n[i - 1], with_n[i]))
            if n > 1:
                covers.add((with_n[n], with_n[1]))

    elements = tuple(sorted(labels, key=lambda e: (len(e.members), e.members)))
    return LabeledPoset(n, kind, elements, frozenset(covers), labels)


def family_poset(family, n, cfg=None):
    try:
        kind, labelling = FAMILY_POSETS[family]
    except KeyError:
        raise ValueError(f"no poset attached to family {family!r}") from None
    if kind != "SIGMA_N" or labelling == "U":
        cfg = None
    return build_poset(kind, n, cfg, labelling or "W")


def covers_ground_set(n):
    """Chain filter: the members of the chain together cover [n]."""
    ground = set(range(1, n + 1))
    return lambda chain: set().union(*(set(e.members) for e in chain)) == ground


def tops_at(element):
    return lambda chain: chain[-1] == element


def chains(poset, keep=None):
    """All nonempty strict chains of ``poset``, bottom-to-top, optionally filtered."""
    out = []

    def extend(chain):
        out.append(chain)
        top = chain[-1]
        for nxt in poset.elements:
            if poset.less(top, nxt):
                extend(chain + (nxt,))

    for e in poset.elements:
        extend((e,))
    if keep is not None:
        out = [c for c in out if keep(c)]
    return out


def chain_label(poset, chain):
    if not chain:
        return (0,) * poset.n
    return tuple(max(col) for col in zip(*(poset.labels[e] for e in chain)))


def face_counts(poset):
    """Number of chains of each length (length = number of elements - 1)."""
    counts = {}
    for c in chains(poset):
        counts[len(c) - 1] = counts.get(len(c) - 1, 0) + 1
    return [counts.get(r, 0) for r in range(max(counts) + 1)] if counts else []


def _product(values):
    out = 1
    for v in values:
        out *= v
    return out


def chain_sum_dimension(family, n, cfg=None, form="restricted"):
    """Number of standard monomials of the dual, from the order complex alone.

    ``form="restricted"`` sums ``(-1)^(n - #chain) * prod(lcm exponents)``
    over chains whose members cover [n].  ``form="complement"`` sums
    ``(-1)^(#chain) * prod_j (d_j - lcm_j)`` over every chain including the
    empty one, ``d_j`` being the exponent of the pure power of ``x_j``.
    """
    poset = family_poset(family, n, cfg)
    if form == "restricted":
        total = 0
        for c in chains(poset, covers_ground_set(n)):
            total += (-1) ** (n - len(c)) * _product(chain_label(poset, c))
        return total
    if form == "complement":
        d = [poset.pure_power(j) for j in range(1, n + 1)]
        total = _product(d)
        for c in chains(poset):
            m = chain_label(poset, c)
            total += (-1) ** len(c) * _product(dj - mj for dj, mj in zip(d, m))
        return total
    raise ValueError(f"unknown form {form!r}")


@dataclass
class PruningReport:
    n: int
    c: int
    unpruned: int
    pruned: int
    type_sums: Tuple[int, int, int]
    expected_type_sums: Tuple[int, int, int]
    cancelled: int
    pairing_ok: bool
    lambda_ok: bool

    @property
    def passed(self):
        return (
            self.unpruned == self.pruned == sum(self.type_sums)
            and self.type_sums == self.expected_type_sums
            and self.pairing_ok
            and self.lambda_ok
        )

    def lines(self):
        yield f"n={self.n} c={self.c}: unpruned={self.unpruned} pruned={self.pruned} cancelled={self.cancelled}"
        yield f"  type sums I/II/III = {self.type_sums}, expected {self.expected_type_sums}"
        yield f"  pairing involution ok={self.pairing_ok}, Lambda_n description ok={self.lambda_ok}"


def _entry_step(chain, n):
    """Index q (0-based) of the chain element where n first appears."""
    for q, e in enumerate(chain):
        if n in e.members:
            return q
    raise ValueError("chain does not contain n")


def chain_pruning_check(n, c):
    """Cancel the equal-weight chain pairs and split the rest into three types.

    Works on chains of Sigma_n ending at [n] with ``u = (1..n)`` and shift
    ``c``.  A chain where n enters at step q >= 2 together with other
    elements is paired with the chain that first adds n alone; the pair has
    equal weight and opposite sign.  The survivors are Type I (bottom is
    {n}), Type II (the element below the top is [n-1]) and Type III (n in
    the bottom element together with something else).
    """
    if n < 3:
        raise ValueError("chain pruning needs n >= 3")
    cfg = WeightConfig.standard(n, c)
    poset = build_poset("SIGMA_N", n, cfg, "W")
    top = Node("SIGMA_N", tuple(range(1, n + 1)))
    full = chains(poset, tops_at(top))

    def sign(ch):
        return (-1) ** (n - len(ch))

    def weight(ch):
        return _product(chain_label(poset, ch))

    by_members = {tuple(e.members for e in ch): ch for ch in full}

    def partner(ch):
        q = _entry_step(ch, n)
        if q == 0:
            return None
        prev, cur = set(ch[q - 1].members), set(ch[q].members)
        if len(cur - prev) >= 2:
            inserted = Node("SIGMA_N", tuple(sorted(prev | {n})))
            return ch[:q] + (inserted,) + ch[q:]
        if q < len(ch) - 1:
            return ch[:q] + ch[q + 1:]
        return None

    unpruned = sum(sign(ch) * weight(ch) for ch in full)
    survivors = []
    cancelled = 0
    pairing_ok = True
    for ch in full:
        mate = partner(ch)
        if mate is None:
            survivors.append(ch)
            continue
        cancelled += 1
        key = tuple(e.members for e in mate)
        if key not in by_members or partner(by_members[key]) != ch:
            pairing_ok = False
        elif weight(mate) != weight(ch) or sign(mate) == sign(ch):
            pairing_ok = False
    pruned = sum(sign(ch) * weight(ch) for ch in survivors)

    lower_top = tuple(range(1, n))
    type1 = [ch for ch in survivors if ch[0].members == (n,)]
    type2 = [ch for ch in survivors if len(ch) >= 2 and ch[-2].members == lower_top]
    type3 = [ch for ch in survivors if n in ch[0].members and len(ch[0].members) >= 2]
    if len(type1) + len(type2) + len(type3) != len(survivors):
        pairing_ok = False
    sums = tuple(sum(sign(ch) * weight(ch) for ch in group) for group in (type1, type2, type3))
    a = a_value(n - 1, 1, c)
    expected = ((n - 1 + c) * a, c * a_value(n - 1, 1, c + 1), -c * a)

    # Type II: chains of Lambda_n through the edge [n-1] < [n].  Type III:
    # chains of Lambda_n ending at [n] inside the upper copy Sigma_(n-1)*{n}
    # (in the transitive order, e.g. {1} < [n] also avoids [n-1]).
    lam = build_poset("LAMBDA_N", n, cfg)
    lam_chains = {
        tuple(e.members for e in ch)
        for ch in chains(lam)
        if ch[-1].members == top.members
    }
    with_edge = {k for k in lam_chains if len(k) >= 2 and k[-2] == lower_top}
    without = {k for k in lam_chains if all(n in members for members in k)}
    lambda_ok = with_edge == {tuple(e.members for e in ch) for ch in type2} and without == {
        tuple(e.members for e in ch) for ch in type3
    }

    return PruningReport(n, c, unpruned, pruned, sums, expected, cancelled, pairing_ok, lambda_ok)


def minimality_check(poset):
    """True iff no face has the same lcm label as one of its facets."""
    zero = (0,) * poset.n
    for ch in chains(poset):
        label = chain_label(poset, ch)
        if len(ch) == 1:
            if label == zero:
                return False
            continue
        for k in range(len(ch)):
            if chain_label(poset, ch[:k] + ch[k + 1:]) == label:
                return False
    return True


def betti_by_faces(poset):
    """Betti numbers of the ideal read off as face counts of the order complex."""
    if not minimality_check(poset):
        raise NonMinimalResolutionError(
            f"the labelling of {poset.kind} (n={poset.n}) does not give a minimal resolution; "
            "use face_counts for raw chain counts"
        )
    return face_counts(poset)


def order_monomial_check(poset):
    """Every pair has an upper bound whose label divides the pair's lcm."""
    for a, b in combinations(poset.elements, 2):
        lcm = chain_label(poset, (a, b))
        if not any(
            all(x <= y for x, y in zip(poset.labels[w], lcm)) for w in poset.upper_bounds(a, b)
        ):
            return False
    return True


def hilbert_numerator(poset):
    """``sum over faces F (empty included) of (-1)^|F| x^lcm(F)``."""
    acc = {(0,) * poset.n: 1}
    for ch in chains(poset):
        m = chain_label(poset, ch)
        acc[m] = acc.get(m, 0) + (-1) ** len(ch)
    return SparsePoly(poset.n, acc)


def hilbert_numerator_check(family, n, cfg=None):
    """Compare the standard-monomial generating function times prod(1 - x_i)
    with the order-complex numerator, as exact polynomials."""
    poset = family_poset(family, n, cfg)
    dual = dual_of_family(family, n, cfg if family in ("W", "PERM") else None)
    if poset.ideal() != dual:
        return False
    lhs = SparsePoly.from_monomials(n, standard_monomials(dual)) * SparsePoly.one_minus_x_product(n)
    return lhs == hilbert_numerator(poset)


def _monomial_text(exp):
    parts = [f"x{i + 1}^{e}" if e > 1 else f"x{i + 1}" for i, e in enumerate(exp) if e]
    return "*".join(parts) or "1"


def export_dot(poset):
    """Hasse diagram in DOT; edges run from covered to covering element."""
    lines = [f'digraph "{poset.kind}_{poset.n}" {{', "  rankdir=BT;"]
    for e in poset.elements:
        lines.append(f'  "{e}" [label="{e}\\n{_monomial_text(poset.labels[e])}"];')
    for lo, hi in sorted(poset.covers):
        lines.append(f'  "{lo}" -> "{hi}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
