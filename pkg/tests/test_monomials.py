from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from oracles import antichain, box_scan, dual_by_complement
from pattern_ideals.monomials import (
    MonomialIdeal,
    WeightConfig,
    alexander_dual,
    contains,
    count_standard_monomials,
    dual_of_family,
    family_dual_generators,
    family_ideal,
    hypercubic_dual_generators,
    hypercubic_mu,
    minimalize,
    permutohedron_dual_generators,
    standard_monomials,
    unimodal_nu,
)

FAMILY_TAGS = ("W", "PERM", "S1", "S2", "S3", "T1", "T2", "U")


def small_ideals(n_max=3, e_max=3):
    vec = lambda n: st.tuples(*[st.integers(0, e_max)] * n)
    return st.integers(1, n_max).flatmap(
        lambda n: st.lists(vec(n), min_size=1, max_size=5).map(lambda gs: MonomialIdeal(n, tuple(gs)))
    )


def test_minimalize_keeps_antichain():
    assert minimalize([(1, 1), (2, 1), (1, 1), (0, 3)]) == ((0, 3), (1, 1))


def test_ideal_validation():
    with pytest.raises(ValueError):
        MonomialIdeal(2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        MonomialIdeal(0, ())
    with pytest.raises(ValueError):
        contains(MonomialIdeal(2, ((1, 0),)), (1, 0, 0))


def test_weight_config_validation():
    with pytest.raises(ValueError):
        WeightConfig((1, 1, 2))
    with pytest.raises(ValueError):
        WeightConfig((1, 2, 3), c=0)
    with pytest.raises(ValueError):
        WeightConfig((1, 3, 4), b=2)
    cfg = WeightConfig.arithmetic(3, 2, 3)
    assert cfg.u == (1, 3, 5) and cfg.corner == (7, 7, 7)
    assert cfg.lam() == (7, 5, 3)


def test_hypercubic_mu_values():
    u = (1, 2, 3)
    assert hypercubic_mu(2, (2,), u, 1) == 3
    assert hypercubic_mu(1, (1, 3), u, 1) == 2
    assert hypercubic_mu(3, (1, 3), u, 1) == 1
    cfg = WeightConfig.standard(2)
    assert hypercubic_dual_generators(cfg).generators == ((0, 2), (1, 1), (2, 0))


def test_unimodal_nu_values():
    assert unimodal_nu(1, (1, 3), 3) == 1
    assert unimodal_nu(3, (1, 3), 3) == 2
    assert unimodal_nu(2, (2,), 3) == 3


@settings(max_examples=60, deadline=None)
@given(small_ideals(), st.integers(0, 2))
def test_generic_dual_matches_complement_oracle(ideal, extra):
    a = tuple(max(col) + extra for col in zip(*ideal.generators))
    if min(a) < 1:
        a = tuple(max(x, 1) for x in a)
    dual = alexander_dual(ideal, a)
    assert list(dual.generators) == dual_by_complement(ideal.generators, a)


@settings(max_examples=60, deadline=None)
@given(small_ideals())
def test_dual_is_an_involution(ideal):
    a = tuple(max(max(col), 1) for col in zip(*ideal.generators))
    assert alexander_dual(alexander_dual(ideal, a), a) == ideal


def test_duals_of_families_against_oracle():
    for fam in FAMILY_TAGS:
        for n in range(1, 5):
            ideal = family_ideal(fam, n)
            expected = dual_by_complement(ideal.generators, (n,) * n)
            assert list(dual_of_family(fam, n).generators) == expected, (fam, n)


def test_weighted_duals_against_oracle():
    for u, c in (((1, 2, 4), 1), ((2, 3, 5), 2), ((1, 4), 3)):
        cfg = WeightConfig(u, c)
        for fam, closed in (("W", hypercubic_dual_generators), ("PERM", permutohedron_dual_generators)):
            ideal = family_ideal(fam, cfg.n, u)
            assert list(closed(cfg).generators) == dual_by_complement(ideal.generators, cfg.corner)


def test_dual_errors():
    ideal = MonomialIdeal(2, ((3, 0), (0, 1)))
    with pytest.raises(ValueError):
        alexander_dual(ideal, (2, 2))
    with pytest.raises(ValueError):
        alexander_dual(ideal, (3,))
    with pytest.raises(ValueError):
        dual_of_family("S1", 3, WeightConfig.standard(3, 2))
    with pytest.raises(ValueError):
        family_dual_generators("Q", 3)


@settings(max_examples=60, deadline=None)
@given(small_ideals())
def test_standard_monomials_match_box_scan(ideal):
    n = ideal.n
    gens = ideal.generators + tuple(tuple(4 if i == k else 0 for i in range(n)) for k in range(n))
    art = MonomialIdeal(n, gens)
    box = [art.pure_powers()[i] for i in range(n)]
    assert standard_monomials(art) == box_scan(art.generators, box)


def test_non_artinian_rejected():
    with pytest.raises(ValueError, match="not Artinian"):
        standard_monomials(MonomialIdeal(2, ((1, 1), (2, 0))))


def test_hypercubic_counts():
    assert [count_standard_monomials(dual_of_family("W", n)) for n in range(1, 6)] == [1, 3, 14, 88, 694]
    assert [count_standard_monomials(dual_of_family("PERM", n)) for n in range(1, 5)] == [1, 3, 16, 125]


def test_json_round_trip_is_byte_identical():
    for fam in FAMILY_TAGS:
        text = dual_of_family(fam, 4).to_json()
        again = MonomialIdeal.from_json(text)
        assert again.to_json() == text
        assert again == dual_of_family(fam, 4)
