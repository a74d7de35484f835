from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from oracles import avoiders_brute, contains_brute
from pattern_ideals.permclasses import (
    FAMILIES,
    as_permutation,
    avoiders,
    contains_pattern,
    family_patterns,
    hypercubic_membership,
    parse_pattern,
)

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(list(range(1, n + 1)))).map(tuple)
patterns = st.integers(1, 4).flatmap(lambda k: st.permutations(list(range(1, k + 1)))).map(tuple)


def test_contains_examples():
    assert contains_pattern((2, 1, 3), (2, 1))
    assert contains_pattern((4, 1, 3, 2), (1, 3, 2))
    assert not contains_pattern((1, 2, 3), (2, 1))
    assert not contains_pattern((1, 2), (1, 2, 3))


def test_empty_pattern_rejected():
    with pytest.raises(ValueError):
        contains_pattern((1, 2), ())


@given(perms, patterns)
def test_contains_agrees_with_subsequence_scan(sigma, tau):
    assert contains_pattern(sigma, tau) == contains_brute(sigma, tau)


def test_avoiders_match_brute_force():
    for tag, pats in FAMILIES.items():
        for n in range(1, 7):
            assert avoiders(n, tag) == avoiders_brute(n, pats)


def test_class_sizes():
    assert [len(avoiders(n, "W")) for n in range(1, 7)] == [1, 2, 4, 8, 16, 32]
    for tag in ("S1", "S2", "S3", "T1", "T2", "U"):
        assert [len(avoiders(n, tag)) for n in range(1, 7)] == [1, 2, 3, 4, 5, 6]


def test_hypercubic_membership_matches_class():
    for n in range(1, 8):
        direct = [s for s in permutations(range(1, n + 1)) if hypercubic_membership(s)]
        assert direct == avoiders(n, "W")


def test_bad_inputs():
    with pytest.raises(ValueError):
        avoiders(0, "W")
    with pytest.raises(ValueError):
        family_patterns("X7")
    with pytest.raises(ValueError):
        as_permutation((1, 1, 2))
    assert parse_pattern("132") == parse_pattern("1,3,2") == (1, 3, 2)
