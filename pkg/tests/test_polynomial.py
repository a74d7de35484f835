from hypothesis import given, strategies as st

from pattern_ideals.polynomial import SparsePoly

polys = st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)), st.integers(-5, 5), max_size=5).map(
    lambda d: SparsePoly(2, d)
)
points = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


@given(polys, polys, points)
def test_ring_operations_commute_with_evaluation(p, q, x):
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)
    assert (p - q).evaluate(x) == p.evaluate(x) - q.evaluate(x)


def test_zero_terms_dropped():
    p = SparsePoly(1, {(1,): 2}) - SparsePoly(1, {(1,): 2})
    assert len(p) == 0 and repr(p) == "0"


def test_one_minus_x_product():
    p = SparsePoly.one_minus_x_product(2)
    assert p.terms == {(0, 0): 1, (1, 0): -1, (0, 1): -1, (1, 1): 1}
