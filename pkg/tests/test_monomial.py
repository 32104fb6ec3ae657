from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from starshape.monomial import (
    MonomialIdeal,
    dimension_of_degree,
    minimalize,
    monomials_of_degree,
    revlex_cmp,
)

# The computed gin of the 2nd symbolic power for 3 general plane points,
# used across the examples below.
GIN23_M2 = [(3, 0), (2, 2), (1, 3), (0, 4)]


def test_revlex_examples():
    # x1 x3 < x2^2: the last differing exponent is larger on the left.
    assert revlex_cmp((1, 0, 1), (0, 2, 0)) == -1
    assert revlex_cmp((2, 0), (2, 0)) == 0
    assert revlex_cmp((3, 0), (2, 1)) == 1  # x1^3 > x1^2 x2


def test_revlex_refines_degree():
    assert revlex_cmp((0, 0, 5), (4, 0, 0)) == 1


def test_revlex_rejects_length_mismatch():
    with pytest.raises(ValueError):
        revlex_cmp((1, 0), (1, 0, 0))


def test_revlex_total_order_small_exhaustive():
    # All monomial pairs of degree <= 4 in <= 3 variables.
    for nv in (1, 2, 3):
        mons = [u for d in range(5) for u in monomials_of_degree(nv, d)]
        for u in mons:
            assert revlex_cmp(u, u) == 0
        for u, v in product(mons, repeat=2):
            c = revlex_cmp(u, v)
            assert c == -revlex_cmp(v, u)
            if u != v:
                assert c != 0
        for u, v, w in product(mons, repeat=3):
            if revlex_cmp(u, v) <= 0 and revlex_cmp(v, w) <= 0:
                assert revlex_cmp(u, w) <= 0


def test_monomials_of_degree_descending():
    mons = monomials_of_degree(3, 2)
    assert mons == (
        (2, 0, 0),
        (1, 1, 0),
        (0, 2, 0),
        (1, 0, 1),
        (0, 1, 1),
        (0, 0, 2),
    )
    assert len(monomials_of_degree(4, 10)) == dimension_of_degree(4, 10)


def test_membership_examples():
    j = MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    assert j.contains((1, 1))
    assert not j.contains((1, 0))
    g = MonomialIdeal(2, GIN23_M2)
    assert not g.contains((2, 1))


def test_minimalize_examples():
    assert minimalize([(2, 0), (3, 0)]) == [(2, 0)]
    assert minimalize([]) == []
    assert minimalize([(2, 0), (1, 1), (0, 2), (2, 1)]) == [(2, 0), (1, 1), (0, 2)]


def test_borel_examples():
    assert MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)]).is_borel_fixed()
    assert not MonomialIdeal(2, [(0, 2)]).is_borel_fixed()
    assert MonomialIdeal(2, GIN23_M2).is_borel_fixed()


def test_hilbert_function_examples():
    zero = MonomialIdeal(2, [])
    assert zero.hilbert_function(3) == 4
    j = MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    assert j.hilbert_function(1) == 2
    assert j.hilbert_function(2) == 0
    g = MonomialIdeal(2, GIN23_M2)
    assert [g.hilbert_function(d) for d in range(5)] == [1, 2, 3, 3, 0]


def test_colength_examples():
    assert MonomialIdeal(2, [(1, 0), (0, 1)]).colength() == 1
    assert MonomialIdeal(2, [(2, 0)]).colength() is None
    assert MonomialIdeal(2, GIN23_M2).colength() == 9


def test_colength_is_sum_of_hilbert_function():
    g = MonomialIdeal(2, GIN23_M2)
    assert g.colength() == sum(g.hilbert_function(d) for d in range(10))


def test_pure_power_threshold_examples():
    j = MonomialIdeal(2, [(2, 0), (1, 1), (0, 2)])
    assert j.pure_power_threshold(2) == 2
    g = MonomialIdeal(2, GIN23_M2)
    assert g.pure_power_threshold(1) == 3
    assert g.pure_power_threshold(2) == 4
    assert MonomialIdeal(2, [(1, 0)]).pure_power_threshold(2) is None


def test_borel_pure_powers_are_monotone():
    for gens, nv in [
        (GIN23_M2, 2),
        ([(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)], 3),
    ]:
        j = MonomialIdeal(nv, gens)
        assert j.is_borel_fixed()
        thresholds = [j.pure_power_threshold(i) for i in range(1, nv + 1)]
        assert all(t is not None for t in thresholds)
        assert thresholds == sorted(thresholds)


small_monomials = st.lists(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=0, max_size=6
)


@settings(max_examples=100)
@given(small_monomials, st.tuples(st.integers(0, 4), st.integers(0, 4)))
def test_membership_is_monotone(gens, u):
    j = MonomialIdeal(2, gens)
    if j.contains(u):
        assert j.contains((u[0] + 1, u[1]))
        assert j.contains((u[0], u[1] + 1))


@settings(max_examples=100)
@given(small_monomials)
def test_minimal_generators_all_members_and_incomparable(gens):
    j = MonomialIdeal(2, gens)
    for g in j.generators:
        assert j.contains(g)
    for a in j.generators:
        for b in j.generators:
            if a != b:
                assert not all(x <= y for x, y in zip(a, b))
