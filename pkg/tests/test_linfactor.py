import random

from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import poly_of
from sepcurve.critical import PolynomialPair
from sepcurve.instances import (
    compose_affine,
    random_linear_factor_pair,
    random_perturbed_pair,
)
from sepcurve.linfactor import find_linear_factor
from sepcurve.rationals import rat


def test_diagonal_cubic_family():
    w = find_linear_factor(PolynomialPair(poly_of(0, 0, 0, 1), poly_of(0, 0, 0, 1)))
    assert w is not None
    assert w.family_size == 3  # conjugate scales: the cube roots of 1
    assert w.scale_minpoly(rat(1)) == 0
    assert w.shift_for_scale(rat(1)) == 0
    assert "y - (s*x + t)" in w.description


def test_rational_substitution_is_found_and_verified():
    a = poly_of(1, 1, 0, 1)  # x^3 + x + 1
    s, t = rat(2), rat(-1, 2)
    pair = PolynomialPair(compose_affine(a, s, t), a)
    w = find_linear_factor(pair)
    assert w is not None
    assert w.scale_minpoly(s) == 0
    assert w.shift_for_scale(s) == t
    # the witness substitution really kills the difference
    composed = compose_affine(pair.q, s, t)
    assert composed == pair.p


def test_unequal_degrees_never_match():
    assert find_linear_factor(PolynomialPair(poly_of(0, 0, 0, 1), poly_of(0, 0, 1))) is None


def test_disjoint_critical_values_no_factor():
    assert find_linear_factor(PolynomialPair(poly_of(0, -3, 0, 1), poly_of(0, 0, 0, 1))) is None


def test_constant_perturbation_kills_the_factor():
    a = poly_of(0, 1, 0, 1)
    pair = PolynomialPair(compose_affine(a, rat(3), rat(1)), a + rat(5))
    assert find_linear_factor(pair) is None


def test_random_composed_pairs_always_witnessed():
    rng = random.Random(17)
    for _ in range(25):
        pair, (s, t) = random_linear_factor_pair(rng)
        w = find_linear_factor(pair)
        assert w is not None, pair
        if not pair.swapped:
            assert w.scale_minpoly(s) == 0
            assert w.shift_for_scale(s) == t


def test_random_perturbed_pairs_rejected():
    rng = random.Random(18)
    for _ in range(25):
        pair = random_perturbed_pair(rng)
        w = find_linear_factor(pair)
        if w is not None:
            # only acceptable if the witness verifies exactly
            roots_ok = w.scale_minpoly.degree > 0
            assert roots_ok and False, f"unsound witness for {pair}"


@given(
    coeffs=st.lists(st.integers(-4, 4), min_size=2, max_size=5),
    s_num=st.integers(-3, 3).filter(bool),
    s_den=st.integers(1, 3),
    t_num=st.integers(-4, 4),
)
@settings(deadline=None, max_examples=40)
def test_composed_pair_property(coeffs, s_num, s_den, t_num):
    a = poly_of(*coeffs, 1)
    if a.degree < 2:
        return
    s, t = rat(s_num, s_den), rat(t_num, 2)
    pair = PolynomialPair(compose_affine(a, s, t), a)
    w = find_linear_factor(pair)
    assert w is not None
    if not pair.swapped:
        assert w.shift_for_scale(s) == t
