import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nodalsurf.poly import (DegreeGuardError, GradedRing, Polynomial,
                            PolynomialSyntaxError, coefficient_vector,
                            euler_pairing_check, format_polynomial,
                            from_vector, monomial_basis, parse_polynomial,
                            random_form, substitute)

R = GradedRing(3, 65521)


def test_ring_validation():
    with pytest.raises(ValueError):
        GradedRing(3, 6)          # not prime
    with pytest.raises(ValueError):
        GradedRing(3, 3)          # p <= n+1
    with pytest.raises(ValueError):
        GradedRing(3, 2147483659)  # p >= 2^31 would overflow the blocks


def test_dim_matches_binomial():
    for n in range(1, 5):
        ring = GradedRing(n, 65521)
        for k in range(12):
            assert ring.dim(k) == math.comb(n + k, n)
            assert ring.dim(k) == len(monomial_basis(ring, k))


def test_monomial_order_graded_lex():
    mons = monomial_basis(R, 2)
    assert mons[0] == (2, 0, 0, 0)
    assert mons[-1] == (0, 0, 0, 2)
    assert mons == tuple(sorted(mons, reverse=True))
    assert all(sum(m) == 2 for m in mons)


def test_degree_guard():
    with pytest.raises(DegreeGuardError):
        monomial_basis(R, 41)


def test_homogeneous_only():
    x0 = Polynomial.variable(R, 0)
    with pytest.raises(ValueError):
        x0 + x0 * x0


def test_arithmetic_identities():
    f = random_form(R, 2, seed=3)
    g = random_form(R, 2, seed=4)
    h = random_form(R, 1, seed=5)
    assert f + g == g + f
    assert (f + g) * h == f * h + g * h
    assert f - f == Polynomial.zero(R, 2)
    assert f * Polynomial.zero(R, 1) == Polynomial.zero(R, 3)


def test_diff_leibniz_and_euler():
    f = random_form(R, 3, seed=10)
    g = random_form(R, 2, seed=11)
    for i in range(4):
        assert (f * g).diff(i) == f.diff(i) * g + f * g.diff(i)
    assert euler_pairing_check(f)
    assert euler_pairing_check(g)


def test_evaluate_is_ring_hom():
    f = random_form(R, 2, seed=20)
    g = random_form(R, 2, seed=21)
    pt = (3, 1, 4, 1)
    p = R.p
    assert (f + g).evaluate(pt) == (f.evaluate(pt) + g.evaluate(pt)) % p
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt) % p


def test_substitute_degree_law_and_hom():
    t = 2
    images = []
    for i in range(4):
        xi = Polynomial.variable(R, i)
        sq = xi
        for _ in range(t - 1):
            sq = sq * xi
        images.append(sq)
    f = random_form(R, 3, seed=30)
    g = random_form(R, 3, seed=31)
    assert substitute(f, images).degree == t * f.degree
    assert substitute(f * g, images) == substitute(f, images) * substitute(g, images)
    with pytest.raises(ValueError):
        substitute(f, images[:3])


def test_coefficient_vector_roundtrip():
    f = random_form(R, 4, seed=40)
    v = coefficient_vector(f)
    assert len(v) == R.dim(4)
    assert from_vector(R, 4, v) == f


def test_random_form_deterministic_and_restricted():
    assert random_form(R, 3, seed=1) == random_form(R, 3, seed=1)
    assert random_form(R, 3, seed=1) != random_form(R, 3, seed=2)
    g = random_form(R, 2, seed=1, variables=(1, 2, 3))
    assert all(m[0] == 0 for m in g.terms)


def test_parse_format_basics():
    f = parse_polynomial(R, "x0^2 + 3*x1*x2 - x3^2")
    assert f.degree == 2
    assert f.terms[(2, 0, 0, 0)] == 1
    assert f.terms[(0, 1, 1, 0)] == 3
    assert f.terms[(0, 0, 0, 2)] == R.p - 1
    assert parse_polynomial(R, format_polynomial(f)) == f


def test_parse_errors():
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial(R, "x0 + ")
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial(R, "x9")
    with pytest.raises(PolynomialSyntaxError) as e:
        parse_polynomial(R, "x0^2 + x1")  # mixed degrees
    assert "2" in str(e.value) and "1" in str(e.value)


small = st.integers(min_value=0, max_value=65520)


@st.composite
def forms(draw, degree=2):
    mons = monomial_basis(R, degree)
    coeffs = draw(st.lists(small, min_size=len(mons), max_size=len(mons)))
    return from_vector(R, degree, coeffs)


@settings(max_examples=50, deadline=None)
@given(forms(), forms(), forms())
def test_mul_associative(f, g, h):
    assert (f * g) * h == f * (g * h)


@settings(max_examples=50, deadline=None)
@given(forms())
def test_format_parse_roundtrip(f):
    assert parse_polynomial(R, format_polynomial(f)) == f


@settings(max_examples=50, deadline=None)
@given(forms())
def test_euler_identity_holds(f):
    assert euler_pairing_check(f)
