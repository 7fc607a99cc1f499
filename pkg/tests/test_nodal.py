import math

import pytest

from nodalsurf.betti import defect
from nodalsurf.ideals import IdealGens, contains, graded_piece
from nodalsurf.nodal import (NodalExample, alexander_exponent, analyze,
                             build_example, default_kmax, detect_ci,
                             hessian_rank_at, jacobian_ideal, locus_dims,
                             random_points, rational_node_spotcheck,
                             tangent_dims)
from nodalsurf.poly import GradedRing, Polynomial, random_form
from nodalsurf.verify import koszul_defect, koszul_hilbert

R = GradedRing(3, 65521)


@pytest.fixture(scope="module")
def ex84():
    return build_example(8, 4, R, seed=7)


def test_build_example_structure(ex84):
    ex = ex84
    assert (ex.f1.degree, ex.f2.degree, ex.f3.degree) == (7, 4, 0)
    x0 = Polynomial.variable(R, 0)
    assert ex.f == x0 * ex.f1 + ex.f2 * ex.f2 * ex.f3
    assert ex.node_ideal.degrees == (1, 4, 7)
    assert ex.length == 28
    # f lies in the node ideal, as do all its partials
    assert contains(ex.f, ex.node_ideal)
    for i in range(4):
        assert contains(ex.f.diff(i), ex.node_ideal)


def test_build_example_deterministic():
    a = build_example(8, 4, R, seed=7)
    b = build_example(8, 4, R, seed=7)
    assert a.f == b.f and a.seed == b.seed
    assert build_example(8, 4, R, seed=8).f != a.f


def test_node_ideal_hilbert_is_koszul(ex84):
    kmax = ex84.hilbert.kmax
    assert list(ex84.hilbert.values) == koszul_hilbert((1, 4, 7), 3, kmax)


def test_default_kmax():
    assert default_kmax(8) == 9
    assert default_kmax(9) == 11
    assert default_kmax(10) == 12


def test_tangent_dims(ex84):
    expected, actual, excess = tangent_dims(ex84)
    assert expected == 28
    assert excess == koszul_defect((1, 4, 7), 3, 8) == 1
    assert actual == 27


def test_alexander_exponent_dichotomy(ex84):
    exp, bound = alexander_exponent(ex84.node_ideal, 8,
                                    ex84.hilbert, ex84.length)
    assert (exp, bound) == (1, 8 * 8 - 3 * 8 + 3)
    ex9 = build_example(9, 4, R, seed=7)
    assert alexander_exponent(ex9.node_ideal, 9, ex9.hilbert, ex9.length)[0] == 0


def test_detect_ci(ex84):
    det = detect_ci(ex84.node_ideal, 8, ex84.hilbert)
    assert det.verdict
    assert tuple(det.generator_degrees) == (1, 4, 7)
    ex10 = build_example(10, 5, R, seed=7)
    det10 = detect_ci(ex10.node_ideal, 10, ex10.hilbert)
    assert not det10.verdict


def test_locus_dims_identity():
    for d, a in ((8, 4), (9, 4), (10, 5), (12, 6)):
        dim_l0, dim_l, codim = locus_dims(d, a)
        assert dim_l == dim_l0 + 3
        assert codim == math.comb(d + 3, 3) - dim_l
        assert 2 * codim == -5 * a * a + 3 * a + 4 * d * a - 6
    assert locus_dims(8, 4) == (135, 138, 27)


def test_hessian_rank_degenerate_fixture():
    # f = x0^2 * g has corank >= 2 quadratic part at singular points of
    # the non-reduced double plane, so the Hessian rank cannot reach 3
    g = random_form(R, 2, seed=13, variables=(1, 2, 3))
    x0 = Polynomial.variable(R, 0)
    f = x0 * x0 * g
    q = (0, 1, 0, 0)
    assert f.evaluate(q) == 0
    assert hessian_rank_at(f, q) <= 1


def test_rational_node_spotcheck_small_prime():
    ring = GradedRing(3, 101)
    ex = build_example(8, 4, ring, seed=7)
    rep = rational_node_spotcheck(ex)
    assert rep["prime"] == 101
    assert rep["all_nodes"]
    assert rep["sigma_rational_points"] == rep["nodes"]
    assert rep["points_checked"] == 101 * 101 + 101 + 1


def test_rescaling_invariance_at_half_degree():
    # a = d/2 makes f3 a constant: report should match a generic run
    ex = build_example(8, 4, R, seed=7)
    lam = 5
    f_scaled = ex.f * Polynomial.constant(R, lam)
    assert contains(f_scaled, ex.node_ideal)
    jac = jacobian_ideal(f_scaled)
    assert graded_piece(jac, 8).dim == graded_piece(jacobian_ideal(ex.f), 8).dim


def test_random_points_distinct_normalized():
    pts = random_points(R, 20, seed=3)
    assert len(set(pts)) == 20
    for q in pts:
        lead = next(x for x in q if x)
        assert lead == 1


def test_analyze_report(ex84):
    rep = analyze(8, 4, 65521, 7)
    assert rep["d"] == 8 and rep["a"] == 4 and rep["prime"] == 65521
    assert rep["length"] == 28
    assert rep["defect_d"] == 1
    assert rep["alexander_exponent"] == 1
    assert rep["ci_1_4_dm1"] is True
    assert rep["codim_L"] == 27
    assert rep["codim_L_vs_length"] == "lt"
    assert analyze(8, 4, 65521, 7) == rep


def test_analyze_prime_consensus():
    base = analyze(8, 4, 65521, 7)
    other = analyze(8, 4, 32749, 7)
    for key, val in base.items():
        if key != "prime":
            assert other[key] == val
