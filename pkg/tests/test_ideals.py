import math

import pytest

from nodalsurf.ideals import (BaseLocusInconclusive, GenericityFailure,
                              HilbertTable, IdealGens, MatrixGuardError,
                              base_locus_plateau, closure_hilbert, contains,
                              finite_base_locus, format_ideal_file,
                              gorenstein_closure, graded_piece, hilbert_fn,
                              parse_ideal_file, points_hilbert, pullback_gens,
                              quotient_by_linear, vanishing_ideal_piece)
from nodalsurf.poly import (GradedRing, Polynomial, parse_polynomial,
                            random_form)
from nodalsurf.verify import koszul_hilbert

R = GradedRing(3, 65521)


def ci_ideal(ring, degrees, seed=0):
    gens = [random_form(ring, dk, seed=seed + 7 * i)
            for i, dk in enumerate(degrees)]
    return IdealGens(ring, gens)


def test_graded_piece_dims():
    x0 = Polynomial.variable(R, 0)
    I = IdealGens(R, [x0])
    for k in range(1, 6):
        # x0 * S_{k-1} is a free module piece
        assert graded_piece(I, k).dim == R.dim(k - 1)
    assert graded_piece(I, 0).dim == 0


def test_principal_hilbert_matches_closed_form():
    f = random_form(R, 3, seed=2)
    h = hilbert_fn(IdealGens(R, [f]), 8)
    for k in range(9):
        ideal_dim = R.dim(k - 3) if k >= 3 else 0
        assert h.h(k) == R.dim(k) - ideal_dim


@pytest.mark.parametrize("degrees", [(1, 2, 3), (2, 2, 2), (1, 4, 7)])
def test_ci_hilbert_matches_koszul_oracle(degrees):
    kmax = sum(degrees)
    h = hilbert_fn(ci_ideal(R, degrees, seed=5), kmax)
    oracle = koszul_hilbert(degrees, 3, kmax)
    assert list(h.values) == oracle


def test_hilbert_prime_independence():
    for p in (65521, 32749, 8191):
        ring = GradedRing(3, p)
        h = hilbert_fn(ci_ideal(ring, (1, 4, 7), seed=5), 11)
        assert list(h.values) == koszul_hilbert((1, 4, 7), 3, 11)


def test_entry_guard_trips():
    I = ci_ideal(R, (1, 4, 7), seed=1)
    with pytest.raises(MatrixGuardError):
        hilbert_fn(I, 11, entry_guard=100)


def test_quotient_by_linear_drops_dimension():
    I = ci_ideal(R, (1, 4, 7), seed=5)
    ell = random_form(R, 1, seed=99)
    J = quotient_by_linear(I, ell, 12)
    assert J.ring.n == 2
    hj = hilbert_fn(J, 12)
    hi = hilbert_fn(I, 12)
    # hyperplane section of an arithmetically CM curve: first difference
    for k in range(1, 13):
        assert hj.h(k) == hi.h(k) - hi.h(k - 1)


def test_quotient_genericity_failure():
    # x0 is a zero divisor mod the ideal (x0): injectivity must fail
    x0 = Polynomial.variable(R, 0)
    with pytest.raises(GenericityFailure):
        quotient_by_linear(IdealGens(R, [x0]), x0, 4)


def test_points_hilbert_generic_growth():
    from nodalsurf.nodal import random_points
    pts = random_points(R, 5, seed=8)
    h = points_hilbert(R, pts, 6)
    # 5 generic points impose independent conditions from degree 1 on
    assert h.h(0) == 1
    for k in range(2, 7):
        assert h.h(k) == 5
    for k in range(6):
        assert vanishing_ideal_piece(R, pts, k).dim == R.dim(k) - h.h(k)


def test_gorenstein_closure_symmetry_small():
    # nodes of a CI(1,2,3) surface-like configuration, d = 4
    d = 4
    I = ci_ideal(R, (1, 2, d - 1), seed=5)
    pieces = gorenstein_closure(I, d)
    hj = closure_hilbert(R, pieces)
    assert len(hj) == d + 2
    assert hj[0] == 1 and hj[d + 1] == R.dim(d + 1) - pieces[d + 1].dim
    for k in range(d + 2):
        assert hj[k] == hj[d + 1 - k]


def test_finite_base_locus_answers():
    assert finite_base_locus(ci_ideal(R, (1, 2, 3), seed=5), 3)
    x0 = Polynomial.variable(R, 0)
    assert not finite_base_locus(IdealGens(R, [x0]), 1)
    ok, val = base_locus_plateau(ci_ideal(R, (1, 2, 3), seed=5), 3)
    assert ok and val == 6  # CI(1,2,3) length = 1*2*3


def test_base_locus_zero_plateau_for_irrelevant_ideal():
    gens = [Polynomial.variable(R, i) for i in range(4)]
    ok, val = base_locus_plateau(IdealGens(R, gens), 1)
    assert ok and val == 0


def test_contains():
    f = random_form(R, 2, seed=3)
    g = random_form(R, 1, seed=4)
    I = IdealGens(R, [f])
    assert contains(f * g, I)
    assert not contains(random_form(R, 3, seed=50), I)


def test_pullback_gens_degree_and_membership():
    gens = [Polynomial.variable(R, i) for i in range(4)]
    I = IdealGens(R, gens)
    images = [Polynomial.variable(R, i) * Polynomial.variable(R, i)
              for i in range(4)]
    It = pullback_gens(I, images)
    assert It.degrees == (2, 2, 2, 2)
    x0 = gens[0]
    bad_images = [x0 * g for g in gens]  # common zero along x0 = 0
    with pytest.raises(GenericityFailure):
        pullback_gens(I, bad_images)


def test_ideal_file_roundtrip():
    I = ci_ideal(R, (1, 4, 7), seed=5)
    text = format_ideal_file(I)
    assert text.splitlines()[0] == "ring n=3 p=65521"
    J = parse_ideal_file(text)
    assert J.ring == I.ring
    assert J.gens == I.gens


def test_ideal_file_bad_header():
    with pytest.raises(ValueError):
        parse_ideal_file("ring n=3\nx0")
