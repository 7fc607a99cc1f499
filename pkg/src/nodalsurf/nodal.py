"""Analysis of the nodal family f = x0*f1 + f2^2*f3.

The node locus is the complete intersection V(x0, f2, f1) of multidegree
(1, a, d-1); all tangent-space, defect, Alexander and locus-dimension
invariants are derived from its Hilbert table.
"""

from dataclasses import dataclass
from math import comb

from .linalg import member
from .poly import (GradedRing, Polynomial, coefficient_vector, random_form)
from .ideals import (GenericityFailure, HilbertTable, IdealGens, contains,
                     graded_piece, hilbert_fn, normalize_point, ENTRY_GUARD)
from .betti import defect, length_of
from .prng import SplitMix64, derive_seed


class GenericityExhausted(RuntimeError):
    """16 consecutive seeds failed the genericity checks."""


@dataclass(frozen=True)
class NodalExample:
    d: int
    a: int
    ring: GradedRing
    seed: int
    f1: Polynomial      # degree d-1, all variables
    f2: Polynomial      # degree a, in x1..x3
    f3: Polynomial      # degree d-2a, in x1..x3
    f: Polynomial       # x0*f1 + f2^2*f3
    node_ideal: IdealGens
    hilbert: HilbertTable
    length: int


@dataclass(frozen=True)
class CIDetection:
    verdict: bool
    generator_degrees: tuple
    evidence: tuple     # (degree, dim I_k, dim of ideal found so far)
    length: int


def default_kmax(d: int) -> int:
    """Stabilization bound: smallest table certifying the length."""
    return (3 * d + 1) // 2 - 3


def build_example(d: int, a: int, ring: GradedRing, seed: int,
                  kmax: int | None = None) -> NodalExample:
    """Seeded random member of the family, with certified invariants.

    Retries with derived seeds (at most 16) until the node ideal has a
    length-a(d-1) plateau, i.e. the three forms cut a complete
    intersection.
    """
    if d < 8:
        raise ValueError("need d >= 8")
    if not 4 <= a <= d / 2:
        raise ValueError("need 4 <= a <= d/2")
    if d % ring.p == 0:
        raise ValueError("characteristic divides the degree")
    if kmax is None:
        kmax = default_kmax(d)
    table_top = kmax + 3
    expected = a * (d - 1)
    last = None
    for attempt in range(16):
        sub = derive_seed(seed, attempt)
        f1 = random_form(ring, d - 1, derive_seed(sub, 1))
        f2 = random_form(ring, a, derive_seed(sub, 2), variables=(1, 2, 3))
        f3 = random_form(ring, d - 2 * a, derive_seed(sub, 3), variables=(1, 2, 3))
        if f2.is_zero() or f3.is_zero():
            continue
        f = Polynomial.variable(ring, 0) * f1 + f2 * f2 * f3
        node_ideal = IdealGens(ring, [Polynomial.variable(ring, 0), f2, f1])
        for i in range(ring.nvars):
            if not contains(f.diff(i), node_ideal):
                raise AssertionError("partial derivative escaped the node ideal")
        table = hilbert_fn(node_ideal, table_top)
        tail = table.values[-(ring.n + 1):]
        if all(v == expected for v in tail):
            return NodalExample(d, a, ring, seed, f1, f2, f3, f,
                                node_ideal, table, expected)
        last = tail
    raise GenericityExhausted(
        f"d={d} a={a} p={ring.p} seed={seed}: no length-{expected} plateau ({last})")


def jacobian_ideal(f: Polynomial) -> IdealGens:
    """Ideal generated by the four partial derivatives."""
    ring = f.ring
    if f.degree % ring.p == 0:
        raise ValueError("characteristic divides deg f; Euler convention breaks")
    return IdealGens(ring, [f.diff(i) for i in range(ring.nvars)])


def tangent_dims(ex: NodalExample):
    """(expected codim, actual codim, excess) of the nodal deformation locus.

    expected = number of nodes s; actual = s - defect_d; the two tangent
    space models (I/J)_d and I_d / <F> are cross-checked via the
    15-dimensional automorphism gap.
    """
    d = ex.d
    rep = defect(ex.hilbert, ex.length, d)
    jac = jacobian_ideal(ex.f)
    jd = graded_piece(jac, d)
    id_piece = graded_piece(ex.node_ideal, d)
    for row in jd.rows:
        if not member(row, id_piece):
            raise AssertionError("Jacobian piece not inside the node ideal piece")
    fvec = coefficient_vector(ex.f)
    if not member(fvec, jd):
        raise AssertionError("defining polynomial escaped its Jacobian ideal")
    dim_i_mod_j = id_piece.dim - jd.dim
    dim_i_mod_f = id_piece.dim - 1
    if dim_i_mod_j - dim_i_mod_f != -(jd.dim - 1):
        raise AssertionError("tangent-model bookkeeping broke")
    expected = ex.length
    actual = expected - rep.delta
    return expected, actual, rep.delta


def alexander_exponent(node_ideal: IdealGens, d: int,
                       hilbert: HilbertTable | None = None,
                       length: int | None = None):
    """(exponent of (t+1) in the Alexander polynomial, global bound).

    For surfaces the exponent is the defect of the node ideal in degree
    3d/2 - 4, zero when d is odd; it never exceeds d^2 - 3d + 3.
    """
    bound = d * d - 3 * d + 3
    if d % 2 == 1:
        return 0, bound
    k = 3 * d // 2 - 4
    if hilbert is None:
        hilbert = hilbert_fn(node_ideal, default_kmax(d) + 3)
    if length is None:
        length = length_of(hilbert)
    rep = defect(hilbert, length, k)
    if rep.delta > bound:
        raise AssertionError(f"exponent {rep.delta} exceeds bound {bound}")
    return rep.delta, bound


def detect_ci(node_ideal: IdealGens, d: int,
              hilbert: HilbertTable | None = None) -> CIDetection:
    """Decide whether the ideal is a complete intersection (1, 4, d-1).

    Reads generator degrees off Hilbert-function comparisons: each degree
    where the ideal generated by the elements found so far falls short of
    I_k contributes new generators.  Verdict requires degrees exactly
    (1, 4, d-1) and length 4(d-1).
    """
    ring = node_ideal.ring
    if hilbert is None:
        hilbert = hilbert_fn(node_ideal, default_kmax(d) + 3)
    try:
        length = length_of(hilbert)
    except Exception:
        length = -1
    found: list[Polynomial] = []
    degrees: list[int] = []
    evidence = []
    from .poly import from_vector
    from .linalg import zero_basis
    for k in range(hilbert.kmax + 1):
        ik = graded_piece(node_ideal, k)
        cur = (graded_piece(IdealGens(ring, found), k)
               if found else zero_basis(ring.dim(k), ring.p))
        evidence.append((k, ik.dim, cur.dim))
        gap = ik.dim - cur.dim
        for _ in range(gap):
            for row in ik.rows:
                if not member(row, cur):
                    g = from_vector(ring, k, row)
                    found.append(g)
                    degrees.append(k)
                    cur = graded_piece(IdealGens(ring, found), k)
                    break
        if len(degrees) > 3:
            break
    verdict = degrees == [1, 4, d - 1] and length == 4 * (d - 1)
    return CIDetection(verdict, tuple(degrees), tuple(evidence), length)


def locus_dims(d: int, a: int):
    """Closed-form dimensions of the family locus in S_d.

    dim_L0 for the loci with the node plane fixed at x0 = 0; dim_L after
    moving the plane; codim_L = (-5a^2 + 3a + 4da - 6) / 2, which equals
    dim S_d - dim_L.
    """
    if not 4 <= a <= d / 2:
        raise ValueError("need 4 <= a <= d/2")
    dim_l0 = comb(d + 2, 3) + comb(a + 2, 2) + comb(d - 2 * a + 2, 2) - 1
    dim_l = dim_l0 + 3
    codim = (-5 * a * a + 3 * a + 4 * d * a - 6) // 2
    if (-5 * a * a + 3 * a + 4 * d * a - 6) % 2:
        raise AssertionError("codimension formula not an integer")
    if codim != comb(d + 3, 3) - dim_l:
        raise AssertionError("codimension formula disagrees with the dimension count")
    return dim_l0, dim_l, codim


def hessian_rank_at(f: Polynomial, point) -> int:
    """Rank of the 3x3 affine Hessian of f at a projective point.

    Dehomogenizes at the first nonzero coordinate; the submatrix of the
    full Hessian without that row/column computes the quadratic part when
    the point is singular on V(f)."""
    from .linalg import rank as mat_rank
    import numpy as np
    ring = f.ring
    q = normalize_point(ring, point)
    j = next(i for i, x in enumerate(q) if x)
    idxs = [i for i in range(ring.nvars) if i != j]
    h = np.zeros((len(idxs), len(idxs)), dtype=np.int64)
    for r, i1 in enumerate(idxs):
        for c, i2 in enumerate(idxs):
            if c < r:
                h[r, c] = h[c, r]
            else:
                h[r, c] = f.diff(i1).diff(i2).evaluate(q)
    return mat_rank(h, ring.p)


def rational_node_spotcheck(ex: NodalExample) -> dict:
    """Enumerate rational points of the node locus and classify each one.

    Only feasible over small primes (p <= 101): scans the plane x0 = 0,
    finds common zeros of f1 and f2, and checks at each that f and all
    its partials vanish and the affine Hessian has rank 3.  Reports
    counts only; never claims completeness over the algebraic closure.
    """
    ring = ex.ring
    p = ring.p
    if p > 101:
        raise ValueError("spotcheck needs p <= 101 for full enumeration")
    plane_points = []
    for y in range(p):
        for z in range(p):
            plane_points.append((0, 1, y, z))
    for z in range(p):
        plane_points.append((0, 0, 1, z))
    plane_points.append((0, 0, 0, 1))
    sigma = [q for q in plane_points
             if ex.f2.evaluate(q) == 0 and ex.f1.evaluate(q) == 0]
    partials = [ex.f.diff(i) for i in range(ring.nvars)]
    nodes, non_nodes = 0, []
    for q in sigma:
        singular = (ex.f.evaluate(q) == 0
                    and all(g.evaluate(q) == 0 for g in partials))
        if not singular:
            raise AssertionError(f"point {q} of the node locus is not singular on V(f)")
        if hessian_rank_at(ex.f, q) == 3:
            nodes += 1
        else:
            non_nodes.append(q)
    return {
        "prime": p,
        "points_checked": len(plane_points),
        "sigma_rational_points": len(sigma),
        "nodes": nodes,
        "non_nodes": non_nodes,
        "all_nodes": not non_nodes,
    }


def random_points(ring: GradedRing, count: int, seed: int) -> list:
    """Seeded pairwise-distinct projective rational points."""
    stream = SplitMix64(seed)
    pts: list[tuple] = []
    seen = set()
    while len(pts) < count:
        q = tuple(stream.next_below(ring.p) for _ in range(ring.nvars))
        if not any(q):
            continue
        q = normalize_point(ring, q)
        if q in seen:
            continue
        seen.add(q)
        pts.append(q)
    return pts


_CMP = {-1: "lt", 0: "eq", 1: "gt"}


def analyze(d: int, a: int, p: int, seed: int,
            kmax: int | None = None) -> dict:
    """Full per-prime analysis report for one family member."""
    ring = GradedRing(3, p)
    if kmax is None:
        kmax = default_kmax(d)
    ex = build_example(d, a, ring, seed, kmax)
    h = ex.hilbert
    rep_d = defect(h, ex.length, d)
    expected, actual, excess = tangent_dims(ex)
    jac = jacobian_ideal(ex.f)
    jdim = graded_piece(jac, d).dim
    exponent, bound = alexander_exponent(ex.node_ideal, d, h, ex.length)
    ci = detect_ci(ex.node_ideal, d, h)
    dim_l0, dim_l, codim_l = locus_dims(d, a)
    h_d = h.h(d)

    def cmp(x, y):
        return _CMP[(x > y) - (x < y)]

    return {
        "schema": 1,
        "d": d,
        "a": a,
        "prime": p,
        "seed": seed,
        "kmax": kmax,
        "hilbert": list(h.values),
        "length": ex.length,
        "h_d": h_d,
        "defect_d": rep_d.delta,
        "tangent_expected_codim": expected,
        "tangent_actual_codim": actual,
        "tangent_excess": excess,
        "jacobian_dim_d": jdim,
        "alexander_exponent": exponent,
        "alexander_bound": bound,
        "ci_1_4_dm1": ci.verdict,
        "ci_generator_degrees": list(ci.generator_degrees),
        "dim_L0": dim_l0,
        "dim_L": dim_l,
        "codim_L": codim_l,
        "codim_L_vs_length": cmp(codim_l, ex.length),
        "codim_L_vs_h_d": cmp(codim_l, h_d),
    }
