"""Degree-by-degree computations with homogeneous ideals.

Everything reduces to row spaces over monomial bases: the degree-k piece
of an ideal generated in degrees <= k is the span of {m * g} with m a
monomial of degree k - deg g.
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .linalg import RowBasis, kernel, member, rank, row_basis, zero_basis
from .poly import (GradedRing, Polynomial, coefficient_vector, from_vector,
                   monomial_basis, parse_polynomial, format_polynomial,
                   _monomial_index)

ENTRY_GUARD = 5_000_000


class MatrixGuardError(ValueError):
    pass


class GenericityFailure(RuntimeError):
    """A 'general' choice turned out non-generic; re-seed and retry."""


class BaseLocusInconclusive(RuntimeError):
    """Degree guard reached before the base-locus test stabilized."""


class NoPlateau(RuntimeError):
    """Hilbert table has no stable tail (too short, or not 0-dimensional)."""


@dataclass(frozen=True)
class IdealGens:
    """A homogeneous generating set."""

    ring: GradedRing
    gens: tuple

    def __init__(self, ring, gens):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "gens", tuple(gens))
        for g in self.gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")

    @property
    def degrees(self):
        return tuple(g.degree for g in self.gens if not g.is_zero())


@dataclass(frozen=True)
class HilbertTable:
    """k -> h_I(k) = dim (S/I)_k for 0 <= k <= kmax."""

    n: int
    values: tuple

    @property
    def kmax(self) -> int:
        return len(self.values) - 1

    def h(self, k: int) -> int:
        return self.values[k]


def graded_piece(I: IdealGens, k: int, entry_guard: int = ENTRY_GUARD) -> RowBasis:
    """Row basis of I_k inside S_k."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    ring = I.ring
    ncols = ring.dim(k)
    index = _monomial_index(ring.nvars, k)
    active = [g for g in I.gens if not g.is_zero() and g.degree <= k]
    nrows = sum(ring.dim(k - g.degree) for g in active)
    if nrows * ncols > entry_guard:
        raise MatrixGuardError(f"{nrows}x{ncols} matrix exceeds entry guard {entry_guard}")
    if not active:
        return zero_basis(ncols, ring.p)
    blocks = []
    for g in active:
        mons = monomial_basis(ring, k - g.degree)
        a = np.zeros((len(mons), ncols), dtype=np.int64)
        ridx = np.arange(len(mons))
        for e, c in g.terms.items():
            cols = [index[tuple(x + y for x, y in zip(m, e))] for m in mons]
            a[ridx, cols] = c
        blocks.append(a)
    return row_basis(np.vstack(blocks), ring.p, ncols)


def hilbert_fn(I: IdealGens, kmax: int, entry_guard: int = ENTRY_GUARD) -> HilbertTable:
    """h_I(k) = dim S_k - dim I_k for 0 <= k <= kmax."""
    values = [I.ring.dim(k) - graded_piece(I, k, entry_guard).dim
              for k in range(kmax + 1)]
    return HilbertTable(I.ring.n, tuple(values))


def piece_polynomials(ring: GradedRing, k: int, basis: RowBasis):
    return [from_vector(ring, k, r) for r in basis.rows]


@lru_cache(maxsize=None)
def _shift_maps(ring: GradedRing, j: int):
    """Column index maps for multiplication by each variable: S_j -> S_{j+1}."""
    mons = monomial_basis(ring, j)
    idx = _monomial_index(ring.nvars, j + 1)
    maps = []
    for i in range(ring.nvars):
        e = [0] * ring.nvars
        e[i] = 1
        maps.append(np.array([idx[tuple(x + y for x, y in zip(m, e))] for m in mons]))
    return maps


def multiply_by_linear_span(ring: GradedRing, j: int, basis: RowBasis) -> RowBasis:
    """Span of S_1 * V for a subspace V of S_j."""
    ncols = ring.dim(j + 1)
    if basis.dim == 0:
        return zero_basis(ncols, ring.p)
    maps = _shift_maps(ring, j)
    blocks = []
    for mp in maps:
        a = np.zeros((basis.dim, ncols), dtype=np.int64)
        a[:, mp] = basis.rows
        blocks.append(a)
    return row_basis(np.vstack(blocks), ring.p, ncols)


def quotient_by_linear(I: IdealGens, ell: Polynomial, kmax: int) -> IdealGens:
    """Generators of (I, ell) reduced mod ell, in one fewer variable.

    Certifies genericity of ell: multiplication by ell must be injective
    on (S/I)_k for every k < kmax; otherwise GenericityFailure is raised
    and the caller should re-seed ell.
    """
    ring = I.ring
    if ell.is_zero() or ell.degree != 1:
        raise ValueError("ell must be a nonzero linear form")
    p = ring.p
    # injectivity of ell: (S/I)_k -> (S/I)_{k+1}
    lvec = coefficient_vector(ell)
    for k in range(kmax):
        nk, nk1 = ring.dim(k), ring.dim(k + 1)
        mult = np.zeros((nk1, nk), dtype=np.int64)
        idx1 = _monomial_index(ring.nvars, k + 1)
        for col, m in enumerate(monomial_basis(ring, k)):
            for e, c in ell.terms.items():
                mult[idx1[tuple(x + y for x, y in zip(m, e))], col] = c
        bk1 = graded_piece(I, k + 1)
        red = mult.astype(np.float64)
        if bk1.dim:
            red = np.mod(red - bk1.rows.T.astype(np.float64) @ red[list(bk1.pivots), :], p)
        preimage_dim = nk - rank(red, p)
        if preimage_dim != graded_piece(I, k).dim:
            raise GenericityFailure(f"ell is a zerodivisor on S/I in degree {k}")
    # eliminate the last variable with nonzero coefficient in ell
    coeffs = [0] * ring.nvars
    for e, c in ell.terms.items():
        coeffs[e.index(1)] = c
    j = max(i for i, c in enumerate(coeffs) if c)
    cinv = pow(coeffs[j], p - 2, p)
    small = GradedRing(ring.n - 1, p)
    small_gens = []
    for g in I.gens:
        terms: dict = {}
        for e, c in g.terms.items():
            # expand (sum_{i != j} -cinv*coeffs[i]*x_i)^{e_j} times the rest
            base = {tuple(x for i, x in enumerate(e) if i != j): c}
            for _ in range(e[j]):
                nxt: dict = {}
                for be, bc in base.items():
                    for i in range(ring.nvars):
                        if i == j or not coeffs[i]:
                            continue
                        ii = i if i < j else i - 1
                        ne = list(be)
                        ne[ii] += 1
                        v = (nxt.get(tuple(ne), 0) - cinv * coeffs[i] * bc) % p
                        nxt[tuple(ne)] = v
                base = nxt
            for be, bc in base.items():
                terms[be] = (terms.get(be, 0) + bc) % p
        g2 = Polynomial(small, g.degree, terms)
        if not g2.is_zero():
            small_gens.append(g2)
    return IdealGens(small, small_gens)


def vanishing_ideal_piece(ring: GradedRing, points, k: int) -> RowBasis:
    """I(points)_k: kernel of the evaluation map S_k -> F^#points."""
    pts = [normalize_point(ring, q) for q in points]
    if len(set(pts)) != len(pts):
        raise ValueError("repeated projective point")
    p = ring.p
    mons = monomial_basis(ring, k)
    a = np.zeros((len(pts), len(mons)), dtype=np.int64)
    for r, q in enumerate(pts):
        for col, m in enumerate(mons):
            v = 1
            for x, e in zip(q, m):
                if e:
                    v = v * pow(x, e, p) % p
            a[r, col] = v
    return kernel(a, p)


def normalize_point(ring: GradedRing, q) -> tuple:
    """Projective representative with first nonzero coordinate equal to 1."""
    p = ring.p
    q = tuple(int(x) % p for x in q)
    if len(q) != ring.nvars:
        raise ValueError("point length mismatch")
    nz = [i for i, x in enumerate(q) if x]
    if not nz:
        raise ValueError("zero vector is not a projective point")
    s = pow(q[nz[0]], p - 2, p)
    return tuple(x * s % p for x in q)


def points_hilbert(ring: GradedRing, points, kmax: int) -> HilbertTable:
    values = [ring.dim(k) - vanishing_ideal_piece(ring, points, k).dim
              for k in range(kmax + 1)]
    return HilbertTable(ring.n, tuple(values))


def gorenstein_closure(IH: IdealGens, d: int):
    """Graded pieces J_0 .. J_{d+1} of the Gorenstein closure of IH.

    J_{d+1} is the deterministic codimension-1 superspace of (IH)_{d+1}
    obtained by adjoining every monomial outside the pivot set except the
    last one in the fixed order; J_k = {f in S_k : f * S_{d+1-k} in J_{d+1}}.
    """
    ring = IH.ring
    p = ring.p
    top = d + 1
    ntop = ring.dim(top)
    btop = graded_piece(IH, top)
    if ntop - btop.dim < 1:
        raise ValueError("h_IH(d+1) = 0: closure construction needs h >= 1")
    nonpiv = [c for c in range(ntop) if c not in set(btop.pivots)]
    drop = nonpiv[-1]
    extra = np.zeros((len(nonpiv) - 1, ntop), dtype=np.int64)
    for r, c in enumerate(x for x in nonpiv if x != drop):
        extra[r, c] = 1
    jtop = row_basis(np.vstack([btop.rows, extra]), p, ntop)
    assert jtop.dim == ntop - 1
    # linear functional vanishing exactly on J_{d+1}
    lam = np.zeros(ntop, dtype=np.int64)
    free = [c for c in range(ntop) if c not in set(jtop.pivots)]
    assert len(free) == 1
    cstar = free[0]
    lam[cstar] = 1
    for i, pc in enumerate(jtop.pivots):
        lam[pc] = (-int(jtop.rows[i, cstar])) % p
    pieces = []
    idx_top = _monomial_index(ring.nvars, top)
    for k in range(top):
        nk = ring.dim(k)
        mons_m = monomial_basis(ring, top - k)
        a = np.zeros((len(mons_m), nk), dtype=np.int64)
        for ri, m in enumerate(mons_m):
            for ci, v in enumerate(monomial_basis(ring, k)):
                a[ri, ci] = lam[idx_top[tuple(x + y for x, y in zip(m, v))]]
        jk = kernel(a, p)
        pieces.append(jk)
    pieces.append(jtop)
    # sanity: the closure contains IH
    for k in range(top + 1):
        bk = graded_piece(IH, k)
        for rrow in bk.rows:
            if not member(rrow, pieces[k]):
                raise AssertionError("closure does not contain IH")
    return pieces


def closure_hilbert(ring: GradedRing, pieces) -> list:
    return [ring.dim(k) - pieces[k].dim for k in range(len(pieces))]


def _base_locus_scan(I: IdealGens, k: int, extra: int, entry_guard: int):
    """Hilbert values of the ideal generated by I_k, stopping at the first
    plateau of width n+1."""
    ring = I.ring
    window = ring.n + 1
    cur = graded_piece(I, k, entry_guard)
    hs = [ring.dim(k) - cur.dim]
    for j in range(k, k + extra):
        if len(hs) >= window and all(v == hs[-1] for v in hs[-window:]):
            break
        if (4 * cur.dim) * ring.dim(j + 1) > entry_guard:
            raise MatrixGuardError("stabilization scan exceeds entry guard")
        cur = multiply_by_linear_span(ring, j, cur)
        hs.append(ring.dim(j + 1) - cur.dim)
    return hs


def finite_base_locus(I: IdealGens, k: int, extra: int | None = None,
                      entry_guard: int = ENTRY_GUARD) -> bool:
    """True iff the ideal generated by I_k alone cuts out a finite scheme.

    Detected by Hilbert-function stabilization over a window of n+1
    consecutive degrees.  A strictly increasing tail at the scan horizon
    is reported False; anything else short of a plateau raises
    BaseLocusInconclusive rather than silently failing.
    """
    window = I.ring.n + 1
    if extra is None:
        extra = 3 * window
    hs = _base_locus_scan(I, k, extra, entry_guard)
    tail = hs[-window:]
    if len(tail) == window and all(v == tail[0] for v in tail):
        return True
    if all(b > a for a, b in zip(tail, tail[1:])):
        return False
    raise BaseLocusInconclusive(f"no verdict after degrees {k}..{k + len(hs) - 1}: {hs}")


def base_locus_plateau(I: IdealGens, k: int, extra: int | None = None,
                       entry_guard: int = ENTRY_GUARD):
    """(stabilizes, plateau value or None) for the ideal generated by I_k."""
    window = I.ring.n + 1
    if extra is None:
        extra = 3 * window
    hs = _base_locus_scan(I, k, extra, entry_guard)
    tail = hs[-window:]
    if len(tail) == window and all(v == tail[0] for v in tail):
        return True, tail[0]
    return False, None


def contains(f: Polynomial, I: IdealGens, entry_guard: int = ENTRY_GUARD) -> bool:
    """Exact membership of f in the degree-(deg f) piece of I."""
    if f.is_zero():
        return True
    return member(coefficient_vector(f), graded_piece(I, f.degree, entry_guard))


def pullback_gens(I: IdealGens, images, check_base_locus: bool = True) -> IdealGens:
    """Substitute degree-t forms without a common zero into the generators."""
    from .poly import substitute
    ring = I.ring
    if check_base_locus:
        img_ideal = IdealGens(ring, images)
        t = images[0].degree
        ok, plateau = base_locus_plateau(img_ideal, t)
        if not ok or plateau != 0:
            raise GenericityFailure("substitution images appear to have a common zero")
    return IdealGens(ring, [substitute(g, list(images)) for g in I.gens])


# ---------------------------------------------------------------------------
# ideal file format: header `ring n=<n> p=<p>`, one polynomial per line

def parse_ideal_file(text: str) -> IdealGens:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines or not lines[0].startswith("ring "):
        raise ValueError("line 1: expected header 'ring n=<n> p=<p>'")
    try:
        fields = dict(part.split("=") for part in lines[0][5:].split())
        ring = GradedRing(n=int(fields["n"]), p=int(fields["p"]))
    except (KeyError, ValueError) as exc:
        raise ValueError(f"line 1: bad header {lines[0]!r}: {exc}") from exc
    gens = []
    for no, ln in enumerate(lines[1:], start=2):
        try:
            gens.append(parse_polynomial(ring, ln))
        except ValueError as exc:
            raise ValueError(f"line {no}: {exc}") from exc
    return IdealGens(ring, gens)


def format_ideal_file(I: IdealGens) -> str:
    lines = [f"ring n={I.ring.n} p={I.ring.p}"]
    lines += [format_polynomial(g) for g in I.gens]
    return "\n".join(lines) + "\n"
