"""Dense exact linear algebra over a prime field GF(p).

Matrices are numpy arrays with entries reduced mod p.  Internally the
elimination runs on float64 so that block updates go through BLAS; this
is exact as long as (inner dimension) * (p-1)^2 < 2^53, which is checked
and splits the products into chunks when necessary.
"""

from dataclasses import dataclass, field

import numpy as np

BLOCK = 256
_FLOAT_EXACT = 1 << 53


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for n < 3.3e24."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(x: int, p: int) -> int:
    return pow(int(x) % p, p - 2, p)


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """a @ b mod p, exactly, chunking the inner dimension if needed."""
    inner = a.shape[1]
    max_inner = max(1, _FLOAT_EXACT // ((p - 1) * (p - 1)))
    if inner <= max_inner:
        return np.mod(a @ b, p)
    acc = np.zeros((a.shape[0], b.shape[1]))
    for s in range(0, inner, max_inner):
        acc = np.mod(acc + a[:, s:s + max_inner] @ b[s:s + max_inner], p)
    return acc


def _reduce_rows(blk: np.ndarray, rows: np.ndarray, piv: list, p: int) -> np.ndarray:
    """Reduce blk against a reduced echelon set (rows[:, piv] == I)."""
    coef = blk[:, piv]
    if coef.any():
        blk = np.mod(blk - _matmul_mod(coef, rows, p), p)
    return blk


def _eliminate_small(blk: np.ndarray, p: int):
    """Gauss-Jordan inside one block; returns reduced rows and pivots."""
    b, c = blk.shape
    store = np.empty((b, c))
    piv: list[int] = []
    cnt = 0
    for i in range(b):
        r = blk[i]
        if cnt:
            coef = r[piv]
            if coef.any():
                r = np.mod(r - coef @ store[:cnt], p)
        nz = np.nonzero(r)[0]
        if nz.size == 0:
            continue
        j = int(nz[0])
        r = np.mod(r * inv_mod(r[j], p), p)
        col = store[:cnt, j].copy()
        if col.any():
            store[:cnt] = np.mod(store[:cnt] - np.outer(col, r), p)
        store[cnt] = r
        piv.append(j)
        cnt += 1
    order = np.argsort(piv, kind="stable")
    return store[:cnt][order], [piv[i] for i in order]


def rref(mat: np.ndarray, p: int):
    """Reduced row echelon form mod p.

    Returns (R, pivots) with R int64, rows sorted by pivot column.
    Processes the matrix in row blocks so the bulk of the work is BLAS
    matrix products.
    """
    a = np.mod(np.asarray(mat, dtype=np.float64), p)
    if a.ndim != 2:
        raise ValueError("matrix must be 2-dimensional")
    m, c = a.shape
    gens: list[tuple[np.ndarray, list]] = []
    for s in range(0, m, BLOCK):
        blk = a[s:s + BLOCK].copy()
        for rows, piv in gens:
            blk = _reduce_rows(blk, rows, piv, p)
        nr, npv = _eliminate_small(blk, p)
        if npv:
            gens.append((nr, npv))
    # back-substitute earlier pivot generations against later ones
    for i in range(len(gens) - 2, -1, -1):
        ri, pi = gens[i]
        for j in range(i + 1, len(gens)):
            ri = _reduce_rows(ri, gens[j][0], gens[j][1], p)
        gens[i] = (ri, pi)
    out = np.zeros((m, c), dtype=np.int64)
    if not gens:
        return out, []
    rows = np.vstack([g[0] for g in gens])
    piv = [x for g in gens for x in g[1]]
    order = np.argsort(piv, kind="stable")
    out[:len(piv)] = rows[order].astype(np.int64)
    return out, [piv[i] for i in order]


def rank(mat: np.ndarray, p: int) -> int:
    return len(rref(mat, p)[1])


@dataclass(frozen=True)
class RowBasis:
    """Subspace of GF(p)^ambient_dim as a reduced row echelon basis."""

    ambient_dim: int
    p: int
    rows: np.ndarray = field(repr=False)   # dim x ambient_dim, int64, RREF
    pivots: tuple = ()

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def __eq__(self, other) -> bool:
        return (isinstance(other, RowBasis)
                and self.ambient_dim == other.ambient_dim
                and self.p == other.p
                and self.pivots == other.pivots
                and np.array_equal(self.rows, other.rows))


def row_basis(mat: np.ndarray, p: int, ambient_dim: int | None = None) -> RowBasis:
    """RowBasis spanned by the rows of mat."""
    mat = np.asarray(mat)
    if mat.size == 0 and mat.ndim != 2:
        mat = mat.reshape(0, ambient_dim)
    rows, piv = rref(mat, p)
    return RowBasis(mat.shape[1], p, rows[:len(piv)], tuple(piv))


def zero_basis(ambient_dim: int, p: int) -> RowBasis:
    return RowBasis(ambient_dim, p, np.zeros((0, ambient_dim), dtype=np.int64), ())


def member(v: np.ndarray, b: RowBasis) -> bool:
    """Exact membership of v in the row span of b."""
    v = np.mod(np.asarray(v, dtype=np.int64), b.p)
    if v.shape != (b.ambient_dim,):
        raise ValueError(f"vector length {v.shape} != ambient dim {b.ambient_dim}")
    if b.dim == 0:
        return not v.any()
    r = np.mod(v.astype(np.float64) - _matmul_mod(
        v[list(b.pivots)].astype(np.float64).reshape(1, -1),
        b.rows.astype(np.float64), b.p)[0], b.p)
    return not r.any()


def span_sum(a: RowBasis, b: RowBasis) -> RowBasis:
    """Basis of the subspace sum a + b."""
    if a.ambient_dim != b.ambient_dim:
        raise ValueError("ambient dimension mismatch")
    if a.p != b.p:
        raise ValueError("field mismatch")
    return row_basis(np.vstack([a.rows, b.rows]), a.p, a.ambient_dim)


def kernel(mat: np.ndarray, p: int) -> RowBasis:
    """Basis of the right kernel {v : mat @ v = 0}."""
    mat = np.asarray(mat)
    m, c = mat.shape
    rows, piv = rref(mat, p)
    free = [j for j in range(c) if j not in set(piv)]
    if not free:
        return zero_basis(c, p)
    ker = np.zeros((len(free), c), dtype=np.int64)
    for idx, j in enumerate(free):
        ker[idx, j] = 1
        for i, pc in enumerate(piv):
            ker[idx, pc] = (-int(rows[i, j])) % p
    return row_basis(ker, p, c)
