"""Sparse homogeneous polynomials in n+1 variables over GF(p).

Monomials are exponent tuples of length n+1.  The fixed monomial order is
graded lexicographic with x0 > x1 > ... > xn; within one degree this is
plain lexicographic comparison of exponent tuples, largest first.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
import re

import numpy as np

from .linalg import is_prime, inv_mod
from .prng import SplitMix64

DEGREE_GUARD = 40


class DegreeGuardError(ValueError):
    pass


@dataclass(frozen=True)
class GradedRing:
    """Descriptor of S = GF(p)[x0, ..., xn]; n is the projective dimension."""

    n: int = 3
    p: int = 65521

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need n >= 1")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.p <= self.n + 1:
            raise ValueError("prime too small for general linear forms")
        if self.p >= 1 << 31:
            raise ValueError("prime must be < 2^31")

    @property
    def nvars(self) -> int:
        return self.n + 1

    def dim(self, k: int) -> int:
        """dim S_k = C(n+k, n)."""
        return comb(self.n + k, self.n)


@lru_cache(maxsize=None)
def _monomials(nvars: int, k: int) -> tuple:
    if nvars == 1:
        return ((k,),)
    out = []
    for first in range(k, -1, -1):
        for rest in _monomials(nvars - 1, k - first):
            out.append((first,) + rest)
    return tuple(out)


def monomial_basis(ring: GradedRing, k: int) -> tuple:
    """All degree-k monomials, strictly decreasing in the fixed order."""
    if k < 0:
        raise ValueError("degree must be >= 0")
    if k > DEGREE_GUARD:
        raise DegreeGuardError(f"degree {k} exceeds guard {DEGREE_GUARD}")
    return _monomials(ring.nvars, k)


@lru_cache(maxsize=None)
def _monomial_index(nvars: int, k: int) -> dict:
    return {m: i for i, m in enumerate(_monomials(nvars, k))}


class Polynomial:
    """Homogeneous polynomial: mapping exponent tuple -> nonzero coefficient."""

    __slots__ = ("ring", "degree", "terms")

    def __init__(self, ring: GradedRing, degree: int, terms: dict):
        self.ring = ring
        self.degree = degree
        self.terms = {e: c % ring.p for e, c in terms.items() if c % ring.p}
        for e in self.terms:
            if len(e) != ring.nvars or sum(e) != degree:
                raise ValueError(f"term {e} is not homogeneous of degree {degree}")

    @classmethod
    def zero(cls, ring: GradedRing, degree: int = 0):
        return cls(ring, degree, {})

    @classmethod
    def constant(cls, ring: GradedRing, c: int):
        return cls(ring, 0, {(0,) * ring.nvars: c})

    @classmethod
    def variable(cls, ring: GradedRing, i: int):
        if not 0 <= i <= ring.n:
            raise IndexError(f"variable index {i} out of range")
        e = [0] * ring.nvars
        e[i] = 1
        return cls(ring, 1, {tuple(e): 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial) or self.ring != other.ring:
            return False
        if not self.terms and not other.terms:
            return True
        return self.degree == other.degree and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, self.degree, frozenset(self.terms.items())))

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("ring mismatch")

    def __add__(self, other):
        self._check_ring(other)
        if self.is_zero():
            return Polynomial(other.ring, other.degree, other.terms)
        if other.is_zero():
            return Polynomial(self.ring, self.degree, self.terms)
        if self.degree != other.degree:
            raise ValueError(f"cannot add degrees {self.degree} and {other.degree}")
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return Polynomial(self.ring, self.degree, terms)

    def __neg__(self):
        return Polynomial(self.ring, self.degree,
                          {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.ring, self.degree,
                              {e: c * other for e, c in self.terms.items()})
        self._check_ring(other)
        p = self.ring.p
        deg = self.degree + other.degree
        if deg > DEGREE_GUARD:
            raise DegreeGuardError(f"product degree {deg} exceeds guard")
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = (terms.get(e, 0) + c1 * c2) % p
        return Polynomial(self.ring, deg, terms)

    __rmul__ = __mul__

    def diff(self, i: int):
        """Partial derivative with respect to x_i."""
        if not 0 <= i <= self.ring.n:
            raise IndexError(f"variable index {i} out of range")
        terms: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            terms[tuple(ne)] = c * e[i]
        return Polynomial(self.ring, max(self.degree - 1, 0), terms)

    def evaluate(self, point) -> int:
        """Exact value at a point of GF(p)^{n+1}."""
        if len(point) != self.ring.nvars:
            raise ValueError("point length mismatch")
        p = self.ring.p
        pt = [int(x) % p for x in point]
        total = 0
        for e, c in self.terms.items():
            v = c
            for x, k in zip(pt, e):
                if k:
                    v = v * pow(x, k, p) % p
            total = (total + v) % p
        return total

    def __str__(self):
        return format_polynomial(self)

    __repr__ = __str__


def substitute(f: Polynomial, images: list) -> Polynomial:
    """Ring-homomorphic substitution x_i -> images[i].

    All images must be homogeneous of one common degree t >= 1; the result
    is homogeneous of degree t * deg f.
    """
    ring = f.ring
    if len(images) != ring.nvars:
        raise ValueError("need one image per variable")
    degs = {g.degree for g in images}
    if len(degs) != 1:
        raise ValueError(f"images of unequal degrees {sorted(degs)}")
    t = degs.pop()
    if t < 1:
        raise ValueError("image degree must be >= 1")
    for g in images:
        if g.ring != ring:
            raise ValueError("ring mismatch")
    if t * f.degree > DEGREE_GUARD:
        raise DegreeGuardError("substituted degree exceeds guard")
    # cache powers of each image
    powers = [[Polynomial.constant(ring, 1), g] for g in images]
    result = Polynomial.zero(ring, t * f.degree)
    for e, c in f.terms.items():
        term = Polynomial.constant(ring, c)
        for i, k in enumerate(e):
            while len(powers[i]) <= k:
                powers[i].append(powers[i][-1] * images[i])
            term = term * powers[i][k]
        result = result + term
    return result


def random_form(ring: GradedRing, k: int, seed: int, variables=None) -> Polynomial:
    """Seeded dense random form of degree k.

    Coefficients are drawn uniformly from GF(p) off a splitmix64 stream,
    one per monomial in the fixed order, so the output is a pure function
    of (ring, k, seed, variables).  `variables` restricts the support to a
    subset of the variables (e.g. (1, 2, 3) for forms missing x0).
    """
    if k < 0:
        raise ValueError("degree must be >= 0")
    if k > DEGREE_GUARD:
        raise DegreeGuardError(f"degree {k} exceeds guard")
    stream = SplitMix64(seed)
    if variables is None:
        variables = tuple(range(ring.nvars))
    terms = {}
    for m in monomial_basis(ring, k):
        if any(m[i] and i not in variables for i in range(ring.nvars)):
            continue
        c = stream.next_below(ring.p)
        if c:
            terms[m] = c
    return Polynomial(ring, k, terms)


def coefficient_vector(f: Polynomial) -> np.ndarray:
    """Coefficients of f over monomial_basis(ring, deg f)."""
    index = _monomial_index(f.ring.nvars, f.degree)
    v = np.zeros(len(index), dtype=np.int64)
    for e, c in f.terms.items():
        v[index[e]] = c
    return v


def from_vector(ring: GradedRing, k: int, vec) -> Polynomial:
    basis = monomial_basis(ring, k)
    return Polynomial(ring, k, {basis[i]: int(c) for i, c in enumerate(vec) if int(c) % ring.p})


def euler_pairing_check(f: Polynomial) -> bool:
    """Euler identity sum_i x_i * df/dx_i = deg(f) * f (needs p not | deg f)."""
    ring = f.ring
    acc = Polynomial.zero(ring, max(f.degree, 1))
    for i in range(ring.nvars):
        acc = acc + Polynomial.variable(ring, i) * f.diff(i)
    return acc == f * f.degree


# ---------------------------------------------------------------------------
# text format

class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|x(?P<var>\d+)|(?P<op>[\^\*\+\-]))")


def parse_polynomial(ring: GradedRing, text: str) -> Polynomial:
    """Parse the plain-text polynomial grammar.

    term := coeff ('*' var)* | var-product; var := 'x'<digit>('^'<int>)?;
    terms joined by '+' or '-'; whitespace ignored.  Inhomogeneous input is
    rejected with the two offending degrees.
    """
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip() == "":
                break
            raise PolynomialSyntaxError(f"unexpected character {text[pos:].strip()[0]!r}", pos)
        if m.group("num") is not None:
            tokens.append(("num", int(m.group("num")), m.start()))
        elif m.group("var") is not None:
            tokens.append(("var", int(m.group("var")), m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    if not tokens:
        raise PolynomialSyntaxError("empty input", 0)

    p = ring.p
    terms: dict = {}
    degrees_seen: dict = {}
    i = 0
    first = True
    while i < len(tokens):
        sign = 1
        while i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
            first = False
        if i >= len(tokens):
            raise PolynomialSyntaxError("dangling sign", tokens[-1][2])
        if not first and sign == 1 and tokens[i - 1][0] != "op":
            raise PolynomialSyntaxError("missing '+' or '-' between terms", tokens[i][2])
        first = False
        coeff = 1
        expo = [0] * ring.nvars
        saw_factor = False
        while i < len(tokens):
            kind, val, at = tokens[i]
            if kind == "op" and val == "*":
                if not saw_factor:
                    raise PolynomialSyntaxError("'*' without left factor", at)
                i += 1
                if i >= len(tokens) or tokens[i][0] == "op":
                    raise PolynomialSyntaxError("'*' without right factor", at)
                continue
            if kind == "num":
                coeff = coeff * val % p
                saw_factor = True
                i += 1
            elif kind == "var":
                if not 0 <= val <= ring.n:
                    raise PolynomialSyntaxError(f"variable x{val} out of range", at)
                e = 1
                i += 1
                if i < len(tokens) and tokens[i][0] == "op" and tokens[i][1] == "^":
                    i += 1
                    if i >= len(tokens) or tokens[i][0] != "num":
                        raise PolynomialSyntaxError("'^' needs an integer exponent", at)
                    e = tokens[i][1]
                    i += 1
                expo[val] += e
                saw_factor = True
            else:
                break
        if not saw_factor:
            raise PolynomialSyntaxError("empty term", tokens[i][2] if i < len(tokens) else len(text))
        deg = sum(expo)
        degrees_seen.setdefault(deg, tuple(expo))
        e = tuple(expo)
        terms[e] = (terms.get(e, 0) + sign * coeff) % p

    if len(degrees_seen) > 1:
        d1, d2 = sorted(degrees_seen)[:2]
        raise PolynomialSyntaxError(f"mixed degrees {d1} and {d2}", 0)
    degree = next(iter(degrees_seen))
    return Polynomial(ring, degree, terms)


def format_polynomial(f: Polynomial) -> str:
    """Canonical text: decreasing monomial order, coefficients in [1, p-1]."""
    if f.is_zero():
        return "0"
    parts = []
    for e in sorted(f.terms, reverse=True):
        c = f.terms[e]
        factors = []
        if c != 1 or not any(e):
            factors.append(str(c))
        for i, k in enumerate(e):
            if k == 1:
                factors.append(f"x{i}")
            elif k > 1:
                factors.append(f"x{i}^{k}")
        parts.append("*".join(factors))
    return " + ".join(parts)
