"""Invariants derived from Hilbert tables.

Alternating Betti numbers B_j are the signed column sums of any finite
free resolution of S/I; they satisfy

    h_I(k) = sum_j B_j * C(n + k - j, n)

which determines them by a triangular recurrence.  The defect in degree k
is length - h_I(k) and independently (-1)^n * sum_{j >= k+n+1} B_j *
C(j-k-1, n); both formulas are always computed and must agree.
"""

from dataclasses import dataclass
from math import comb

from .ideals import (HilbertTable, IdealGens, NoPlateau, base_locus_plateau,
                     graded_piece, hilbert_fn, pullback_gens, ENTRY_GUARD)


class DefectFormulaMismatch(AssertionError):
    """The two defect formulas disagree: convention bug, abort loudly."""


@dataclass(frozen=True)
class BettiAlt:
    """j -> B_j, attached to S/I in projective dimension n."""

    n: int
    values: tuple   # index j, 0 <= j <= jmax

    @property
    def jmax(self) -> int:
        return len(self.values) - 1

    def b(self, j: int) -> int:
        return self.values[j]


@dataclass(frozen=True)
class DefectReport:
    k: int
    length: int
    h_k: int
    delta: int
    delta_via_betti: int


def betti_alternating(h: HilbertTable, jmax: int | None = None) -> BettiAlt:
    """Recover the B_j from the Hilbert table by the triangular recurrence."""
    if jmax is None:
        jmax = h.kmax
    if jmax > h.kmax:
        raise ValueError(f"table only reaches k={h.kmax}, need {jmax}")
    n = h.n
    b: list[int] = []
    for k in range(jmax + 1):
        s = sum(b[j] * comb(n + k - j, n) for j in range(k))
        b.append(h.h(k) - s)
    return BettiAlt(n, tuple(b))


def hilbert_from_betti(B: BettiAlt, kmax: int) -> HilbertTable:
    """Exact inverse of betti_alternating on its image."""
    n = B.n
    values = [sum(B.b(j) * comb(n + k - j, n) for j in range(min(k, B.jmax) + 1))
              for k in range(kmax + 1)]
    return HilbertTable(n, tuple(values))


def length_of(h: HilbertTable, window: int | None = None) -> int:
    """Plateau value of a 0-dimensional scheme's Hilbert table."""
    if window is None:
        window = h.n + 1
    if h.kmax + 1 < window:
        raise NoPlateau(f"table of length {h.kmax + 1} shorter than window {window}")
    tail = h.values[-window:]
    if any(v != tail[0] for v in tail):
        raise NoPlateau(f"no {window}-fold plateau at the end of the table: {tail}")
    return tail[0]


def defect(h: HilbertTable, length: int, k: int) -> DefectReport:
    """Defect in degree k by both formulas; any disagreement is fatal."""
    n = h.n
    delta = length - h.h(k)
    B = betti_alternating(h)
    via_b = (-1) ** n * sum(B.b(j) * comb(j - k - 1, n)
                            for j in range(k + n + 1, B.jmax + 1))
    if delta != via_b:
        raise DefectFormulaMismatch(
            f"degree {k}: length - h = {delta} but Betti sum = {via_b}")
    return DefectReport(k, length, h.h(k), delta, via_b)


def macaulay_gotzmann_check(h: HilbertTable, bpf: dict | None = None) -> list:
    """Violations of the growth bounds: if h(k) <= k then h(k+1) <= h(k);
    with a base-point-free piece in degree k+1, strictly < unless h(k) = 0."""
    bpf = bpf or {}
    violations = []
    for k in range(h.kmax):
        if h.h(k) <= k:
            if h.h(k + 1) > h.h(k):
                violations.append((k, f"h({k + 1})={h.h(k + 1)} > h({k})={h.h(k)}"))
            elif bpf.get(k + 1) and h.h(k) != 0 and h.h(k + 1) >= h.h(k):
                violations.append((k, f"base point free but h({k + 1}) did not drop"))
    return violations


def pullback_scaling_law(B: BettiAlt, Bt: BettiAlt, t: int):
    """Check B_j(I_t) = 0 for t not | j and B_{tj}(I_t) = B_j(I).

    Returns (ok, message); the message names the violated law.
    """
    for j in range(Bt.jmax + 1):
        if j % t != 0:
            if Bt.b(j) != 0:
                return False, f"law B_j(I_t)=0 for t!|j fails at j={j}: {Bt.b(j)}"
        else:
            expect = B.b(j // t) if j // t <= B.jmax else 0
            if Bt.b(j) != expect:
                return False, (f"law B_tj(I_t)=B_j(I) fails at j={j}: "
                               f"{Bt.b(j)} != {expect}")
    return True, "B_tj(I_t)=B_j(I) and odd slots zero"


def pullback_betti_check(I: IdealGens, t: int, images, k: int,
                         kmax: int, entry_guard: int = ENTRY_GUARD) -> dict:
    """Verify the pullback Betti/defect laws on I and its pullback ideal.

    kmax must reach the plateau of h_I with the full Betti support; the
    pullback table is computed independently up to t*kmax.
    """
    n = I.ring.n
    h = hilbert_fn(I, kmax, entry_guard)
    length = length_of(h)
    It = pullback_gens(I, images)
    ht = hilbert_fn(It, t * kmax, entry_guard)
    length_t = length_of(ht)
    B = betti_alternating(h)
    Bt = betti_alternating(ht)
    law_ok, law_msg = pullback_scaling_law(B, Bt, t)
    report = {
        "t": t,
        "length": length,
        "length_pullback": length_t,
        "degree_law_ok": length_t == t ** n * length,
        "betti_law_ok": law_ok,
        "betti_law_detail": law_msg,
    }
    # bound clause, when the hypothesis h_I(k-n) != length holds
    if k >= n and h.h(k - n) != length:
        target = t * k - n - 1
        rep = defect(ht, length_t, target)
        bound = comb(n + t, n) - n
        report.update({
            "k": k,
            "defect_degree": target,
            "defect": rep.delta,
            "bound": bound,
            "bound_ok": rep.delta >= bound,
        })
    else:
        report["k"] = k
        report["hypothesis_holds"] = False
    return report
