"""Why the defect in degree d is exactly 1 for the sharp examples.

Slice the node scheme with a general hyperplane: the quotient ideal I_H
lives in one variable fewer and its Hilbert function is the first
difference of h_I.  Completing I_H to an Artinian Gorenstein quotient J
with socle in degree d+1 produces the symmetric table h_J(k) = h_J(d+1-k),
and comparing h_J with h_I degree by degree pins the defect down.
"""

from nodalsurf import (GradedRing, build_example, closure_hilbert,
                       gorenstein_closure, hilbert_fn, quotient_by_linear,
                       random_form)
from nodalsurf.prng import derive_seed

SEED = 7
D, A = 8, 4
ring = GradedRing(3, 65521)
ex = build_example(D, A, ring, SEED)

for attempt in range(16):
    ell = random_form(ring, 1, derive_seed(SEED, 1000, attempt))
    try:
        IH = quotient_by_linear(ex.node_ideal, ell, D + 4)
        break
    except Exception:
        continue

h_ih = hilbert_fn(IH, D + 3)
print("hyperplane section of the 28 nodes (now in the plane):")
print("  k    :", " ".join(f"{k:3d}" for k in range(D + 3)))
print("  h_IH :", " ".join(f"{h_ih.h(k):3d}" for k in range(D + 3)))
print()

print("summation identity: h_I(k) = sum of h_IH(j) for j <= k")
for k in range(ex.hilbert.kmax + 1):
    partial = sum(h_ih.h(j) for j in range(min(k, h_ih.kmax) + 1))
    mark = "ok" if partial == ex.hilbert.h(k) else "MISMATCH"
    print(f"  k={k:2d}: sum={partial:3d}  h_I={ex.hilbert.h(k):3d}  {mark}")
print()

pieces = gorenstein_closure(IH, D)
hj = closure_hilbert(IH.ring, pieces)
print("Gorenstein closure J with socle degree d+1 = 9:")
print("  k   :", " ".join(f"{k:3d}" for k in range(D + 2)))
print("  h_J :", " ".join(f"{v:3d}" for v in hj))
sym = all(hj[k] == hj[D + 1 - k] for k in range(D + 2))
print(f"  symmetric about (d+1)/2: {sym}")
print()
print("h_J agrees with h_IH everywhere except the one extra socle")
print("dimension, which is the defect delta_d = 1.")
