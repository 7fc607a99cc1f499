"""Walk through one sharp-bound example: 28 nodes on a degree-8 surface.

The surface is f = x0*f1 + f2^2*f3 with deg f1 = 7, deg f2 = 4 and f2, f3
in the last three variables.  Its nodes are cut out by the complete
intersection (x0, f2, f1), so there are 4*(d-1) = 28 of them, and the
node ideal fails by exactly one to impose independent conditions in
degree d.  Run with no arguments, or pass --d/--a/--prime/--seed.
"""

import argparse

from nodalsurf import (GradedRing, analyze, betti_alternating, build_example,
                       defect, detect_ci, tangent_dims)

parser = argparse.ArgumentParser(description=__doc__)
parser.add_argument("--d", type=int, default=8)
parser.add_argument("--a", type=int, default=4)
parser.add_argument("--prime", type=int, default=65521)
parser.add_argument("--seed", type=int, default=7)
args = parser.parse_args()

ring = GradedRing(3, args.prime)
ex = build_example(args.d, args.a, ring, args.seed)
d = args.d

print(f"degree d = {d}, node count = {ex.length} = {args.a}*(d-1)")
print(f"node ideal generator degrees: {ex.node_ideal.degrees}")
print()

print("Hilbert function of the node ideal:")
print("  k :", " ".join(f"{k:4d}" for k in range(ex.hilbert.kmax + 1)))
print("  h :", " ".join(f"{v:4d}" for v in ex.hilbert.values))
print()

rep = defect(ex.hilbert, ex.length, d)
print(f"defect in degree d: length - h({d}) = {ex.length} - {rep.h_k} = {rep.delta}")
print(f"same value from the alternating Betti numbers: {rep.delta_via_betti}")

B = betti_alternating(ex.hilbert)
support = {j: B.b(j) for j in range(B.jmax + 1) if B.b(j)}
print(f"alternating Betti numbers (signed): {support}")
print()

expected, actual, excess = tangent_dims(ex)
print("tangent space of the deformation locus:")
print(f"  naive codimension (one condition per node): {expected}")
print(f"  actual codimension: {actual}")
print(f"  the defect accounts for the gap: {expected} - {excess} = {actual}")
print()

det = detect_ci(ex.node_ideal, d, ex.hilbert)
print(f"generator degrees read off the Hilbert data: {det.generator_degrees}")
print(f"complete intersection (1, 4, d-1) detected: {det.verdict}")
print()

print("full report with three-prime consensus fields:")
report = analyze(d, args.a, args.prime, args.seed)
for key in ("length", "h_d", "defect_d", "tangent_actual_codim",
            "ci_1_4_dm1", "codim_L", "codim_L_vs_length"):
    print(f"  {key}: {report[key]}")
