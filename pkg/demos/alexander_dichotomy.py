"""The Alexander polynomial of these nodal surfaces is (t+1)^e where the
exponent e is the defect of the node ideal in degree 3d/2 - 4.  Odd d
forces e = 0 outright.  For even d the family splits: a < d/2 keeps the
defect zero in that degree while a = d/2 makes it positive, so surfaces
with the same degree and very similar node counts can be told apart by
their monodromy.
"""

from nodalsurf import GradedRing, alexander_exponent, build_example

SEED = 7
RING = GradedRing(3, 65521)

print("d   a   nodes  exponent  bound d^2-3d+3")
for d, a in ((8, 4), (9, 4), (10, 4), (10, 5), (12, 4), (12, 6)):
    ex = build_example(d, a, RING, SEED)
    e, bound = alexander_exponent(ex.node_ideal, d, ex.hilbert, ex.length)
    print(f"{d:<3d} {a:<3d} {ex.length:<6d} {e:<9d} {bound}")

print()
print("The d = 10 rows are the dichotomy: 36 nodes in CI(1,4,9) position")
print("give exponent 0, while 45 nodes in CI(1,5,9) position give 1, so")
print("the Alexander polynomial jumps from 1 to (t+1).")
