"""Chamber structure in the polarization parameter r, and the destabilizer search."""

from fractions import Fraction

from dtinv.walls import ChamberSpec, bogomolov_window, classify, destabilizer_search, k_value, wall_bounds

for e1 in (0, 1):
    for e2 in (0, 1):
        lo, up = wall_bounds(2, e1, e2)
        print(f"eps=({e1},{e2}): wall at r={lo}, chamber ends at {up}, k={k_value(2, e1, e2)}")

print()
for r in (Fraction(1), Fraction(2), Fraction(3), Fraction(4)):
    print(f"r={r}:", classify(ChamberSpec(2, 1, 0, r)))

r0 = bogomolov_window(2, 0, 0) / 2
found = destabilizer_search(2, 0, 0, 3, r0, 6)
print(f"\ndestabilizing twists for r=3, r0={r0}:", [t.as_tuple() for t in found])
