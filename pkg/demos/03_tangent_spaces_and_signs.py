"""Zariski tangent spaces at monomial ideals, the parity law, and Behrend signs."""

from dtinv.localalg import hilb_tangent_dim, parity_scan, weighted_chi_punctual_quot
from dtinv.torus import MonomialIdeal, enumerate_monomial_ideals

fat_point = MonomialIdeal.from_generators(3, [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1), (0, 1, 1), (0, 0, 2)])
print("tangent dimension at (x,y,z)^2:", hilb_tangent_dim(fat_point), "(Hilb^4 has dimension 12)")

print("\nTangent dimensions of Hilb^m(C^3) at fixed points:")
for m in range(1, 5):
    print(f"  m={m}:", sorted(hilb_tangent_dim(Z) for Z in enumerate_monomial_ideals(3, m)))

rep = parity_scan(4)
print(f"\nparity law over {rep['pairs']} pairs of ideals: {'holds' if rep['passed'] else 'FAILS'}")

print("\nBehrend-weighted punctual counts, m = 0..6:", [weighted_chi_punctual_quot(m) for m in range(7)])
