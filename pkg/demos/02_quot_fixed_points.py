"""Torus fixed points of punctual Quot schemes and the power formula over a 3-fold."""

from dtinv.partitions import partition_series
from dtinv.series import int_pow
from dtinv.torus import chi_punctual_quot, chi_quot_series, enumerate_quot_fixed_points, stratified_series

print("Fixed points of the rank-2 punctual Quot scheme of length 2:")
for E in enumerate_quot_fixed_points(3, 2, 2):
    print("  ", [I.to_list() for I in E.ideals])

square = int_pow(partition_series(3, 6), 2)
print("\nfixed-point counts:", [chi_punctual_quot(3, 2, m) for m in range(7)])
print("(sum P_3(m) q^m)^2: ", square.as_ints())

chi = -176
print(f"\nGlobal series for rank 2 on a 3-fold with chi = {chi}:")
print("  power formula:", chi_quot_series(3, 2, chi, 4).as_ints())
print("  stratified:   ", stratified_series(square.truncate(4), chi).as_ints())
