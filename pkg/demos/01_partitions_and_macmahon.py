"""Count plane partitions by enumeration and compare with the MacMahon product."""

from dtinv.partitions import count_partitions, enumerate_ndpartitions, macmahon

N = 10

print("Plane partitions of 3, listed as height maps:")
for p in enumerate_ndpartitions(3, 3):
    print("  ", p)

counts = [count_partitions(3, m) for m in range(N + 1)]
print(f"\nenumerated P_3(m), m <= {N}: {counts}")
print(f"MacMahon product to q^{N}:   {macmahon(N).as_ints()}")
print("agree:", counts == macmahon(N).as_ints())

print("\nSolid partitions (n = 4):", [count_partitions(4, m) for m in range(8)])
