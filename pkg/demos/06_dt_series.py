"""The DT generating series of both families, with their internal cross-checks."""

from fractions import Fraction

from dtinv.dtseries import crosscheck_quot_model, theorem_a_series, theorem_a_series_stratified, theorem_b_series

a = theorem_a_series(8)
print("family A:", a.series)
print("  rebuilt from weighted punctual data:", theorem_a_series_stratified(8) == a.series)

for r in (Fraction(1), Fraction(3)):
    b = theorem_b_series(0, 0, r, 8)
    print(f"family B, r={r} ({b.chamber}):", b.series)

print("\nclosed form vs stratified fixed-point count:")
for m in range(4):
    rep = crosscheck_quot_model("A", m)
    print(f"  A, m={m}: {rep.closed_form} / {rep.stratified}")
