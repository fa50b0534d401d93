"""Euler characteristics of the two Calabi-Yau 3-folds and the Bogomolov discriminant."""

from dtinv.chow import bogomolov_discriminant, ci_euler, class_cm_theorem_a, class_cm_theorem_b

print("chi(quadric and quartic in P^5)        =", ci_euler((5,), [2, 4]))
print("chi((2,2,3) divisor in P1 x P1 x P2)   =", ci_euler((1, 1, 2), [(2, 2, 3)]))
print("chi((2,2,4) divisor in P1 x P1 x P3)   =", ci_euler((1, 1, 3), [(2, 2, 4)]))

print("\nTotal Chern classes with a formal m:")
print("  family A:", class_cm_theorem_a())
print("  family B:", class_cm_theorem_b(eps1=0, eps2=0))

print("\nBogomolov discriminant as a polynomial in r0:")
for n in (2, 3):
    for e1 in (0, 1):
        for e2 in (0, 1):
            print(f"  n={n} eps=({e1},{e2}):", bogomolov_discriminant(n, e1, e2))
