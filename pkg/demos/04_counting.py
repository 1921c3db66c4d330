"""
Exact enumeration: closed forms, refinements, identities, and the
continued fraction.

Each closed form is checked against the exhaustive tally as it prints.
"""
from invpat.classes import PatternSet
from invpat.containment import Mode
from invpat.enumeration import (check_corollary_stanley,
                                check_fixed_point_identity,
                                check_recurrence_132, count_avoiders,
                                d_series, egf_identity_report,
                                formula_pattern123, formula_pattern132,
                                formula_pattern132_poly, formula_pattern2143,
                                formula_pattern321)

print("n   |avoid 321|  |avoid 132|  |avoid 123|  |avoid 2143|")
for n in range(1, 11):
    cols = []
    for formula, pat in ((formula_pattern321, (3, 2, 1)),
                         (formula_pattern132, (1, 3, 2)),
                         (formula_pattern123, (1, 2, 3)),
                         (formula_pattern2143, (2, 1, 4, 3))):
        exhaustive = count_avoiders(PatternSet([pat], Mode.I), Mode.I, n)
        assert exhaustive == formula(n)
        cols.append(formula(n))
    print(f"{n:<3} " + "  ".join(f"{c:>10}" for c in cols))

print("\ncycle-count refinement of the 132 column:")
for n in range(1, 8):
    print(f"  n={n}: {formula_pattern132_poly(n)}")

print("\nthree-term recurrence to n=14:", check_recurrence_132(14))
print("block-pattern symmetry (m=2, n<=10):", check_corollary_stanley(2, 10))
print("fixed-point factorization for {2143} to n=10:",
      check_fixed_point_identity(PatternSet([(2, 1, 4, 3)], Mode.F), 10))

print("\ninvolution avoiders as e^x times matching avoiders, {2143}:")
for n, lhs, rhs, ok in egf_identity_report(PatternSet([(2, 1, 4, 3)], Mode.F), 8):
    print(f"  n={n}: {lhs} = {rhs}  {'ok' if ok else 'MISMATCH'}")

print("\ncontinued-fraction polynomials at (p,q)=(1,-1); term n is D_{n+1}:")
for n, poly in enumerate(d_series(1, -1, 8)):
    print(f"  [x^{n}] -> {poly}")
print("at t=1 these are the 132-avoider counts shifted by one index")
