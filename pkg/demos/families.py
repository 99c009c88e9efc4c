"""Build the certifying partition families for one n and check them.

The p = 3, n = 2 (mod 3) beta family is printed with one box too many; the
second run shows the corrected variant.
"""

from psingular import alternating_families, validate_families

n = 29
for p in (2, 3, 5):
    rep = validate_families(alternating_families(n, p))
    print(f"n={n} p={p} {rep.case}: {rep.count} members, bound {rep.bound}, passed={rep.passed}")
    if not rep.passed:
        print("   witnesses:", rep.witnesses)
rep = validate_families(alternating_families(n, 3, corrected=True))
print(f"n={n} p=3 corrected: passed={rep.passed}")
