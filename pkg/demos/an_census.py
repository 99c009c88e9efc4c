"""How many p-singular characters A_n has, for a few small n."""

from psingular import census_an

for n in (5, 6, 9, 12):
    for p in (2, 3, 5):
        if p > n:
            continue
        c = census_an(n, p)
        print(f"A_{n:<2} p={p}: n_p={c.np_an:3d}  n_p*={c.np_star_an:3d}  |cd_p|={len(c.cdp_an)}")
