"""
Binomial coefficients mod p, three ways
=======================================

C(m+n, n) vanishes mod p exactly when adding m and n in base p carries.
The same fact shows up as a strict inequality between Legendre sums, and
as the count of thin splits (interleavings of two paths) mod p.
"""

from loophopf.quivers import thin_split_product_loop, thin_splits
from loophopf.scalars import base_p_digits, carry_count, legendre_sum, lucas_binom

p, m, n = 3, 5, 4
print(f"m = {m} has base-{p} digits {base_p_digits(m, p)}, n = {n} has {base_p_digits(n, p)}")
print(f"C({m + n}, {n}) mod {p} = {lucas_binom(m + n, n, p)}")
print(f"carries: {carry_count(m, n, p)}")
print(f"Legendre: v(({m}+{n})!) = {legendre_sum(m + n, p)}, "
      f"v({m}!) + v({n}!) = {legendre_sum(m, p) + legendre_sum(n, p)}")

# %% A table of which C(m+n, n) vanish mod 3, for small m, n
print("\n    n=" + " ".join(f"{n:2d}" for n in range(1, 13)))
for m in range(1, 13):
    row = " ".join(" ." if lucas_binom(m + n, n, p) else " 0" for n in range(1, 13))
    print(f"m={m:2d} {row}")

# %% Thin splits: sequences of a ones and b zeros
print("\nthin splits of (2, 2):", [''.join(map(str, s)) for s in thin_splits(2, 2)])
for a, b in [(1, 1), (2, 1), (3, 3)]:
    print(f"α_{a} α_{b} on the loop, p = {p}: coefficient {thin_split_product_loop(a, b, p)}"
          f" = C({a + b},{a}) mod {p} = {lucas_binom(a + b, a, p)}")
