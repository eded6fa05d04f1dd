"""
Coalgebra endomorphisms of the loop
===================================

Every coalgebra map f of k↻ is fixed by the α_1-coefficients λ_m of f(α_m).
In terms of the series λ(t) = Σ λ_m t^m, the α_r-coefficient of f(α_n) is
[t^n] λ(t)^r, and composing maps substitutes one series into the other.
"""

from loophopf.endo import LambdaSeq, compose, evaluate, invert, is_coalgebra_map, matrix
from loophopf.scalars import field

F = field(5)
N = 6
f = LambdaSeq.of(F, [2, 1, 3])
g = LambdaSeq.of(F, [1, 4])

print("f =", f, " g =", g)
for n in range(N):
    print(f"  f(a{n}) = {evaluate(f, n, N)}")

print("\nmatrix of f on k↻_6 (column m is f(a_m)):")
for row in matrix(f, N):
    print("  " + " ".join(str(c) for c in row))
print("respects Δ:", is_coalgebra_map(matrix(f, N), N))

# %% composition and inversion
print("\nf∘g =", compose(f, g, N))
finv = invert(f, N)
print("f^-1 =", finv, " check f^-1∘f =", compose(finv, f, N))

# %% an endomorphism with λ_1 = 0 kills α_1 and is not invertible
h = LambdaSeq.of(F, [0, 1])
print("\nh =", h, " h(a3) =", evaluate(h, 3, N), " h(a4) =", evaluate(h, 4, N))

# %% extension fields take literals in the generator g
F9 = field(3, 2)
u = LambdaSeq.of(F9, ["g", "2g+1"])
print("\nover GF(9):", u, "->", evaluate(u, 2, 4))
