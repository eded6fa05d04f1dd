"""
The family L(n, d) and its classification
=========================================

On k↻_{p^n} the commutative Hopf structures are L(n, d), 0 <= d <= n.
We build all of them for p = 3, n = 2, run the full verifier, and read d
back from the rank of the Frobenius map x -> x^p.  The Frobenius equals the
d-th power of the Verschiebung V(α_m) = α_{m/p}.
"""

from loophopf.families import FamilyParams, build_Lnd, relation_failures
from loophopf.hopf import classify, frobenius, integral, is_local, verify
from loophopf.loop_coalgebra import basis, verschiebung

p, n = 3, 2
for d in range(n + 1):
    P = FamilyParams(p, n, d)
    T = build_Lnd(P)
    report = verify(T)
    print(f"--- L({n},{d}) over GF({p}), N = {T.N}")
    print(report.render())
    print("relations:", relation_failures(T, P) or "all hold")
    print("classify:", classify(T), "with Frobenius rank", classify(T).frobenius_rank)

# %% Frobenius and Verschiebung side by side in L(2,1)
T = build_Lnd(FamilyParams(p, n, 1))
print("\nin L(2,1):")
for m in (1, 3, 4, 6):
    x = basis(T.field, T.N, m)
    print(f"  a{m}^3 = {frobenius(T, x)}    V(a{m}) = {verschiebung(x)}")

# %% integrals: semisimple when d = 0, local otherwise
for d in range(n + 1):
    T = build_Lnd(FamilyParams(p, n, d))
    data = integral(T)
    print(f"\nL(2,{d}): eps(t) = {data.eps_t}, t is an integral: {data.t_is_integral}, "
          f"integral space has dim {data.dimension}, local: {is_local(T)}")
