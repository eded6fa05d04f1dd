"""
Every bialgebra on k↻_p
=======================

For dimension p the multiplication tables can be enumerated outright.
Each one has α_1^p = λ α_1, and rescaling α_1 by a root of λ x^{p-1} = 1
reduces λ to 0 or 1.  For p = 3 and λ = 2 the root lives in GF(9).
"""

from loophopf.hopf import classify, enumerate_dim_p_bialgebras, frobenius, normalize_dim_p
from loophopf.loop_coalgebra import basis
from loophopf.scalars import field

for p in (2, 3):
    F = field(p)
    tables = enumerate_dim_p_bialgebras(F)
    print(f"--- p = {p}: {len(tables)} bialgebra tables on k↻_{p}")
    for T in tables:
        lam = frobenius(T, basis(F, p, 1))
        R = normalize_dim_p(T)
        how = "" if R.scale is None else f", rescale a1 by {R.scale} in GF({p}^{R.extension_degree})"
        print(f"  a1^{p} = {str(lam):6s} -> tag {R.tag}{how}; class {classify(T)}")
