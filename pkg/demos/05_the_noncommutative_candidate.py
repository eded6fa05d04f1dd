"""
A noncommutative candidate on k↻_4 that does not survive verification
=====================================================================

Take x = α_1, y = α_2 over GF(2) with xy - yx = x and x² = y² = 0.  The
coproducts Δ(x) = x⊗1 + 1⊗x and Δ(y) = y⊗1 + 1⊗y + x⊗x are compatible,
but the relations themselves are not: (xy)y = x while x(yy) = 0.  The
verifier finds exactly this triple.  An exhaustive search then shows that
every Hopf structure on k↻_4 over GF(2) is commutative.
"""

from loophopf.errors import VerificationError
from loophopf.families import build_nc2, nc2_candidate
from loophopf.hopf import classify, enumerate_bialgebras, is_commutative, multiply, verify
from loophopf.loop_coalgebra import basis
from loophopf.scalars import field

T = nc2_candidate()
F = T.field
x, y = basis(F, 4, 1), basis(F, 4, 2)
print("xy =", multiply(T, x, y), "  yx =", multiply(T, y, x))
print("(xy)y =", multiply(T, multiply(T, x, y), y), "  x(yy) =", multiply(T, x, multiply(T, y, y)))
print(verify(T).render())

try:
    build_nc2()
except VerificationError as exc:
    print("\nbuild_nc2:", exc)

# %% all Hopf structures on k↻_4 over GF(2)
tables = enumerate_bialgebras(field(2), 4)
print(f"\n{len(tables)} bialgebras on k↻_4 over GF(2); "
      f"commutative: {sum(is_commutative(T) for T in tables)}; "
      f"classes: {sorted(str(classify(T)) for T in tables)}")
