"""Coalgebra endomorphisms of the loop coalgebra, encoded by λ-sequences.

A sequence ``(λ_1, λ_2, ...)`` determines the endomorphism

    f(α_n) = Σ_r ( Σ_{n_1+...+n_r = n} λ_{n_1}···λ_{n_r} ) α_r,

and every coalgebra endomorphism arises this way.  The inner sum is the
coefficient of ``t^n`` in ``λ(t)^r`` where ``λ(t) = Σ_i λ_i t^i``, which is how
it is computed here.  Composition of endomorphisms is substitution of series,
``f∘g ↔ λ_f(λ_g(t))``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import linalg
from .errors import InvalidInputError, NotInvertibleError
from .loop_coalgebra import LoopElement, TensorElement, comult
from .scalars import GF, FieldElement

__all__ = [
    "LambdaSeq",
    "compose",
    "evaluate",
    "extend",
    "identity",
    "invert",
    "is_automorphism",
    "is_coalgebra_map",
    "matrix",
    "restrict",
]


@dataclass(frozen=True, eq=False)
class LambdaSeq:
    """Finite λ-sequence; entries beyond the stored ones are zero."""

    field: GF
    lambdas: tuple[FieldElement, ...]

    def __post_init__(self):
        for lam in self.lambdas:
            if not isinstance(lam, FieldElement) or lam.field != self.field:
                raise InvalidInputError("λ entries must be elements of the sequence's field")

    @classmethod
    def of(cls, fld: GF, values: Iterable) -> LambdaSeq:
        """Build from ints, field elements or literals such as ``"2g+1"``."""
        lams = []
        for v in values:
            if isinstance(v, FieldElement):
                lams.append(v)
            elif isinstance(v, str):
                lams.append(fld.parse(v))
            else:
                lams.append(fld(v))
        return cls(fld, tuple(lams))

    def __getitem__(self, i: int) -> FieldElement:
        """``λ_i`` (1-based); zero past the stored entries."""
        if i < 1:
            raise IndexError("λ-sequences are indexed from 1")
        return self.lambdas[i - 1] if i <= len(self.lambdas) else self.field.zero

    def codes(self, length: int) -> list[int]:
        """``[0, λ_1, ..., λ_{length-1}]`` as codes: the series ``λ(t)`` mod ``t^length``."""
        out = [0] * length
        for i, lam in enumerate(self.lambdas[: max(length - 1, 0)], start=1):
            out[i] = lam.code
        return out

    def trimmed(self) -> tuple[int, ...]:
        codes = [lam.code for lam in self.lambdas]
        while codes and codes[-1] == 0:
            codes.pop()
        return tuple(codes)

    def __eq__(self, other):
        if not isinstance(other, LambdaSeq):
            return NotImplemented
        return self.field == other.field and self.trimmed() == other.trimmed()

    def __hash__(self):
        return hash((self.field, self.trimmed()))

    def __str__(self):
        codes = self.trimmed()
        if not codes:
            return "0"
        return ",".join(self.field.render(c) for c in codes)


def identity(fld: GF) -> LambdaSeq:
    return LambdaSeq(fld, (fld.one,))


def _power_table(fld: GF, series: Sequence[int], N: int) -> list[list[int]]:
    # P[r][n] = [t^n] λ(t)^r, for r, n < N
    add, mul = fld.add, fld.mul
    P = [[1] + [0] * (N - 1)]
    for _ in range(1, N):
        prev = P[-1]
        row = [0] * N
        for i, a in enumerate(prev):
            if a:
                for j in range(1, N - i):
                    b = series[j]
                    if b:
                        row[i + j] = add(row[i + j], mul(a, b))
        P.append(row)
    return P


def matrix_codes(f: LambdaSeq, N: int) -> list[list[int]]:
    """Matrix of ``f`` on k↻_N as codes; column ``m`` holds ``f(α_m)``."""
    if N < 1:
        raise InvalidInputError("N must be positive")
    return _power_table(f.field, f.codes(N), N)


def matrix(f: LambdaSeq, N: int) -> list[list[FieldElement]]:
    fld = f.field
    return [[FieldElement(fld, c) for c in row] for row in matrix_codes(f, N)]


def evaluate(f: LambdaSeq, n: int, N: int | None = None) -> LoopElement:
    """``f(α_n)`` as an element of k↻_N (default ``N = n + 1``)."""
    if N is None:
        N = n + 1
    if not 0 <= n < N:
        raise InvalidInputError(f"path index {n} outside [0, {N})")
    P = _power_table(f.field, f.codes(n + 1), n + 1)
    return LoopElement._raw(f.field, N, {r: P[r][n] for r in range(n + 1) if P[r][n]})


def _as_codes(fld: GF, M) -> list[list[int]]:
    return [[c.code if isinstance(c, FieldElement) else fld.from_int(c) for c in row] for row in M]


def is_coalgebra_map(M, N: int, fld: GF | None = None) -> bool:
    """Whether the linear map with columns ``M[.][m] = f(α_m)`` satisfies ``(f⊗f)Δ = Δf``.

    ``M`` holds :class:`FieldElement` entries (or ints, with ``fld`` given)
    and must fix ``α_0``.
    """
    if fld is None:
        fld = M[0][0].field
    C = _as_codes(fld, M)
    if len(C) != N or any(len(r) != N for r in C):
        raise InvalidInputError("matrix must be N x N")
    if [C[r][0] for r in range(N)] != [1] + [0] * (N - 1):
        raise InvalidInputError("the map must fix α_0")
    if any(C[0][m] for m in range(1, N)):
        return False  # ε∘f != ε
    images = [LoopElement._raw(fld, N, {r: C[r][m] for r in range(N) if C[r][m]}) for m in range(N)]
    for n in range(N):
        lhs = TensorElement._raw(fld, N, {})
        for i in range(n + 1):
            lhs = lhs + TensorElement.pure(images[i], images[n - i])
        if lhs != comult(images[n]):
            return False
    return True


def _compose_series(fld: GF, outer: Sequence[int], inner: Sequence[int], length: int) -> list[int]:
    # outer(inner(t)) mod t^length; both series have zero constant term
    add, mul = fld.add, fld.mul
    result = [0] * length
    power = [1] + [0] * (length - 1)
    for r in range(1, length):
        nxt = [0] * length
        for i, a in enumerate(power):
            if a:
                for j in range(1, length - i):
                    if inner[j]:
                        nxt[i + j] = add(nxt[i + j], mul(a, inner[j]))
        power = nxt
        if r < len(outer) and outer[r]:
            for n, c in enumerate(power):
                if c:
                    result[n] = add(result[n], mul(outer[r], c))
    return result


def compose(f: LambdaSeq, g: LambdaSeq, N: int | None = None) -> LambdaSeq:
    """The λ-sequence of ``f∘g``; exact, or truncated to k↻_N when ``N`` is given."""
    if f.field != g.field:
        raise InvalidInputError("λ-sequences over different fields")
    fld = f.field
    if N is None:
        N = max(len(f.trimmed()), 1) * max(len(g.trimmed()), 1) + 1
    series = _compose_series(fld, f.codes(N), g.codes(N), N)
    return LambdaSeq(fld, tuple(FieldElement(fld, c) for c in series[1:]))


def is_automorphism(f: LambdaSeq) -> bool:
    return bool(f[1])


def invert(f: LambdaSeq, N: int) -> LambdaSeq:
    """The inverse on k↻_N, read off the inverse of the triangular matrix."""
    if not is_automorphism(f):
        raise NotInvertibleError("λ_1 = 0: the endomorphism is not invertible")
    if N < 2:
        return identity(f.field)
    fld = f.field
    Minv = linalg.inverse(fld, matrix_codes(f, N))
    # f^{-1}(α_m) has α_1-coefficient μ_m
    return LambdaSeq(fld, tuple(FieldElement(fld, Minv[1][m]) for m in range(1, N)))


def restrict(f: LambdaSeq, N: int) -> LambdaSeq:
    """Keep ``λ_1, ..., λ_{N-1}``: all that acts on k↻_N."""
    return LambdaSeq(f.field, tuple(f[i] for i in range(1, N)))


def extend(f: LambdaSeq, N: int, M: int) -> LambdaSeq:
    """Extend an endomorphism of k↻_N to k↻_M by setting ``λ_j = 0`` for ``j >= N``."""
    if M <= N:
        raise InvalidInputError("extension needs M > N")
    zero = f.field.zero
    return LambdaSeq(f.field, tuple(f[i] if i < N else zero for i in range(1, M)))
