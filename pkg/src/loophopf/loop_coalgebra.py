"""The truncated loop path coalgebra k↻_N.

Basis paths ``α_0, ..., α_{N-1}`` are indexed by length; ``α_0`` (the empty
path) is the unique group-like element.  Comultiplication deconcatenates,
``Δ(α_n) = Σ_{i+j=n} α_i ⊗ α_j``, and the counit picks the ``α_0`` coefficient.

Elements are sparse: zero coefficients are never stored, so ``==`` is
structural.  Coefficients are kept as field codes (see :mod:`.scalars`).
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import IncompatibleFieldError, InvalidInputError
from .scalars import GF, FieldElement

__all__ = [
    "LoopElement",
    "TensorElement",
    "basis",
    "basis_elements",
    "comult",
    "component",
    "counit",
    "is_primitive",
    "reconstruct",
    "truncate",
    "verschiebung",
]


def _code(fld: GF, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != fld:
            raise IncompatibleFieldError(f"coefficient over {c.field!r}, expected {fld!r}")
        return c.code
    return fld.from_int(c)


class LoopElement:
    """Finitely supported map ``path index -> coefficient`` below bound ``N``."""

    __slots__ = ("field", "N", "coeffs")

    def __init__(self, fld: GF, N: int, coeffs: Mapping[int, object] | None = None):
        if N < 1:
            raise InvalidInputError("truncation bound must be at least 1")
        self.field = fld
        self.N = N
        stored: dict[int, int] = {}
        for m, c in (coeffs or {}).items():
            if not 0 <= m < N:
                raise InvalidInputError(f"path index {m} outside [0, {N})")
            c = _code(fld, c)
            if c:
                stored[m] = c
        self.coeffs = stored

    @classmethod
    def _raw(cls, fld: GF, N: int, coeffs: dict[int, int]) -> LoopElement:
        # trusted constructor: coeffs already reduced, nonzero, in range
        obj = cls.__new__(cls)
        obj.field, obj.N, obj.coeffs = fld, N, coeffs
        return obj

    @classmethod
    def zero(cls, fld: GF, N: int) -> LoopElement:
        return cls._raw(fld, N, {})

    def __getitem__(self, m: int) -> FieldElement:
        return FieldElement(self.field, self.coeffs.get(m, 0))

    def items(self) -> Iterator[tuple[int, FieldElement]]:
        for m in sorted(self.coeffs):
            yield m, FieldElement(self.field, self.coeffs[m])

    def support(self) -> list[int]:
        return sorted(self.coeffs)

    def degree(self) -> int:
        """Largest index in the support, ``-1`` for zero."""
        return max(self.coeffs, default=-1)

    def _check(self, other: LoopElement) -> None:
        if not isinstance(other, LoopElement):
            raise TypeError("expected a LoopElement")
        if other.field != self.field or other.N != self.N:
            raise IncompatibleFieldError("elements over different fields or bounds")

    def __add__(self, other: LoopElement) -> LoopElement:
        self._check(other)
        add = self.field.add
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = add(out.get(m, 0), c)
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return LoopElement._raw(self.field, self.N, out)

    def __neg__(self) -> LoopElement:
        neg = self.field.neg
        return LoopElement._raw(self.field, self.N, {m: neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other: LoopElement) -> LoopElement:
        return self + (-other)

    def scale(self, c) -> LoopElement:
        c = _code(self.field, c)
        if not c:
            return LoopElement.zero(self.field, self.N)
        mul = self.field.mul
        return LoopElement._raw(self.field, self.N, {m: mul(c, v) for m, v in self.coeffs.items()})

    def __rmul__(self, c) -> LoopElement:
        if isinstance(c, (int, FieldElement)) and not isinstance(c, bool):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, LoopElement):
            return NotImplemented
        return self.field == other.field and self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.N, tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        render = self.field.render
        parts = []
        for m in sorted(self.coeffs):
            c = render(self.coeffs[m])
            if "+" in c:
                c = f"({c})"
            parts.append(f"{c}*a{m}")
        return " + ".join(parts)

    def __repr__(self):
        return f"LoopElement(N={self.N}, {self})"


def basis(fld: GF, N: int, m: int) -> LoopElement:
    """The path ``α_m`` in k↻_N."""
    if not 0 <= m < N:
        raise InvalidInputError(f"path index {m} outside [0, {N})")
    return LoopElement._raw(fld, N, {m: 1})


def basis_elements(fld: GF, N: int) -> list[LoopElement]:
    return [basis(fld, N, m) for m in range(N)]


class TensorElement:
    """Sparse element of k↻_N ⊗ k↻_N, keyed by pairs of path indices."""

    __slots__ = ("field", "N", "coeffs")

    def __init__(self, fld: GF, N: int, coeffs: Mapping[tuple[int, int], object] | None = None):
        self.field = fld
        self.N = N
        stored = {}
        for (i, j), c in (coeffs or {}).items():
            if not (0 <= i < N and 0 <= j < N):
                raise InvalidInputError(f"tensor index {(i, j)} outside bound {N}")
            c = _code(fld, c)
            if c:
                stored[i, j] = c
        self.coeffs = stored

    @classmethod
    def _raw(cls, fld: GF, N: int, coeffs: dict[tuple[int, int], int]) -> TensorElement:
        obj = cls.__new__(cls)
        obj.field, obj.N, obj.coeffs = fld, N, coeffs
        return obj

    @classmethod
    def pure(cls, x: LoopElement, y: LoopElement) -> TensorElement:
        """The elementary tensor ``x ⊗ y``."""
        x._check(y)
        mul = x.field.mul
        return cls._raw(x.field, x.N, {(i, j): mul(a, b)
                                       for i, a in x.coeffs.items()
                                       for j, b in y.coeffs.items()})

    def __add__(self, other: TensorElement) -> TensorElement:
        if other.field != self.field or other.N != self.N:
            raise IncompatibleFieldError("tensors over different fields or bounds")
        add = self.field.add
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            v = add(out.get(key, 0), c)
            if v:
                out[key] = v
            else:
                out.pop(key, None)
        return TensorElement._raw(self.field, self.N, out)

    def __getitem__(self, key: tuple[int, int]) -> FieldElement:
        return FieldElement(self.field, self.coeffs.get(key, 0))

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.field == other.field and self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.N, tuple(sorted(self.coeffs.items()))))

    def __len__(self):
        return len(self.coeffs)

    def __str__(self):
        if not self.coeffs:
            return "0"
        render = self.field.render
        return " + ".join(f"{render(self.coeffs[key])}*a{key[0]}(x)a{key[1]}"
                          for key in sorted(self.coeffs))

    def __repr__(self):
        return f"TensorElement(N={self.N}, {self})"


def comult(x: LoopElement) -> TensorElement:
    """Deconcatenation ``Δ(α_n) = Σ_{i=0}^{n} α_i ⊗ α_{n-i}``, extended linearly."""
    out: dict[tuple[int, int], int] = {}
    add = x.field.add
    for n, c in x.coeffs.items():
        for i in range(n + 1):
            key = (i, n - i)
            v = add(out.get(key, 0), c)
            if v:
                out[key] = v
            else:
                del out[key]
    return TensorElement._raw(x.field, x.N, out)


def counit(x: LoopElement) -> FieldElement:
    return FieldElement(x.field, x.coeffs.get(0, 0))


def is_primitive(x: LoopElement) -> bool:
    """``Δ(x) == x ⊗ α_0 + α_0 ⊗ x``."""
    one = basis(x.field, x.N, 0)
    return comult(x) == TensorElement.pure(x, one) + TensorElement.pure(one, x)


def component(x: LoopElement, i: int) -> LoopElement:
    """The element ``x_(i)`` with ``Δ(x) = Σ_i α_i ⊗ x_(i)``."""
    if i < 0:
        raise InvalidInputError("component index must be non-negative")
    return LoopElement._raw(x.field, x.N, {m - i: c for m, c in x.coeffs.items() if m >= i})


def reconstruct(components: Iterable[LoopElement]) -> LoopElement:
    """Recover ``x = Σ_i ε(x_(i)) α_i`` from the list ``[x_(0), x_(1), ...]``."""
    comps = list(components)
    if not comps:
        raise InvalidInputError("need at least one component")
    fld, N = comps[0].field, comps[0].N
    return LoopElement._raw(fld, N, {i: c.coeffs[0] for i, c in enumerate(comps) if 0 in c.coeffs})


def verschiebung(x: LoopElement, times: int = 1) -> LoopElement:
    """``V(α_m) = α_{m/p}`` when ``p | m`` and ``0`` otherwise, iterated ``times``."""
    if times < 0:
        raise InvalidInputError("times must be non-negative")
    step = x.field.p**times
    return LoopElement._raw(x.field, x.N,
                            {m // step: c for m, c in x.coeffs.items() if m % step == 0})


def truncate(x: LoopElement, M: int) -> LoopElement:
    """Drop every coefficient at index ``>= M``; the result lives in k↻_M."""
    if not 1 <= M <= x.N:
        raise InvalidInputError(f"cannot truncate k↻_{x.N} to bound {M}")
    return LoopElement._raw(x.field, M, {m: c for m, c in x.coeffs.items() if m < M})
