"""Constructors for the named Hopf structures on k↻_N.

* :func:`build_graded`: ``α_a · α_b = C(a+b, a) α_{a+b}`` (divided powers).
* :func:`build_Lnd`: the commutative structure ``L(n, d)`` on k↻_{p^n}, in
  which ``α_{p^i}^p = 0`` for ``i < d`` and ``α_{p^i}^p = α_{p^{i-d}}`` otherwise.
* :func:`build_dual_cyclic`: the dual of the group algebra of Z/p^n.
* :func:`build_nc2`: the noncommutative candidate on k↻_4 in characteristic 2
  (which the verifier rejects).

Commutative Hopf structures on k↻_N are dual to (truncated) one-dimensional
formal group laws ``F(x, y)`` over k: the product is
``α_a α_b = Σ_m [x^a y^b] F^m · α_m``.  ``L(n, d)`` comes from the law whose
logarithm is ``Σ_k x^{p^{hk}} / p^k`` with ``h = d + 1``; its p-series is
``x^{p^h}`` mod p, which is what makes the Frobenius equal ``V^d``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import InvalidInputError, VerificationError
from .hopf import Family, MultTable, frobenius, multiply, verify
from .loop_coalgebra import LoopElement, basis, verschiebung
from .scalars import GF, check_prime, field, lucas_binom

__all__ = [
    "CONSTRUCTIONS",
    "FamilyParams",
    "build_Lnd",
    "build_dual_cyclic",
    "build_graded",
    "build_nc2",
    "clear_caches",
    "nc2_candidate",
    "formal_group_law",
    "generator_monomial",
    "monomial_table",
    "reduce",
    "relation_failures",
    "relation_suite",
    "table_from_law",
]

CONSTRUCTIONS = ("formal-group", "monomial")


@dataclass(frozen=True)
class FamilyParams:
    p: int
    n: int
    d: int
    k: int = 1

    def __post_init__(self):
        check_prime(self.p)
        if not isinstance(self.n, int) or self.n < 1:
            raise InvalidInputError("n must be a positive integer")
        if not isinstance(self.d, int) or not 0 <= self.d <= self.n:
            raise InvalidInputError(f"need 0 <= d <= n, got d = {self.d}, n = {self.n}")
        if not isinstance(self.k, int) or self.k < 1:
            raise InvalidInputError("extension degree must be a positive integer")

    @property
    def N(self) -> int:
        return self.p**self.n

    def field(self) -> GF:
        return field(self.p, self.k)


def _field_for(p: int, fld: GF | None, k: int = 1) -> GF:
    if fld is None:
        return field(p, k)
    if fld.p != p:
        raise InvalidInputError(f"field of characteristic {fld.p}, expected {p}")
    return fld


def _gated(T: MultTable) -> MultTable:
    report = verify(T)
    if not report.is_hopf:
        name, status = report.first_failure()
        raise VerificationError(
            f"constructed table is not a Hopf algebra: {name} {status.render()}", report)
    return T


# ---------------------------------------------------------------------------
# monomial normal forms


def reduce(e, params: FamilyParams) -> tuple[int, ...] | None:
    """Normal form of the monomial ``Π g_i^{e_i}`` (``g_i = α_{p^i}``), or ``None`` for zero."""
    p, d = params.p, params.d
    e = list(e)
    if len(e) != params.n or any(x < 0 for x in e):
        raise InvalidInputError("exponent vector must have n non-negative entries")
    while True:
        over = [i for i, x in enumerate(e) if x >= p]
        if not over:
            return tuple(e)
        i = over[-1]
        e[i] -= p
        if i < d:
            return None
        e[i - d] += 1


def _digits(m: int, p: int, n: int) -> list[int]:
    return [(m // p**i) % p for i in range(n)]


def monomial_table(params: FamilyParams, fld: GF | None = None) -> MultTable:
    """The table from ``α_m ↔ Π_i g_i^{m_i} / m_i!`` (base-p digits ``m_i``), unverified.

    Products of monomials stay monomials, so every entry is a single path.
    This identification is a coalgebra isomorphism only for some parameters;
    :func:`build_Lnd` with ``construction="monomial"`` runs it through the verifier.
    """
    p, n, N = params.p, params.n, params.N
    fld = _field_for(p, fld, params.k)
    fact_inv = [pow(math.factorial(i), -1, p) for i in range(p)]

    def c(digits) -> int:
        out = 1
        for x in digits:
            out = out * fact_inv[x] % p
        return out

    digits = [_digits(m, p, n) for m in range(N)]
    rows = []
    for a in range(N):
        row = []
        for b in range(N):
            e = reduce([x + y for x, y in zip(digits[a], digits[b])], params)
            if e is None:
                row.append({})
                continue
            m = sum(x * p**i for i, x in enumerate(e))
            coeff = c(digits[a]) * c(digits[b]) * pow(c(e), -1, p) % p
            row.append({m: fld.from_int(coeff)})
        rows.append(row)
    return MultTable.from_codes(fld, N, rows, Family("ld", n, params.d))


# ---------------------------------------------------------------------------
# formal group laws


def _series_mul(a: list[Fraction], b: list[Fraction], D: int) -> list[Fraction]:
    out = [Fraction(0)] * D
    for i, x in enumerate(a):
        if x:
            for j in range(D - i):
                if b[j]:
                    out[i + j] += x * b[j]
    return out


def _bivariate_mul(a: dict, b: dict, N: int, mod: int | None = None) -> dict:
    out: dict[tuple[int, int], object] = {}
    for (i, j), x in a.items():
        for (k, l), y in b.items():
            if i + k < N and j + l < N:
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + x * y
    if mod is not None:
        return {key: v % mod for key, v in out.items() if v % mod}
    return {key: v for key, v in out.items() if v}


@functools.lru_cache(maxsize=None)
def formal_group_law(p: int, n: int, h: int | None) -> dict[tuple[int, int], int]:
    """Coefficients mod p of a formal group law, truncated to ``x^a y^b`` with ``a, b < p^n``.

    ``h = None`` gives the additive law ``x + y``.  Otherwise the law has
    logarithm ``f(x) = Σ_k x^{p^{hk}} / p^k`` and is ``f^{-1}(f(x) + f(y))``;
    its coefficients are p-integral, which is checked during the reduction.
    """
    check_prime(p)
    N = p**n
    if h is None:
        return {(1, 0): 1, (0, 1): 1}
    if h < 1:
        raise InvalidInputError("height must be positive")
    D = 2 * N - 1  # total degree needed: a + b <= 2N - 2
    f = [Fraction(0)] * D
    k = 0
    while p ** (h * k) < D:
        f[p ** (h * k)] = Fraction(1, p**k)
        k += 1
    # compositional inverse g with g(f(x)) = x, solved degree by degree
    g = [Fraction(0)] * D
    g[1] = Fraction(1)
    powers = [None, f]
    for m in range(2, D):
        powers.append(_series_mul(powers[-1], f, D))
    for m in range(2, D):
        g[m] = -sum(g[j] * powers[j][m] for j in range(1, m))
    s: dict[tuple[int, int], Fraction] = {}
    for i, c in enumerate(f):
        if c and i < N:
            s[i, 0] = s.get((i, 0), 0) + c
            s[0, i] = s.get((0, i), 0) + c
    law: dict[tuple[int, int], Fraction] = {}
    power = {(0, 0): Fraction(1)}
    for m in range(1, D):
        power = _bivariate_mul(power, s, N)
        if g[m]:
            for key, v in power.items():
                law[key] = law.get(key, 0) + g[m] * v
    out = {}
    for key, v in sorted(law.items()):
        if not v:
            continue
        if v.denominator % p == 0:
            raise ArithmeticError(f"coefficient {v} of x^{key[0]}y^{key[1]} is not p-integral")
        r = v.numerator * pow(v.denominator, -1, p) % p
        if r:
            out[key] = r
    return out


def table_from_law(law: dict[tuple[int, int], int], p: int, N: int, fld: GF,
                   family: Family | None = None) -> MultTable:
    """``α_a α_b = Σ_m [x^a y^b] F^m α_m`` for a law with coefficients mod p."""
    cells: list[list[dict[int, int]]] = [[{} for _ in range(N)] for _ in range(N)]
    power = {(0, 0): 1}
    for m in range(N):
        for (a, b), v in power.items():
            cells[a][b][m] = fld.from_int(v)
        power = _bivariate_mul(power, law, N, p)
    return MultTable.from_codes(fld, N, cells, family)


# ---------------------------------------------------------------------------
# the families


@functools.lru_cache(maxsize=None)
def _build_Lnd(params: FamilyParams, fld: GF, construction: str) -> MultTable:
    if construction == "monomial":
        T = monomial_table(params, fld)
    else:
        h = None if params.d == params.n else params.d + 1
        T = table_from_law(formal_group_law(params.p, params.n, h), params.p, params.N, fld,
                           Family("ld", params.n, params.d))
    return _gated(T)


def build_Lnd(params: FamilyParams, fld: GF | None = None,
              construction: str = "formal-group") -> MultTable:
    """The Hopf structure ``L(n, d)`` on k↻_{p^n}; always verified before it is returned.

    ``construction="formal-group"`` (default) reads the product off a formal
    group law and is valid for all parameters.  ``construction="monomial"``
    uses the digit-wise divided-power identification and raises
    :class:`VerificationError` for parameters where it is not a Hopf structure.
    """
    if construction not in CONSTRUCTIONS:
        raise InvalidInputError(f"unknown construction {construction!r}")
    return _build_Lnd(params, _field_for(params.p, fld, params.k), construction)


@functools.lru_cache(maxsize=None)
def _build_graded(p: int, n: int, fld: GF) -> MultTable:
    N = p**n
    rows = []
    for a in range(N):
        row = []
        for b in range(N):
            c = lucas_binom(a + b, a, p) if a + b < N else 0
            row.append({a + b: c} if c else {})
        rows.append(row)
    return _gated(MultTable.from_codes(fld, N, rows, Family("graded", n, n)))


def build_graded(p: int, n: int, fld: GF | None = None) -> MultTable:
    """``α_a α_b = C(a+b, a) α_{a+b}``, zero once ``a + b >= p^n``."""
    check_prime(p)
    if n < 0:
        raise InvalidInputError("n must be non-negative")
    return _build_graded(p, n, _field_for(p, fld))


@functools.lru_cache(maxsize=None)
def _build_dual_cyclic(p: int, n: int, fld: GF) -> MultTable:
    # γ_a γ_b = Σ_m [u^a ⊗ u^b] Δ(u^m) γ_m with Δ(u) = u⊗1 + 1⊗u + u⊗u;
    # the coefficient is the multinomial m! / ((m-b)! (m-a)! (a+b-m)!)
    N = p**n
    rows = []
    for a in range(N):
        row = []
        for b in range(N):
            cell = {}
            for m in range(max(a, b), min(a + b, N - 1) + 1):
                c = lucas_binom(m, a, p) * lucas_binom(a, m - b, p) % p
                if c:
                    cell[m] = c
            row.append(cell)
        rows.append(row)
    return _gated(MultTable.from_codes(fld, N, rows, Family("dual-cyclic", n, 0)))


def build_dual_cyclic(p: int, n: int, fld: GF | None = None) -> MultTable:
    """The dual of the group algebra of Z/p^n, on the basis dual to ``(g - 1)^a``."""
    check_prime(p)
    if n < 0:
        raise InvalidInputError("n must be non-negative")
    return _build_dual_cyclic(p, n, _field_for(p, fld))


# words in x, y over GF(2), reduced by xy -> yx + x, xx -> 0, yy -> 0
_NC_RULES = {"xy": {"yx": 1, "x": 1}, "xx": {}, "yy": {}}


def _nc_normal(poly: dict[str, int]) -> dict[str, int]:
    out: dict[str, int] = {}
    todo = list(poly.items())
    while todo:
        word, c = todo.pop()
        for i in range(len(word) - 1):
            rule = _NC_RULES.get(word[i:i + 2])
            if rule is not None:
                for w, r in rule.items():
                    todo.append((word[:i] + w + word[i + 2:], c * r))
                break
        else:
            out[word] = (out.get(word, 0) + c) % 2
    return {w: c for w, c in out.items() if c}


def _nc_mul(a: dict[str, int], b: dict[str, int]) -> dict[str, int]:
    return _nc_normal({u + v: x * y for u, x in a.items() for v, y in b.items()})


def _nc_tensor_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[str, str], int] = {}
    for (u1, u2), x in a.items():
        for (v1, v2), y in b.items():
            for w1, c1 in _nc_mul({u1: 1}, {v1: 1}).items():
                for w2, c2 in _nc_mul({u2: 1}, {v2: 1}).items():
                    out[w1, w2] = (out.get((w1, w2), 0) + x * y * c1 * c2) % 2
    return {k: v for k, v in out.items() if v}


_NC_DELTA = {
    "x": {("x", ""): 1, ("", "x"): 1},
    "y": {("y", ""): 1, ("", "y"): 1, ("x", "x"): 1},
}


def _nc_comult(poly: dict[str, int]) -> dict:
    out: dict = {}
    for word, c in poly.items():
        acc = {("", ""): 1}
        for letter in word:
            acc = _nc_tensor_mul(acc, _NC_DELTA[letter])
        for key, v in acc.items():
            out[key] = (out.get(key, 0) + c * v) % 2
    return {k: v for k, v in out.items() if v}


_NC_BASIS = ("", "x", "y", "yx")


def _nc_coords(poly: dict[str, int], images: list[dict[str, int]]) -> dict[int, int]:
    # solve poly = Σ c_m images[m] over GF(2) by brute force (16 options)
    for cs in product(range(2), repeat=4):
        acc: dict[str, int] = {}
        for c, img in zip(cs, images):
            if c:
                for w, v in img.items():
                    acc[w] = (acc.get(w, 0) + v) % 2
        if {w: v for w, v in acc.items() if v} == poly:
            return {m: 1 for m, c in enumerate(cs) if c}
    raise AssertionError("element outside the span of the chosen basis")


@functools.lru_cache(maxsize=None)
def nc2_candidate() -> MultTable:
    """Unverified table for ``x = α_1``, ``y = α_2`` with ``xy - yx = x``, ``x² = y² = 0`` over GF(2).

    Products are computed on the words ``1, x, y, yx`` by rewriting
    ``xy -> yx + x``, ``xx -> 0``, ``yy -> 0``.  ``α_3`` is the first of the
    candidates ``yx + c·x + c'·y`` whose coproduct (from
    ``Δ(x) = x⊗1 + 1⊗x``, ``Δ(y) = y⊗1 + 1⊗y + x⊗x``) is the deconcatenation
    one; that is ``yx``.

    The rewriting system is not confluent: ``(xy)y`` reduces to ``x`` while
    ``x(yy)`` reduces to ``0``, so these relations force ``x = 0`` and the
    resulting table fails associativity at ``(1, 2, 2)``.
    """
    fld = field(2)
    x, y, one = {"x": 1}, {"y": 1}, {"": 1}
    alpha3 = None
    for c1, c2, c3 in product(range(2), repeat=3):
        if not c1:
            continue  # dependent on α_1, α_2
        cand = {w: 1 for w, c in (("yx", c1), ("x", c2), ("y", c3)) if c}
        target = {(w, ""): 1 for w in cand}
        target.update({("", w): 1 for w in cand})
        target.update({("y", "x"): 1, ("x", "y"): 1})
        if _nc_comult(cand) == target:
            alpha3 = cand
            break
    assert alpha3 is not None
    images = [one, x, y, alpha3]
    rows = [[_nc_coords(_nc_mul(images[a], images[b]), images) for b in range(4)]
            for a in range(4)]
    return MultTable.from_codes(fld, 4, rows, Family("nc2", 2, None))


def build_nc2() -> MultTable:
    """The verified form of :func:`nc2_candidate`.

    Raises :class:`VerificationError` because the candidate is not associative
    (no noncommutative Hopf structure on k↻_4 exists over GF(2), see
    :func:`~loophopf.hopf.enumerate_bialgebras`).
    """
    return _gated(nc2_candidate())


# ---------------------------------------------------------------------------
# relations


def generator_monomial(T: MultTable, exponents) -> LoopElement:
    """``Π_i α_{p^i}^{e_i}`` computed through the table."""
    p = T.field.p
    acc = basis(T.field, T.N, 0)
    for i, e in enumerate(exponents):
        if e and p**i >= T.N:
            raise InvalidInputError(f"α_{p ** i} is outside k↻_{T.N}")
        for _ in range(e):
            acc = multiply(T, acc, basis(T.field, T.N, p**i))
    return acc


def relation_failures(T: MultTable, params: FamilyParams) -> list[str]:
    """Every violated defining relation of ``L(n, d)``, as readable strings."""
    p, n, d = params.p, params.n, params.d
    if T.N != params.N or T.field.p != p:
        raise InvalidInputError("table does not match the parameters")
    fld, N = T.field, T.N
    gens = [basis(fld, N, p**i) for i in range(n)]
    failures = []
    for i in range(n):
        for j in range(i + 1, n):
            if multiply(T, gens[i], gens[j]) != multiply(T, gens[j], gens[i]):
                failures.append(f"generators a{p ** i} and a{p ** j} do not commute")
    for i in range(n):
        fp = frobenius(T, gens[i])
        if i < d and fp:
            failures.append(f"a{p ** i}^{p} = {fp}, expected 0")
        if i >= d and fp != basis(fld, N, p ** (i - d)):
            failures.append(f"a{p ** i}^{p} = {fp}, expected 1*a{p ** (i - d)}")
    for m in range(N):
        x = basis(fld, N, m)
        fx, vx = frobenius(T, x), verschiebung(x, d)
        if fx != vx:
            failures.append(f"F(a{m}) = {fx} but V^{d}(a{m}) = {vx}")
    return failures


def relation_suite(T: MultTable, params: FamilyParams) -> bool:
    """Generator relations plus ``F = V^d`` on every basis path."""
    return not relation_failures(T, params)


def clear_caches() -> None:
    """Forget every memoized table and formal group law."""
    for fn in (_build_Lnd, _build_graded, _build_dual_cyclic, nc2_candidate, formal_group_law):
        fn.cache_clear()
