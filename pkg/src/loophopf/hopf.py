"""Candidate Hopf structures on k↻_N given by structure constants.

A :class:`MultTable` stores ``α_a · α_b`` for every pair of paths.  The
coalgebra structure is always the path one, so a table is a Hopf algebra
exactly when the product is associative and unital, ``Δ`` and ``ε`` are
multiplicative, and an antipode exists.  Every axiom is multilinear, so it
is checked on basis tuples only; a failure is reported with the
lexicographically smallest failing tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Callable, Sequence

from . import linalg
from .endo import LambdaSeq, matrix_codes
from .endo import invert as invert_endo
from .errors import (
    ClassificationError,
    ExtensionRequiredError,
    InvalidInputError,
    NotHopfError,
)
from .loop_coalgebra import LoopElement, basis
from .scalars import CONWAY, GF, FieldElement, embedding, field, find_root

__all__ = [
    "AXIOMS",
    "HOPF_AXIOMS",
    "AxiomStatus",
    "Classification",
    "Family",
    "HopfReport",
    "IntegralData",
    "MultTable",
    "NormalizedTable",
    "antipode",
    "antipode_images",
    "classify",
    "conjugate",
    "embed_table",
    "enumerate_bialgebras",
    "enumerate_dim_p_bialgebras",
    "frobenius",
    "integral",
    "is_commutative",
    "is_local",
    "is_semisimple",
    "multiply",
    "normalize_dim_p",
    "p_power_exponent",
    "verify",
    "verify_bialgebra",
    "verify_uniserial",
]

AXIOMS = (
    "associativity",
    "unit",
    "delta-multiplicative",
    "epsilon-multiplicative",
    "antipode-left",
    "antipode-right",
    "commutative",
    "uniserial",
)
HOPF_AXIOMS = AXIOMS[:6]


@dataclass(frozen=True)
class Family:
    """Provenance tag of a constructed table."""

    name: str
    n: int
    d: int | None = None


@dataclass(frozen=True, eq=False)
class MultTable:
    """Structure constants ``entries[a][b] = α_a · α_b`` on k↻_N."""

    field: GF
    N: int
    entries: tuple[tuple[LoopElement, ...], ...]
    family: Family | None = None
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if len(self.entries) != self.N or any(len(row) != self.N for row in self.entries):
            raise InvalidInputError("table must be N x N")
        for row in self.entries:
            for e in row:
                if not isinstance(e, LoopElement) or e.field != self.field or e.N != self.N:
                    raise InvalidInputError("table entries must be LoopElements of k↻_N over the table's field")

    @classmethod
    def from_codes(cls, fld: GF, N: int, rows: Sequence[Sequence[dict[int, int]]],
                   family: Family | None = None) -> MultTable:
        """Trusted constructor from nonzero-code dictionaries."""
        entries = tuple(tuple(LoopElement._raw(fld, N, dict(cell)) for cell in row) for row in rows)
        return cls(fld, N, entries, family)

    @classmethod
    def from_function(cls, fld: GF, N: int, fn: Callable[[int, int], LoopElement],
                      family: Family | None = None) -> MultTable:
        return cls(fld, N, tuple(tuple(fn(a, b) for b in range(N)) for a in range(N)), family)

    @property
    def raw(self) -> list[list[dict[int, int]]]:
        rows = self._cache.get("raw")
        if rows is None:
            rows = [[e.coeffs for e in row] for row in self.entries]
            self._cache["raw"] = rows
        return rows

    def entry(self, a: int, b: int) -> LoopElement:
        return self.entries[a][b]

    def with_family(self, family: Family | None) -> MultTable:
        return MultTable(self.field, self.N, self.entries, family)

    def __eq__(self, other):
        if not isinstance(other, MultTable):
            return NotImplemented
        return (self.field == other.field and self.N == other.N
                and self.entries == other.entries)

    def __hash__(self):
        return hash((self.field, self.N, self.entries))


# ---------------------------------------------------------------------------
# products on codes


def _mul_codes(T: MultTable, x: dict[int, int], y: dict[int, int]) -> dict[int, int]:
    add, mul = T.field.add, T.field.mul
    E = T.raw
    out: dict[int, int] = {}
    for a, u in x.items():
        row = E[a]
        for b, v in y.items():
            uv = mul(u, v)
            for m, w in row[b].items():
                out[m] = add(out.get(m, 0), mul(uv, w))
    return {m: c for m, c in out.items() if c}


def _acc(add, mul, out: dict, src: dict, scale: int) -> None:
    for key, c in src.items():
        out[key] = add(out.get(key, 0), mul(scale, c))


def _strip(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def multiply(T: MultTable, x: LoopElement, y: LoopElement) -> LoopElement:
    """Bilinear extension of the table."""
    for z in (x, y):
        if z.field != T.field or z.N != T.N:
            raise InvalidInputError("element and table live over different fields or bounds")
    return LoopElement._raw(T.field, T.N, _mul_codes(T, x.coeffs, y.coeffs))


def _power(T: MultTable, x: dict[int, int], e: int) -> dict[int, int]:
    result = {0: 1}
    for _ in range(e):
        result = _mul_codes(T, result, x)
    return result


def frobenius(T: MultTable, x: LoopElement) -> LoopElement:
    """``x^p`` computed through the table."""
    return LoopElement._raw(T.field, T.N, _power(T, x.coeffs, T.field.p))


# ---------------------------------------------------------------------------
# the verifier


@dataclass(frozen=True)
class AxiomStatus:
    """``passed`` is ``None`` when the axiom does not apply to the table."""

    passed: bool | None
    counterexample: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.passed is False and self.counterexample is None:
            raise ValueError("a failed axiom must carry a counterexample")

    def render(self) -> str:
        if self.passed is None:
            return "N/A"
        if self.passed:
            return "PASS"
        return "FAIL at (" + ",".join(map(str, self.counterexample)) + ")"


_PASS = AxiomStatus(True)


def _check_associativity(T: MultTable) -> AxiomStatus:
    add, mul = T.field.add, T.field.mul
    E = T.raw
    N = T.N
    for a in range(N):
        Ea = E[a]
        for b in range(N):
            ab = Ea[b]
            Eb = E[b]
            for c in range(N):
                lhs: dict[int, int] = {}
                for m, u in ab.items():
                    _acc(add, mul, lhs, E[m][c], u)
                rhs: dict[int, int] = {}
                for m, u in Eb[c].items():
                    _acc(add, mul, rhs, Ea[m], u)
                if _strip(lhs) != _strip(rhs):
                    return AxiomStatus(False, (a, b, c))
    return _PASS


def _check_unit(T: MultTable) -> AxiomStatus:
    E = T.raw
    for a in range(T.N):
        for b in range(T.N):
            if a and b:
                continue
            if (a == 0 and E[0][b] != {b: 1}) or (b == 0 and E[a][0] != {a: 1}):
                return AxiomStatus(False, (a, b))
    return _PASS


def _comult_codes(fld: GF, x: dict[int, int]) -> dict[tuple[int, int], int]:
    add = fld.add
    out: dict[tuple[int, int], int] = {}
    for n, c in x.items():
        for i in range(n + 1):
            out[i, n - i] = add(out.get((i, n - i), 0), c)
    return out


def _check_comult(T: MultTable) -> AxiomStatus:
    fld = T.field
    add, mul = fld.add, fld.mul
    E = T.raw
    N = T.N
    for a in range(N):
        for b in range(N):
            rhs: dict[tuple[int, int], int] = {}
            for i in range(a + 1):
                Ei, Eai = E[i], E[a - i]
                for j in range(b + 1):
                    left = Ei[j]
                    if not left:
                        continue
                    right = Eai[b - j]
                    for m1, w1 in left.items():
                        for m2, w2 in right.items():
                            key = (m1, m2)
                            rhs[key] = add(rhs.get(key, 0), mul(w1, w2))
            if _strip(_comult_codes(fld, E[a][b])) != _strip(rhs):
                return AxiomStatus(False, (a, b))
    return _PASS


def _check_counit(T: MultTable) -> AxiomStatus:
    E = T.raw
    for a in range(T.N):
        for b in range(T.N):
            expected = 1 if a == 0 and b == 0 else 0
            if E[a][b].get(0, 0) != expected:
                return AxiomStatus(False, (a, b))
    return _PASS


def _antipode_codes(T: MultTable) -> list[dict[int, int]]:
    # S(α_m) = -α_m - Σ_{0<l<m} S(α_l)·α_{m-l}
    cached = T._cache.get("antipode")
    if cached is not None:
        return cached
    fld = T.field
    add, mul, neg = fld.add, fld.mul, fld.neg
    E = T.raw
    S: list[dict[int, int]] = [{0: 1}]
    for m in range(1, T.N):
        acc: dict[int, int] = {m: 1}
        for l in range(1, m):
            for u, c in S[l].items():
                _acc(add, mul, acc, E[u][m - l], c)
        S.append({k: neg(v) for k, v in acc.items() if v})
    T._cache["antipode"] = S
    return S


def _check_antipode(T: MultTable, side: str) -> AxiomStatus:
    fld = T.field
    add, mul = fld.add, fld.mul
    E = T.raw
    S = _antipode_codes(T)
    for m in range(T.N):
        acc: dict[int, int] = {}
        for i in range(m + 1):
            if side == "left":
                for u, c in S[i].items():
                    _acc(add, mul, acc, E[u][m - i], c)
            else:
                for u, c in S[m - i].items():
                    _acc(add, mul, acc, E[i][u], c)
        if _strip(acc) != ({0: 1} if m == 0 else {}):
            return AxiomStatus(False, (m,))
    return _PASS


def _check_commutative(T: MultTable) -> AxiomStatus:
    E = T.raw
    for a in range(T.N):
        for b in range(T.N):
            if E[a][b] != E[b][a]:
                return AxiomStatus(False, (a, b))
    return _PASS


def p_power_exponent(N: int, p: int) -> int | None:
    """``n`` with ``N = p^n``, or ``None``."""
    n = 0
    while N % p == 0:
        N //= p
        n += 1
    return n if N == 1 else None


def verify_uniserial(T: MultTable) -> tuple[bool, tuple[int, int] | None]:
    """Whether every truncation k↻_{p^i} is closed under the product.

    Returns ``(ok, witness)`` with the smallest pair ``(a, b)`` whose product
    leaves the smallest truncation containing both factors.
    """
    p = T.field.p
    if p_power_exponent(T.N, p) is None:
        raise InvalidInputError(f"N = {T.N} is not a power of p = {p}")
    E = T.raw
    for a in range(T.N):
        for b in range(T.N):
            bound = 1
            while bound <= max(a, b):
                bound *= p
            if any(m >= bound for m in E[a][b]):
                return False, (a, b)
    return True, None


def _check_uniserial(T: MultTable) -> AxiomStatus:
    if p_power_exponent(T.N, T.field.p) is None:
        return AxiomStatus(None)
    ok, witness = verify_uniserial(T)
    return _PASS if ok else AxiomStatus(False, witness)


def verify_bialgebra(T: MultTable) -> dict[str, AxiomStatus]:
    """Associativity, unit, and multiplicativity of ``Δ`` and ``ε``."""
    cached = T._cache.get("bialgebra")
    if cached is None:
        cached = {
            "associativity": _check_associativity(T),
            "unit": _check_unit(T),
            "delta-multiplicative": _check_comult(T),
            "epsilon-multiplicative": _check_counit(T),
        }
        T._cache["bialgebra"] = cached
    return dict(cached)


def is_commutative(T: MultTable) -> bool:
    return bool(_check_commutative(T).passed)


@dataclass
class HopfReport:
    """Per-axiom verdicts plus derived flags for one table."""

    axioms: dict[str, AxiomStatus]
    semisimple: bool | None = None
    local: bool | None = None
    classification: str | None = None

    @property
    def is_bialgebra(self) -> bool:
        return all(self.axioms[a].passed for a in HOPF_AXIOMS[:4])

    @property
    def is_hopf(self) -> bool:
        return all(self.axioms[a].passed for a in HOPF_AXIOMS)

    @property
    def all_pass(self) -> bool:
        return all(s.passed is not False for s in self.axioms.values()) and self.is_hopf

    def first_failure(self) -> tuple[str, AxiomStatus] | None:
        for name in HOPF_AXIOMS:
            if not self.axioms[name].passed:
                return name, self.axioms[name]
        return None

    def render(self) -> str:
        width = max(map(len, AXIOMS))
        lines = [f"{name:<{width}}  {self.axioms[name].render()}" for name in AXIOMS]

        def flag(v):
            return "n/a" if v is None else ("yes" if v else "no")

        lines.append(f"{'semisimple':<{width}}  {flag(self.semisimple)}")
        lines.append(f"{'local':<{width}}  {flag(self.local)}")
        lines.append(f"{'classification':<{width}}  {self.classification or 'n/a'}")
        return "\n".join(lines)


def verify(T: MultTable) -> HopfReport:
    """Full report: every axiom, then semisimplicity, locality and the class."""
    cached = T._cache.get("report")
    if cached is not None:
        return cached
    axioms = verify_bialgebra(T)
    axioms["antipode-left"] = _check_antipode(T, "left")
    axioms["antipode-right"] = _check_antipode(T, "right")
    axioms["commutative"] = _check_commutative(T)
    axioms["uniserial"] = _check_uniserial(T)
    report = HopfReport({name: axioms[name] for name in AXIOMS})
    if report.is_hopf:
        report.semisimple = is_semisimple(T)
        report.local = is_local(T)
        if not axioms["commutative"].passed:
            report.classification = "non-commutative"
        else:
            try:
                report.classification = str(_classify(T, report))
            except ClassificationError as exc:
                report.classification = f"unclassified: {exc}"
    T._cache["report"] = report
    return report


# ---------------------------------------------------------------------------
# antipode, integrals, local/semisimple


def antipode_images(T: MultTable) -> list[LoopElement]:
    """``[S(α_0), ..., S(α_{N-1})]``; raises :class:`NotHopfError` if not two-sided."""
    for side in ("left", "right"):
        status = _check_antipode(T, side)
        if not status.passed:
            raise NotHopfError(f"antipode-{side} fails at {status.counterexample}")
    return [LoopElement._raw(T.field, T.N, dict(s)) for s in _antipode_codes(T)]


def antipode(T: MultTable) -> list[list[FieldElement]]:
    """Matrix of the antipode; column ``m`` is ``S(α_m)``."""
    images = antipode_images(T)
    return [[images[m][r] for m in range(T.N)] for r in range(T.N)]


@dataclass
class IntegralData:
    """The candidate integral ``t = Π_{0<l<N} (α_0 - α_l^{p-1})`` and the solved space."""

    t: LoopElement | None
    eps_t: FieldElement | None
    t_is_integral: bool | None
    dimension: int
    basis: list[LoopElement]

    @property
    def has_nonzero_counit(self) -> bool:
        return any(b[0] for b in self.basis)


def _is_left_integral(T: MultTable, x: dict[int, int]) -> bool:
    return all(not _mul_codes(T, {a: 1}, x) for a in range(1, T.N))


def integral_space(T: MultTable) -> list[LoopElement]:
    """Basis of ``{x : α_a x = ε(α_a) x for all a}`` (left integrals)."""
    cached = T._cache.get("integrals")
    if cached is not None:
        return cached
    fld, N, E = T.field, T.N, T.raw
    rows = []
    for a in range(1, N):
        for n in range(N):
            row = [E[a][m].get(n, 0) for m in range(N)]
            if any(row):
                rows.append(row)
    space = [LoopElement._raw(fld, N, {m: c for m, c in enumerate(v) if c})
             for v in linalg.nullspace(fld, rows, N)]
    T._cache["integrals"] = space
    return space


def integral(T: MultTable) -> IntegralData:
    space = integral_space(T)
    t = eps = t_ok = None
    if is_commutative(T):
        fld = T.field
        p = fld.p
        acc = {0: 1}
        for l in range(1, T.N):
            power = _power(T, {l: 1}, p - 1)
            factor = {0: 1}
            for m, c in power.items():
                factor[m] = fld.sub(factor.get(m, 0), c)
            acc = _mul_codes(T, acc, _strip(factor))
        t = LoopElement._raw(fld, T.N, acc)
        eps = t[0]
        t_ok = _is_left_integral(T, acc)
    return IntegralData(t, eps, t_ok, len(space), space)


def is_semisimple(T: MultTable) -> bool:
    """Whether some integral has nonzero counit."""
    return any(b[0] for b in integral_space(T))


def is_local(T: MultTable) -> bool:
    """Whether every ``α_m`` with ``m >= 1`` is nilpotent."""
    p = T.field.p
    for m in range(1, T.N):
        x = {m: 1}
        seen = set()
        for _ in range(T.N):
            x = _power(T, x, p)
            if not x:
                break
            key = tuple(sorted(x.items()))
            if key in seen:
                return False
            seen.add(key)
        else:
            return False
    return True


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    n: int
    d: int
    frobenius_rank: int

    def __str__(self):
        return f"L({self.n},{self.d})"


def _classify(T: MultTable, report: HopfReport) -> Classification:
    p = T.field.p
    n = p_power_exponent(T.N, p)
    if n is None:
        raise ClassificationError(f"dimension {T.N} is not a power of p = {p}")
    images = [[frobenius(T, basis(T.field, T.N, m))[r].code for r in range(T.N)]
              for m in range(T.N)]
    r = linalg.rank(T.field, images)
    j = p_power_exponent(r, p)
    if j is None or j > n:
        raise ClassificationError(f"Frobenius image has rank {r}, not a power of {p}")
    d = n - j
    if (d == 0) != bool(report.semisimple):
        raise ClassificationError("Frobenius rank disagrees with semisimplicity")
    return Classification(n, d, r)


def classify(T: MultTable) -> Classification:
    """The unique ``d`` with ``T ≅ L(n, d)``, from the rank of the Frobenius image."""
    report = verify(T)
    if not report.is_hopf:
        name, status = report.first_failure()
        raise ClassificationError(f"not a Hopf algebra: {name} {status.render()}")
    if not report.axioms["commutative"].passed:
        raise ClassificationError("non-commutative")
    return _classify(T, report)


# ---------------------------------------------------------------------------
# base change


def conjugate(T: MultTable, f: LambdaSeq) -> MultTable:
    """The table of the same product in the basis ``β_m = f(α_m)``."""
    if f.field != T.field:
        raise InvalidInputError("automorphism and table over different fields")
    fld, N = T.field, T.N
    M = matrix_codes(f, N)
    Minv = matrix_codes(invert_endo(f, N), N)
    images = [{r: M[r][m] for r in range(N) if M[r][m]} for m in range(N)]
    add, mul = fld.add, fld.mul
    rows = []
    for a in range(N):
        row = []
        for b in range(N):
            prod = _mul_codes(T, images[a], images[b])
            out: dict[int, int] = {}
            for m, c in prod.items():
                for r in range(m + 1):
                    if Minv[r][m]:
                        out[r] = add(out.get(r, 0), mul(Minv[r][m], c))
            row.append(_strip(out))
        rows.append(row)
    return MultTable.from_codes(fld, N, rows, T.family)


def embed_table(T: MultTable, big: GF) -> MultTable:
    """The same structure constants read in an extension field."""
    emb = embedding(T.field, big)
    rows = [[{m: emb[c] for m, c in cell.items()} for cell in row] for row in T.raw]
    return MultTable.from_codes(big, T.N, rows, T.family)


@dataclass(frozen=True)
class NormalizedTable:
    """Result of :func:`normalize_dim_p`: ``α_1^p = tag·α_1`` in ``table``."""

    table: MultTable
    tag: int
    extension_degree: int
    scale: FieldElement | None


def _root_extension_degree(fld: GF, lam: int) -> int:
    # smallest j with λ^{-1} a (p-1)-th power in GF(q^j)
    p, q = fld.p, fld.q
    mu = fld.inv(lam)
    j = 1
    while True:
        e = ((q**j - 1) // (p - 1)) % (q - 1)
        if fld.pow(mu, e) == 1:
            return j
        j += 1


def normalize_dim_p(T: MultTable) -> NormalizedTable:
    """Rescale ``α_1`` so that ``α_1^p`` becomes ``0`` or ``α_1``.

    For a bialgebra on k↻_p, ``α_1^p = λ α_1``.  When ``λ ∉ {0, 1}`` the
    rescaling factor solves ``λ x^{p-1} = 1``; if no solution exists in the
    table's field the table is lifted to the smallest extension that has one
    (``extension_degree`` > 1), or :class:`ExtensionRequiredError` is raised
    when no built-in modulus covers that extension.
    """
    fld, p = T.field, T.field.p
    if T.N != p:
        raise InvalidInputError(f"normalization applies to k↻_p only (N = {T.N}, p = {p})")
    if not verify(T).is_bialgebra:
        raise InvalidInputError("table is not a bialgebra")
    y = frobenius(T, basis(fld, T.N, 1))
    if set(y.coeffs) - {1}:
        raise InvalidInputError("α_1^p is not a multiple of α_1")
    lam = y.coeffs.get(1, 0)
    if lam in (0, 1):
        return NormalizedTable(T, lam, 1, None)
    j = _root_extension_degree(fld, lam)
    work, lam_code = T, lam
    if j > 1:
        k = fld.k * j
        if (p, k) not in CONWAY:
            raise ExtensionRequiredError(
                f"a root of λx^{p - 1} = 1 needs GF({p}^{k}), which has no built-in modulus", j)
        big = field(p, k)
        lam_code = embedding(fld, big)[lam]
        work = embed_table(T, big)
    wf = work.field
    poly = [wf.element(wf.neg(1))] + [wf.zero] * (p - 2) + [wf.element(lam_code)]
    root = find_root(poly, exclude_zero=True)
    assert root is not None
    out = conjugate(work, LambdaSeq(wf, (root,)))
    return NormalizedTable(out, 1, j, root)


# ---------------------------------------------------------------------------
# exhaustive search on k↻_p


def enumerate_bialgebras(fld: GF, N: int, limit: int = 10**7) -> list[MultTable]:
    """Every bialgebra structure on k↻_N over ``fld``.

    Entries ``α_a·α_b`` with ``a, b >= 1`` range over the augmentation
    ideal (``ε``-multiplicativity) and are fixed in lexicographic order, each
    one checked for ``Δ``-multiplicativity as soon as it is placed;
    associativity is checked on the complete tables.
    """
    q = fld.q
    per_cell = q ** (N - 1)
    if N > 1 and per_cell * (N - 1) ** 2 > limit:
        raise InvalidInputError("search space too large")
    add, mul = fld.add, fld.mul
    cells = [(a, b) for a in range(1, N) for b in range(1, N)]
    candidates = [{m: c for m, c in enumerate(codes, start=1) if c}
                  for codes in product(range(q), repeat=N - 1)]
    E: list[list[dict[int, int] | None]] = [[None] * N for _ in range(N)]
    for m in range(N):
        E[0][m] = {m: 1}
        E[m][0] = {m: 1}

    def comult_ok(a: int, b: int) -> bool:
        rhs: dict[tuple[int, int], int] = {}
        for i in range(a + 1):
            for j in range(b + 1):
                for m1, w1 in E[i][j].items():
                    for m2, w2 in E[a - i][b - j].items():
                        rhs[m1, m2] = add(rhs.get((m1, m2), 0), mul(w1, w2))
        return _strip(_comult_codes(fld, E[a][b])) == _strip(rhs)

    found: list[MultTable] = []

    def place(idx: int) -> None:
        if idx == len(cells):
            T = MultTable.from_codes(fld, N, [[dict(c) for c in row] for row in E])
            if verify_bialgebra(T)["associativity"].passed:
                found.append(T)
            return
        a, b = cells[idx]
        for cand in candidates:
            E[a][b] = cand
            if comult_ok(a, b):
                place(idx + 1)
        E[a][b] = None

    place(0)
    return found


def enumerate_dim_p_bialgebras(fld: GF) -> list[MultTable]:
    """Every bialgebra structure on k↻_p, ``p`` the characteristic of ``fld``."""
    return enumerate_bialgebras(fld, fld.p)
