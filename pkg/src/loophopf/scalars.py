"""Exact scalars: the finite fields GF(p^k) and base-p binomial combinatorics.

Field elements are stored as integer *codes*: the element
``c_0 + c_1 g + ... + c_{k-1} g^{k-1}`` (``g`` a root of the modulus) has code
``c_0 + c_1 p + ... + c_{k-1} p^{k-1}``.  Elements of the prime subfield
therefore have code equal to their residue.  Heavy loops elsewhere in the
package work on codes through the bound methods of :class:`GF`
(``add``, ``mul``, ...); :class:`FieldElement` is the user-facing wrapper.
"""

from __future__ import annotations

import functools
import re
from typing import Iterator, Sequence

from .errors import IncompatibleFieldError, InvalidInputError, NotInvertibleError

__all__ = [
    "CONWAY",
    "GF",
    "FieldElement",
    "base_p_digits",
    "binom_vanishes",
    "carry_count",
    "check_prime",
    "embedding",
    "field",
    "find_root",
    "is_irreducible",
    "is_prime",
    "legendre_sum",
    "lucas_binom",
]

# Conway polynomials, coefficients listed constant term first.
CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (7, 4): (3, 4, 5, 0, 1),
}

# full addition tables are precomputed up to this field order
_ADD_TABLE_LIMIT = 729


@functools.lru_cache(maxsize=None)
@functools.lru_cache(maxsize=1024)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


_SEEN_PRIMES: set[int] = set()


def check_prime(p: int) -> int:
    if type(p) is int and p in _SEEN_PRIMES:
        return p
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        raise InvalidInputError(f"{p!r} is not a prime")
    _SEEN_PRIMES.add(p)
    return p


# ---------------------------------------------------------------------------
# base-p combinatorics


def base_p_digits(m: int, p: int) -> list[int]:
    """Little-endian base-``p`` digits of ``m``; ``[]`` for zero."""
    if m < 0:
        raise InvalidInputError("m must be non-negative")
    check_prime(p)
    digits = []
    while m:
        m, r = divmod(m, p)
        digits.append(r)
    return digits


def legendre_sum(n: int, p: int) -> int:
    """``sum_{i>=1} floor(n / p^i)``, the exponent of ``p`` in ``n!``."""
    if n < 0:
        raise InvalidInputError("n must be non-negative")
    check_prime(p)
    total = 0
    while n:
        n //= p
        total += n
    return total


def carry_count(m: int, n: int, p: int) -> int:
    """Number of carries when adding ``m`` and ``n`` in base ``p``."""
    if m < 0 or n < 0:
        raise InvalidInputError("arguments must be non-negative")
    check_prime(p)
    carries = carry = 0
    while m or n:
        carry = 1 if m % p + n % p + carry >= p else 0
        carries += carry
        m //= p
        n //= p
    return carries


@functools.lru_cache(maxsize=None)
def _small_binomials(p: int) -> tuple[tuple[int, ...], ...]:
    rows = [[1] + [0] * (p - 1)]
    for a in range(1, p):
        prev = rows[-1]
        rows.append([1] + [(prev[b - 1] + prev[b]) % p for b in range(1, p)])
    return tuple(tuple(r) for r in rows)


def lucas_binom(a: int, b: int, p: int) -> int:
    """``C(a, b) mod p`` as the product of digit binomials (Lucas)."""
    if b < 0 or b > a:
        raise InvalidInputError(f"binomial C({a}, {b}) needs 0 <= b <= a")
    check_prime(p)
    table = _small_binomials(p)
    result = 1
    while b:
        a, ai = divmod(a, p)
        b, bi = divmod(b, p)
        if bi > ai:
            return 0
        result = result * table[ai][bi] % p
    return result


def binom_vanishes(m: int, n: int, p: int) -> bool:
    """Whether ``C(m+n, n)`` is divisible by ``p``; needs ``m, n >= 1``."""
    if m < 1 or n < 1:
        raise InvalidInputError("m and n must be positive")
    check_prime(p)
    # Lucas: some digit of n exceeds the matching digit of m + n
    s = m + n
    while n:
        if n % p > s % p:
            return True
        n //= p
        s //= p
    return False


# ---------------------------------------------------------------------------
# polynomials over GF(p), coefficient lists constant term first


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_mod(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f = _trim(list(f))
    g = _trim(list(g))
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) >= len(g):
        c = f[-1] * inv_lead % p
        shift = len(f) - len(g)
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
        _trim(f)
    return f


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree ``<= deg/2``."""
    k = len(modulus) - 1
    if k < 1 or modulus[-1] % p == 0:
        return False
    for j in range(1, k // 2 + 1):
        for code in range(p**j):
            g = [(code // p**i) % p for i in range(j)] + [1]
            if not _poly_mod(modulus, g, p):
                return False
    return True


# ---------------------------------------------------------------------------
# finite fields


class GF:
    """The finite field GF(p^k) in the polynomial basis of a fixed modulus.

    Two instances compare equal when ``(p, k, modulus)`` agree.  Use
    :func:`field` rather than the constructor to share the lookup tables.
    """

    def __init__(self, p: int, k: int = 1, modulus: Sequence[int] | None = None):
        check_prime(p)
        if not isinstance(k, int) or k < 1:
            raise InvalidInputError("extension degree must be a positive integer")
        if k == 1:
            if modulus is not None and tuple(modulus) != (0, 1):
                raise InvalidInputError("prime fields take no modulus")
            modulus = (0, 1)
        elif modulus is None:
            if (p, k) not in CONWAY:
                raise InvalidInputError(
                    f"no built-in modulus for GF({p}^{k}); supply one")
            modulus = CONWAY[p, k]
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise InvalidInputError("modulus must be monic of degree k")
        if any(not 0 <= c < p for c in modulus):
            raise InvalidInputError("modulus coefficients must lie in [0, p)")
        if k > 1 and not is_irreducible(modulus, p):
            raise InvalidInputError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = modulus
        if k == 1:
            self._setup_prime()
        else:
            self._setup_extension()

    # -- construction of the arithmetic

    def _setup_prime(self) -> None:
        p = self.p
        self.add = lambda a, b: (a + b) % p
        self.sub = lambda a, b: (a - b) % p
        self.neg = lambda a: -a % p
        self.mul = lambda a, b: a * b % p

    def _setup_extension(self) -> None:
        p, k, q = self.p, self.k, self.q
        digits = [tuple((c // p**i) % p for i in range(k)) for c in range(q)]
        weights = [p**i for i in range(k)]

        def encode(coords):
            return sum(c * w for c, w in zip(coords, weights))

        self._digits = digits
        self._encode = encode

        def times_code(coords, other):
            prod = [0] * (2 * k - 1)
            for i, a in enumerate(coords):
                if a:
                    for j, b in enumerate(other):
                        prod[i + j] += a * b
            prod = _poly_mod([c % p for c in prod], self.modulus, p)
            return encode(prod + [0] * (k - len(prod)))

        exp = None
        for cand in range(2, q):
            table = [1]
            cur = 1
            for _ in range(q - 2):
                cur = times_code(digits[cur], digits[cand])
                if cur == 1:
                    break
                table.append(cur)
            if len(table) == q - 1:
                exp = table
                break
        assert exp is not None, "multiplicative group must be cyclic"
        log = [0] * q
        for i, c in enumerate(exp):
            log[c] = i
        self._exp = exp + exp
        self._log = log
        exp2 = self._exp

        if p == 2:
            add = sub = lambda a, b: a ^ b
            neg = lambda a: a
        elif q <= _ADD_TABLE_LIMIT:
            add_t = [[encode([(x + y) % p for x, y in zip(digits[a], digits[b])])
                      for b in range(q)] for a in range(q)]
            neg_t = [encode([-x % p for x in digits[a]]) for a in range(q)]
            add = lambda a, b: add_t[a][b]
            neg = lambda a: neg_t[a]
            sub = lambda a, b: add_t[a][neg_t[b]]
        else:
            def add(a, b):
                return encode([(x + y) % p for x, y in zip(digits[a], digits[b])])

            def neg(a):
                return encode([-x % p for x in digits[a]])

            def sub(a, b):
                return add(a, neg(b))

        def mul(a, b):
            if a == 0 or b == 0:
                return 0
            return exp2[log[a] + log[b]]

        self.add, self.sub, self.neg, self.mul = add, sub, neg, mul

    # -- code-level arithmetic not bound in setup

    def inv(self, a: int) -> int:
        if a == 0:
            raise NotInvertibleError("division by zero in " + repr(self))
        if self.k == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            return self.pow(self.inv(a), -e)
        if a == 0:
            return 0 if e else 1
        if self.k == 1:
            return pow(a, e, self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    def from_int(self, n: int) -> int:
        """Code of the image of the integer ``n`` in the prime subfield."""
        return n % self.p

    def coords(self, code: int) -> tuple[int, ...]:
        if self.k == 1:
            return (code,)
        return self._digits[code]

    def code(self, coords: Sequence[int]) -> int:
        if len(coords) != self.k or any(not 0 <= c < self.p for c in coords):
            raise InvalidInputError(
                f"expected {self.k} coordinates in [0, {self.p})")
        return sum(c * self.p**i for i, c in enumerate(coords))

    def codes(self) -> range:
        """All codes in scan order."""
        return range(self.q)

    # -- FieldElement front end

    def __call__(self, n: int) -> FieldElement:
        return FieldElement(self, self.from_int(n))

    def element(self, code: int) -> FieldElement:
        if not 0 <= code < self.q:
            raise InvalidInputError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    def elements(self) -> Iterator[FieldElement]:
        for c in range(self.q):
            yield FieldElement(self, c)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def gen(self) -> FieldElement:
        """The class of ``x`` modulo the modulus (``1`` for prime fields)."""
        return FieldElement(self, self.p if self.k > 1 else 1)

    def render(self, code: int) -> str:
        if self.k == 1:
            return str(code)
        terms = []
        for i, c in reversed(list(enumerate(self.coords(code)))):
            if not c:
                continue
            mono = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
            if not mono:
                terms.append(str(c))
            else:
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) if terms else "0"

    _TERM = re.compile(r"^(\d*)\*?(g(?:\^(\d+))?)?$")

    def parse(self, text: str) -> FieldElement:
        """Parse ``"3"``, ``"g"``, ``"2g^2+g+1"`` (``g`` only for extensions)."""
        text = text.replace(" ", "")
        if not text:
            raise InvalidInputError("empty field literal")
        acc = 0
        for term in text.split("+"):
            m = self._TERM.match(term)
            if not term or m is None or (not m.group(1) and not m.group(2)):
                raise InvalidInputError(f"cannot parse field literal {text!r}")
            coeff = self.from_int(int(m.group(1))) if m.group(1) else 1
            if m.group(2):
                if self.k == 1:
                    raise InvalidInputError("'g' is only defined for extension fields")
                e = int(m.group(3)) if m.group(3) else 1
                coeff = self.mul(coeff, self.pow(self.p, e))
            acc = self.add(acc, coeff)
        return FieldElement(self, acc)

    # -- identity

    def _key(self):
        return (self.p, self.k, self.modulus)

    def __eq__(self, other):
        return isinstance(other, GF) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={list(self.modulus)})"


@functools.lru_cache(maxsize=None)
def _field_cached(p: int, k: int, modulus: tuple[int, ...] | None) -> GF:
    return GF(p, k, modulus)


def field(p: int, k: int = 1, modulus: Sequence[int] | None = None) -> GF:
    """Shared :class:`GF` instance (tables are built once per descriptor)."""
    return _field_cached(p, k, None if modulus is None else tuple(modulus))


class FieldElement:
    """Immutable element of a :class:`GF`."""

    __slots__ = ("field", "code")

    def __init__(self, fld: GF, code: int):
        self.field = fld
        self.code = code

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise IncompatibleFieldError(
                    f"operands over {self.field!r} and {other.field!r}")
            return other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return FieldElement(self.field, self.field.add(self.code, c))

    __radd__ = __add__

    def __sub__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return FieldElement(self.field, self.field.sub(self.code, c))

    def __rsub__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return FieldElement(self.field, self.field.sub(c, self.code))

    def __mul__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return FieldElement(self.field, self.field.mul(self.code, c))

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return FieldElement(self.field, self.field.div(self.code, c))

    def __rtruediv__(self, other):
        c = self._other(other)
        if c is NotImplemented:
            return c
        return FieldElement(self.field, self.field.div(c, self.code))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.code))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.code == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.code))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        if self.field.k != 1:
            raise TypeError("only prime-field elements convert to int")
        return self.code

    @property
    def coords(self) -> tuple[int, ...]:
        return self.field.coords(self.code)

    def __str__(self):
        return self.field.render(self.code)

    def __repr__(self):
        return f"FieldElement({self.field!r}, {self})"


def find_root(poly: Sequence[FieldElement], *, exclude_zero: bool = False) -> FieldElement | None:
    """Smallest root (in code order) of ``sum poly[i] x^i``, or ``None``.

    The scan is exhaustive over the field of the coefficients; ``None`` means
    the polynomial has no root there and a larger field is needed.
    """
    if not poly:
        raise InvalidInputError("zero polynomial has no well-defined root")
    fld = poly[0].field
    coeffs = []
    for c in poly:
        if c.field != fld:
            raise IncompatibleFieldError("coefficients over different fields")
        coeffs.append(c.code)
    if not any(coeffs):
        raise InvalidInputError("zero polynomial has no well-defined root")
    add, mul = fld.add, fld.mul
    for x in fld.codes():
        if exclude_zero and x == 0:
            continue
        acc = 0
        for c in reversed(coeffs):
            acc = add(mul(acc, x), c)
        if acc == 0:
            return FieldElement(fld, x)
    return None


def embedding(small: GF, big: GF) -> list[int]:
    """Codes of the images of every element of ``small`` under a field embedding into ``big``.

    The generator of ``small`` is sent to the smallest root of its modulus in
    ``big``.  Requires equal characteristic and ``small.k | big.k``.
    """
    if small.p != big.p or big.k % small.k:
        raise IncompatibleFieldError(f"{small!r} does not embed in {big!r}")
    if small.k == 1:
        return list(range(small.q))
    root = find_root([big(c) for c in small.modulus])
    assert root is not None, "a degree-k irreducible splits in GF(p^(mk))"
    powers = [big.one]
    for _ in range(1, small.k):
        powers.append(powers[-1] * root)
    out = []
    for code in small.codes():
        acc = big.zero
        for c, g in zip(small.coords(code), powers):
            acc = acc + g * c
        out.append(acc.code)
    return out
