"""Hopf quivers of finite groups and thin splits at the loop.

A group is given by its Cayley table on indices ``0..g-1``.  The Hopf quiver
``Q(G, r)`` has, for every vertex ``x``, every conjugacy class ``C`` and every
``c ∈ C``, ``r_C`` arrows ``x -> c·x``.

Thin splits of length ``m + n`` with ``m`` ones index the terms of the path
product on a Hopf quiver; on the loop with trivial actions each contributes
the single path ``α_{m+n}``, so their count mod p is the loop product
coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Mapping

from .errors import InvalidInputError
from .scalars import check_prime

__all__ = [
    "GroupTable",
    "Quiver",
    "build_hopf_quiver",
    "conjugacy_classes",
    "cyclic_group",
    "symmetric_group",
    "thin_split_count",
    "thin_split_product_loop",
    "thin_splits",
    "trivial_group",
]


@dataclass(frozen=True)
class GroupTable:
    """Finite group as a Cayley table ``table[a][b] = a·b``; validated on construction."""

    table: tuple[tuple[int, ...], ...]
    identity: int = 0

    def __post_init__(self):
        table = tuple(tuple(int(x) for x in row) for row in self.table)
        object.__setattr__(self, "table", table)
        g = len(table)
        if g == 0:
            raise InvalidInputError("a group has at least one element")
        if any(len(row) != g or any(not 0 <= x < g for x in row) for row in table):
            raise InvalidInputError("Cayley table must be g x g with entries in [0, g)")
        e = self.identity
        if not 0 <= e < g or any(table[e][a] != a or table[a][e] != a for a in range(g)):
            raise InvalidInputError("identity index does not act as identity")
        for a in range(g):
            if not any(table[a][b] == e for b in range(g)):
                raise InvalidInputError(f"element {a} has no inverse")
        for a in range(g):
            for b in range(g):
                ab = table[a][b]
                for c in range(g):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise InvalidInputError(f"not associative at ({a},{b},{c})")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return next(b for b in range(self.order) if self.table[a][b] == self.identity)


def trivial_group() -> GroupTable:
    return GroupTable(((0,),))


def cyclic_group(n: int) -> GroupTable:
    if n < 1:
        raise InvalidInputError("order must be positive")
    return GroupTable(tuple(tuple((a + b) % n for b in range(n)) for a in range(n)))


def symmetric_group(n: int) -> GroupTable:
    """``S_n`` on its permutations in lexicographic order; ``(a·b)(i) = a(b(i))``."""
    if n < 1:
        raise InvalidInputError("degree must be positive")
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = tuple(tuple(index[tuple(a[b[i]] for i in range(n))] for b in perms) for a in perms)
    return GroupTable(table, index[tuple(range(n))])


def conjugacy_classes(G: GroupTable) -> list[tuple[int, ...]]:
    """Classes as sorted tuples, ordered by their smallest element."""
    seen: set[int] = set()
    classes = []
    for x in range(G.order):
        if x in seen:
            continue
        cls = sorted({G.mul(G.mul(g, x), G.inverse(g)) for g in range(G.order)})
        seen.update(cls)
        classes.append(tuple(cls))
    return classes


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[int, ...]
    arrows: tuple[tuple[int, int, int], ...]  # (source, target, multiplicity), sorted

    def arrow_count(self) -> int:
        return sum(k for _, _, k in self.arrows)

    def render(self) -> str:
        return "\n".join(f"{v} -> {w} (x{k})" for v, w, k in self.arrows)


def build_hopf_quiver(G: GroupTable, r: Mapping[int, int]) -> Quiver:
    """``Q(G, r)`` for ramification data keyed by class representatives (smallest element)."""
    reps = {cls[0]: cls for cls in conjugacy_classes(G)}
    counts: dict[tuple[int, int], int] = {}
    for rep, mult in r.items():
        if rep not in reps:
            raise InvalidInputError(f"{rep} is not a conjugacy class representative")
        if not isinstance(mult, int) or mult < 0:
            raise InvalidInputError("ramification multiplicities must be non-negative integers")
        if not mult:
            continue
        for x in range(G.order):
            for c in reps[rep]:
                key = (x, G.mul(c, x))
                counts[key] = counts.get(key, 0) + mult
    arrows = tuple(sorted((v, w, k) for (v, w), k in counts.items()))
    return Quiver(tuple(range(G.order)), arrows)


def thin_splits(m: int, n: int) -> Iterator[tuple[int, ...]]:
    """All 0/1 sequences of length ``m + n`` with ``m`` ones, in lexicographic order."""
    if m < 0 or n < 0:
        raise InvalidInputError("m and n must be non-negative")
    if m == 0 and n == 0:
        yield ()
        return
    if n:
        for rest in thin_splits(m, n - 1):
            yield (0,) + rest
    if m:
        for rest in thin_splits(m - 1, n):
            yield (1,) + rest


def thin_split_count(m: int, n: int) -> int:
    return sum(1 for _ in thin_splits(m, n))


def thin_split_product_loop(a: int, b: int, p: int) -> int:
    """Coefficient of ``α_{a+b}`` in ``α_a · α_b`` on the loop, summed over thin splits mod p."""
    check_prime(p)
    total = 0
    for _ in thin_splits(a, b):
        total += 1
    return total % p
