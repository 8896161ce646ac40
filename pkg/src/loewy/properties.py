"""Modularity and distributivity, each with a checkable witness on failure."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import FiniteLattice

Triple = tuple[int, int, int]
Pentagon = tuple[int, int, int, int, int]

# Above this size the O(n^3) triple scan is replaced by the cover conditions.
TRIPLE_SCAN_LIMIT = 200


@dataclass(frozen=True)
class ModularityReport:
    is_modular: bool
    violating_triple: Triple | None = None
    pentagon: Pentagon | None = None


def modular_violation(L: FiniteLattice) -> Triple | None:
    """First ``(x, y, z)`` with ``x <= z`` and ``x v (y ^ z) != (x v y) ^ z``."""
    meet, join = L.meet_table, L.join_table
    rng = range(L.n)
    for x in rng:
        jx = join[x]
        for y in rng:
            xy = jx[y]
            my = meet[y]
            for z in rng:
                if L.leq(x, z) and jx[my[z]] != meet[xy][z]:
                    return (x, y, z)
    return None


def check_modular_triples(L: FiniteLattice) -> ModularityReport:
    triple = modular_violation(L)
    return ModularityReport(triple is None, violating_triple=triple)


def find_pentagon(L: FiniteLattice) -> Pentagon | None:
    """Return ``(z0, x, y1, y2, z1)`` spanning an N5 sublattice, or None.

    Searches pairs ``x < y2`` and a third element ``y1`` meeting both in the
    same element and joining both to the same element; such a ``y1`` is
    automatically incomparable to ``x`` and ``y2``.
    """
    meet, join = L.meet_table, L.join_table
    for x in range(L.n):
        for y1 in range(L.n):
            mx, jx = meet[x][y1], join[x][y1]
            for y2 in range(L.n):
                if L.lt(x, y2) and meet[y2][y1] == mx and join[y2][y1] == jx:
                    return (mx, x, y1, y2, jx)
    return None


def is_pentagon(L: FiniteLattice, p: Pentagon) -> bool:
    z0, x, y1, y2, z1 = p
    return (L.lt(z0, x) and L.lt(x, y2) and L.lt(y2, z1) and L.lt(z0, y1) and L.lt(y1, z1)
            and L.join(x, y1) == z1 and L.join(y2, y1) == z1
            and L.meet(x, y1) == z0 and L.meet(y2, y1) == z0)


def modularity_report(L: FiniteLattice) -> ModularityReport:
    """Run both methods; the two verdicts must agree."""
    triple = modular_violation(L)
    pentagon = find_pentagon(L)
    if (triple is None) != (pentagon is None):
        raise AssertionError(f"modularity methods disagree on {L!r}")
    return ModularityReport(triple is None, triple, pentagon)


def semimodular_violation(L: FiniteLattice, upper: bool = True) -> tuple[int, int] | None:
    """Birkhoff's covering condition.

    Upper form: if ``a`` and ``b`` both cover ``a ^ b`` then both are covered
    by ``a v b``.  The lower form is the dual statement.
    """
    if upper:
        covers_of, above, combine = L.upper_covers, L.lower_covers, L.join_table
    else:
        covers_of, above, combine = L.lower_covers, L.upper_covers, L.meet_table
    for c in range(L.n):
        for a, b in combinations(covers_of[c], 2):
            ab = combine[a][b]
            if a not in above[ab] or b not in above[ab]:
                return (a, b)
    return None


def is_modular(L: FiniteLattice) -> bool:
    """Modularity test that scales to a few thousand elements.

    Small lattices use the defining identity directly.  Larger ones use the
    fact that a lattice of finite length is modular exactly when it is both
    upper and lower semimodular.
    """
    if L.n <= TRIPLE_SCAN_LIMIT:
        return modular_violation(L) is None
    return (semimodular_violation(L, upper=True) is None
            and semimodular_violation(L, upper=False) is None)


def distributivity_violation(L: FiniteLattice) -> Triple | None:
    """First ``(x, y, z)`` with ``x ^ (y v z) != (x ^ y) v (x ^ z)``."""
    meet, join = L.meet_table, L.join_table
    rng = range(L.n)
    for x in rng:
        mx = meet[x]
        for y in rng:
            jy = join[y]
            for z in rng:
                if mx[jy[z]] != join[mx[y]][mx[z]]:
                    return (x, y, z)
    return None


def is_distributive(L: FiniteLattice) -> bool:
    return distributivity_violation(L) is None
