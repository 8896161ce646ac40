"""Finite bounded lattices stored as full meet/join tables.

Elements are the dense ids ``0..n-1``.  The order relation is kept as two
lists of bitmasks (``down[x]`` has bit ``y`` set iff ``y <= x``), and
meet/join are precomputed tables, so every query downstream is a lookup.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence


class LatticeError(ValueError):
    """Base class for construction and query errors."""

    code = "lattice"


class NotAPoset(LatticeError):
    code = "not-a-poset"

    def __init__(self, message: str, element: int | None = None):
        self.element = element
        super().__init__(message)


class NotBounded(LatticeError):
    code = "not-bounded"


class NotALattice(LatticeError):
    code = "not-a-lattice"

    def __init__(self, pair: tuple[int, int], operation: str):
        self.pair = pair
        self.operation = operation
        super().__init__(f"elements {pair[0]} and {pair[1]} have no unique {operation}")


class NotComparable(LatticeError):
    code = "not-comparable"


class SizeLimit(LatticeError):
    code = "size-limit"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """Immutable finite bounded lattice.

    Use :func:`build_from_covers` (or one of the generators in
    :mod:`loewy.instances`) rather than calling the constructor directly;
    the constructor trusts its inputs.
    """

    __slots__ = ("n", "down", "up", "meet_table", "join_table",
                 "bottom", "top", "labels", "__dict__")

    def __init__(self, down, up, meet_table, join_table, bottom, top, labels=None):
        self.n = len(down)
        self.down = tuple(down)
        self.up = tuple(up)
        self.meet_table = meet_table
        self.join_table = join_table
        self.bottom = bottom
        self.top = top
        if labels is None:
            labels = tuple(str(i) for i in range(self.n))
        self.labels = tuple(labels)

    # order and operations

    def leq(self, x: int, y: int) -> bool:
        return bool((self.down[y] >> x) & 1)

    def lt(self, x: int, y: int) -> bool:
        return x != y and bool((self.down[y] >> x) & 1)

    def comparable(self, x: int, y: int) -> bool:
        return self.leq(x, y) or self.leq(y, x)

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    @property
    def elements(self) -> range:
        return range(self.n)

    def label(self, x: int) -> str:
        return self.labels[x]

    def index(self, label: str) -> int:
        return self.labels.index(label)

    # covers

    @cached_property
    def upper_covers(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for x in range(self.n):
            strict = self.up[x] & ~(1 << x)
            out.append(tuple(y for y in _bits(strict)
                             if self.down[y] & strict == 1 << y))
        return tuple(out)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        out = []
        for x in range(self.n):
            strict = self.down[x] & ~(1 << x)
            out.append(tuple(y for y in _bits(strict)
                             if self.up[y] & strict == 1 << y))
        return tuple(out)

    def covers(self) -> list[tuple[int, int]]:
        """All cover pairs ``(lower, upper)`` in lexicographic order."""
        return sorted((x, y) for x in range(self.n) for y in self.upper_covers[x])

    @cached_property
    def topological_order(self) -> tuple[int, ...]:
        return tuple(sorted(range(self.n), key=lambda x: (self.down[x].bit_count(), x)))

    @cached_property
    def height(self) -> tuple[int, ...]:
        """Length of the longest chain from bottom to each element."""
        h = [0] * self.n
        for x in self.topological_order:
            h[x] = max((h[c] + 1 for c in self.lower_covers[x]), default=0)
        return tuple(h)

    @cached_property
    def depth(self) -> tuple[int, ...]:
        """Length of the longest chain from each element to top."""
        d = [0] * self.n
        for x in reversed(self.topological_order):
            d[x] = max((d[c] + 1 for c in self.upper_covers[x]), default=0)
        return tuple(d)

    # identity

    def _key(self):
        return (self.n, self.bottom, self.top, self.down)

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        pairs = " ".join(f"{self.labels[a]}<{self.labels[b]}" for a, b in self.covers())
        return f"FiniteLattice(n={self.n}, covers=[{pairs}])"


def _transpose(down: Sequence[int]) -> list[int]:
    n = len(down)
    up = [0] * n
    for y in range(n):
        for x in _bits(down[y]):
            up[x] |= 1 << y
    return up


def from_downsets(down: Sequence[int], labels=None) -> FiniteLattice:
    """Validate a partial order given by down-set bitmasks and fill the tables.

    ``down[x]`` must contain ``x`` itself.  The relation is assumed to be a
    partial order; callers coming from raw covers use :func:`build_from_covers`.
    """
    n = len(down)
    if n == 0:
        raise NotBounded("a lattice needs at least one element")
    full = (1 << n) - 1
    up = _transpose(down)
    bottoms = [x for x in range(n) if up[x] == full]
    tops = [x for x in range(n) if down[x] == full]
    if len(bottoms) != 1:
        raise NotBounded("no unique minimum element")
    if len(tops) != 1:
        raise NotBounded("no unique maximum element")

    # In a linear extension the greatest common lower bound, if it exists, is
    # the highest-ranked element of the intersection of down-sets.
    order = sorted(range(n), key=lambda x: (down[x].bit_count(), x))
    pos = [0] * n
    for p, x in enumerate(order):
        pos[x] = p
    dpos = [0] * n
    upos = [0] * n
    for x in range(n):
        dpos[pos[x]] = sum(1 << pos[y] for y in _bits(down[x]))
        upos[pos[x]] = sum(1 << pos[y] for y in _bits(up[x]))

    meet = [[0] * n for _ in range(n)]
    join = [[0] * n for _ in range(n)]
    for p in range(n):
        dp, up_ = dpos[p], upos[p]
        x = order[p]
        row_m, row_j = meet[x], join[x]
        for q in range(p, n):
            y = order[q]
            common = dp & dpos[q]
            m = common.bit_length() - 1
            if dpos[m] != common:
                raise NotALattice((min(x, y), max(x, y)), "meet")
            common = up_ & upos[q]
            j = (common & -common).bit_length() - 1
            if upos[j] != common:
                raise NotALattice((min(x, y), max(x, y)), "join")
            row_m[y] = meet[y][x] = order[m]
            row_j[y] = join[y][x] = order[j]
    return FiniteLattice(down, up, tuple(map(tuple, meet)), tuple(map(tuple, join)),
                         bottoms[0], tops[0], labels)


def build_from_covers(covers: Iterable[tuple[int, int]], n: int, labels=None) -> FiniteLattice:
    """Build a lattice from its Hasse diagram.

    Computes the transitive closure, then checks boundedness and that every
    pair has a meet and a join.  Raises :class:`NotAPoset`,
    :class:`NotBounded` or :class:`NotALattice`.
    """
    covers = list(covers)
    children = [[] for _ in range(n)]
    for lo, hi in covers:
        if not (0 <= lo < n and 0 <= hi < n):
            raise ValueError(f"cover {lo}<{hi} out of range 0..{n - 1}")
        if lo == hi:
            raise NotAPoset(f"cycle through element {lo}", lo)
        children[hi].append(lo)

    # Kahn's algorithm from the bottom; leftover elements sit on a cycle.
    indeg = [0] * n
    parents = [[] for _ in range(n)]
    for hi in range(n):
        for lo in children[hi]:
            parents[lo].append(hi)
            indeg[hi] += 1
    ready = [x for x in range(n) if indeg[x] == 0]
    down = [1 << x for x in range(n)]
    seen = 0
    while ready:
        x = ready.pop()
        seen += 1
        for p in parents[x]:
            down[p] |= down[x]
            indeg[p] -= 1
            if indeg[p] == 0:
                ready.append(p)
    if seen != n:
        stuck = min(x for x in range(n) if indeg[x] > 0)
        raise NotAPoset(f"cycle through element {stuck}", stuck)
    return from_downsets(down, labels)


def from_leq(n: int, leq, labels=None) -> FiniteLattice:
    """Build from an order predicate ``leq(x, y)``; the predicate must be a partial order."""
    down = [sum(1 << x for x in range(n) if leq(x, y)) for y in range(n)]
    for y in range(n):
        if not (down[y] >> y) & 1:
            raise NotAPoset(f"relation is not reflexive at {y}")
    for x in range(n):
        for y in range(x + 1, n):
            if (down[y] >> x) & 1 and (down[x] >> y) & 1:
                raise NotAPoset(f"elements {x} and {y} are mutually below each other")
    for y in range(n):
        for x in _bits(down[y]):
            if down[x] & ~down[y]:
                raise NotAPoset(f"relation is not transitive below {y}")
    return from_downsets(down, labels)


def relabel(L: FiniteLattice, perm: Sequence[int], labels=None) -> FiniteLattice:
    """Return the isomorphic copy in which old element ``x`` becomes ``perm[x]``."""
    n = L.n
    down = [0] * n
    for x in range(n):
        down[perm[x]] = sum(1 << perm[y] for y in _bits(L.down[x]))
    if labels is None:
        labels = [None] * n
        for x in range(n):
            labels[perm[x]] = L.labels[x]
    return from_downsets(down, labels)


def meet_of_set(L: FiniteLattice, s: Iterable[int]) -> int:
    """Greatest lower bound of ``s``; the empty meet is ``top``."""
    acc = L.top
    for x in s:
        acc = L.meet_table[acc][x]
    return acc


def join_of_set(L: FiniteLattice, s: Iterable[int]) -> int:
    """Least upper bound of ``s``; the empty join is ``bottom``."""
    acc = L.bottom
    for x in s:
        acc = L.join_table[acc][x]
    return acc


def coatoms(L: FiniteLattice) -> frozenset[int]:
    return frozenset(L.lower_covers[L.top])


def atoms(L: FiniteLattice) -> frozenset[int]:
    return frozenset(L.upper_covers[L.bottom])


@dataclass(frozen=True)
class IntervalView:
    parent: FiniteLattice
    lo: int
    hi: int
    embedded: FiniteLattice
    to_parent: tuple[int, ...]

    def from_parent(self, x: int) -> int:
        return self.to_parent.index(x)


def interval(L: FiniteLattice, lo: int, hi: int) -> IntervalView:
    """The sublattice ``[lo, hi]``, re-indexed densely in increasing id order."""
    if not L.leq(lo, hi):
        raise NotComparable(f"{L.labels[lo]} is not below {L.labels[hi]}")
    members = tuple(_bits(L.up[lo] & L.down[hi]))
    index = {x: i for i, x in enumerate(members)}
    down = [sum(1 << index[y] for y in _bits(L.down[x] & L.up[lo])) for x in members]
    up = [sum(1 << index[y] for y in _bits(L.up[x] & L.down[hi])) for x in members]
    meet = tuple(tuple(index[L.meet_table[x][y]] for y in members) for x in members)
    join = tuple(tuple(index[L.join_table[x][y]] for y in members) for x in members)
    sub = FiniteLattice(down, up, meet, join, index[lo], index[hi],
                        [L.labels[x] for x in members])
    return IntervalView(L, lo, hi, sub, members)


def dual(L: FiniteLattice) -> FiniteLattice:
    """Order-reversed lattice on the same element ids."""
    return FiniteLattice(L.up, L.down, L.join_table, L.meet_table, L.top, L.bottom, L.labels)


def longest_chain_length(L: FiniteLattice) -> int:
    return L.height[L.top]


def maximal_chains(L: FiniteLattice) -> Iterator[tuple[int, ...]]:
    """All maximal chains bottom -> top, each a tuple of element ids, in lexicographic order."""
    stack = [(L.bottom,)]
    while stack:
        chain = stack.pop()
        x = chain[-1]
        if x == L.top:
            yield chain
            continue
        for y in reversed(L.upper_covers[x]):
            stack.append(chain + (y,))


def _invariants(L: FiniteLattice) -> list[tuple]:
    return [(L.height[x], L.depth[x], len(L.lower_covers[x]), len(L.upper_covers[x]),
             L.down[x].bit_count(), L.up[x].bit_count()) for x in range(L.n)]


def find_isomorphism(L1: FiniteLattice, L2: FiniteLattice) -> tuple[int, ...] | None:
    """Order isomorphism ``L1 -> L2`` as a tuple ``f`` with ``f[x]`` the image of ``x``.

    Backtracking over elements of ``L1`` in topological order; candidates are
    restricted to elements of ``L2`` with the same height/depth/degree profile.
    """
    if L1.n != L2.n:
        return None
    inv1, inv2 = _invariants(L1), _invariants(L2)
    if sorted(inv1) != sorted(inv2):
        return None
    by_inv: dict[tuple, list[int]] = {}
    for y, key in enumerate(inv2):
        by_inv.setdefault(key, []).append(y)
    order = L1.topological_order
    f = [-1] * L1.n
    used = [False] * L2.n

    def fits(x, y, k):
        for i in range(k):
            u = order[i]
            v = f[u]
            if L1.leq(u, x) != L2.leq(v, y) or L1.leq(x, u) != L2.leq(y, v):
                return False
        return True

    def extend(k):
        if k == L1.n:
            return True
        x = order[k]
        for y in by_inv[inv1[x]]:
            if not used[y] and fits(x, y, k):
                f[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                used[y] = False
        f[x] = -1
        return False

    return tuple(f) if extend(0) else None


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    return find_isomorphism(L1, L2) is not None
