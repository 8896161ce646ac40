"""Named finite lattices and submodule lattices of finite Z_n-modules."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache, reduce
from itertools import product
from math import gcd, prod

from .core import FiniteLattice, SizeLimit, build_from_covers, from_downsets, from_leq
from .series import radical

MAX_ELEMENTS = 512
MAX_BOOLEAN_RANK = 5
MAX_GROUP_ORDER = 256
MAX_SUBGROUPS = 4096


def _check_size(n: int, limit: int = MAX_ELEMENTS) -> None:
    if n > limit:
        raise SizeLimit(f"{n} elements exceeds the limit of {limit}")


def chain(k: int) -> FiniteLattice:
    """The k-element chain ``0 < 1 < ... < k-1``."""
    if k < 1:
        raise ValueError("a chain needs at least one element")
    _check_size(k)
    return build_from_covers([(i, i + 1) for i in range(k - 1)], k)


def boolean(k: int) -> FiniteLattice:
    """Subsets of a k-set; element ids are the subset bitmasks."""
    if k > MAX_BOOLEAN_RANK:
        raise SizeLimit(f"boolean lattice of rank {k} exceeds rank {MAX_BOOLEAN_RANK}")
    letters = "abcdefghij"
    labels = ["".join(letters[i] for i in range(k) if s >> i & 1) or "0" for s in range(1 << k)]
    return from_leq(1 << k, lambda s, t: s & t == s, labels)


def diamond_m(k: int) -> FiniteLattice:
    """M_k: bottom, k pairwise incomparable atoms, top."""
    _check_size(k + 2)
    covers = [(0, i) for i in range(1, k + 1)] + [(i, k + 1) for i in range(1, k + 1)]
    if k == 0:
        covers = [(0, 1)]
    labels = ["0"] + [chr(ord("a") + i) if k <= 26 else f"a{i}" for i in range(k)] + ["1"]
    return build_from_covers(covers, k + 2, labels)


def pentagon() -> FiniteLattice:
    """N5 with elements ``0, a, b, c, 1`` where ``0 < a < c < 1`` and ``0 < b < 1``."""
    return build_from_covers([(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)], 5, ["0", "a", "b", "c", "1"])


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, int(n ** 0.5) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def divisor_lattice(n: int) -> FiniteLattice:
    """Divisors of ``n`` under divisibility (meet = gcd, join = lcm)."""
    if n < 1:
        raise ValueError("n must be positive")
    ds = divisors(n)
    _check_size(len(ds))
    return from_leq(len(ds), lambda i, j: ds[j] % ds[i] == 0, [str(d) for d in ds])


# Finite Z_n-modules


@dataclass(frozen=True)
class FiniteZnModule:
    """The group ``Z_{c1} x ... x Z_{ck}`` viewed as a module over ``Z_n``."""

    n: int
    cyclic_orders: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "cyclic_orders", tuple(self.cyclic_orders))
        for c in self.cyclic_orders:
            if c < 1 or self.n % c:
                raise ValueError(f"cyclic order {c} does not divide {self.n}")

    @property
    def order(self) -> int:
        return prod(self.cyclic_orders)

    @cached_property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(product(*(range(c) for c in self.cyclic_orders)))

    def code(self, g: tuple[int, ...]) -> int:
        k = 0
        for gi, c in zip(g, self.cyclic_orders):
            k = k * c + gi
        return k

    def add(self, g, h):
        return tuple((a + b) % c for a, b, c in zip(g, h, self.cyclic_orders))

    def scale(self, r: int, g):
        return tuple((r * a) % c for a, c in zip(g, self.cyclic_orders))


@dataclass(frozen=True)
class SubmoduleLattice:
    module: FiniteZnModule
    lattice: FiniteLattice
    submodule_of: tuple[frozenset, ...]

    def element_for(self, submodule) -> int:
        return self.submodule_of.index(frozenset(submodule))


def _span(module: FiniteZnModule, gens) -> frozenset:
    """Subgroup generated by ``gens`` (for Z_n-modules, submodule = subgroup)."""
    zero = tuple(0 for _ in module.cyclic_orders)
    current = {zero}
    for g in gens:
        multiples = [zero]
        x = g
        while x != zero:
            multiples.append(x)
            x = module.add(x, g)
        current = {module.add(h, m) for h in current for m in multiples}
    return frozenset(current)


def _enumerate_subgroups(module: FiniteZnModule) -> list[frozenset]:
    """All subgroups, found by closing H + <g> from the trivial subgroup.

    Only one ``g`` per coset of ``H`` is tried, since ``H + <g>`` depends on
    ``g`` only through ``g + H``.
    """
    elems = module.elements
    trivial = _span(module, [])
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for H in frontier:
            handled = set(H)
            for g in elems:
                if g in handled:
                    continue
                handled.update(module.add(g, h) for h in H)
                cyclic = _span(module, [g])
                K = frozenset(module.add(h, m) for h in H for m in cyclic)
                if K not in found:
                    found.add(K)
                    nxt.append(K)
                    if len(found) > MAX_SUBGROUPS:
                        raise SizeLimit(f"more than {MAX_SUBGROUPS} subgroups")
        frontier = nxt
    return sorted(found, key=lambda S: (len(S), sorted(module.code(g) for g in S)))


def _submodule_label(module: FiniteZnModule, S: frozenset) -> str:
    if len(module.cyclic_orders) == 1:
        c = module.cyclic_orders[0]
        if len(S) == 1:
            return "0"
        d = c // len(S)
        return f"{d}Z_{c}" if d > 1 else f"Z_{c}"
    # a generating set, chosen greedily in element order (not always minimal)
    gens, span = [], _span(module, [])
    for g in sorted(S, key=module.code):
        if g not in span:
            gens.append(g)
            span = _span(module, gens)
    if not gens:
        return "0"
    return "⟨" + ";".join(",".join(map(str, g)) for g in gens) + "⟩"


@lru_cache(maxsize=64)
def _subgroup_data(cyclic_orders: tuple[int, ...]) -> tuple[FiniteLattice, tuple[frozenset, ...]]:
    module = FiniteZnModule(_exponent(cyclic_orders), cyclic_orders)
    if module.order > MAX_GROUP_ORDER:
        raise SizeLimit(f"group order {module.order} exceeds {MAX_GROUP_ORDER}")
    subs = _enumerate_subgroups(module)
    codes = [sum(1 << module.code(g) for g in S) for S in subs]
    down = [sum(1 << j for j in range(i + 1) if codes[j] & codes[i] == codes[j])
            for i in range(len(subs))]
    L = from_downsets(down, [_submodule_label(module, S) for S in subs])
    return L, tuple(subs)


def _submodule_lattice(module: FiniteZnModule) -> SubmoduleLattice:
    # the submodules of a Z_n-module are its subgroups, whatever n is
    L, subs = _subgroup_data(module.cyclic_orders)
    return SubmoduleLattice(module, L, subs)


def _exponent(cyclic_orders) -> int:
    return reduce(lambda a, b: a * b // gcd(a, b), cyclic_orders, 1)


def subgroup_lattice_abelian(cyclic_orders, n: int | None = None) -> SubmoduleLattice:
    """Subgroup lattice of ``Z_{c1} x ... x Z_{ck}``.

    Viewed as a module over ``Z_n`` where ``n`` defaults to the exponent.
    """
    cyclic_orders = tuple(cyclic_orders)
    if n is None:
        n = _exponent(cyclic_orders)
    return _submodule_lattice(FiniteZnModule(n, cyclic_orders))


def ideal_lattice_zn(n: int) -> SubmoduleLattice:
    """Ideals of Z_n ordered by inclusion (ideals are the additive subgroups)."""
    if n < 1:
        raise ValueError("n must be positive")
    return _submodule_lattice(FiniteZnModule(n, (n,)))


def jacobson_radical_zn(n: int) -> frozenset:
    """Intersection of the maximal ideals of Z_n, read off the ideal lattice."""
    ideals = ideal_lattice_zn(n)
    return ideals.submodule_of[radical(ideals.lattice)]


def radical_generator(n: int) -> int:
    """Product of the distinct primes dividing ``n``."""
    return prod(prime_factors(n))


@dataclass(frozen=True)
class ModuleRadicalReport:
    ring_modulus: int
    module: FiniteZnModule
    jacobson: frozenset
    jn: frozenset
    rn: frozenset
    holds: bool


def verify_module_radical_bound(ring_modulus: int, module: FiniteZnModule) -> ModuleRadicalReport:
    """Check ``J.N <= r(N) <= N`` for a finite module over Z_{ring_modulus}."""
    if module.n != ring_modulus:
        module = FiniteZnModule(ring_modulus, module.cyclic_orders)
    J = jacobson_radical_zn(ring_modulus)
    N = module.elements
    jn = _span(module, {module.scale(j, x) for (j,) in J for x in N})
    subs = _submodule_lattice(module)
    rn = subs.submodule_of[radical(subs.lattice)]
    return ModuleRadicalReport(ring_modulus, module, J, jn, rn, jn <= rn <= frozenset(N))


def module_decompositions(n: int, max_order: int) -> list[tuple[int, ...]]:
    """Non-decreasing tuples of divisors ``d > 1`` of ``n`` with product at most ``max_order``."""
    ds = [d for d in divisors(n) if d > 1]
    out = []

    def grow(prefix, start, order):
        if prefix:
            out.append(tuple(prefix))
        for i in range(start, len(ds)):
            if order * ds[i] <= max_order:
                grow(prefix + [ds[i]], i, order * ds[i])

    grow([], 0, 1)
    return out


def primary_decomposition(cyclic_orders) -> tuple[int, ...]:
    """Prime-power cyclic factors of the group, sorted; an isomorphism invariant."""
    out = []
    for c in cyclic_orders:
        for p in prime_factors(c):
            q = 1
            while c % (q * p) == 0:
                q *= p
            out.append(q)
    return tuple(sorted(out))
