"""All finite lattices with n elements, one per isomorphism class.

Generation works top-down by levels: removing a coatom from a lattice with
at least three elements leaves a lattice, so every (n+1)-element lattice is
an n-element lattice plus a new coatom whose lower covers form an antichain
``A`` of the old lattice.  The extension is a lattice exactly when, for every
old element ``x``, the common lower bounds of the new coatom and ``x`` (that
is ``down(A) & down(x)``) have a greatest element.  Duplicates are removed
with :func:`loewy.core.find_isomorphism`, and each class is reported in a
canonical labelling so the emitted order is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .core import FiniteLattice, SizeLimit, _bits, _invariants, find_isomorphism, from_downsets
from .properties import is_distributive, modular_violation

DEFAULT_MAX_N = 8
FILTERS = ("all", "modular", "distributive", "nonmodular")


@dataclass(frozen=True)
class CorpusSpec:
    max_n: int
    filter: str = "all"
    min_n: int = 1
    allow_large: bool = False

    def __post_init__(self):
        if self.filter not in FILTERS:
            raise ValueError(f"filter must be one of {FILTERS}")


def _extensions(L: FiniteLattice) -> Iterator[list[int]]:
    """Down-set lists of every lattice obtained by adding a coatom to ``L``."""
    n = L.n
    candidates = [x for x in range(n) if x != L.top]
    for mask in range(1, 1 << len(candidates)):
        A = [candidates[i] for i in range(len(candidates)) if mask >> i & 1]
        if any(L.lt(a, b) for a in A for b in A):
            continue
        D = 0
        for a in A:
            D |= L.down[a]
        ok = True
        for x in candidates:
            common = D & L.down[x]
            # a greatest element, if there is one, has the largest down-set
            best = max(_bits(common), key=lambda y: L.down[y].bit_count())
            if L.down[best] != common:
                ok = False
                break
        if not ok:
            continue
        c = n
        down = list(L.down) + [D | 1 << c]
        down[L.top] |= 1 << c
        yield down


def _signature(L: FiniteLattice) -> tuple:
    return tuple(sorted(_invariants(L)))


def _linear_extensions(L: FiniteLattice) -> Iterator[list[int]]:
    n = L.n
    placed = [False] * n
    out: list[int] = []

    def rec():
        if len(out) == n:
            yield list(out)
            return
        for x in range(n):
            if not placed[x] and all(placed[y] for y in L.lower_covers[x]):
                placed[x] = True
                out.append(x)
                yield from rec()
                out.pop()
                placed[x] = False

    yield from rec()


def cover_code(L: FiniteLattice, order) -> tuple[int, ...]:
    """Cover matrix (upper triangle, row-major) of ``L`` listed in ``order``."""
    pos = {x: i for i, x in enumerate(order)}
    n = L.n
    bits = [0] * (n * (n - 1) // 2)
    for a, b in L.covers():
        i, j = pos[a], pos[b]
        bits[i * n - i * (i + 1) // 2 + (j - i - 1)] = 1
    return tuple(bits)


def canonical_form(L: FiniteLattice) -> tuple[tuple[int, ...], FiniteLattice]:
    """Lexicographically greatest cover code over all linear extensions, with the relabelled lattice."""
    best_code, best_order = None, None
    for order in _linear_extensions(L):
        code = cover_code(L, order)
        if best_code is None or code > best_code:
            best_code, best_order = code, order
    pos = {x: i for i, x in enumerate(best_order)}
    down = [0] * L.n
    for x in range(L.n):
        down[pos[x]] = sum(1 << pos[y] for y in _bits(L.down[x]))
    return best_code, from_downsets(down)


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[FiniteLattice, ...]:
    if n == 1:
        return (from_downsets([1]),)
    if n == 2:
        return (from_downsets([1, 3]),)
    reps: dict[tuple, list[FiniteLattice]] = {}
    for L in _level(n - 1):
        for down in _extensions(L):
            M = from_downsets(down)
            bucket = reps.setdefault(_signature(M), [])
            if not any(find_isomorphism(M, K) is not None for K in bucket):
                bucket.append(M)
    canon = sorted((canonical_form(M) for bucket in reps.values() for M in bucket),
                   key=lambda pair: pair[0], reverse=True)
    return tuple(M for _, M in canon)


def enumerate_lattices(n: int, allow_large: bool = False) -> Iterator[FiniteLattice]:
    """Yield one lattice per isomorphism class of ``n``-element lattices, canonically ordered."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > DEFAULT_MAX_N and not allow_large:
        raise SizeLimit(f"n={n} exceeds the enumeration cap {DEFAULT_MAX_N}")
    yield from _level(n)


def count_lattices(n: int, allow_large: bool = False) -> int:
    return sum(1 for _ in enumerate_lattices(n, allow_large))


def _keep(L: FiniteLattice, how: str) -> bool:
    if how == "all":
        return True
    if how == "distributive":
        return is_distributive(L)
    modular = modular_violation(L) is None
    return modular if how == "modular" else not modular


def enumerate_filtered(spec: CorpusSpec) -> Iterator[FiniteLattice]:
    for n in range(spec.min_n, spec.max_n + 1):
        for L in enumerate_lattices(n, spec.allow_large):
            if _keep(L, spec.filter):
                yield L


def corpus(max_n: int, how: str = "all", min_n: int = 1) -> list[FiniteLattice]:
    return list(enumerate_filtered(CorpusSpec(max_n, how, min_n)))
