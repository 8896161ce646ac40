"""Lattices given by oracles, transfinite radical series and chain witnesses.

A :class:`ProceduralLattice` never materializes its carrier.  The radical
series only needs ``coatoms_below(x)``: the coatoms of ``[bottom, x]``.  The
oracle answers with a frozenset, where the empty frozenset is a certificate
that the interval has no coatoms, or ``None`` when it cannot decide.  Limit
stages are delegated to ``limit_meet``, which sees the finite prefix of the
current omega-run and either returns the exact infimum of the whole run or
``None`` if the run stops descending at some finite stage.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import total_ordering
from math import gcd
from random import Random
from typing import Any, Callable, Hashable, Sequence

from .core import FiniteLattice, LatticeError

Term = Hashable


class OracleUnsupported(LatticeError):
    code = "oracle-unsupported"


class OracleMissing(LatticeError):
    code = "oracle-missing"


@total_ordering
@dataclass(frozen=True)
class OrdinalIndex:
    """The ordinal ``omega * limit_steps + finite_steps``."""

    limit_steps: int = 0
    finite_steps: int = 0

    def __lt__(self, other):
        if not isinstance(other, OrdinalIndex):
            return NotImplemented
        return (self.limit_steps, self.finite_steps) < (other.limit_steps, other.finite_steps)

    def successor(self) -> OrdinalIndex:
        return OrdinalIndex(self.limit_steps, self.finite_steps + 1)

    def next_limit(self) -> OrdinalIndex:
        return OrdinalIndex(self.limit_steps + 1, 0)

    @property
    def is_limit(self) -> bool:
        return self.limit_steps > 0 and self.finite_steps == 0

    def __str__(self):
        k, m = self.limit_steps, self.finite_steps
        if k == 0:
            return str(m)
        head = "ω" if k == 1 else f"ω·{k}"
        return head if m == 0 else f"{head}+{m}"

    @classmethod
    def parse(cls, text: str) -> OrdinalIndex:
        """Accepts ``m``, ``ω``, ``ω+m``, ``ω·k``, ``ω·k+m``; ``w`` and ``*`` also work."""
        s = text.strip().replace("w", "ω").replace("*", "·").replace(" ", "")
        if s.isdigit():
            return cls(0, int(s))
        match = re.fullmatch(r"ω(?:·(\d+))?(?:\+(\d+))?", s)
        if match is None:
            raise ValueError(f"not an ordinal below ω^2: {text!r}")
        k = int(match.group(1)) if match.group(1) else 1
        m = int(match.group(2)) if match.group(2) else 0
        return cls(k, m)


DEFAULT_CAP = OrdinalIndex(4, 64)
DEFAULT_HORIZON = 32
MAX_STEPS = 100_000


@dataclass(frozen=True, eq=False)
class ProceduralLattice:
    """A complete lattice known only through oracles.

    ``coatoms_below`` returns a frozenset (empty means provably none) or
    ``None`` when unsupported.  ``render`` gives the canonical serialization
    of a term; equality of terms is Python equality.
    """

    name: str
    top: Term
    bottom: Term
    leq: Callable[[Term, Term], bool]
    meet2: Callable[[Term, Term], Term]
    join2: Callable[[Term, Term], Term]
    coatoms_below: Callable[[Term], frozenset | None]
    limit_meet: Callable[[Sequence[Term]], Term | None]
    upper_neighbors: Callable[[Term], Sequence[Term]] | None = None
    lower_neighbors: Callable[[Term], Sequence[Term]] | None = None
    render: Callable[[Term], str] = str
    sample: Callable[[Random], Term] | None = None
    parse: Callable[[str], Term] | None = None
    note: str = ""

    def lt(self, x, y) -> bool:
        return x != y and self.leq(x, y)

    def meet_all(self, terms, start=None):
        acc = self.top if start is None else start
        for t in terms:
            acc = self.meet2(acc, t)
        return acc


# transfinite series


@dataclass(frozen=True)
class StabilizedAt:
    ordinal: OrdinalIndex
    term: Any


@dataclass(frozen=True)
class CapReached:
    cap: OrdinalIndex


@dataclass(frozen=True)
class TransfiniteSeries:
    lattice: ProceduralLattice
    entries: tuple[tuple[OrdinalIndex, Any], ...]
    status: StabilizedAt | CapReached

    @property
    def stabilized(self) -> bool:
        return isinstance(self.status, StabilizedAt)

    @property
    def hyper_radical(self):
        return self.status.term if self.stabilized else None

    @property
    def hyper_radical_nonzero(self) -> bool | None:
        if not self.stabilized:
            return None
        return self.status.term != self.lattice.bottom

    def values(self) -> list:
        """Terms up to the stabilization index (the trailing repeat dropped)."""
        if self.stabilized:
            return [t for o, t in self.entries if o <= self.status.ordinal]
        return [t for _, t in self.entries]

    def rendered(self) -> list[tuple[str, str]]:
        return [(str(o), self.lattice.render(t)) for o, t in self.entries]


def _successor_step(P: ProceduralLattice, current):
    cs = P.coatoms_below(current)
    if cs is None:
        raise OracleUnsupported(f"{P.name}: coatoms below {P.render(current)} are not decidable")
    # empty meet inside [bottom, current] is current itself
    return P.meet_all(sorted(cs, key=P.render), start=current)


def transfinite_radical_series(P: ProceduralLattice, cap: OrdinalIndex = DEFAULT_CAP,
                               horizon: int = DEFAULT_HORIZON,
                               max_steps: int = MAX_STEPS) -> TransfiniteSeries:
    """Radical series ``r_0 = top``, ``r_{s+1} = r([bottom, r_s])``, meets at limits.

    Each omega-run is materialized for ``horizon`` steps before the limit
    oracle is consulted (and again every ``horizon`` steps if it declines).
    Stops when ``r_{s+1} == r_s`` or when the next index would exceed ``cap``.
    """
    idx = OrdinalIndex()
    current = P.top
    entries = [(idx, current)]
    run = [current]
    while len(entries) < max_steps:
        if len(run) > horizon and (len(run) - 1) % horizon == 0:
            limit = P.limit_meet(tuple(run))
            if limit is not None:
                nxt_idx = idx.next_limit()
                if nxt_idx > cap:
                    break
                idx, current = nxt_idx, limit
                entries.append((idx, current))
                run = [current]
                continue
        nxt_idx = idx.successor()
        if nxt_idx > cap:
            break
        nxt = _successor_step(P, current)
        entries.append((nxt_idx, nxt))
        if nxt == current:
            return TransfiniteSeries(P, tuple(entries), StabilizedAt(idx, current))
        idx, current = nxt_idx, nxt
        run.append(current)
    return TransfiniteSeries(P, tuple(entries), CapReached(cap))


# chain witnesses


@dataclass(frozen=True)
class ChainWitness:
    direction: str
    terms: tuple
    length: int


@dataclass(frozen=True)
class ChainSearch:
    """Outcome of a bounded search.  ``witness is None`` is evidence only."""

    direction: str
    start: Any
    bound: int
    witness: ChainWitness | None
    longest: int
    expanded: int
    budget_exhausted: bool


def search_chain(P: ProceduralLattice, direction: str, bound: int, budget: int = 100_000,
                 start=None) -> ChainSearch:
    """Depth-first search along covers for a strictly monotone chain of ``bound`` steps.

    Ascending searches start at bottom and follow ``upper_neighbors``;
    descending ones start at top and follow ``lower_neighbors``.  Exact
    longest-chain lengths are memoized for fully explored terms.
    """
    if direction in ("asc", "ascending"):
        direction, step = "ascending", P.upper_neighbors
        start = P.bottom if start is None else start
        ordered = lambda a, b: P.lt(a, b)
    elif direction in ("desc", "descending"):
        direction, step = "descending", P.lower_neighbors
        start = P.top if start is None else start
        ordered = lambda a, b: P.lt(b, a)
    else:
        raise ValueError(f"unknown direction {direction!r}")
    if step is None:
        raise OracleMissing(f"{P.name} has no {direction} neighbour oracle")

    best: dict = {}  # term -> (exact longest chain length from term, next term)
    path = [start]
    frames = [[start, iter(step(start)), 0, None]]
    expanded = 1
    longest = 0

    def finish(tail_from):
        terms = list(path)
        t = tail_from
        while len(terms) - 1 < bound:
            t = best[t][1]
            terms.append(t)
        for a, b in zip(terms, terms[1:]):
            if not ordered(a, b):
                raise AssertionError(f"neighbour oracle produced a non-monotone step {a!r} {b!r}")
        return ChainWitness(direction, tuple(terms), len(terms) - 1)

    while frames:
        depth = len(path) - 1
        longest = max(longest, depth)
        if depth >= bound:
            return ChainSearch(direction, start, bound, finish(path[-1]), depth, expanded, False)
        frame = frames[-1]
        child = next(frame[1], None)
        if child is None:
            node, _, length, succ = frames.pop()
            path.pop()
            best[node] = (length, succ)
            if frames:
                parent = frames[-1]
                if length + 1 > parent[2]:
                    parent[2], parent[3] = length + 1, node
            continue
        if child in best:
            length = best[child][0]
            if length + 1 > frame[2]:
                frame[2], frame[3] = length + 1, child
            if depth + 1 + length >= bound:
                path.append(child)
                return ChainSearch(direction, start, bound, finish(child), bound, expanded, False)
            continue
        if expanded >= budget:
            return ChainSearch(direction, start, bound, None, longest, expanded, True)
        expanded += 1
        path.append(child)
        frames.append([child, iter(step(child)), 0, None])
    longest = max(longest, best[start][0])
    return ChainSearch(direction, start, bound, None, longest, expanded, False)


def find_chain_witness(P: ProceduralLattice, direction: str, bound: int, budget: int = 100_000,
                       start=None) -> ChainWitness | None:
    return search_chain(P, direction, bound, budget, start).witness


# built-in instances


@dataclass(frozen=True, order=True)
class Fin:
    n: int

    def __str__(self):
        return str(self.n)


class _Named:
    def __init__(self, name: str):
        self.name = name

    def __repr__(self):
        return self.name

    def __str__(self):
        return self.name


INF = _Named("∞")


def omega_plus_one_chain() -> ProceduralLattice:
    """The chain 0 < 1 < 2 < ... < ∞, i.e. the subgroup lattice of Z(p^∞)."""

    def key(t):
        return (1, 0) if t is INF else (0, t.n)

    def leq(a, b):
        return key(a) <= key(b)

    def coatoms_below(t):
        # ∞ is a limit: nothing lies immediately below it
        if t is INF or t.n == 0:
            return frozenset()
        return frozenset({Fin(t.n - 1)})

    def sample(rng):
        return INF if rng.random() < 0.05 else Fin(rng.randrange(0, 2000))

    return ProceduralLattice(
        name="omega_plus_one_chain",
        top=INF, bottom=Fin(0), leq=leq,
        meet2=lambda a, b: a if key(a) <= key(b) else b,
        join2=lambda a, b: b if key(a) <= key(b) else a,
        coatoms_below=coatoms_below,
        limit_meet=lambda run: None,  # every descending run is finite
        upper_neighbors=lambda t: () if t is INF else (Fin(t.n + 1),),
        lower_neighbors=lambda t: tuple(coatoms_below(t)),
        sample=sample,
        parse=lambda s: INF if s in ("∞", "inf") else Fin(_natural(s)),
        note="subgroups of Z(p^∞): the chain N ∪ {∞}",
    )


_WITNESS_PRIMES = (2, 3, 5, 7)


def _factor(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        while n % p == 0:
            out.append(p)
            n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def divisibility_lattice() -> ProceduralLattice:
    """Natural numbers under divisibility: bottom 1, top 0, meet gcd, join lcm."""

    def leq(a, b):
        return b % a == 0 if a else b == 0

    def lcm(a, b):
        return 0 if a == 0 or b == 0 else a * b // gcd(a, b)

    def coatoms_below(t):
        # below 0 every n sits under 2n, so [1, 0] has no coatoms
        if t == 0:
            return frozenset()
        return frozenset(t // p for p in set(_factor(t)))

    def sample(rng):
        return 0 if rng.random() < 0.02 else rng.randrange(1, 5000)

    return ProceduralLattice(
        name="divisibility",
        top=0, bottom=1, leq=leq,
        meet2=gcd, join2=lcm,
        coatoms_below=coatoms_below,
        limit_meet=lambda run: None,  # runs below a positive n are finite; 0 is fixed at once
        # a finite subset of the upper covers suffices for witness search
        upper_neighbors=lambda t: () if t == 0 else tuple(t * p for p in _WITNESS_PRIMES),
        lower_neighbors=lambda t: tuple(sorted(coatoms_below(t), reverse=True)),
        sample=sample,
        parse=_natural,
        note="(N, |) with 0 as the top element",
    )


@dataclass(frozen=True)
class Pow:
    m: int

    def __str__(self):
        return "R" if self.m == 0 else f"x^{self.m}·R"


@dataclass(frozen=True)
class H:
    j: int

    def __str__(self):
        return f"H{self.j}"


FLAT = _Named("F")
GERM_BOTTOM = _Named("0")


def _germ_key(t):
    if t is GERM_BOTTOM:
        return (0, 0)
    if isinstance(t, H):
        return (1, t.j)
    if t is FLAT:
        return (2, 0)
    return (3, -t.m)


def _natural(s: str) -> int:
    if not s.isdigit():
        raise ValueError(f"expected a natural number, got {s!r}")
    return int(s)


def _parse_germ(s: str):
    s = s.replace("*", "·")
    if s == "R":
        return Pow(0)
    if s == "F":
        return FLAT
    if s == "0":
        return GERM_BOTTOM
    m = re.fullmatch(r"x\^(\d+)·R", s) or re.fullmatch(r"x()·R", s)
    if m:
        return Pow(int(m.group(1) or 1))
    m = re.fullmatch(r"H(\d+)", s)
    if m and int(m.group(1)) > 0:
        return H(int(m.group(1)))
    raise ValueError(f"not a germ-model term: {s!r}")


def germ_model_chain() -> ProceduralLattice:
    """Chain model of the radical series of the ideal lattice of smooth germs at 0.

    ``R = x^0·R > x·R > x^2·R > ... > F > ... > H2 > H1 > 0`` where ``F``
    stands for the ideal of flat germs.  ``F`` has no lower cover, which is
    what makes the series stop at ``ω`` with a nonzero value.  This is a
    model of the series only, not the ideal lattice itself.
    """

    def leq(a, b):
        return _germ_key(a) <= _germ_key(b)

    def coatoms_below(t):
        if t is GERM_BOTTOM or t is FLAT:
            return frozenset()
        if isinstance(t, H):
            return frozenset({H(t.j - 1) if t.j > 1 else GERM_BOTTOM})
        return frozenset({Pow(t.m + 1)})

    def limit_meet(run):
        # an unbroken run of powers continues forever; its infimum is the flat ideal
        if all(isinstance(t, Pow) for t in run):
            return FLAT
        return None

    def upper(t):
        if isinstance(t, Pow):
            return (Pow(t.m - 1),) if t.m > 0 else ()
        if isinstance(t, H):
            return (H(t.j + 1),)
        if t is GERM_BOTTOM:
            return (H(1),)
        return ()

    def sample(rng):
        r = rng.random()
        if r < 0.05:
            return FLAT
        if r < 0.08:
            return GERM_BOTTOM
        if r < 0.5:
            return H(rng.randrange(1, 500))
        return Pow(rng.randrange(0, 500))

    return ProceduralLattice(
        name="germ_model",
        top=Pow(0), bottom=GERM_BOTTOM, leq=leq,
        meet2=lambda a, b: a if _germ_key(a) <= _germ_key(b) else b,
        join2=lambda a, b: b if _germ_key(a) <= _germ_key(b) else a,
        coatoms_below=coatoms_below,
        limit_meet=limit_meet,
        upper_neighbors=upper,
        lower_neighbors=lambda t: tuple(coatoms_below(t)),
        sample=sample,
        parse=_parse_germ,
        note="model of the radical series of the ideals of smooth germs at 0, not the ideal lattice",
    )


def wrap_finite(L: FiniteLattice, name: str = "finite") -> ProceduralLattice:
    """View a finite lattice through the procedural interface (terms are element ids)."""
    return ProceduralLattice(
        name=name,
        top=L.top, bottom=L.bottom,
        leq=L.leq, meet2=L.meet, join2=L.join,
        coatoms_below=lambda x: frozenset(L.lower_covers[x]),
        limit_meet=lambda run: None,
        upper_neighbors=lambda x: L.upper_covers[x],
        lower_neighbors=lambda x: L.lower_covers[x],
        render=L.label,
        sample=lambda rng: rng.randrange(L.n),
        parse=L.index,
    )


BUILTINS: dict[str, Callable[[], ProceduralLattice]] = {
    "omega_plus_one_chain": omega_plus_one_chain,
    "divisibility": divisibility_lattice,
    "germ_model": germ_model_chain,
}

ALIASES = {
    "omega": "omega_plus_one_chain",
    "zp_infinity": "omega_plus_one_chain",
    "divisibility_lattice": "divisibility",
    "germ_model_chain": "germ_model",
    "germs": "germ_model",
}


def builtin(name: str) -> ProceduralLattice:
    name = ALIASES.get(name, name)
    try:
        return BUILTINS[name]()
    except KeyError:
        raise KeyError(f"unknown procedural lattice {name!r}; "
                       f"choose from {', '.join(BUILTINS)}") from None


def parse_term(P: ProceduralLattice, text: str):
    if P.parse is None:
        raise ValueError(f"{P.name} has no term syntax")
    try:
        return P.parse(text)
    except ValueError:
        raise
    except Exception as exc:
        raise ValueError(f"cannot parse {text!r} as a term of {P.name}") from exc


def coatom_free_interval(P: ProceduralLattice, x=None) -> bool:
    """True when ``[bottom, x]`` (default: the whole lattice) is nontrivial and certified coatom-free."""
    x = P.top if x is None else x
    return x != P.bottom and P.coatoms_below(x) == frozenset()


@dataclass
class SoundnessReport:
    name: str
    pairs: int
    failures: list = field(default_factory=list)


def sample_oracle_soundness(P: ProceduralLattice, pairs: int = 10_000, candidates: int = 16,
                            seed: int = 0) -> SoundnessReport:
    """Check meet2/join2 against leq on random pairs.

    The meet must be a lower bound of both arguments and lie above every
    sampled common lower bound; dually for the join.
    """
    rng = Random(seed)
    report = SoundnessReport(P.name, pairs)
    pool = [P.sample(rng) for _ in range(candidates * 8)] + [P.bottom, P.top]
    for _ in range(pairs):
        a, b = P.sample(rng), P.sample(rng)
        m, j = P.meet2(a, b), P.join2(a, b)
        if not (P.leq(m, a) and P.leq(m, b) and P.leq(a, j) and P.leq(b, j)):
            report.failures.append(("bound", a, b))
            continue
        for c in rng.sample(pool, candidates):
            if P.leq(c, a) and P.leq(c, b) and not P.leq(c, m):
                report.failures.append(("meet", a, b, c))
            if P.leq(a, c) and P.leq(b, c) and not P.leq(j, c):
                report.failures.append(("join", a, b, c))
    return report


def sample_modularity(P: ProceduralLattice, triples: int = 5_000, seed: int = 0) -> list:
    """Sampled triples ``x <= z`` violating the modular law (empty list if none found)."""
    rng = Random(seed)
    bad = []
    for _ in range(triples):
        x, y, z = P.sample(rng), P.sample(rng), P.sample(rng)
        if not P.leq(x, z):
            x, z = P.meet2(x, z), P.join2(x, z)
        if P.join2(x, P.meet2(y, z)) != P.meet2(P.join2(x, y), z):
            bad.append((x, y, z))
    return bad
