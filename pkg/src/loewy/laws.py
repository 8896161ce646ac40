"""Finite-scale checks of chain and radical properties of modular lattices.

Finite lattices have no infinite chains, so each infinite-chain statement is
checked in the form its proof actually uses: rigidity of strict pairs,
at most one stall when meeting a chain with a coatom, additivity of length
across ``[0, a]`` and ``[a, 1]``, and so on.  Laws marked ``requires_modular``
hold on modular lattices and are expected to fail somewhere outside them.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .core import FiniteLattice, LatticeError, coatoms, dual, interval, longest_chain_length, maximal_chains
from .series import (hyper_radical, hyper_socle, is_hyper_radical_free, is_hyper_semiatomic,
                     loewy_radical_series, loewy_socle_series, radical, radical_length, socle)


class NotACoatom(LatticeError):
    code = "not-a-coatom"


@dataclass
class LawReport:
    law_id: str
    universe: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def merge(self, other: LawReport) -> None:
        self.checked += other.checked
        self.violations.extend(other.violations)


def encode(L: FiniteLattice) -> str:
    """Compact cover-list description used inside violation records."""
    return " ".join(f"{L.labels[a]}<{L.labels[b]}" for a, b in L.covers()) or "·"


def _violation(L, **elements):
    return {"lattice": encode(L),
            **{k: (L.labels[v] if isinstance(v, int) else [L.labels[x] for x in v])
               for k, v in elements.items()}}


def law_modular_pair_rigidity(L: FiniteLattice) -> LawReport:
    """No strict pair ``x < y`` is invisible to both ``a ^ -`` and ``a v -``."""
    report = LawReport("modular_pair_rigidity", encode(L))
    meet, join = L.meet_table, L.join_table
    for a in range(L.n):
        for x in range(L.n):
            for y in range(L.n):
                if not L.lt(x, y):
                    continue
                report.checked += 1
                if meet[a][x] == meet[a][y] and join[a][x] == join[a][y]:
                    report.violations.append(_violation(L, a=a, x=x, y=y))
    return report


def stalls(seq: Sequence[int]) -> int:
    return sum(1 for u, v in zip(seq, seq[1:]) if u == v)


def law_coatom_chain_compression(L: FiniteLattice, m: int, chain: Sequence[int]) -> LawReport:
    """Meeting a strictly ascending chain with a coatom stalls at most once."""
    if m not in coatoms(L):
        raise NotACoatom(f"{L.labels[m]} is not a coatom")
    report = LawReport("coatom_chain_compression", encode(L), checked=1)
    image = [L.meet(m, x) for x in chain]
    if stalls(image) > 1:
        report.violations.append(_violation(L, coatom=m, chain=tuple(chain)))
    return report


def law_interval_split(L: FiniteLattice, a: int) -> LawReport:
    report = LawReport("interval_split", encode(L), checked=1)
    below = longest_chain_length(interval(L, L.bottom, a).embedded)
    above = longest_chain_length(interval(L, a, L.top).embedded)
    if longest_chain_length(L) != below + above:
        report.violations.append(_violation(L, a=a))
    return report


def law_radical_free_artinian(L: FiniteLattice) -> LawReport:
    """For radical-free ``L``: the coatoms meet to bottom and compress every maximal chain.

    Meeting a maximal chain successively with coatoms ``m_1, ..., m_k`` adds
    at most one stall per coatom; since the final image is constantly bottom,
    every step of the chain must have been absorbed by some coatom.
    """
    report = LawReport("radical_free_artinian", encode(L))
    ms = sorted(coatoms(L))
    report.checked += 1
    if radical(L) != L.bottom:
        report.violations.append(_violation(L, radical=radical(L)))
        return report
    for chain in maximal_chains(L):
        report.checked += 1
        seq = list(chain)
        previous = stalls(seq)
        for k, m in enumerate(ms, start=1):
            seq = [L.meet(x, m) for x in seq]
            now = stalls(seq)
            if now > previous + 1 or now > k:
                report.violations.append(_violation(L, chain=chain, coatoms=tuple(ms[:k])))
                break
            previous = now
    return report


def law_finite_hyper_radical_free(corpus: Iterable[FiniteLattice]) -> LawReport:
    """Hyper-radical is bottom, and no nontrivial ``[bottom, x]`` is coatom-free."""
    report = LawReport("finite_hyper_radical_free", "")
    count = 0
    for L in corpus:
        count += 1
        report.checked += 1
        if hyper_radical(L) != L.bottom:
            report.violations.append(_violation(L, hyper_radical=hyper_radical(L)))
        for x in range(L.n):
            if x != L.bottom:
                report.checked += 1
                if not L.lower_covers[x]:
                    report.violations.append(_violation(L, coatom_free_below=x))
    report.universe = f"{count} lattices"
    return report


def law_duality_bridge(L: FiniteLattice) -> LawReport:
    """Socle-side notions of ``L`` are the radical-side notions of its dual."""
    report = LawReport("duality_bridge", encode(L))
    D = dual(L)
    checks = {
        "socle": socle(L) == radical(D),
        "socle_series": loewy_socle_series(L).steps == loewy_radical_series(D).steps,
        "hyper_socle": hyper_socle(L) == hyper_radical(D),
        "hyper_semiatomic": is_hyper_semiatomic(L) == is_hyper_radical_free(D),
    }
    for name, ok in checks.items():
        report.checked += 1
        if not ok:
            report.violations.append({"lattice": encode(L), "identity": name})
    return report


def law_radical_length_bound(L: FiniteLattice) -> LawReport:
    report = LawReport("radical_length_bound", encode(L), checked=1)
    if radical_length(L) > longest_chain_length(L):
        report.violations.append({"lattice": encode(L)})
    return report


# corpus harness


def _per_coatom_and_chain(L: FiniteLattice) -> LawReport:
    report = LawReport("coatom_chain_compression", encode(L))
    chains = list(maximal_chains(L))
    for m in sorted(coatoms(L)):
        for chain in chains:
            report.merge(law_coatom_chain_compression(L, m, chain))
    return report


def _per_element(L: FiniteLattice) -> LawReport:
    report = LawReport("interval_split", encode(L))
    for a in range(L.n):
        report.merge(law_interval_split(L, a))
    return report


def _radical_free_only(L: FiniteLattice) -> LawReport:
    if radical(L) != L.bottom:
        return LawReport("radical_free_artinian", encode(L))
    return law_radical_free_artinian(L)


@dataclass(frozen=True)
class Law:
    law_id: str
    check: Callable[[FiniteLattice], LawReport]
    requires_modular: bool


LAWS: dict[str, Law] = {law.law_id: law for law in (
    Law("modular_pair_rigidity", law_modular_pair_rigidity, True),
    Law("coatom_chain_compression", _per_coatom_and_chain, True),
    Law("interval_split", _per_element, True),
    Law("radical_free_artinian", _radical_free_only, True),
    Law("finite_hyper_radical_free", lambda L: law_finite_hyper_radical_free([L]), False),
    Law("duality_bridge", law_duality_bridge, False),
    Law("radical_length_bound", law_radical_length_bound, False),
)}


def run_law(law_id: str, corpus: Iterable[FiniteLattice], universe: str) -> LawReport:
    law = LAWS[law_id]
    total = LawReport(law_id, universe)
    for L in corpus:
        total.merge(law.check(L))
    return total
