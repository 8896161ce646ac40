"""Radical, socle and the Loewy series of a finite lattice.

The radical of ``L`` is the meet of its coatoms.  The radical series starts
at ``top`` and repeatedly replaces the current element ``r`` by the radical
of ``[bottom, r]``, i.e. the meet of the lower covers of ``r``.  On a finite
lattice it strictly descends until it reaches ``bottom`` and then repeats.
The socle and socle series are the order duals.
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteLattice, atoms, coatoms, join_of_set, meet_of_set


@dataclass(frozen=True)
class RadicalSeries:
    """Materialized Loewy series.

    ``steps`` lists ``r_0, r_1, ..., r_k`` where ``k`` is the first index with
    ``r_{k+1} == r_k``; the repeated value is not stored again.
    ``ascending`` marks a socle series (``s_0 = bottom``).
    """

    steps: tuple[int, ...]
    ascending: bool = False

    @property
    def stabilized_at(self) -> int:
        return len(self.steps) - 1

    @property
    def stable_value(self) -> int:
        return self.steps[-1]

    def labels(self, L: FiniteLattice) -> list[str]:
        return [L.labels[x] for x in self.steps]


def radical(L: FiniteLattice) -> int:
    return meet_of_set(L, coatoms(L))


def socle(L: FiniteLattice) -> int:
    return join_of_set(L, atoms(L))


def _iterate(L: FiniteLattice, start: int, neighbours, combine) -> tuple[int, ...]:
    steps = [start]
    while True:
        cur = steps[-1]
        nxt = cur
        for c in neighbours[cur]:
            nxt = combine[nxt][c]
        if nxt == cur:
            return tuple(steps)
        steps.append(nxt)


def loewy_radical_series(L: FiniteLattice) -> RadicalSeries:
    # coatoms of [bottom, r] are exactly the lower covers of r in L
    return RadicalSeries(_iterate(L, L.top, L.lower_covers, L.meet_table))


def loewy_socle_series(L: FiniteLattice) -> RadicalSeries:
    return RadicalSeries(_iterate(L, L.bottom, L.upper_covers, L.join_table), ascending=True)


def hyper_radical(L: FiniteLattice) -> int:
    return loewy_radical_series(L).stable_value


def hyper_socle(L: FiniteLattice) -> int:
    return loewy_socle_series(L).stable_value


def radical_length(L: FiniteLattice) -> int:
    return loewy_radical_series(L).stabilized_at


def socle_length(L: FiniteLattice) -> int:
    return loewy_socle_series(L).stabilized_at


def is_radical_free(L: FiniteLattice) -> bool:
    return radical(L) == L.bottom


def is_hyper_radical_free(L: FiniteLattice) -> bool:
    return hyper_radical(L) == L.bottom


def is_semiatomic(L: FiniteLattice) -> bool:
    return socle(L) == L.top


def is_hyper_semiatomic(L: FiniteLattice) -> bool:
    return hyper_socle(L) == L.top


def predicates(L: FiniteLattice) -> dict[str, bool]:
    return {
        "radical_free": is_radical_free(L),
        "hyper_radical_free": is_hyper_radical_free(L),
        "semiatomic": is_semiatomic(L),
        "hyper_semiatomic": is_hyper_semiatomic(L),
    }
