from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from loewy import instances
from loewy.core import (NotALattice, NotAPoset, NotBounded, NotComparable, atoms, build_from_covers,
                        coatoms, dual, find_isomorphism, interval, is_isomorphic, join_of_set,
                        longest_chain_length, maximal_chains, meet_of_set, relabel)


def brute_meet(L, x, y):
    """Greatest common lower bound by scanning the order relation."""
    lower = [z for z in L.elements if L.leq(z, x) and L.leq(z, y)]
    greatest = [z for z in lower if all(L.leq(w, z) for w in lower)]
    assert len(greatest) == 1
    return greatest[0]


def brute_join(L, x, y):
    upper = [z for z in L.elements if L.leq(x, z) and L.leq(y, z)]
    least = [z for z in upper if all(L.leq(z, w) for w in upper)]
    assert len(least) == 1
    return least[0]


class TestBuild:
    def test_two_chain(self):
        L = build_from_covers([(0, 1)], 2)
        assert (L.bottom, L.top) == (0, 1)
        assert L.leq(0, 1) and not L.leq(1, 0)

    def test_diamond(self, diamond):
        a, b = diamond.index("a"), diamond.index("b")
        assert diamond.meet(a, b) == diamond.index("0")
        assert diamond.join(a, b) == diamond.index("1")

    def test_pentagon_is_a_lattice(self):
        L = build_from_covers([(0, 1), (0, 2), (1, 3), (3, 4), (2, 4)], 5)
        assert L.meet(1, 2) == 0 and L.join(3, 2) == 4

    def test_tables_match_order_scan(self, corpus7, d12, n5, m3):
        for L in corpus7 + [d12, n5, m3, instances.boolean(3)]:
            for x, y in product(L.elements, repeat=2):
                assert L.meet(x, y) == brute_meet(L, x, y)
                assert L.join(x, y) == brute_join(L, x, y)

    def test_cycle(self):
        with pytest.raises(NotAPoset):
            build_from_covers([(0, 1), (1, 2), (2, 0)], 3)
        with pytest.raises(NotAPoset):
            build_from_covers([(1, 1)], 2)

    def test_bowtie_is_not_a_lattice(self):
        # 0 < a, b < c, d < 1: a and b have two minimal upper bounds
        covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
        with pytest.raises(NotALattice) as info:
            build_from_covers(covers, 6)
        assert set(info.value.pair) in ({1, 2}, {3, 4})

    def test_unbounded(self):
        with pytest.raises(NotBounded):
            build_from_covers([(0, 1), (0, 2)], 3)
        with pytest.raises(NotBounded):
            build_from_covers([(0, 2), (1, 2)], 3)


class TestSetOperations:
    def test_meet_join_of_pair(self, diamond):
        a, b = diamond.index("a"), diamond.index("b")
        assert meet_of_set(diamond, {a, b}) == diamond.bottom
        assert join_of_set(diamond, {a, b}) == diamond.top

    def test_empty_conventions(self, corpus6):
        for L in corpus6:
            assert meet_of_set(L, set()) == L.top
            assert join_of_set(L, set()) == L.bottom

    def test_singleton(self, corpus6):
        for L in corpus6:
            for x in L.elements:
                assert meet_of_set(L, {x}) == x == join_of_set(L, {x})

    def test_chain_join_is_max(self):
        L = instances.chain(3)
        assert join_of_set(L, {0, 1}) == 1


class TestAtomsCoatoms:
    def test_diamond(self, diamond):
        assert coatoms(diamond) == atoms(diamond) == {diamond.index("a"), diamond.index("b")}

    def test_two_chain(self):
        L = instances.chain(2)
        assert coatoms(L) == {0} and atoms(L) == {1}

    def test_divisors_of_12(self, d12):
        assert {d12.labels[x] for x in coatoms(d12)} == {"4", "6"}
        assert {d12.labels[x] for x in atoms(d12)} == {"2", "3"}


class TestInterval:
    def test_lower_interval_of_diamond(self, diamond):
        view = interval(diamond, diamond.bottom, diamond.index("a"))
        assert view.embedded.n == 2 and is_isomorphic(view.embedded, instances.chain(2))
        assert view.to_parent[view.embedded.bottom] == diamond.bottom

    def test_whole_interval(self, corpus6):
        for L in corpus6:
            view = interval(L, L.bottom, L.top)
            assert view.embedded == L and view.to_parent == tuple(L.elements)

    def test_divisor_interval(self, d12):
        view = interval(d12, d12.index("2"), d12.index("12"))
        assert sorted(view.embedded.labels, key=int) == ["2", "4", "6", "12"]
        assert is_isomorphic(view.embedded, instances.boolean(2))

    def test_not_comparable(self, diamond):
        with pytest.raises(NotComparable):
            interval(diamond, diamond.index("a"), diamond.index("b"))

    def test_operations_inherited(self, corpus6):
        for L in corpus6:
            for lo, hi in product(L.elements, repeat=2):
                if not L.leq(lo, hi):
                    continue
                view = interval(L, lo, hi)
                E, f = view.embedded, view.to_parent
                assert f[E.bottom] == lo and f[E.top] == hi
                for x, y in product(E.elements, repeat=2):
                    assert f[E.meet(x, y)] == L.meet(f[x], f[y])
                    assert f[E.join(x, y)] == L.join(f[x], f[y])

    def test_nested_intervals_compose(self, corpus6):
        for L in corpus6:
            for lo, hi in product(L.elements, repeat=2):
                if not L.leq(lo, hi):
                    continue
                outer = interval(L, lo, hi)
                E = outer.embedded
                for a, b in product(E.elements, repeat=2):
                    if not E.leq(a, b):
                        continue
                    inner = interval(E, a, b)
                    direct = interval(L, outer.to_parent[a], outer.to_parent[b])
                    composed = tuple(outer.to_parent[i] for i in inner.to_parent)
                    assert composed == direct.to_parent
                    assert inner.embedded == direct.embedded


class TestDual:
    def test_chain_self_dual(self):
        assert is_isomorphic(dual(instances.chain(2)), instances.chain(2))

    def test_pentagon_self_dual(self, n5):
        assert is_isomorphic(dual(n5), n5)

    def test_involution(self, corpus6):
        for L in corpus6:
            assert dual(dual(L)) == L

    def test_swaps(self, d12):
        D = dual(d12)
        assert (D.bottom, D.top) == (d12.top, d12.bottom)
        assert all(D.leq(x, y) == d12.leq(y, x) for x, y in product(d12.elements, repeat=2))

    def test_radical_dualizes_to_socle(self, corpus7):
        for L in corpus7:
            D = dual(L)
            assert meet_of_set(L, coatoms(L)) == join_of_set(D, atoms(D))


class TestChains:
    def test_examples(self, n5):
        assert longest_chain_length(instances.chain(2)) == 1
        assert longest_chain_length(instances.boolean(3)) == 3
        assert longest_chain_length(n5) == 3

    def test_maximal_chains_of_n5(self, n5):
        names = [tuple(n5.labels[x] for x in c) for c in maximal_chains(n5)]
        assert sorted(names) == [("0", "a", "c", "1"), ("0", "b", "1")]

    def test_dual_invariant(self, corpus7):
        for L in corpus7:
            assert longest_chain_length(dual(L)) == longest_chain_length(L)


class TestIsomorphism:
    def test_examples(self, diamond, n5):
        assert is_isomorphic(instances.chain(3), instances.chain(3))
        assert not is_isomorphic(diamond, instances.chain(4))

    def test_pentagon_map_is_an_isomorphism(self, n5):
        D = dual(n5)
        f = find_isomorphism(n5, D)
        assert f is not None
        for x, y in product(n5.elements, repeat=2):
            assert n5.leq(x, y) == D.leq(f[x], f[y])
        # the dual map fixes b and swaps the chain ends
        assert n5.labels[f[n5.index("b")]] == "b"
        assert [n5.labels[f[n5.index(s)]] for s in "0ac1"] == ["1", "c", "a", "0"]

    def test_relabelled_copies(self, corpus7):
        import random
        rng = random.Random(3)
        for L in corpus7:
            perm = list(range(L.n))
            rng.shuffle(perm)
            assert is_isomorphic(L, relabel(L, perm))

    def test_non_isomorphic_same_size(self, n5, m3):
        assert not is_isomorphic(n5, m3)


class TestLaws:
    def test_lattice_identities(self, corpus6):
        for L in corpus6:
            m, j = L.meet, L.join
            for x, y in product(L.elements, repeat=2):
                assert m(x, x) == x == j(x, x)
                assert m(x, y) == m(y, x) and j(x, y) == j(y, x)
                assert m(x, j(x, y)) == x == j(x, m(x, y))
                assert L.leq(x, y) == (m(x, y) == x) == (j(x, y) == y)
                assert L.leq(L.bottom, x) and L.leq(x, L.top)
                for z in L.elements:
                    assert m(m(x, y), z) == m(x, m(y, z))
                    assert j(j(x, y), z) == j(x, j(y, z))


@st.composite
def bounded_dags(draw):
    """Random strict relations on 0..n-1 refining the natural order, with 0 and n-1 as bounds."""
    n = draw(st.integers(2, 8))
    middle = range(1, n - 1)
    pairs = [(a, b) for a in middle for b in middle if a < b]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    covers = [(0, x) for x in middle] + [(x, n - 1) for x in middle] + chosen
    if n == 2:
        covers = [(0, 1)]
    return n, covers


@settings(max_examples=300, deadline=None)
@given(bounded_dags())
def test_builder_accepts_exactly_the_lattices(data):
    n, covers = data
    le = [[i == j for j in range(n)] for i in range(n)]
    for a, b in covers:
        le[a][b] = True
    for k in range(n):
        for i in range(n):
            for j in range(n):
                le[i][j] = le[i][j] or (le[i][k] and le[k][j])

    def unique_bound(a, b, below):
        if below:
            cands = [c for c in range(n) if le[c][a] and le[c][b]]
            return sum(all(le[d][c] for d in cands) for c in cands) == 1
        cands = [c for c in range(n) if le[a][c] and le[b][c]]
        return sum(all(le[c][d] for d in cands) for c in cands) == 1

    expected = all(unique_bound(a, b, True) and unique_bound(a, b, False)
                   for a in range(n) for b in range(n))
    try:
        L = build_from_covers(covers, n)
    except NotALattice:
        assert not expected
        return
    assert expected
    for x, y in product(range(n), repeat=2):
        assert L.leq(x, y) == le[x][y]
