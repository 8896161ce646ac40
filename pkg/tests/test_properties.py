import pytest

from loewy import instances
from loewy.core import dual
from loewy.enumeration import corpus
from loewy.properties import (TRIPLE_SCAN_LIMIT, check_modular_triples, distributivity_violation,
                              find_pentagon, is_distributive, is_modular, is_pentagon,
                              modular_violation, modularity_report, semimodular_violation)


def test_diamond_is_distributive(diamond):
    assert is_distributive(diamond) and is_modular(diamond)


def test_pentagon_witnesses(n5):
    report = modularity_report(n5)
    assert not report.is_modular
    x, y, z = report.violating_triple
    assert n5.leq(x, z)
    assert n5.join(x, n5.meet(y, z)) != n5.meet(n5.join(x, y), z)
    assert is_pentagon(n5, report.pentagon)
    z0, x, y1, y2, z1 = report.pentagon
    assert [n5.labels[e] for e in (z0, x, y1, y2, z1)] == ["0", "a", "b", "c", "1"]


def test_m3_modular_not_distributive(m3):
    assert check_modular_triples(m3).is_modular
    assert find_pentagon(m3) is None
    assert distributivity_violation(m3) is not None


def test_chains_and_booleans():
    for k in range(1, 6):
        assert is_distributive(instances.chain(k))
        assert is_distributive(instances.boolean(k))


def test_methods_agree_up_to_seven(corpus7):
    for L in corpus7:
        report = modularity_report(L)
        if report.pentagon is not None:
            assert is_pentagon(L, report.pentagon)


def test_cover_conditions_match_triples_on_small_lattices():
    for L in corpus(8):
        by_covers = semimodular_violation(L, True) is None and semimodular_violation(L, False) is None
        assert by_covers == (modular_violation(L) is None)


@pytest.mark.parametrize("orders", [(2, 2, 2), (2, 4), (4, 4), (2, 2, 4), (3, 3), (2, 6), (8,), (3, 9), (2, 2, 2, 2)])
def test_cover_conditions_on_subgroup_lattices(orders):
    L = instances.subgroup_lattice_abelian(orders).lattice
    assert L.n <= TRIPLE_SCAN_LIMIT
    assert modular_violation(L) is None
    assert semimodular_violation(L, True) is None and semimodular_violation(L, False) is None


def test_nonmodular_fails_a_cover_condition(n5):
    assert semimodular_violation(n5, True) is not None or semimodular_violation(n5, False) is not None


def test_distributive_implies_modular(corpus7):
    for L in corpus7:
        if is_distributive(L):
            assert is_modular(L)


def test_properties_self_dual(corpus7):
    for L in corpus7:
        D = dual(L)
        assert is_modular(D) == is_modular(L)
        assert is_distributive(D) == is_distributive(L)


def test_counts_by_class():
    # modular and distributive lattices on 6 elements
    assert sum(is_modular(L) for L in corpus(6, min_n=6)) == 8
    assert sum(is_distributive(L) for L in corpus(6, min_n=6)) == 5
