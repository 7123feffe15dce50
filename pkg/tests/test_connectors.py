import pytest

from psqcayley import (
    connector_count_formula,
    element_order,
    enumerate_connectors,
    is_connector,
    make_prime_triple,
)

from helpers import order_scan_connectors, triples_with_group_order_at_most

T235 = make_prime_triple(2, 3, 5)
T357 = make_prime_triple(3, 5, 7)


def test_count_at_small_instance():
    cs = enumerate_connectors(T235)
    assert cs.size == 28
    assert connector_count_formula(T235) == 28


def test_members_equal_order_scan():
    assert set(enumerate_connectors(T235).members) == order_scan_connectors(T235)


def test_alpha_class():
    cs = enumerate_connectors(T235)
    assert cs.class_alpha_sq == (225, 675)
    assert len(cs.class_beta_sq) == 9 - 3
    assert len(cs.class_gamma_sq) == 25 - 5


def test_membership_examples():
    members = set(enumerate_connectors(T235).members)
    assert 36 in members
    assert 180 not in members


def test_is_connector_examples():
    assert not is_connector(0, T235)
    assert is_connector(36, T235)
    assert not is_connector(450, T235)  # order 2
    assert not is_connector(180, T235)  # order 5
    with pytest.raises(ValueError):
        is_connector(900, T235)


def test_formula_at_next_instance():
    assert connector_count_formula(T357) == 68
    assert enumerate_connectors(T357).size == 68


def test_formula_always_even():
    for t in triples_with_group_order_at_most(1_000_000):
        assert connector_count_formula(t) % 2 == 0


def test_size_matches_formula_up_to_million():
    for t in triples_with_group_order_at_most(1_000_000):
        assert enumerate_connectors(t).size == connector_count_formula(t)


def test_membership_equivalence_full_sweep():
    for t in triples_with_group_order_at_most(10_000):
        members = set(enumerate_connectors(t).members)
        for m in range(t.n):
            assert is_connector(m, t) == (m in members)


def test_inverse_closure_and_zero_excluded():
    for t in (T235, T357):
        cs = enumerate_connectors(t)
        members = set(cs.members)
        assert 0 not in members
        for m in members:
            assert (t.n - m) in members


def test_order_classes_partition_members():
    cs = enumerate_connectors(T235)
    classes = [set(cs.class_alpha_sq), set(cs.class_beta_sq), set(cs.class_gamma_sq)]
    assert classes[0] | classes[1] | classes[2] == set(cs.members)
    assert not (classes[0] & classes[1] or classes[0] & classes[2] or classes[1] & classes[2])
    for m in cs.class_alpha_sq:
        assert element_order(m, T235) == T235.m_alpha
    for m in cs.class_beta_sq:
        assert element_order(m, T235) == T235.m_beta
    for m in cs.class_gamma_sq:
        assert element_order(m, T235) == T235.m_gamma


def test_members_sorted_ascending():
    for t in (T235, T357):
        members = enumerate_connectors(t).members
        assert list(members) == sorted(members)
