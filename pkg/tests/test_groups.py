import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from skewlab.groups import GroupSpec, InfiniteGroup, SpecMismatch, enumerate_group, group_arith, subgroups

Z = GroupSpec.integers()
Z2 = GroupSpec.cyclic(2)


def test_examples():
    assert group_arith(Z.element(1), Z.element(-1), "add").is_zero
    assert group_arith(Z2.element(1), Z2.element(1), "add") == Z2.zero
    ZxZ3 = GroupSpec(1, (3,))
    assert ZxZ3.element(2, 2) + ZxZ3.element(1, 2) == ZxZ3.element(3, 1)


def test_enumeration():
    assert [g.coords for g in enumerate_group(Z2)] == [(0,), (1,)]
    K = GroupSpec(0, (2, 2))
    assert [g.coords for g in enumerate_group(K)] == [(0, 0), (0, 1), (1, 0), (1, 1)]
    with pytest.raises(InfiniteGroup):
        enumerate_group(Z)


@pytest.mark.parametrize("torsion", [(2,), (3,), (4,), (2, 2), (2, 3), (6,)])
def test_finite_groups(torsion):
    G = GroupSpec(0, torsion)
    els = G.elements()
    assert len(els) == G.order and len(set(els)) == G.order
    for a, b in itertools.product(els, repeat=2):
        assert a + b == b + a
    for a in els:
        assert group_arith(a, None, "neg") + a == G.zero


@given(st.lists(st.integers(-50, 50), min_size=3, max_size=3), st.lists(st.integers(-50, 50), min_size=3, max_size=3))
def test_free_commutative(a, b):
    G = GroupSpec(2, (5,))
    x, y = G.element(*a), G.element(*b)
    assert x + y == y + x
    assert (x - y) + y == x


def test_mismatch_and_keys():
    with pytest.raises(SpecMismatch):
        Z.element(1) + Z2.element(1)
    K = GroupSpec(1, (3,))
    g = K.element(-2, 5)
    assert g.key() == "-2,2"
    assert K.parse_key(g.key()) == g


def test_subgroups_of_klein():
    subs = subgroups(GroupSpec(0, (2, 2)))
    assert sorted(len(H) for H in subs) == [1, 2, 2, 2, 4]
    assert len(subgroups(GroupSpec.cyclic(6))) == 4
