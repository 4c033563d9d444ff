import itertools

import pytest

from conftest import fixture_instance
from skewlab.corpus import make_shift_window
from skewlab.groups import GroupSpec
from skewlab.ring import DimensionGuard, SkewRing, UnsupportedField
from skewlab.scalars import GF2, GF3, QQ
from skewlab.simplicity import (
    Lemma1Search,
    NotAFixedPoint,
    NotGSimple,
    ZeroIdeal,
    check_invariance_correspondence,
    coefficient_sum,
    ideal_closure,
    is_G_simple,
    is_simple_oracle,
    is_simple_via_theorems,
    is_two_sided,
    lemma1_witness,
    lemma2_witness,
    nonfree_obstruction,
    verify_lemma1,
    verify_lemma2,
)

Z = GroupSpec.integers()
Z2 = GroupSpec.cyclic(2)


def brute_ideal(R, gen):
    """Ideal generated by ``gen`` as a set of ring elements over GF(2):
    close {gen} under addition and two-sided multiplication by all elements."""
    everything = [R.from_vector(v) for v in itertools.product(range(2), repeat=R.dim)]
    ideal = {R.to_vector(R.zero()), R.to_vector(gen)}
    while True:
        els = [R.from_vector(v) for v in ideal]
        new = set(ideal)
        for a, b in itertools.product(els, repeat=2):
            new.add(R.to_vector(a + b))
        for a, r in itertools.product(els, everything):
            new.add(R.to_vector(a * r))
            new.add(R.to_vector(r * a))
        if new == ideal:
            return ideal
        ideal = new


@pytest.mark.parametrize("name", ["s2.json", "swap-ab.json", "identity-on-a.json", "identity-ab.json"])
def test_closure_matches_set_closure(name):
    R = SkewRing(fixture_instance(name), GF2)
    for v in itertools.product(range(2), repeat=R.dim):
        gen = R.from_vector(v)
        J = ideal_closure(R, [gen])
        assert set(J.space.elements()) == brute_ideal(R, gen)
        assert is_two_sided(R, J.space) == (True, True)


def test_closure_examples(s2, identity_a):
    R = SkewRing(s2, GF2)
    assert ideal_closure(R, [R.monomial("1", Z.zero)]).dim == 4
    assert ideal_closure(R, [R.zero()]).is_zero
    S = SkewRing(identity_a, GF2)
    w = S.monomial("a", Z2.zero) + S.monomial("a", Z2.element(1))
    J = ideal_closure(S, [w])
    assert J.dim == 1 and w in J


def test_closure_over_rationals(swap, identity_a):
    R = SkewRing(swap, QQ)
    assert ideal_closure(R, [R.monomial("a", Z2.zero)]).is_whole_ring
    S = SkewRing(identity_a, QQ)
    w = S.monomial("a", Z2.zero) - S.monomial("a", Z2.element(1))
    assert ideal_closure(S, [w]).dim == 1


class TestOracle:
    def test_swap_simple(self, swap):
        assert is_simple_oracle(SkewRing(swap, GF2)).simple

    def test_identity_not_simple(self, identity_a):
        R = SkewRing(identity_a, GF2)
        v = is_simple_oracle(R)
        assert not v.simple
        J = v.witnesses["ideal"]
        w = R.monomial("a", Z2.zero) + R.monomial("a", Z2.element(1))
        assert [R.from_vector(b) for b in J.space.basis] == [w]
        assert J.is_left_closed and J.is_right_closed and J.is_proper and not J.is_zero

    def test_shift_two_simple(self, s2):
        assert is_simple_oracle(SkewRing(s2, GF2)).simple

    def test_guards(self, s2):
        with pytest.raises(DimensionGuard):
            is_simple_oracle(SkewRing(make_shift_window(5), GF2))  # 2^25 lines
        with pytest.raises(UnsupportedField):
            is_simple_oracle(SkewRing(s2, QQ))


def test_g_simple(swap, identity_ab):
    assert is_G_simple(SkewRing(swap, GF2))[0]
    ok, V, basis = is_G_simple(SkewRing(identity_ab, GF2))
    assert not ok and V == {"a"} and basis == [SkewRing(identity_ab, GF2).chi(["a"])]
    assert is_G_simple(SkewRing(make_shift_window(4), GF2))[0]


def test_invariance_correspondence(identity_ab, swap, small_corpus):
    assert check_invariance_correspondence(SkewRing(identity_ab, GF2), {"a"}) == (True, True)
    assert check_invariance_correspondence(SkewRing(swap, GF2), {"a"}) == (False, False)
    for theta in small_corpus[:20]:
        R = SkewRing(theta, GF2)
        assert check_invariance_correspondence(R, theta.labels) == (True, True)


class TestTheorems:
    def test_shift3(self):
        tv = is_simple_via_theorems(SkewRing(make_shift_window(3), GF2))
        assert tv.theorem1.simple and tv.theorem2.simple and tv.agree

    def test_identity_on_point(self, identity_a):
        R = SkewRing(identity_a, GF2)
        tv = is_simple_via_theorems(R)
        assert not tv.simple and tv.agree
        assert tv.theorem2.witnesses["fixed_point"] == ("a", Z2.element(1))
        (A, w), = tv.theorem1.witnesses["non_field_units"]
        assert A == ("a",) and w * w == R.zero()

    def test_identity_on_two_points(self, identity_ab):
        tv = is_simple_via_theorems(SkewRing(identity_ab, GF2))
        assert not tv.simple
        assert tv.theorem2.witnesses["invariant_subset"] == {"a"}

    def test_rational_skips_theorem1(self, swap):
        tv = is_simple_via_theorems(SkewRing(swap, QQ))
        assert tv.theorem1 is None and tv.theorem2.simple


class TestLemma1:
    def test_shifted_monomial(self, s2):
        R = SkewRing(s2, GF2)
        r = R.monomial("2", Z.element(1))
        w = lemma1_witness(R, r, ["2"])
        assert w == R.monomial("2", Z.zero)
        assert all(verify_lemma1(R, r, w, ["2"]).values())

    def test_already_good(self, s2):
        R = SkewRing(s2, GF2)
        r = R.local_unit(["1"])
        assert lemma1_witness(R, r, ["1"]) == r

    def test_swap(self, swap):
        R = SkewRing(swap, GF2)
        r = R.monomial("a", Z2.element(1))
        w = lemma1_witness(R, r, ["a", "b"])
        assert w.project(Z2.zero) == R.chi(["a", "b"])
        assert all(verify_lemma1(R, r, w, ["a", "b"]).values())

    def test_requires_g_simple(self, identity_ab):
        R = SkewRing(identity_ab, GF2)
        with pytest.raises(NotGSimple):
            Lemma1Search(R, R.monomial("a", Z2.zero))


class TestLemma2:
    def test_s2(self, s2):
        R = SkewRing(s2, GF2)
        J = ideal_closure(R, [R.monomial("1", Z.zero)])
        w = lemma2_witness(R, J, ["1"])
        assert w == R.monomial("1", Z.zero)
        assert all(verify_lemma2(R, J, ["1"], w).values())

    def test_swap(self, swap):
        R = SkewRing(swap, GF2)
        J = ideal_closure(R, [R.monomial("a", Z2.element(1))])
        w = lemma2_witness(R, J, ["a", "b"])
        assert w == R.local_unit(["a", "b"])

    def test_zero_ideal(self, s2):
        R = SkewRing(s2, GF2)
        with pytest.raises(ZeroIdeal):
            lemma2_witness(R, ideal_closure(R, []), ["1"])


class TestObstruction:
    def test_coefficient_sum(self, s2):
        R = SkewRing(s2, GF2)
        u = R.monomial("2", Z.element(1)) + R.monomial("1", Z.zero)
        assert coefficient_sum(u) == R.chi(["1", "2"])

    @pytest.mark.parametrize("field", [GF2, GF3, QQ])
    def test_identity_on_point(self, identity_a, field):
        R = SkewRing(identity_a, field)
        g = Z2.element(1)
        J = nonfree_obstruction(R, "a", g)
        gen = R.monomial("a", Z2.zero) - R.monomial("a", g)
        assert J.dim == 1 and gen in J and J.is_proper
        assert not coefficient_sum(gen)
        assert R.monomial("a", Z2.zero) not in J

    def test_not_fixed(self, swap):
        with pytest.raises(NotAFixedPoint):
            nonfree_obstruction(SkewRing(swap, GF2), "a", Z2.element(1))


def test_field_independence_spot(small_corpus):
    for theta in small_corpus[:60]:
        v2 = is_simple_oracle(SkewRing(theta, GF2)).simple
        v3 = is_simple_oracle(SkewRing(theta, GF3), max_subspaces=3 ** 12).simple
        assert v2 == v3
