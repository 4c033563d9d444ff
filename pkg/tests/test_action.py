import itertools

import pytest

from conftest import fixture_instance
from skewlab.action import EmptySet, MalformedInstance, PartialAction, TooLarge, UnknownLabel
from skewlab.corpus import make_shift_window
from skewlab.groups import GroupSpec

Z = GroupSpec.integers()
Z2 = GroupSpec.cyclic(2)


def brute_invariant_subsets(theta):
    """Scan all 2^|X| subsets for h_t(V & X_{-t}) <= V & X_t."""
    out = []
    X = theta.labels
    for k in range(len(X) + 1):
        for V in itertools.combinations(X, k):
            V = set(V)
            if all(theta.maps[t][x] in V for t in theta.maps for x in V & theta.domain(-t)):
                out.append(frozenset(V))
    return set(out)


class TestValidate:
    def test_identity_z2_on_point(self, identity_a):
        assert identity_a.validate().ok

    def test_s2(self, s2):
        assert s2.validate().ok
        assert s2.domain(Z.element(1)) == {"2"}
        assert s2.domain(Z.element(-1)) == {"1"}

    def test_broken_s2_has_witness(self):
        report = fixture_instance("s2-broken.json").validate()
        assert not report.ok
        v = next(v for v in report.violations if v.t == Z.element(1))
        assert v.axiom == "bijection" and v.x == "1"

    def test_each_axiom_independently(self):
        X = ["a", "b"]
        one = Z2.element(1)
        # X_0 != X
        bad = PartialAction(Z2, X, {Z2.zero: ["a"]}, {})
        assert any(v.axiom == "identity" for v in bad.validate().violations)
        # missing -t domain (for Z, 1 and -1 differ)
        bad = PartialAction(Z, X, {Z.element(1): ["b"]}, {Z.element(1): {"a": "b"}})
        assert any(v.axiom == "symmetry" for v in bad.validate().violations)
        # not injective
        bad = PartialAction(Z2, X, {one: ["a", "b"]}, {one: {"a": "a", "b": "a"}})
        assert any(v.axiom == "bijection" for v in bad.validate().violations)
        # bijections fine but composition fails: h_1 h_1 must be h_2
        Z3 = GroupSpec.cyclic(3)
        g1, g2 = Z3.element(1), Z3.element(2)
        bad = PartialAction(Z3, X, {g1: X, g2: X}, {g1: {"a": "b", "b": "a"}, g2: {"a": "b", "b": "a"}})
        kinds = {v.axiom for v in bad.validate().violations}
        assert "composition" in kinds

    def test_intersection_axiom(self):
        # Z on three points: h_1 = a->b, h_2 = a->c, but X_1 & X_2 pattern inconsistent
        X = ["a", "b", "c"]
        e = Z.element
        bad = PartialAction(
            Z, X, {e(1): ["b"], e(-1): ["a"], e(2): ["c"], e(-2): ["a"]},
            {e(1): {"a": "b"}, e(2): {"a": "c"}},
        )
        kinds = {v.axiom for v in bad.validate().violations}
        assert "intersection" in kinds

    def test_malformed(self):
        with pytest.raises(MalformedInstance):
            PartialAction(Z2, ["a"], {Z2.element(1): ["z"]}, {})
        with pytest.raises(MalformedInstance):
            PartialAction(Z2, ["a", "a"], {}, {})


class TestDynamics:
    def test_orbits(self, s2, identity_ab, swap):
        assert s2.orbit("1") == {"1", "2"}
        assert identity_ab.orbit("a") == {"a"}
        assert swap.orbit("b") == {"a", "b"}
        with pytest.raises(UnknownLabel):
            s2.orbit("9")

    def test_minimal(self, identity_ab, swap):
        assert identity_ab.is_minimal() == (False, frozenset({"a"}))
        assert swap.is_minimal() == (True, None)
        for n in range(1, 9):
            assert make_shift_window(n).is_minimal()[0]
        with pytest.raises(EmptySet):
            PartialAction(Z2, [], {}, {}).is_minimal()

    def test_fixed_sets(self, s2, identity_a):
        assert s2.fixed_set(Z.zero) == {"1", "2"}
        assert s2.fixed_set(Z.element(1)) == set()
        assert s2.fixed_set(Z.element(7)) == set()
        assert identity_a.fixed_set(Z2.element(1)) == {"a"}

    def test_free(self, identity_a, swap):
        assert identity_a.is_free() == (False, ("a", Z2.element(1)))
        assert swap.is_free() == (True, None)
        for n in range(1, 9):
            theta = make_shift_window(n)
            assert theta.is_free()[0] and theta.is_topologically_free()

    def test_invariant_subsets(self, swap, identity_ab, s2):
        assert swap.invariant_subsets() == [frozenset(), frozenset({"a", "b"})]
        assert set(identity_ab.invariant_subsets()) == {frozenset(), frozenset("a"), frozenset("b"), frozenset("ab")}
        assert s2.invariant_subsets() == [frozenset(), frozenset({"1", "2"})]
        with pytest.raises(TooLarge):
            make_shift_window(20).invariant_subsets()


def test_corpus_properties(small_corpus):
    for theta in small_corpus:
        assert theta.validate().ok
        X = theta.labels
        for x, y in itertools.product(X, repeat=2):
            assert (y in theta.orbit(x)) == (x in theta.orbit(y))
        subsets = theta.invariant_subsets()
        assert set(subsets) == brute_invariant_subsets(theta)
        minimal = theta.is_minimal()[0]
        assert minimal == (len(subsets) == 2)
        assert minimal == all(theta.orbit(x) == set(X) for x in X)
        assert theta.is_free()[0] == theta.is_topologically_free()
