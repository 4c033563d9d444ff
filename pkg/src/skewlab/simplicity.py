"""Ideals of the skew ring and two independent simplicity deciders.

``is_simple_oracle`` knows nothing about dynamics: it checks that every
nonzero vector generates the whole ring.  ``is_simple_via_theorems`` uses
only the partial action (minimality, freeness) and the corner centres C_e.
The lemma witnesses reconstruct the intermediate objects of the proof that
the two must agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import linalg
from .action import Label, PartialAction
from .groups import GroupElement
from .linalg import Subspace, Vector
from .ring import (
    DimensionGuard,
    FinSuppFunction,
    SkewRing,
    SkewRingElement,
    UnsupportedField,
    coefficient_sum,
)

__all__ = [
    "IdealSubspace",
    "SimplicityVerdict",
    "TheoremVerdicts",
    "ideal_closure",
    "is_two_sided",
    "is_simple_oracle",
    "is_G_simple",
    "check_invariance_correspondence",
    "is_simple_via_theorems",
    "Lemma1Search",
    "lemma1_witness",
    "verify_lemma1",
    "lemma2_witness",
    "verify_lemma2",
    "minimal_support_element",
    "nonfree_obstruction",
    "coefficient_sum",
    "nonempty_subsets",
    "NotGSimple",
    "SearchExhausted",
    "NotAnIdeal",
    "ZeroIdeal",
    "NotAFixedPoint",
]


class NotGSimple(ValueError):
    pass


class SearchExhausted(RuntimeError):
    """The bounded witness search gave up before finding a certificate."""


class NotAnIdeal(ValueError):
    pass


class ZeroIdeal(ValueError):
    pass


class NotAFixedPoint(ValueError):
    pass


@dataclass
class IdealSubspace:
    ring: SkewRing
    space: Subspace
    is_left_closed: bool = True
    is_right_closed: bool = True

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def is_zero(self) -> bool:
        return self.space.dim == 0

    @property
    def is_whole_ring(self) -> bool:
        return self.space.is_full

    @property
    def is_proper(self) -> bool:
        return not self.space.is_full

    def __contains__(self, u: SkewRingElement) -> bool:
        return self.ring.to_vector(u) in self.space

    def elements_basis(self) -> list[SkewRingElement]:
        return [self.ring.from_vector(v) for v in self.space.basis]

    def to_json(self) -> dict:
        return {"dim": self.dim, "basis": [u.to_json() for u in self.elements_basis()]}


def is_two_sided(ring: SkewRing, space: Subspace) -> tuple[bool, bool]:
    """(left closed, right closed) under multiplication by canonical basis vectors."""
    left = all(ring.lmul(i, v) in space for v in space.basis for i in range(ring.dim))
    right = all(ring.rmul(v, i) in space for v in space.basis for i in range(ring.dim))
    return left, right


def ideal_closure(ring: SkewRing, generators: Iterable[SkewRingElement | Vector]) -> IdealSubspace:
    """Smallest two-sided ideal containing ``generators``."""
    ring.guard("ideal closure")
    space = Subspace(ring.field, ring.dim)
    queue = []
    for g in generators:
        v = ring.to_vector(g) if isinstance(g, SkewRingElement) else tuple(g)
        if space.add(v):
            queue.append(v)
    while queue and not space.is_full:
        v = queue.pop()
        for i in range(ring.dim):
            for w in (ring.lmul(i, v), ring.rmul(v, i)):
                if space.add(w):
                    queue.append(w)
    return IdealSubspace(ring, space)


# brute-force oracle


def projective_points(field, d: int):
    """One representative per 1-dim subspace of GF(p)^d: fewest nonzeros first,
    then lexicographic by position, leading coefficient one."""
    p = field.p
    for k in range(1, d + 1):
        for pos in itertools.combinations(range(d), k):
            for rest in itertools.product(range(1, p), repeat=k - 1):
                v = [0] * d
                v[pos[0]] = 1
                for i, c in zip(pos[1:], rest):
                    v[i] = c
                yield tuple(v)


def subspace_count(field, d: int) -> int:
    return (field.p ** d - 1) // (field.p - 1)


def _generates_ring(ring: SkewRing, w: Vector, known_full: set) -> bool:
    """Whether the ideal generated by ``w`` is all of R.

    ``known_full`` holds normalized vectors already known to generate R; the
    closure stops as soon as it produces a multiple of one of them.
    """
    field = ring.field
    space = Subspace(field, ring.dim, [w])
    queue = [w]
    while queue:
        v = queue.pop()
        for i in range(ring.dim):
            for u in (ring.lmul(i, v), ring.rmul(v, i)):
                if not any(u):
                    continue
                if linalg.normalize(field, u) in known_full:
                    return True
                if space.add(u):
                    if space.is_full:
                        return True
                    queue.append(u)
    return space.is_full


@dataclass
class SimplicityVerdict:
    simple: bool
    method: str  # oracle | theorem-1 | theorem-2
    witnesses: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "simple" if self.simple else "not-simple"


def is_simple_oracle(ring: SkewRing, max_subspaces: int = 1 << 16) -> SimplicityVerdict:
    """Simple iff every nonzero vector generates R (checked one line at a time)."""
    if not ring.field.is_finite:
        raise UnsupportedField("the enumeration oracle needs a finite field")
    if ring.dim == 0:
        raise ValueError("the zero ring has no simplicity verdict")
    n = subspace_count(ring.field, ring.dim)
    if n > max_subspaces:
        raise DimensionGuard(
            f"oracle: {n} one-dimensional subspaces (dim {ring.dim} over {ring.field}) exceeds max-subspaces {max_subspaces}"
        )
    ring.guard("oracle")
    # every representative processed so far generated R, so later closures may stop on reaching one
    known_full: set = set()
    for w in projective_points(ring.field, ring.dim):
        if _generates_ring(ring, w, known_full):
            known_full.add(w)
            continue
        ideal = ideal_closure(ring, [w])
        ideal.is_left_closed, ideal.is_right_closed = is_two_sided(ring, ideal.space)
        return SimplicityVerdict(False, "oracle", {"generator": ring.from_vector(w), "ideal": ideal})
    return SimplicityVerdict(True, "oracle")


# theorem side


def is_G_simple(ring: SkewRing) -> tuple[bool, frozenset | None, list[FinSuppFunction]]:
    """F_0(X) is G-simple iff the only invariant subsets are empty and X.

    Returns (flag, witness V, basis {chi_x : x in V} of F_0(V)).
    """
    theta = ring.action
    subsets = theta.invariant_subsets()
    proper = [V for V in subsets if V and len(V) < len(theta.labels)]
    if not proper:
        return True, None, []
    V = proper[0]
    return False, V, [ring.chi([x]) for x in theta.sorted_labels(V)]


def check_invariance_correspondence(ring: SkewRing, V: Iterable[Label]) -> tuple[bool, bool]:
    """(V is G-invariant, F_0(V) is G-invariant), computed separately."""
    theta = ring.action
    V = frozenset(V)
    set_side = all(
        theta.h(t, x) in V & theta.domain(t) for t in theta.effective_support for x in V & theta.domain(-t)
    )
    ideal_side = True
    for t in theta.effective_support:
        target = V & theta.domain(t)
        for x in V & theta.domain(-t):
            if not ring.alpha(t, ring.chi([x])).support <= target:
                ideal_side = False
    return set_side, ideal_side


def nonempty_subsets(labels: Sequence[Label]):
    for k in range(1, len(labels) + 1):
        for A in itertools.combinations(labels, k):
            yield A


@dataclass
class TheoremVerdicts:
    theorem1: SimplicityVerdict | None
    theorem2: SimplicityVerdict

    @property
    def agree(self) -> bool:
        return self.theorem1 is None or self.theorem1.simple == self.theorem2.simple

    @property
    def simple(self) -> bool:
        return self.theorem2.simple


def theorem2_verdict(theta: PartialAction) -> SimplicityVerdict:
    minimal, V = theta.is_minimal()
    free, fixed = theta.is_free()
    witnesses = {"minimal": minimal, "free": free}
    if V is not None:
        witnesses["invariant_subset"] = V
    if fixed is not None:
        witnesses["fixed_point"] = fixed
    return SimplicityVerdict(minimal and free, "theorem-2", witnesses)


def theorem1_verdict(ring: SkewRing, max_elements: int = 1 << 20) -> SimplicityVerdict:
    g_simple, V, _ = is_G_simple(ring)
    non_field = []
    for A in nonempty_subsets(ring.action.labels):
        ok, witness = ring.is_field_Ce(A, max_elements=max_elements)
        if not ok:
            non_field.append((A, witness))
    witnesses = {"g_simple": g_simple, "non_field_units": non_field}
    if V is not None:
        witnesses["invariant_subset"] = V
    return SimplicityVerdict(g_simple and not non_field, "theorem-1", witnesses)


def is_simple_via_theorems(ring: SkewRing, max_elements: int = 1 << 20) -> TheoremVerdicts:
    """Theorem-2 verdict always; theorem-1 verdict when the field is finite."""
    t2 = theorem2_verdict(ring.action)
    t1 = theorem1_verdict(ring, max_elements) if ring.field.is_finite else None
    return TheoremVerdicts(t1, t2)


# lemma witnesses


def group_support_size(ring: SkewRing, v: Vector) -> int:
    return len({ring.basis[i][1] for i, c in enumerate(v) if c})


class Lemma1Search:
    """Search RrR for r' with P_0(r') = chi_A and supp(r') no larger than supp(r).

    Follows the proof: if P_0(r) = 0, first move the smallest support element
    h to 0 by right-multiplying with alpha_{-h}(e_h) delta_{-h}; then grow the
    span of two-sided products with basis vectors level by level and look for
    the required P_0 inside the part supported on supp(r).
    """

    def __init__(self, ring: SkewRing, r: SkewRingElement, depth: int = 6, check_g_simple: bool = True):
        if not r:
            raise ValueError("lemma 1 needs a nonzero element")
        if check_g_simple and not is_G_simple(ring)[0]:
            raise NotGSimple("F_0(X) is not G-simple")
        ring.guard("lemma 1 search")
        self.ring = ring
        self.original = r
        self.depth = depth
        zero = ring.action.group.zero
        self.shift = None
        if not r.project(zero):
            h = min(r.support)
            e_h = ring.chi(r.project(h).support)
            m = ring.element({-h: ring.alpha(-h, e_h)})
            r = r * m
            self.shift = h
        self.start = r
        self.support = r.support
        self.columns = [i for i, (_, t) in enumerate(ring.basis) if t in self.support]
        self.zero_columns = [i for i, (_, t) in enumerate(ring.basis) if t == zero]
        self._levels: list[Subspace] = [Subspace(ring.field, ring.dim, [ring.to_vector(r)])]
        self._restricted: list[Subspace | None] = [None]

    def _level(self, k: int) -> Subspace:
        while len(self._levels) <= k:
            prev = self._levels[-1]
            nxt = prev.copy()
            for v in prev.basis:
                for i in range(self.ring.dim):
                    nxt.add(self.ring.lmul(i, v))
                    nxt.add(self.ring.rmul(v, i))
            self._levels.append(nxt)
            self._restricted.append(None)
        return self._levels[k]

    def _restricted_level(self, k: int) -> Subspace:
        self._level(k)
        if self._restricted[k] is None:
            self._restricted[k] = self._levels[k].restrict_to(self.columns)
        return self._restricted[k]

    def witness(self, A: Iterable[Label]) -> SkewRingElement:
        ring = self.ring
        target = ring.unit_vector(A)
        rhs = [target[i] for i in self.zero_columns]
        for k in range(self.depth + 1):
            W = self._restricted_level(k)
            gens = W.basis
            if gens:
                matrix = [[g[i] for g in gens] for i in self.zero_columns]
                sol = linalg.solve(ring.field, matrix, rhs, len(gens))
                if sol is not None:
                    return ring.from_vector(W._combine_rows(gens, sol))
            if k > 0 and self._levels[k] == self._levels[k - 1]:
                break  # the span is already the whole ideal RrR
        raise SearchExhausted(f"no r' with P_0 = chi_A within depth {self.depth}")


def lemma1_witness(ring: SkewRing, r: SkewRingElement, A: Iterable[Label], depth: int = 6) -> SkewRingElement:
    return Lemma1Search(ring, r, depth).witness(A)


def verify_lemma1(ring: SkewRing, r: SkewRingElement, r_prime: SkewRingElement, A: Iterable[Label]) -> dict:
    """Re-check a) r' in RrR, b) P_0(r') = chi_A, c) #supp(r') <= #supp(r)."""
    zero = ring.action.group.zero
    return {
        "in_ideal": r_prime in ideal_closure(ring, [r]),
        "projection": r_prime.project(zero) == ring.chi(A),
        "support_bound": len(r_prime.support) <= len(r.support),
    }


def minimal_support_element(ring: SkewRing, J: IdealSubspace, scan_limit: int = 1 << 16) -> SkewRingElement:
    """A nonzero element of J with the fewest group-support elements.

    Scans every element when the field is finite and J is small enough,
    otherwise the basis and pairwise combinations of basis vectors.
    """
    basis = J.space.basis
    best = min(basis, key=lambda v: group_support_size(ring, v))
    if group_support_size(ring, best) == 1:
        return ring.from_vector(best)
    f = ring.field
    if f.is_finite and f.p ** J.dim <= scan_limit:
        candidates = (v for v in J.space.elements() if any(v))
    else:
        candidates = (
            tuple(linalg.add_scaled(f, a, s, b))
            for a, b in itertools.combinations(basis, 2)
            for s in (f.one, f.neg(f.one))
        )
    for v in candidates:
        if any(v) and group_support_size(ring, v) < group_support_size(ring, best):
            best = v
            if group_support_size(ring, best) == 1:
                break
    return ring.from_vector(best)


def lemma2_witness(ring: SkewRing, J: IdealSubspace, A: Iterable[Label], depth: int = 6) -> SkewRingElement:
    """An element of J & C_e with P_0 = chi_A (e = chi_A)."""
    if J.is_zero:
        raise ZeroIdeal("lemma 2 needs a nonzero ideal")
    if is_two_sided(ring, J.space) != (True, True):
        raise NotAnIdeal("subspace is not a two-sided ideal")
    A = list(A)
    r = minimal_support_element(ring, J)
    r2 = Lemma1Search(ring, r, depth).witness(A)
    e = ring.local_unit(A)
    return e * r2 * e


def verify_lemma2(ring: SkewRing, J: IdealSubspace, A: Iterable[Label], w: SkewRingElement) -> dict:
    A = list(A)
    zero = ring.action.group.zero
    corner = [ring.from_vector(v) for v in ring.corner_basis(A).basis]
    return {
        "in_ideal": w in J,
        "projection": w.project(zero) == ring.chi(A),
        "central": all(w * y == y * w for y in corner),
    }


def nonfree_obstruction(ring: SkewRing, x: Label, g: GroupElement) -> IdealSubspace:
    """Ideal generated by chi_x delta_0 - chi_x delta_g for a fixed point h_g(x) = x."""
    theta = ring.action
    if g.is_zero or x not in theta.domain(-g) or theta.h(g, x) != x:
        raise NotAFixedPoint(f"h_{g}({x}) != {x}")
    zero = theta.group.zero
    generator = ring.monomial(x, zero) - ring.monomial(x, g)
    return ideal_closure(ring, [generator])
