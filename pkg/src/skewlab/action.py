"""Set-level partial actions of abelian groups on finite sets.

A partial action stores, for finitely many group elements ``t``, a domain
``X_t`` and a bijection ``h_t : X_{-t} -> X_t``.  Group elements that are not
stored have empty domain, which keeps everything finite even for G = Z.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Iterable, Mapping

from .groups import GroupElement, GroupSpec

Label = Hashable


class MalformedInstance(ValueError):
    pass


class UnknownLabel(KeyError):
    pass


class EmptySet(ValueError):
    pass


class TooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    axiom: str
    message: str
    t: GroupElement | None = None
    s: GroupElement | None = None
    x: Label | None = None

    def to_json(self) -> dict:
        return {
            "axiom": self.axiom,
            "message": self.message,
            "t": None if self.t is None else self.t.key(),
            "s": None if self.s is None else self.s.key(),
            "x": self.x,
        }


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


class PartialAction:
    """theta = ({X_t}, {h_t}) on a finite labelled set.

    ``domains`` and ``maps`` are taken as given (apart from dropping empty
    domains and filling in ``X_0 = X``, ``h_0 = id`` when absent) so that
    :meth:`validate` can report what is actually wrong with the data.
    """

    def __init__(
        self,
        group: GroupSpec,
        labels: Iterable[Label],
        domains: Mapping[GroupElement, Iterable[Label]],
        maps: Mapping[GroupElement, Mapping[Label, Label]],
    ):
        self.group = group
        self.labels: tuple = tuple(labels)
        if len(set(self.labels)) != len(self.labels):
            raise MalformedInstance("duplicate labels in X")
        known = set(self.labels)
        zero = group.zero

        doms: dict[GroupElement, frozenset] = {}
        for t, dom in domains.items():
            if t.spec != group:
                raise MalformedInstance(f"domain key {t!r} is not in {group}")
            dom = frozenset(dom)
            bad = dom - known
            if bad:
                raise MalformedInstance(f"X_{t} contains unknown labels {sorted(map(str, bad))}")
            if dom:
                doms[t] = dom
        doms.setdefault(zero, frozenset(self.labels))

        hs: dict[GroupElement, dict] = {}
        for t, h in maps.items():
            if t.spec != group:
                raise MalformedInstance(f"map key {t!r} is not in {group}")
            if not isinstance(h, Mapping):
                raise MalformedInstance(f"h_{t} is not a label-to-label mapping")
            for x, y in h.items():
                if x not in known or y not in known:
                    raise MalformedInstance(f"h_{t} mentions unknown label in {x!r} -> {y!r}")
            if h:
                hs[t] = dict(h)
        hs.setdefault(zero, {x: x for x in self.labels})
        # h_{-t} may be omitted; derive it when h_t is injective
        for t, h in list(hs.items()):
            if -t not in hs and len(set(h.values())) == len(h):
                hs[-t] = {y: x for x, y in h.items()}

        self.domains = doms
        self.maps = hs

    # basic queries

    def domain(self, t: GroupElement) -> frozenset:
        return self.domains.get(t, frozenset())

    def h(self, t: GroupElement, x: Label) -> Label:
        return self.maps[t][x]

    def apply(self, t: GroupElement, x: Label) -> Label | None:
        """h_t(x), or None when x is outside X_{-t}."""
        return self.maps.get(t, {}).get(x)

    @property
    def effective_support(self) -> list[GroupElement]:
        """Sorted group elements t with X_t nonempty."""
        return sorted(self.domains)

    @property
    def dimension(self) -> int:
        """Dimension of the induced skew group ring: sum of |X_t|."""
        return sum(len(d) for d in self.domains.values())

    def _label_key(self, x):
        return self.labels.index(x)

    def sorted_labels(self, xs: Iterable[Label]) -> list:
        return sorted(xs, key=self._label_key)

    def __eq__(self, other):
        if not isinstance(other, PartialAction):
            return NotImplemented
        return (
            self.group == other.group
            and self.labels == other.labels
            and self.domains == other.domains
            and self.maps == other.maps
        )

    def __repr__(self):
        return f"PartialAction({self.group}, |X|={len(self.labels)}, support={len(self.domains)})"

    # axioms

    def validate(self) -> ValidationReport:
        report = ValidationReport()
        add = report.violations.append
        zero = self.group.zero
        X = frozenset(self.labels)

        if self.domain(zero) != X:
            add(Violation("identity", "X_0 differs from X", t=zero))
        if any(self.maps[zero].get(x) != x for x in self.labels) or set(self.maps[zero]) != X:
            bad = next((x for x in self.labels if self.maps[zero].get(x) != x), None)
            add(Violation("identity", "h_0 is not the identity", t=zero, x=bad))

        keys = set(self.domains) | set(self.maps)
        for t in sorted(keys):
            if -t not in self.domains and t in self.domains:
                add(Violation("symmetry", f"X_{t} stored but X_{-t} is empty", t=t))

        for t in sorted(keys):
            src, dst = self.domain(-t), self.domain(t)
            h = self.maps.get(t)
            if h is None:
                if dst or src:
                    add(Violation("bijection", f"h_{t} missing although X_{t} or X_{-t} is nonempty", t=t))
                continue
            if set(h) != src:
                x = sorted(set(h) ^ src, key=str)[0]
                add(Violation("bijection", f"domain of h_{t} is not X_{-t}", t=t, x=x))
            image = [h[x] for x in h]
            if len(set(image)) != len(image):
                x = next(x for x in h if image.count(h[x]) > 1)
                add(Violation("bijection", f"h_{t} is not injective", t=t, x=x))
            if set(image) != dst:
                x = next((x for x in h if h[x] not in dst), None)
                add(Violation("bijection", f"h_{t} does not map X_{-t} onto X_{t}", t=t, x=x))

        if not report.ok:
            return report

        support = self.effective_support
        for t in support:
            for s in support:
                lhs = {self.maps[t][x] for x in self.domain(-t) & self.domain(s)}
                rhs = self.domain(t) & self.domain(t + s)
                if lhs != rhs:
                    x = self.sorted_labels(lhs ^ rhs)[0]
                    add(Violation("intersection", f"h_{t}(X_{-t} & X_{s}) != X_{t} & X_{t + s}", t=t, s=s, x=x))
                for x in self.sorted_labels(self.domain(-s) & self.domain(-s - t)):
                    y = self.maps[s][x]
                    lhs_x = self.maps[t].get(y)
                    rhs_x = self.maps.get(t + s, {}).get(x)
                    if lhs_x is None or lhs_x != rhs_x:
                        add(Violation("composition", f"h_{t}(h_{s}(x)) != h_{t + s}(x)", t=t, s=s, x=x))
        return report

    # dynamics

    def _check_label(self, x):
        if x not in self.domains[self.group.zero]:
            raise UnknownLabel(x)

    def orbit(self, x: Label) -> frozenset:
        """V_x, as the connected component of x in the graph x -- h_t(x)."""
        self._check_label(x)
        seen = {x}
        stack = [x]
        while stack:
            y = stack.pop()
            for h in self.maps.values():
                z = h.get(y)
                if z is not None and z not in seen:
                    seen.add(z)
                    stack.append(z)
        return frozenset(seen)

    def orbits(self) -> list[frozenset]:
        out, seen = [], set()
        for x in self.labels:
            if x not in seen:
                V = self.orbit(x)
                seen |= V
                out.append(V)
        return out

    def is_invariant(self, V: Iterable[Label]) -> bool:
        """h_t(V & X_{-t}) is contained in V & X_t for every t."""
        V = frozenset(V)
        for t, h in self.maps.items():
            for x in V & self.domain(-t):
                if h[x] not in V:
                    return False
        return True

    def is_minimal(self) -> tuple[bool, frozenset | None]:
        """(minimal?, a proper nonempty invariant subset when not)."""
        if not self.labels:
            raise EmptySet("minimality is undefined on the empty set")
        V = self.orbit(self.labels[0])
        if len(V) == len(self.labels):
            return True, None
        return False, V

    def fixed_set(self, t: GroupElement) -> frozenset:
        h = self.maps.get(t, {})
        return frozenset(x for x in self.domain(-t) if h.get(x) == x)

    def is_free(self) -> tuple[bool, tuple | None]:
        """(free?, a fixed pair (x, t) with t != 0 when not)."""
        for t in self.effective_support:
            if t.is_zero:
                continue
            F = self.fixed_set(t)
            if F:
                return False, (self.sorted_labels(F)[0], t)
        return True, None

    def is_topologically_free(self) -> bool:
        """Every F_t (t != 0) has empty interior in the discrete topology."""
        # every subset of a discrete space is open, so interior(F_t) = F_t
        interiors = (self.fixed_set(t) for t in self.effective_support if not t.is_zero)
        return not any(interiors)

    def invariant_subsets(self, max_size: int = 16) -> list[frozenset]:
        """Every invariant subset, built as unions of orbits."""
        if len(self.labels) > max_size:
            raise TooLarge(f"|X| = {len(self.labels)} exceeds {max_size}")
        orbits = self.orbits()
        out = []
        for mask in range(1 << len(orbits)):
            V = frozenset().union(*(O for i, O in enumerate(orbits) if mask >> i & 1))
            out.append(V)
        return sorted(out, key=lambda V: (len(V), self.sorted_labels(V)))


def validate_action(theta: PartialAction) -> ValidationReport:
    return theta.validate()
