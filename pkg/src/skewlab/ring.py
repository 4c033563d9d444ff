"""F_0(X), its induced partial action, and the partial skew group ring.

For a partial action theta on a finite set X over a field K, the algebra
F_0(X) = K^X carries the partial action alpha_t(f) = f o h_{-t} on the ideals
D_t = F_0(X_t).  The skew ring R has the K-basis chi_x delta_t (x in X_t) and
the product

    (a delta_t)(b delta_s) = alpha_t(alpha_{-t}(a) b) delta_{t+s}.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Mapping

from . import linalg
from .action import Label, PartialAction
from .groups import GroupElement
from .linalg import Subspace, Vector
from .scalars import FieldScalar, FieldSpec


class DomainViolation(ValueError):
    pass


class ActionMismatch(ValueError):
    pass


class DimensionGuard(ValueError):
    """A computation would exceed a configured size bound."""


class UnsupportedField(ValueError):
    pass


class FinSuppFunction:
    """A function X -> K stored by its nonzero values."""

    __slots__ = ("field", "values")

    def __init__(self, field: FieldSpec, values: Mapping[Label, object] = ()):
        self.field = field
        vals = {}
        for x, c in dict(values).items():
            c = field.coerce(c)
            if c:
                vals[x] = c
        self.values: dict = vals

    @classmethod
    def _raw(cls, field: FieldSpec, values: dict) -> "FinSuppFunction":
        out = object.__new__(cls)
        out.field = field
        out.values = values
        return out

    @classmethod
    def chi(cls, field: FieldSpec, A: Iterable[Label]) -> "FinSuppFunction":
        return cls._raw(field, {x: field.one for x in A})

    @property
    def support(self) -> frozenset:
        return frozenset(self.values)

    def __call__(self, x: Label) -> FieldScalar:
        return FieldScalar(self.field, self.values.get(x, self.field.zero))

    def __bool__(self):
        return bool(self.values)

    def __eq__(self, other):
        if not isinstance(other, FinSuppFunction):
            return NotImplemented
        return self.field == other.field and self.values == other.values

    def __hash__(self):
        return hash((self.field, frozenset(self.values.items())))

    def __add__(self, other: "FinSuppFunction") -> "FinSuppFunction":
        f = self.field
        out = dict(self.values)
        for x, c in other.values.items():
            s = f.add(out.get(x, f.zero), c)
            if s:
                out[x] = s
            else:
                out.pop(x, None)
        return FinSuppFunction._raw(f, out)

    def __mul__(self, other: "FinSuppFunction") -> "FinSuppFunction":
        """Pointwise product."""
        f = self.field
        small, big = (self.values, other.values) if len(self.values) <= len(other.values) else (other.values, self.values)
        out = {}
        for x, c in small.items():
            d = big.get(x)
            if d is not None:
                v = f.mul(c, d)
                if v:
                    out[x] = v
        return FinSuppFunction._raw(f, out)

    def scale(self, c) -> "FinSuppFunction":
        f = self.field
        c = f.coerce(c)
        if not c:
            return FinSuppFunction._raw(f, {})
        return FinSuppFunction._raw(f, {x: f.mul(c, v) for x, v in self.values.items()})

    def __repr__(self):
        items = ", ".join(f"{x}: {self.field.format(c)}" for x, c in self.values.items())
        return f"FinSuppFunction({{{items}}})"


class SkewRingElement:
    """A finite sum  sum_t f_t delta_t  with supp(f_t) inside X_t."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: "SkewRing", terms: Mapping[GroupElement, FinSuppFunction] = ()):
        self.ring = ring
        clean = {}
        for t, f in dict(terms).items():
            if not isinstance(f, FinSuppFunction):
                f = FinSuppFunction(ring.field, f)
            if not f:
                continue
            if not f.support <= ring.action.domain(t):
                raise DomainViolation(f"coefficient of delta_{t} is not supported in X_{t}")
            clean[t] = f
        self.terms: dict[GroupElement, FinSuppFunction] = clean

    def _same_ring(self, other: "SkewRingElement"):
        if not isinstance(other, SkewRingElement):
            raise TypeError(f"cannot combine a ring element with {type(other).__name__}")
        if other.ring is not self.ring:
            raise ActionMismatch("elements of different skew rings")

    def project(self, g: GroupElement) -> FinSuppFunction:
        """P_g: the coefficient of delta_g."""
        return self.terms.get(g, FinSuppFunction._raw(self.ring.field, {}))

    @property
    def support(self) -> frozenset:
        return frozenset(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "SkewRingElement") -> "SkewRingElement":
        self._same_ring(other)
        terms = dict(self.terms)
        for t, f in other.terms.items():
            terms[t] = terms[t] + f if t in terms else f
        return SkewRingElement(self.ring, terms)

    def __neg__(self) -> "SkewRingElement":
        return self.scale(self.ring.field.neg(self.ring.field.one))

    def __sub__(self, other: "SkewRingElement") -> "SkewRingElement":
        return self + (-other)

    def scale(self, c) -> "SkewRingElement":
        return SkewRingElement(self.ring, {t: f.scale(c) for t, f in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SkewRingElement):
            return self.ring.multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, SkewRingElement):
            return NotImplemented
        return self.ring is other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((t, f) for t, f in self.terms.items()))

    def __str__(self):
        return self.ring.format(self)

    def __repr__(self):
        return f"SkewRingElement({self})"

    def to_json(self) -> dict:
        f = self.ring.field
        sl = self.ring.action.sorted_labels
        return {
            "terms": {
                t.key(): {str(x): f.to_json(self.terms[t].values[x]) for x in sl(self.terms[t].values)}
                for t in sorted(self.terms)
            }
        }


class SkewRing:
    """The partial skew group ring F_0(X) x_alpha G of a partial action over a field.

    Also plays the role of the induced action alpha on F_0(X).
    """

    def __init__(self, action: PartialAction, field: FieldSpec, max_dim: int = 64):
        self.action = action
        self.field = field
        self.max_dim = max_dim
        self.basis: list[tuple[Label, GroupElement]] = [
            (x, t) for t in action.effective_support for x in action.sorted_labels(action.domain(t))
        ]
        self.index = {b: i for i, b in enumerate(self.basis)}
        self._table = None

    def __repr__(self):
        return f"SkewRing({self.action!r}, {self.field})"

    @property
    def dim(self) -> int:
        return len(self.basis)

    def guard(self, what: str = "ring"):
        if self.dim > self.max_dim:
            raise DimensionGuard(f"{what}: ring dimension {self.dim} exceeds max-dim {self.max_dim}")

    # F_0(X) side

    def chi(self, A: Iterable[Label]) -> FinSuppFunction:
        return FinSuppFunction.chi(self.field, A)

    def ideal(self, t: GroupElement) -> frozenset:
        """The support set X_t of the ideal D_t."""
        return self.action.domain(t)

    def alpha(self, t: GroupElement, f: FinSuppFunction) -> FinSuppFunction:
        """alpha_t(f) = f o h_{-t}, defined for f in D_{-t}."""
        if not f.support <= self.action.domain(-t):
            raise DomainViolation(f"support of f is not inside X_{-t}")
        back = self.action.maps.get(-t, {})
        vals = {}
        for x in self.action.domain(t):
            c = f.values.get(back[x])
            if c is not None:
                vals[x] = c
        return FinSuppFunction._raw(self.field, vals)

    # elements

    def zero(self) -> SkewRingElement:
        return SkewRingElement(self, {})

    def element(self, terms: Mapping) -> SkewRingElement:
        """Build from {t: {label: scalar}} or {t: FinSuppFunction}."""
        return SkewRingElement(self, terms)

    def monomial(self, x: Label, t: GroupElement, c=1) -> SkewRingElement:
        return SkewRingElement(self, {t: FinSuppFunction(self.field, {x: c})})

    def local_unit(self, A: Iterable[Label]) -> SkewRingElement:
        """chi_A delta_0."""
        return SkewRingElement(self, {self.action.group.zero: self.chi(A)})

    def multiply(self, u: SkewRingElement, v: SkewRingElement) -> SkewRingElement:
        if u.ring is not self or v.ring is not self:
            raise ActionMismatch("multiplying elements of a different skew ring")
        out: dict[GroupElement, FinSuppFunction] = {}
        for t, a in u.terms.items():
            back = self.alpha(-t, a)
            for s, b in v.terms.items():
                c = back * b
                if not c:
                    continue
                term = self.alpha(t, c)
                key = t + s
                out[key] = out[key] + term if key in out else term
        return SkewRingElement(self, out)

    # coordinates

    def to_vector(self, u: SkewRingElement) -> Vector:
        v = [self.field.zero] * self.dim
        for t, f in u.terms.items():
            for x, c in f.values.items():
                v[self.index[x, t]] = c
        return tuple(v)

    def from_vector(self, v) -> SkewRingElement:
        terms: dict[GroupElement, dict] = {}
        for i, c in enumerate(v):
            if c:
                x, t = self.basis[i]
                terms.setdefault(t, {})[x] = c
        return SkewRingElement(self, {t: FinSuppFunction._raw(self.field, d) for t, d in terms.items()})

    def basis_element(self, i: int) -> SkewRingElement:
        x, t = self.basis[i]
        return self.monomial(x, t)

    @property
    def table(self) -> list[list[list[tuple[int, object]]]]:
        """Structure constants: table[i][j] = [(k, c), ...] with b_i b_j = sum c b_k."""
        if self._table is None:
            self.guard("structure constants")
            elems = [self.basis_element(i) for i in range(self.dim)]
            self._table = [
                [sorted((k, c) for k, c in enumerate(self.to_vector(a * b)) if c) for b in elems]
                for a in elems
            ]
        return self._table

    def mul_vectors(self, a: Vector, b: Vector) -> Vector:
        f = self.field
        out = [f.zero] * self.dim
        table = self.table
        sb = [(j, c) for j, c in enumerate(b) if c]
        for i, ai in enumerate(a):
            if not ai:
                continue
            row = table[i]
            for j, bj in sb:
                for k, c in row[j]:
                    out[k] = f.add(out[k], f.mul(f.mul(ai, bj), c))
        return tuple(out)

    def lmul(self, i: int, v: Vector) -> Vector:
        """b_i * v"""
        f = self.field
        out = [f.zero] * self.dim
        row = self.table[i]
        for j, c in enumerate(v):
            if c:
                for k, s in row[j]:
                    out[k] = f.add(out[k], f.mul(c, s))
        return tuple(out)

    def rmul(self, v: Vector, i: int) -> Vector:
        """v * b_i"""
        f = self.field
        out = [f.zero] * self.dim
        table = self.table
        for j, c in enumerate(v):
            if c:
                for k, s in table[j][i]:
                    out[k] = f.add(out[k], f.mul(c, s))
        return tuple(out)

    def unit_vector(self, A: Iterable[Label]) -> Vector:
        return self.to_vector(self.local_unit(A))

    # pretty printing

    def format(self, u: SkewRingElement) -> str:
        if not u.terms:
            return "0"
        f = self.field
        parts = []
        for t in sorted(u.terms):
            groups: dict = {}
            for x in self.action.sorted_labels(u.terms[t].values):
                groups.setdefault(u.terms[t].values[x], []).append(str(x))
            for c, xs in groups.items():
                coeff = "" if c == f.one else f.format(c) + "·"
                parts.append(f"{coeff}χ{{{','.join(xs)}}}δ({t})")
        return " + ".join(parts)

    def parse_element(self, data: Mapping) -> SkewRingElement:
        """Inverse of :meth:`SkewRingElement.to_json`."""
        terms = {}
        group = self.action.group
        for key, vals in data.get("terms", {}).items():
            terms[group.parse_key(key)] = FinSuppFunction(self.field, vals)
        return SkewRingElement(self, terms)

    # corners and their centres

    def corner_basis(self, A: Iterable[Label]) -> Subspace:
        """RREF basis of e R e for e = chi_A delta_0."""
        self.guard("corner")
        e = self.local_unit(A)
        space = Subspace(self.field, self.dim)
        for i in range(self.dim):
            space.add(self.to_vector(e * self.basis_element(i) * e))
        return space

    def center_of_corner(self, A: Iterable[Label]) -> Subspace:
        """C_e: elements of the corner commuting with the whole corner."""
        corner = self.corner_basis(A)
        gens = corner.basis
        k = len(gens)
        rows = []
        for v in gens:
            sub = self.field.sub
            comm = [[sub(a, b) for a, b in zip(self.mul_vectors(u, v), self.mul_vectors(v, u))] for u in gens]
            # one equation per output coordinate, unknowns = coefficients on gens
            rows.extend([comm[i][c] for i in range(k)] for c in range(self.dim))
        combos = linalg.nullspace(self.field, rows, k) if k else []
        center = Subspace(self.field, self.dim)
        for c in combos:
            center.add(corner._combine_rows(gens, c))
        return center

    def inverse_in(self, space: Subspace, u: Vector, unit: Vector) -> Vector | None:
        """x in ``space`` with u x = unit, or None."""
        gens = space.basis
        cols = [self.mul_vectors(u, g) for g in gens]
        matrix = [[col[r] for col in cols] for r in range(self.dim)]
        sol = linalg.solve(self.field, matrix, unit, len(gens))
        if sol is None:
            return None
        return space._combine_rows(gens, sol)

    def is_field_Ce(self, A: Iterable[Label], max_elements: int = 1 << 20) -> tuple[bool, SkewRingElement | None]:
        """Whether C_e (e = chi_A) is a field, by enumerating its elements.

        Returns (False, None) for the zero corner and (False, u) with a
        non-invertible nonzero u otherwise.
        """
        if not self.field.is_finite:
            raise UnsupportedField("field check of C_e needs a finite field")
        A = list(A)
        center = self.center_of_corner(A)
        if center.dim == 0:
            return False, None
        if self.field.p ** center.dim - 1 > max_elements:
            raise DimensionGuard(
                f"C_e has {self.field.p}^{center.dim} elements, over the limit {max_elements}"
            )
        unit = self.unit_vector(A)
        for u in center.elements():
            if not any(u):
                continue
            if self.inverse_in(center, u, unit) is None:
                return False, self.from_vector(u)
        return True, None

    def associativity_check(self) -> tuple[bool, tuple[int, int, int] | None]:
        """(b_i b_j) b_k == b_i (b_j b_k) for every basis triple."""
        d = self.dim
        units = [linalg.unit_vector(self.field, d, i) for i in range(d)]
        prod = [[self.mul_vectors(units[i], units[j]) for j in range(d)] for i in range(d)]
        for i, j, k in itertools.product(range(d), repeat=3):
            if self.mul_vectors(prod[i][j], units[k]) != self.mul_vectors(units[i], prod[j][k]):
                return False, (i, j, k)
        return True, None


def alpha_apply(ring: SkewRing, t: GroupElement, f: FinSuppFunction) -> FinSuppFunction:
    return ring.alpha(t, f)


def ring_multiply(ring: SkewRing, u: SkewRingElement, v: SkewRingElement) -> SkewRingElement:
    return ring.multiply(u, v)


def coefficient_sum(u: SkewRingElement) -> FinSuppFunction:
    """sum_t f_t, as a function on X."""
    total = FinSuppFunction._raw(u.ring.field, {})
    for f in u.terms.values():
        total = total + f
    return total
