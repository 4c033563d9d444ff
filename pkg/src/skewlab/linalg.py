"""Exact linear algebra over a :class:`~skewlab.scalars.FieldSpec`.

Vectors are tuples of raw field values.  :class:`Subspace` keeps a fully
reduced row echelon basis (pivot entries equal to one) that is updated
incrementally, so two subspaces are equal iff their ``basis`` tuples are.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalars import FieldSpec

Vector = tuple


def zero_vector(field: FieldSpec, n: int) -> Vector:
    return (field.zero,) * n


def unit_vector(field: FieldSpec, n: int, i: int) -> Vector:
    v = [field.zero] * n
    v[i] = field.one
    return tuple(v)


def support(v: Sequence) -> list[int]:
    return [i for i, c in enumerate(v) if c]


def normalize(field: FieldSpec, v: Sequence) -> Vector:
    """Scale so the first nonzero entry is one (projective representative)."""
    for c in v:
        if c:
            if c == 1:
                return tuple(v)
            s = field.inv(c)
            return tuple(field.mul(s, x) for x in v)
    return tuple(v)


def add_scaled(field: FieldSpec, v: Sequence, c, w: Sequence) -> list:
    """v + c*w"""
    if field.kind == "gfp":
        p = field.p
        return [(a + c * b) % p for a, b in zip(v, w)]
    return [a + c * b for a, b in zip(v, w)]


class Subspace:
    """A subspace of K^n with an incrementally maintained RREF basis."""

    def __init__(self, field: FieldSpec, n: int, vectors: Iterable[Sequence] = ()):
        self.field = field
        self.n = n
        self._rows: dict[int, list] = {}  # pivot column -> row
        for v in vectors:
            self.add(v)

    @property
    def dim(self) -> int:
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return len(self._rows) == self.n

    @property
    def pivots(self) -> list[int]:
        return sorted(self._rows)

    @property
    def basis(self) -> tuple[Vector, ...]:
        return tuple(tuple(self._rows[p]) for p in sorted(self._rows))

    def reduce(self, v: Sequence) -> list:
        """Remainder of ``v`` after eliminating every pivot column."""
        if len(v) != self.n:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.n}")
        f = self.field
        r = list(v)
        for p, row in self._rows.items():
            c = r[p]
            if c:
                r = add_scaled(f, r, f.neg(c), row)
        return r

    def __contains__(self, v: Sequence) -> bool:
        return not any(self.reduce(v))

    def add(self, v: Sequence) -> bool:
        """Insert ``v``; return True iff the dimension grew."""
        f = self.field
        r = self.reduce(v)
        lead = next((i for i, c in enumerate(r) if c), None)
        if lead is None:
            return False
        if r[lead] != 1:
            s = f.inv(r[lead])
            r = [f.mul(s, x) for x in r]
        for p, row in self._rows.items():
            c = row[lead]
            if c:
                self._rows[p] = add_scaled(f, row, f.neg(c), r)
        self._rows[lead] = r
        return True

    def coordinates(self, v: Sequence) -> list | None:
        """Coefficients of ``v`` in ``basis`` order, or None if ``v`` is outside."""
        if v not in self:
            return None
        return [v[p] for p in sorted(self._rows)]

    def combine(self, coeffs: Sequence) -> Vector:
        f = self.field
        out = [f.zero] * self.n
        for c, p in zip(coeffs, sorted(self._rows)):
            if c:
                out = add_scaled(f, out, c, self._rows[p])
        return tuple(out)

    def elements(self):
        """Every vector of the subspace (finite fields only)."""
        import itertools

        for coeffs in itertools.product(self.field.elements(), repeat=self.dim):
            yield self.combine(coeffs)

    def copy(self) -> "Subspace":
        out = Subspace(self.field, self.n)
        out._rows = {p: list(r) for p, r in self._rows.items()}
        return out

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.field == other.field and self.n == other.n and self.basis == other.basis

    def __repr__(self):
        return f"Subspace(dim={self.dim}, n={self.n}, field={self.field})"

    def restrict_to(self, columns: Iterable[int]) -> "Subspace":
        """Intersection with the coordinate subspace spanned by ``columns``."""
        keep = set(columns)
        outside = [j for j in range(self.n) if j not in keep]
        basis = self.basis
        # combinations of basis rows whose outside coordinates cancel
        m = [[row[j] for row in basis] for j in outside]
        combos = nullspace(self.field, m, len(basis))
        return Subspace(self.field, self.n, (self._combine_rows(basis, c) for c in combos))

    def _combine_rows(self, rows, coeffs) -> Vector:
        f = self.field
        out = [f.zero] * self.n
        for c, row in zip(coeffs, rows):
            if c:
                out = add_scaled(f, out, c, row)
        return tuple(out)


def rref(field: FieldSpec, rows: Sequence[Sequence], ncols: int) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a matrix; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        found = next((i for i in range(r, len(m)) if m[i][col]), None)
        if found is None:
            continue
        m[r], m[found] = m[found], m[r]
        s = field.inv(m[r][col])
        m[r] = [field.mul(s, x) for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                m[i] = add_scaled(field, m[i], field.neg(m[i][col]), m[r])
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(field: FieldSpec, matrix: Sequence[Sequence], ncols: int) -> list[Vector]:
    """Basis of {x : matrix @ x = 0} in K^ncols."""
    rows, pivots = rref(field, matrix, ncols)
    free = [j for j in range(ncols) if j not in set(pivots)]
    out = []
    for j in free:
        x = [field.zero] * ncols
        x[j] = field.one
        for row, p in zip(rows, pivots):
            x[p] = field.neg(row[j])
        out.append(tuple(x))
    return out


def solve(field: FieldSpec, matrix: Sequence[Sequence], rhs: Sequence, ncols: int) -> Vector | None:
    """One solution of matrix @ x = rhs, or None if inconsistent."""
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    rows, pivots = rref(field, aug, ncols + 1)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    return tuple(x)
