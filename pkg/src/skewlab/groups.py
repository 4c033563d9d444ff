"""Finitely generated abelian groups Z^r x Z_n1 x ... x Z_nk, written additively."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import total_ordering


class SpecMismatch(ValueError):
    """Elements from different groups were combined."""


class InfiniteGroup(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(n) for n in self.torsion))
        if self.free_rank < 0:
            raise ValueError("free rank must be non-negative")
        if any(n < 2 for n in self.torsion):
            raise ValueError(f"torsion orders must be >= 2, got {self.torsion}")

    @classmethod
    def cyclic(cls, n: int) -> "GroupSpec":
        return cls(0, (n,))

    @classmethod
    def integers(cls) -> "GroupSpec":
        return cls(1, ())

    @property
    def rank(self) -> int:
        """Number of coordinates of an element."""
        return self.free_rank + len(self.torsion)

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise InfiniteGroup(f"{self} is infinite")
        out = 1
        for n in self.torsion:
            out *= n
        return out

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z{n}" for n in self.torsion]
        return " x ".join(parts) if parts else "0"

    def element(self, *coords) -> "GroupElement":
        if len(coords) == 1 and isinstance(coords[0], (tuple, list)):
            coords = tuple(coords[0])
        if len(coords) != self.rank:
            raise SpecMismatch(f"{self} needs {self.rank} coordinates, got {coords}")
        r = self.free_rank
        reduced = tuple(int(c) for c in coords[:r]) + tuple(
            int(c) % n for c, n in zip(coords[r:], self.torsion)
        )
        return GroupElement(self, reduced)

    @property
    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.rank)

    def elements(self) -> list["GroupElement"]:
        """Every element once, lexicographic in the coordinates."""
        if not self.is_finite:
            raise InfiniteGroup(f"cannot enumerate {self}")
        return [GroupElement(self, c) for c in itertools.product(*(range(n) for n in self.torsion))]

    def parse_key(self, key: str) -> "GroupElement":
        """Inverse of :meth:`GroupElement.key`: ``"1,-2"`` -> element."""
        key = key.strip()
        coords = [int(c) for c in key.split(",")] if key else []
        return self.element(*coords)

    def to_json(self) -> dict:
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    @classmethod
    def from_json(cls, data: dict) -> "GroupSpec":
        return cls(int(data.get("free_rank", 0)), tuple(data.get("torsion", ())))


@total_ordering
@dataclass(frozen=True)
class GroupElement:
    spec: GroupSpec
    coords: tuple[int, ...]

    @property
    def free_part(self) -> tuple[int, ...]:
        return self.coords[: self.spec.free_rank]

    @property
    def torsion_part(self) -> tuple[int, ...]:
        return self.coords[self.spec.free_rank:]

    def _check(self, other: "GroupElement"):
        if not isinstance(other, GroupElement):
            return NotImplemented
        if other.spec != self.spec:
            raise SpecMismatch(f"{self.spec} vs {other.spec}")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        if self._check(other) is NotImplemented:
            return NotImplemented
        r = self.spec.free_rank
        a, b = self.coords, other.coords
        free = tuple(x + y for x, y in zip(a[:r], b[:r]))
        tors = tuple((x + y) % n for x, y, n in zip(a[r:], b[r:], self.spec.torsion))
        return GroupElement(self.spec, free + tors)

    def __neg__(self) -> "GroupElement":
        r = self.spec.free_rank
        free = tuple(-x for x in self.coords[:r])
        tors = tuple((-x) % n for x, n in zip(self.coords[r:], self.spec.torsion))
        return GroupElement(self.spec, free + tors)

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __lt__(self, other: "GroupElement") -> bool:
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self.coords < other.coords

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def key(self) -> str:
        """JSON key form: comma-joined integer coordinates."""
        return ",".join(str(c) for c in self.coords)

    def __str__(self):
        return self.coords[0].__str__() if len(self.coords) == 1 else "(" + self.key() + ")"

    def __repr__(self):
        return f"<{self} in {self.spec}>"


def group_arith(a: GroupElement, b: GroupElement | None, op: str):
    """Apply ``op`` in {add, neg, is_zero, eq}."""
    if op == "neg":
        return -a
    if op == "is_zero":
        return a.is_zero
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.spec != b.spec:
        raise SpecMismatch(f"{a.spec} vs {b.spec}")
    if op == "add":
        return a + b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")


def enumerate_group(spec: GroupSpec) -> list[GroupElement]:
    return spec.elements()


def subgroups(spec: GroupSpec) -> list[frozenset[GroupElement]]:
    """All subgroups of a finite abelian group, smallest first."""
    elements = spec.elements()
    found = {frozenset([spec.zero])}
    frontier = list(found)
    while frontier:
        nxt = []
        for H in frontier:
            for g in elements:
                if g in H:
                    continue
                K = _closure(H | {g})
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted(found, key=lambda H: (len(H), sorted(H)))


def _closure(gens) -> frozenset[GroupElement]:
    els = set(gens)
    bdy = list(els)
    while bdy:
        new = []
        for a in list(gens):
            for b in bdy:
                c = a + b
                if c not in els:
                    els.add(c)
                    new.append(c)
        bdy = new
    return frozenset(els)
