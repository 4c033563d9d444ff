"""Exact scalar fields: prime fields GF(p) and the rationals.

Ring and linear-algebra code works on *raw* values (``int`` residues for
GF(p), :class:`fractions.Fraction` for Q) through the methods of
:class:`FieldSpec`.  :class:`FieldScalar` is the user-facing value type that
carries its field along and supports the usual operators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any


class MixedFields(ValueError):
    """Operands belong to different fields."""


class DivisionByZero(ZeroDivisionError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    k = 3
    while k * k <= n:
        if n % k == 0:
            return False
        k += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """A prime field (``kind == "gfp"``) or the rationals (``kind == "rational"``)."""

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "gfp":
            if self.p is None or not _is_prime(self.p):
                raise ValueError(f"GF(p) needs a prime p, got {self.p!r}")
        elif self.kind == "rational":
            if self.p is not None:
                raise ValueError("rational field takes no modulus")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @classmethod
    def gf(cls, p: int) -> "FieldSpec":
        return cls("gfp", p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rational")

    @classmethod
    def parse(cls, name: str) -> "FieldSpec":
        """Parse CLI names such as ``gf2``, ``gf7``, ``rational``/``q``."""
        name = name.strip().lower()
        if name in ("rational", "rationals", "q"):
            return cls.rationals()
        if name.startswith("gf"):
            return cls.gf(int(name[2:]))
        raise ValueError(f"unknown field {name!r}")

    @property
    def is_finite(self) -> bool:
        return self.kind == "gfp"

    @property
    def name(self) -> str:
        return f"gf{self.p}" if self.kind == "gfp" else "rational"

    def __str__(self):
        return f"GF({self.p})" if self.kind == "gfp" else "Q"

    # raw-value arithmetic
    @property
    def zero(self):
        return 0 if self.kind == "gfp" else Fraction(0)

    @property
    def one(self):
        return 1 if self.kind == "gfp" else Fraction(1)

    def coerce(self, value: Any):
        """Map an int, Fraction or ``"num/den"`` string into the field."""
        if isinstance(value, FieldScalar):
            if value.field != self:
                raise MixedFields(f"{value.field} value used in {self}")
            return value.value
        if isinstance(value, str):
            value = Fraction(value.strip())
        if self.kind == "gfp":
            if isinstance(value, Fraction):
                if value.denominator % self.p == 0:
                    raise DivisionByZero(f"denominator vanishes in GF({self.p})")
                return value.numerator * pow(value.denominator, -1, self.p) % self.p
            return int(value) % self.p
        return Fraction(value)

    def add(self, a, b):
        return (a + b) % self.p if self.kind == "gfp" else a + b

    def sub(self, a, b):
        return (a - b) % self.p if self.kind == "gfp" else a - b

    def mul(self, a, b):
        return (a * b) % self.p if self.kind == "gfp" else a * b

    def neg(self, a):
        return (-a) % self.p if self.kind == "gfp" else -a

    def inv(self, a):
        if not a:
            raise DivisionByZero("inverse of zero")
        return pow(a, -1, self.p) if self.kind == "gfp" else 1 / a

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def elements(self):
        """All elements of a finite field, 0 first."""
        if self.kind != "gfp":
            raise ValueError("the rationals cannot be enumerated")
        return range(self.p)

    def format(self, a) -> str:
        if self.kind == "gfp":
            return str(a)
        return str(a.numerator) if a.denominator == 1 else f"{a.numerator}/{a.denominator}"

    def to_json(self, a):
        """Integers for GF(p), ``"num/den"`` strings for rationals."""
        return a if self.kind == "gfp" else self.format(a)

    def spec_json(self) -> dict:
        if self.kind == "gfp":
            return {"type": "gfp", "p": self.p}
        return {"type": "rational"}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        if data.get("type") == "gfp":
            return cls.gf(int(data["p"]))
        if data.get("type") == "rational":
            return cls.rationals()
        raise ValueError(f"bad field description {data!r}")


GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)
QQ = FieldSpec.rationals()


class FieldScalar:
    """An element of a :class:`FieldSpec`, normalized on construction."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldSpec, value: Any = 0):
        self.field = field
        self.value = field.coerce(value)

    def _other(self, other) -> Any:
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} and {other.field}")
            return other.value
        return self.field.coerce(other)

    def _wrap(self, raw) -> "FieldScalar":
        out = object.__new__(FieldScalar)
        out.field = self.field
        out.value = raw
        return out

    def __add__(self, other):
        return self._wrap(self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return self._wrap(self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return self._wrap(self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self.field.div(self.value, self._other(other)))

    def __rtruediv__(self, other):
        return self._wrap(self.field.div(self._other(other), self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def inverse(self) -> "FieldScalar":
        return self._wrap(self.field.inv(self.value))

    def __bool__(self):
        return bool(self.value)

    def __eq__(self, other):
        if isinstance(other, FieldScalar):
            if other.field != self.field:
                raise MixedFields(f"{self.field} and {other.field}")
            return self.value == other.value
        if isinstance(other, (int, Fraction, str)):
            return self.value == self.field.coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"FieldScalar({self.field}, {self.field.format(self.value)})"

    def __str__(self):
        return self.field.format(self.value)


def scalar_arith(a: FieldScalar, b: FieldScalar | None, op: str):
    """Apply ``op`` in {add, sub, mul, div, neg, inv, eq} to field scalars."""
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if a.field != b.field:
        raise MixedFields(f"{a.field} and {b.field}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "eq":
        return a == b
    raise ValueError(f"unknown op {op!r}")
