"""Exact coefficient fields: the rationals and prime fields F_p.

Field elements are plain ``fractions.Fraction`` objects over Q and ``FpElement``
objects over F_p, so all downstream linear algebra works through ordinary
operator overloading.  A ``Field`` object carries construction, parsing and
formatting; it never holds mutable state.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    pass


class FpElement:
    """An element of F_p.  Immutable; arithmetic checks the modulus."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldError(f"modulus mismatch: {self.p} vs {other.p}")
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value + o.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value - o.value, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(o.value - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FpElement(self.value * o.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.value == 0:
            raise ZeroDivisionError("division by zero in F_p")
        return FpElement(self.value * pow(o.value, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __neg__(self):
        return FpElement(-self.value, self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"{self.value} (mod {self.p})"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """Exact field: Field.rationals() or Field.prime(p)."""

    def __init__(self, p: int | None = None):
        if p is not None and not _is_prime(p):
            raise FieldError(f"{p} is not prime")
        self.p = p

    @classmethod
    def rationals(cls) -> "Field":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "Field":
        return cls(p)

    @classmethod
    def from_spec(cls, spec: str) -> "Field":
        """Parse a CLI field selector: 'q' or 'fp:P'."""
        spec = spec.strip().lower()
        if spec in ("q", "qq", "rationals"):
            return cls.rationals()
        if spec.startswith("fp:"):
            return cls.prime(int(spec[3:]))
        raise FieldError(f"unknown field selector {spec!r}")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def zero(self):
        return Fraction(0) if self.p is None else FpElement(0, self.p)

    def one(self):
        return Fraction(1) if self.p is None else FpElement(1, self.p)

    def of(self, n: int):
        """Image of an integer in the field."""
        return Fraction(n) if self.p is None else FpElement(n, self.p)

    def parse(self, s: str):
        """Parse an element from text ('3', '-1/2', '5')."""
        s = s.strip()
        if self.p is None:
            return Fraction(s)
        if "/" in s:
            num, den = s.split("/")
            return FpElement(int(num), self.p) / FpElement(int(den), self.p)
        return FpElement(int(s), self.p)

    def fmt(self, x) -> str:
        if self.p is None:
            return str(x)
        return str(x.value)

    def power(self, x, n: int):
        """x**n for integer n (negative allowed)."""
        if n >= 0:
            out = self.one()
            for _ in range(n):
                out = out * x
            return out
        return self.one() / self.power(x, -n)

    def elements(self):
        """All field elements; only available for prime fields."""
        if self.p is None:
            raise FieldError("cannot enumerate the rationals")
        return [FpElement(v, self.p) for v in range(self.p)]

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "Q" if self.p is None else f"F_{self.p}"
