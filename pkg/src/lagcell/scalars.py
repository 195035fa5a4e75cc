"""
Exact scalars for the row-reduction oracle.

GaussianRational is Q(i) on top of fractions.Fraction; Jet carries a value
together with its first partial derivatives with respect to a fixed list of
real variables, so that arithmetic propagates derivatives exactly.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Sequence, Tuple

from .errors import DomainError


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class GaussianRational:
    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Rational)):
            return cls(x, 0)
        return NotImplemented

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return GaussianRational(self.re * other, self.im * other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        nrm = self.norm()
        if not nrm:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / nrm, -self.im / nrm)

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            if not other:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if not isinstance(other, GaussianRational):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = GaussianRational.coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        return f"{self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i"


I = GaussianRational(0, 1)
_ZERO = GaussianRational(0, 0)


class Jet:
    """value + sum_j partials[j] * d(var_j); all variables are real."""

    __slots__ = ("value", "partials")

    def __init__(self, value, partials: Sequence):
        self.value = GaussianRational.coerce(value)
        self.partials = tuple(partials)

    @classmethod
    def constant(cls, value, nvars: int) -> "Jet":
        return cls(value, (_ZERO,) * nvars)

    @classmethod
    def variable(cls, value, index: int, nvars: int, direction=1) -> "Jet":
        """A coordinate whose derivative along var ``index`` is ``direction``."""
        p = [_ZERO] * nvars
        p[index] = GaussianRational.coerce(direction)
        return cls(value, p)

    def _lift(self, other):
        if isinstance(other, Jet):
            return other
        g = GaussianRational.coerce(other)
        if g is NotImplemented:
            return NotImplemented
        return Jet(g, (_ZERO,) * len(self.partials))

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def is_identically_zero(self) -> bool:
        return self.value.is_zero() and all(p.is_zero() for p in self.partials)

    def __add__(self, other):
        if not isinstance(other, Jet):
            g = GaussianRational.coerce(other)
            if g is NotImplemented:
                return NotImplemented
            return Jet(self.value + g, self.partials)
        return Jet(
            self.value + other.value,
            [a + b for a, b in zip(self.partials, other.partials)],
        )

    __radd__ = __add__

    def __neg__(self):
        return Jet(-self.value, [-a for a in self.partials])

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Jet):
            g = GaussianRational.coerce(other)
            if g is NotImplemented:
                return NotImplemented
            return Jet(self.value * g, [a * g for a in self.partials])
        u, v = self.value, other.value
        return Jet(
            u * v,
            [a * v + u * b for a, b in zip(self.partials, other.partials)],
        )

    __rmul__ = __mul__

    def inverse(self) -> "Jet":
        if self.value.is_zero():
            raise ZeroDivisionError("jet with zero value is not invertible")
        inv = self.value.inverse()
        d = -(inv * inv)
        return Jet(inv, [a * d for a in self.partials])

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return other * self.inverse()

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self.value == other.value and self.partials == other.partials

    __hash__ = None

    def __repr__(self):
        return f"Jet({self.value}, {list(map(str, self.partials))})"


def is_zero(x) -> bool:
    """Zero test shared by Fraction, GaussianRational and Jet (value only)."""
    if isinstance(x, (GaussianRational, Jet)):
        return x.is_zero()
    return not x


def real_part_row(j: Jet) -> Tuple[Fraction, ...]:
    return tuple(p.re for p in j.partials)


def imag_part_row(j: Jet) -> Tuple[Fraction, ...]:
    return tuple(p.im for p in j.partials)


def as_gaussian(x) -> GaussianRational:
    g = GaussianRational.coerce(x)
    if g is NotImplemented:
        raise DomainError(f"cannot interpret {x!r} as a Gaussian rational")
    return g
