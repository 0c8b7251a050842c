"""Dense univariate polynomials with exact rational coefficients."""

from __future__ import annotations

import json
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

from .errors import InexactDivision

Scalar = Union[int, Fraction]

__all__ = ["Polynomial", "poly_eval", "poly_divide_exact", "to_fraction"]


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class Polynomial:
    """Polynomial stored as ascending coefficients, ``coeffs[k]`` multiplies ``x**k``.

    Trailing zeros are stripped, so the zero polynomial has no coefficients and
    degree ``-1``.  ``symbol`` only affects printing.
    """

    __slots__ = ("coeffs", "symbol")

    def __init__(self, coeffs: Iterable[Scalar] = (), symbol: str = "μ"):
        cs = [to_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.symbol = symbol

    @classmethod
    def x(cls, symbol: str = "μ") -> Polynomial:
        return cls((0, 1), symbol)

    @classmethod
    def constant(cls, c: Scalar, symbol: str = "μ") -> Polynomial:
        return cls((c,), symbol)

    @classmethod
    def linear(cls, root: Scalar, symbol: str = "μ") -> Polynomial:
        """The monic factor ``(x - root)``."""
        return cls((-to_fraction(root), 1), symbol)

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], symbol: str = "μ") -> Polynomial:
        p = cls.constant(1, symbol)
        for r in roots:
            p = p * cls.linear(r, symbol)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_monic(self) -> bool:
        return self.leading == 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of ``x**k`` (zero outside the stored range)."""
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __call__(self, x):
        return poly_eval(self, x)

    # arithmetic -------------------------------------------------------------

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        return Polynomial.constant(to_fraction(other), self.symbol)

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)], self.symbol)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self.coeffs], self.symbol)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Polynomial((), self.symbol)
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Polynomial(out, self.symbol)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(1, self.symbol)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dd, lead = other.degree, other.leading
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1 - dd, -1, -1):
            q = rem[k + dd] / lead
            quot[k] = q
            if q:
                for j, c in enumerate(other.coeffs):
                    rem[k + j] -= q * c
        return Polynomial(quot, self.symbol), Polynomial(rem[:dd] if dd > 0 else (), self.symbol)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial.constant(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def compose(self, inner: Polynomial) -> Polynomial:
        """``self(inner(x))`` by Horner's rule on polynomials."""
        out = Polynomial((), inner.symbol)
        for c in reversed(self.coeffs):
            out = out * inner + c
        return out

    # serialisation ----------------------------------------------------------

    def to_json(self) -> str:
        """JSON array of ``"num/den"`` strings in ascending degree."""
        return json.dumps(self.to_strings())

    def to_strings(self) -> list[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, text: str, symbol: str = "μ") -> Polynomial:
        return cls([Fraction(s) for s in json.loads(text)], symbol)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = self.symbol if k == 1 else f"{self.symbol}^{k}"
                body = power if mag == 1 else f"{mag}*{power}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def poly_eval(p: Polynomial, x) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    x = to_fraction(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def poly_divide_exact(num: Polynomial, den: Polynomial) -> Polynomial:
    """Quotient ``num / den``; raises :class:`InexactDivision` on a non-zero remainder."""
    q, r = divmod(num, den)
    if not r.is_zero():
        raise InexactDivision(f"({num}) is not divisible by ({den}); remainder {r}")
    return q
