"""Exact arithmetic primitives.

Rationals are ``fractions.Fraction``.  ``Poly`` is a dense univariate
polynomial tagged with the name of its indeterminate.  Coefficients are
rationals or polynomials in an *inner* indeterminate, so ``Q[z][h]`` is a
``Poly`` in ``h`` whose coefficients are ``Poly`` objects in ``z``.  Nesting
order is fixed by ``VAR_ORDER``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import factorial
from typing import Iterable, Sequence, Union

Rational = Fraction

# inner-most first; a Poly in a later variable may carry coefficients that
# are Polys in an earlier one
VAR_ORDER = ("z", "t", "h")

Scalar = Union[Fraction, "Poly"]


class ParameterError(ValueError):
    """Raised for degenerate or inconsistent parameter choices."""


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational")


def _rank(var: str) -> int:
    try:
        return VAR_ORDER.index(var)
    except ValueError:
        raise ValueError(f"unknown indeterminate {var!r}") from None


def _coerce(value):
    if isinstance(value, (Fraction, Poly)):
        return value
    if isinstance(value, int):
        return Fraction(value)
    return NotImplemented


def is_zero(value) -> bool:
    return value == 0


class Poly:
    """Dense polynomial ``sum coeffs[i] * var**i`` with trailing zeros removed."""

    __slots__ = ("var", "coeffs", "_hash")

    def __init__(self, coeffs: Iterable = (), var: str = "h"):
        _rank(var)
        cs = []
        for c in coeffs:
            c = _coerce(c)
            if c is NotImplemented:
                raise TypeError(f"bad coefficient {c!r}")
            if isinstance(c, Poly):
                if _rank(c.var) >= _rank(var):
                    raise TypeError(f"coefficient in {c.var} not inner to {var}")
                if c.is_constant():
                    c = c.constant_term()
            cs.append(c)
        while cs and cs[-1] == 0:
            cs.pop()
        self.var = var
        self.coeffs = tuple(cs)
        self._hash = None

    # construction helpers
    @classmethod
    def const(cls, c, var: str = "h") -> "Poly":
        return cls([c], var)

    @classmethod
    def gen(cls, var: str = "h") -> "Poly":
        return cls([0, 1], var)

    @classmethod
    def linear(cls, root_shift, var: str = "h") -> "Poly":
        """``var + root_shift``."""
        return cls([root_shift, 1], var)

    @classmethod
    def from_roots(cls, shifts: Iterable, var: str = "h", lead=1) -> "Poly":
        """``lead * prod (var + s)`` over the given shifts."""
        out = cls.const(lead, var)
        for s in shifts:
            out = out * cls.linear(s, var)
        return out

    # basic queries
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def is_rational(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.coeffs)

    # ring structure
    def _lift(self, other):
        """Return ``other`` as a coefficient list in self.var, or None."""
        other = _coerce(other)
        if other is NotImplemented:
            return None
        if isinstance(other, Poly) and other.var == self.var:
            return other.coeffs
        if isinstance(other, Poly) and _rank(other.var) > _rank(self.var):
            return None
        return (other,)

    def _outer(self, other) -> bool:
        return isinstance(other, Poly) and _rank(other.var) > _rank(self.var)

    def __add__(self, other):
        if self._outer(other):
            return other.__add__(self)
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        n = max(len(self.coeffs), len(oc))
        out = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            out[i] = c
        for i, c in enumerate(oc):
            out[i] = out[i] + c
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        if self._outer(other):
            return (-other).__add__(self)
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        return self + Poly([-c for c in oc], self.var)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if self._outer(other):
            return other.__mul__(self)
        oc = self._lift(other)
        if oc is None:
            return NotImplemented
        if not self.coeffs or not oc:
            return Poly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(oc) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(oc):
                out[i + j] = out[i + j] + a * b
        return Poly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Poly.const(1, self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __truediv__(self, other):
        other = _coerce(other)
        if isinstance(other, Fraction):
            return Poly([c / other for c in self.coeffs], self.var)
        if isinstance(other, Poly) and other.var != self.var and other.is_constant():
            return self / other.constant_term()
        if isinstance(other, Poly) and other.var != self.var:
            return Poly([exact_div(c, other) for c in self.coeffs], self.var)
        if isinstance(other, Poly):
            q, r = self.divmod(other)
            if not r.is_zero():
                raise ArithmeticError("inexact polynomial division")
            return q
        return NotImplemented

    def divmod(self, other: "Poly"):
        """Euclidean division; the divisor's leading coefficient must be invertible."""
        if not isinstance(other, Poly) or other.var != self.var:
            other = Poly.const(other, self.var)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.leading()
        rem = list(self.coeffs)
        dq = other.degree()
        if len(rem) - 1 < dq:
            return Poly((), self.var), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for i in range(len(rem) - 1, dq - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            q = exact_div(c, lead)
            quot[i - dq] = q
            for j, oc in enumerate(other.coeffs):
                rem[i - dq + j] = rem[i - dq + j] - q * oc
        return Poly(quot, self.var), Poly(rem[:dq], self.var)

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def __mod__(self, other):
        return self.divmod(other)[1]

    # comparisons
    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.var == self.var:
                return self.coeffs == other.coeffs
            if self.is_constant() and other.is_constant():
                return self.constant_term() == other.constant_term()
            return False
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if not self.coeffs:
            return o == 0
        return len(self.coeffs) == 1 and self.coeffs[0] == o

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_term())
            else:
                self._hash = hash((self.var, self.coeffs))
        return self._hash

    def __bool__(self):
        return bool(self.coeffs)

    # calculus of shifts
    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c) -> "Poly":
        """Return ``p(var + c)``."""
        if c == 0 or self.is_constant():
            return self
        return self.compose(Poly.linear(c, self.var))

    def compose(self, inner) -> "Poly":
        acc = Poly((), self.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        if not isinstance(acc, Poly):
            acc = Poly.const(acc, self.var)
        return acc

    def map_coeffs(self, fn) -> "Poly":
        return Poly([fn(c) for c in self.coeffs], self.var)

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self / self.leading()

    def derivative(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:], self.var)

    def substitute(self, var: str, value):
        """Evaluate an inner (or this) indeterminate ``var`` at ``value``."""
        if var == self.var:
            return self(value)
        return Poly([c.substitute(var, value) if isinstance(c, Poly) else c
                     for c in self.coeffs], self.var)

    # display / serialisation
    def to_json(self):
        return [c.to_json() if isinstance(c, Poly) else rational_str(c)
                for c in self.coeffs]

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            cs = f"({c})" if isinstance(c, Poly) or (isinstance(c, Fraction) and c.denominator != 1) else str(c)
            if i == 0:
                parts.append(cs)
            elif i == 1:
                parts.append(f"{cs}*{self.var}")
            else:
                parts.append(f"{cs}*{self.var}^{i}")
        return " + ".join(parts)


PolyQ = Poly


def rational_str(q) -> str:
    q = as_rational(q)
    return f"{q.numerator}/{q.denominator}"


def to_json_scalar(value):
    if isinstance(value, Poly):
        return value.to_json()
    return rational_str(value)


def exact_div(a, b):
    """Exact quotient in Q or in (nested) Q[x]; raises if not exact."""
    if isinstance(b, Poly) and b.is_constant():
        b = b.constant_term()
    if isinstance(b, Fraction) or isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        if isinstance(a, Poly):
            return Poly([exact_div(c, b) for c in a.coeffs], a.var)
        return as_rational(a) / b
    # b is a non-constant Poly
    if not isinstance(a, Poly):
        if a == 0:
            return Fraction(0)
        raise ArithmeticError("inexact division of scalar by polynomial")
    if a.var == b.var:
        q, r = a.divmod(b)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q
    if _rank(a.var) > _rank(b.var):
        return Poly([exact_div(c, b) for c in a.coeffs], a.var)
    raise ArithmeticError("inexact division by outer polynomial")


# gcd and friends (rational coefficients only)

def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd; ``gcd(0, 0) = 0``."""
    var = p.var if isinstance(p, Poly) else q.var
    p = p if isinstance(p, Poly) else Poly.const(p, var)
    q = q if isinstance(q, Poly) else Poly.const(q, var)
    while not q.is_zero():
        p, q = q, p % q
    return p.monic()


def poly_lcm(p: Poly, q: Poly) -> Poly:
    if p.is_zero() or q.is_zero():
        return Poly((), p.var)
    return ((p * q) // poly_gcd(p, q)).monic()


def poly_gcd_many(polys: Iterable[Poly]) -> Poly:
    return reduce(poly_gcd, polys)


def poly_lcm_many(polys: Iterable[Poly]) -> Poly:
    return reduce(poly_lcm, polys)


def same_up_to_scalar(p: Poly, q: Poly) -> bool:
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    return p.monic() == q.monic()


def divides(d: Poly, p: Poly) -> bool:
    if d.is_zero():
        return p.is_zero()
    return (p % d).is_zero()


# Pochhammer symbols and finite differences

def pochhammer_lower(base, n: int):
    """Falling factorial ``base (base-1) ... (base-n+1)``; empty product is 1."""
    if n < 0:
        raise ValueError("negative length")
    out = Fraction(1)
    for i in range(n):
        out = out * (base - i)
    return out


def pochhammer_poly(shift, n: int, var: str = "z") -> Poly:
    """``(var + shift)_n`` as a polynomial."""
    return Poly.from_roots([shift - i for i in range(n)], var)


def finite_difference(p: Poly, step=1, order: int = 1) -> Poly:
    """Forward difference ``p(x+step) - p(x)`` applied ``order`` times."""
    for _ in range(order):
        p = p.shift(step) - p
    return p


def binomial(n: int, k: int) -> int:
    if k < 0 or n < 0 or k > n:
        return 0
    return factorial(n) // (factorial(k) * factorial(n - k))


def prod(items: Iterable, start=None):
    acc = Fraction(1) if start is None else start
    for it in items:
        acc = acc * it
    return acc


def rationals(values: Sequence) -> list:
    return [as_rational(v) for v in values]


class RatFunc:
    """Element of Q(x) as a reduced numerator/denominator pair."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, var: str = "z"):
        if not isinstance(num, Poly):
            num = Poly.const(num, var)
        if den is None:
            den = Poly.const(1, num.var)
        elif not isinstance(den, Poly):
            den = Poly.const(den, num.var)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = num, Poly.const(1, num.var)
            return
        g = poly_gcd(num, den)
        num, den = num // g, den // g
        lc = den.leading()
        self.num, self.den = num / lc, den / lc

    def __add__(self, o):
        o = _rf(o, self.num.var)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, o):
        o = _rf(o, self.num.var)
        return RatFunc(self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, o):
        return _rf(o, self.num.var) - self

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __mul__(self, o):
        o = _rf(o, self.num.var)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = _rf(o, self.num.var)
        return RatFunc(self.num * o.den, self.den * o.num)

    def __eq__(self, o):
        o = _rf(o, self.num.var)
        return self.num == o.num and self.den == o.den

    __hash__ = None

    def __repr__(self):
        return f"({self.num})/({self.den})"

    @property
    def var(self):
        return self.num.var

    def is_polynomial(self) -> bool:
        return self.den.is_constant()

    def as_poly(self) -> Poly:
        if not self.is_polynomial():
            raise ArithmeticError("not a polynomial")
        return self.num / self.den.constant_term()

    def shift(self, c) -> "RatFunc":
        return RatFunc(self.num.shift(c), self.den.shift(c))

    def monic(self) -> "RatFunc":
        if self.num.is_zero():
            return self
        return RatFunc(self.num.monic(), self.den)

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}


def _rf(x, var):
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, Poly):
        return RatFunc(x)
    return RatFunc(Poly.const(x, var))
