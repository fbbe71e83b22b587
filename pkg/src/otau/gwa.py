"""The generalized Weyl algebra A(v) on generators a, b, h.

Relations: a h = (h-1) a, b h = (h+1) b, b a = v(h), a b = v(h-1).

Elements are stored in graded normal form ``sum_t X_t p_t(h)`` where
``X_t = a^t`` for t > 0, ``X_t = b^(-t)`` for t < 0 and ``X_0 = 1``.
Two facts drive every product:

* ``p(h) X_t = X_t p(h+t)`` for all t;
* ``X_s X_t = X_{s+t} P_{s,t}(h)`` with ``P`` a product of shifted v's.

Graded pieces of ideals and of their endomorphism rings are rank-one
C[h]-modules ``X_t g(h) C[h]``; ``g`` is kept as a monic ``RatFunc`` in h
because endomorphisms may carry denominators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, Optional

from .core.exact import (ParameterError, Poly, RatFunc, poly_gcd, poly_lcm, prod,
                         same_up_to_scalar, to_json_scalar)
from .core.params import TauParams

H = "h"


def hpoly(c) -> Poly:
    return c if isinstance(c, Poly) and c.var == H else Poly.const(c, H)


class GwaAlgebra:
    def __init__(self, v: Poly):
        v = hpoly(v)
        if v.is_zero():
            raise ValueError("v must be nonzero")
        self.v = v

    def __eq__(self, other):
        return isinstance(other, GwaAlgebra) and self.v == other.v

    def __hash__(self):
        return hash(self.v)

    def __repr__(self):
        return f"A({self.v})"

    # generators
    def element(self, graded: dict) -> "GwaElement":
        return GwaElement(self, graded)

    def one(self):
        return GwaElement(self, {0: Poly.const(1, H)})

    def zero(self):
        return GwaElement(self, {})

    def scalar(self, c):
        return GwaElement(self, {0: hpoly(c)})

    def poly(self, p: Poly):
        return GwaElement(self, {0: hpoly(p)})

    def h(self):
        return self.poly(Poly.gen(H))

    def a(self):
        return GwaElement(self, {1: Poly.const(1, H)})

    def b(self):
        return GwaElement(self, {-1: Poly.const(1, H)})

    def X(self, t: int, p: Optional[Poly] = None):
        return GwaElement(self, {t: Poly.const(1, H) if p is None else hpoly(p)})

    def vprod(self, shifts: Iterable[int]) -> Poly:
        out = Poly.const(1, H)
        for s in shifts:
            out = out * self.v.shift(s)
        return out

    def xx(self, s: int, t: int) -> Poly:
        """The polynomial P with X_s X_t = X_{s+t} P(h)."""
        if s >= 0 and t >= 0 or s <= 0 and t <= 0:
            return Poly.const(1, H)
        if s > 0:
            r = -t
            if s >= r:
                return self.vprod(-i for i in range(1, r + 1))
            return self.vprod(-i - (r - s) for i in range(1, s + 1))
        r = -s
        if r >= t:
            return self.vprod(range(0, t))
        return self.vprod(i + (t - r) for i in range(0, r))


class GwaElement:
    __slots__ = ("algebra", "graded")

    def __init__(self, algebra: GwaAlgebra, graded: dict):
        self.algebra = algebra
        self.graded = {t: hpoly(p) for t, p in graded.items() if not hpoly(p).is_zero()}

    def _check(self, other):
        if not isinstance(other, GwaElement):
            return self.algebra.scalar(other)
        if other.algebra != self.algebra:
            raise ValueError("elements of different algebras")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.graded)
        for t, p in other.graded.items():
            out[t] = out[t] + p if t in out else p
        return GwaElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return GwaElement(self.algebra, {t: -p for t, p in self.graded.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, GwaElement):
            return gwa_mul(self, other)
        return GwaElement(self.algebra, {t: p * other for t, p in self.graded.items()})

    def __rmul__(self, other):
        return GwaElement(self.algebra, {t: p * other for t, p in self.graded.items()})

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, GwaElement):
            other = self.algebra.scalar(other)
        return self.algebra == other.algebra and self.graded == other.graded

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.graded

    def support(self):
        return sorted(self.graded)

    def component(self, t: int) -> Poly:
        return self.graded.get(t, Poly((), H))

    def is_homogeneous(self) -> bool:
        return len(self.graded) <= 1

    def to_json(self):
        return {str(t): self.graded[t].to_json() for t in sorted(self.graded)}

    def __repr__(self):
        if not self.graded:
            return "0"
        parts = []
        for t in sorted(self.graded):
            gen = "" if t == 0 else (f"a^{t}*" if t > 0 else f"b^{-t}*")
            parts.append(f"{gen}({self.graded[t]})")
        return " + ".join(parts)


def gwa_mul(u: GwaElement, w: GwaElement) -> GwaElement:
    if u.algebra != w.algebra:
        raise ValueError("elements of different algebras")
    alg = u.algebra
    out: Dict[int, Poly] = {}
    for s, p in u.graded.items():
        for t, q in w.graded.items():
            term = alg.xx(s, t) * p.shift(t) * q
            out[s + t] = out[s + t] + term if s + t in out else term
    return GwaElement(alg, out)


def evaluate_poly(p: Poly, x: GwaElement) -> GwaElement:
    """p(x) for an algebra element x (Horner)."""
    acc = x.algebra.zero()
    for c in reversed(p.coeffs):
        acc = acc * x + x.algebra.scalar(c)
    return acc


# shift operators

def sigma_shift(p: Poly, k: int = 1) -> Poly:
    """sigma^k(p) = p(h - k)."""
    return p.shift(-k)


def delta_k(p: Poly, k: int = 1, times: int = 1) -> Poly:
    """(sigma^k - 1) applied ``times`` times."""
    for _ in range(times):
        p = sigma_shift(p, k) - p
    return p


# automorphisms

@dataclass
class GwaAutomorphism:
    image_a: GwaElement
    image_h: GwaElement
    image_b: GwaElement
    label: str = "map"
    word: tuple = ()

    @property
    def algebra(self):
        return self.image_a.algebra

    def apply(self, u: GwaElement) -> GwaElement:
        if self.word:
            for g in reversed(self.word):
                u = g.apply(u)
            return u
        alg = u.algebra
        out = alg.zero()
        for t, p in u.graded.items():
            gen = self.image_a ** t if t >= 0 else self.image_b ** (-t)
            out = out + gen * evaluate_poly(p, self.image_h)
        return out

    def then(self, other: "GwaAutomorphism") -> "GwaAutomorphism":
        """self after other."""
        word = (self.word or (self,)) + (other.word or (other,))
        return compose_gwa(word)


def compose_gwa(word) -> GwaAutomorphism:
    word = tuple(word)
    alg = word[0].algebra
    stub = GwaAutomorphism(alg.a(), alg.h(), alg.b(), "word", word)
    return GwaAutomorphism(stub.apply(alg.a()), stub.apply(alg.h()), stub.apply(alg.b()),
                           "*".join(g.label for g in word), word)


def bj_automorphism(alg: GwaAlgebra, kind: str, k: int = 1, lam=1) -> GwaAutomorphism:
    """Theta_lam, Psi_{k,lam} or Phi_{k,lam} on A(v), m = deg v."""
    lam = Fraction(lam) if not isinstance(lam, Poly) else lam
    m = alg.v.degree()
    if kind == "theta":
        if lam == 0:
            raise ValueError("Theta needs lambda != 0")
        return GwaAutomorphism(alg.a() * lam ** m, alg.h(), alg.b() * (1 / lam) ** m,
                               f"Theta({lam})")
    if k < 1:
        raise ValueError("k must be positive")
    if kind == "psi":
        img_b = alg.b()
        for i in range(1, m + 1):
            coef = Fraction(1, factorial(i)) * lam ** i
            img_b = img_b + alg.poly(delta_k(alg.v, k, i) * coef) * alg.a() ** (i * k - 1)
        img_h = alg.h() - alg.a() ** k * (k * lam)
        return GwaAutomorphism(alg.a(), img_h, img_b, f"Psi({k},{lam})")
    if kind == "phi":
        img_a = alg.a()
        for i in range(1, m + 1):
            coef = Fraction(1, factorial(i)) * (-lam) ** i
            # the polynomial sits to the right of the b-power; on the left the
            # relations fail once k >= 2
            img_a = img_a + alg.b() ** (i * k - 1) * alg.poly(delta_k(alg.v, k, i) * coef)
        img_h = alg.h() + alg.b() ** k * (k * lam)
        return GwaAutomorphism(img_a, img_h, alg.b(), f"Phi({k},{lam})")
    raise ValueError(f"unknown generator kind {kind!r}")


def verify_gwa_automorphism(sigma: GwaAutomorphism) -> bool:
    a, h, b = sigma.image_a, sigma.image_h, sigma.image_b
    alg = a.algebra
    one = alg.one()
    v_at = evaluate_poly(alg.v, h)
    v_at_minus = evaluate_poly(alg.v.shift(-1), h)
    return (a * h == (h - one) * a and b * h == (h + one) * b
            and b * a == v_at and a * b == v_at_minus)


def equivalent_up_to_shift(v1: Poly, v2: Poly) -> bool:
    """v2(h) = eta v1(h + beta) for some scalar eta and shift beta."""
    if v1.degree() != v2.degree():
        return False
    d = v1.degree()
    if d <= 0:
        return True
    m1, m2 = v1.monic(), v2.monic()
    # matching the h^(d-1) coefficient fixes beta
    beta = (m2.coeff(d - 1) - m1.coeff(d - 1)) / d
    return m1.shift(beta) == m2


# the two-vertex specialisation

def weyl_v(params: TauParams) -> Poly:
    """v(h) = b^m prod_{i=0}^{m-1} (h + (tau_0+...+tau_i)/b), b = sum of taus."""
    b = params.total
    out = Poly.const(1, H)
    partial = Fraction(0)
    for i in range(params.m):
        partial = partial + params.tau(i)
        out = out * Poly([partial / b, 1], H) * b
    return out


def l_poly(params: TauParams) -> Poly:
    """l(h) = v(h)/(h+1) made monic: h + tau_0/(tau_0+tau_1)."""
    return Poly([params.tau(0) / params.total, 1], H)


def f_closed_form(n: int, params: TauParams) -> Poly:
    """Image of e y^n x^n in A(v), two-case product formula."""
    v = weyl_v(params)
    if n == 0:
        return Poly.const(1, H)
    if n % 2 == 0:
        k = n // 2
        return prod((v.shift(-i) for i in range(1, k + 1)), Poly.const(1, H))
    k = (n + 1) // 2
    out = Poly([1 - k, 1], H) * params.total
    for i in range(1, k):
        out = out * v.shift(-i)
    return out


def s_poly(params: TauParams, n: int, k: int, eps: int, prime: bool = False) -> Poly:
    """s_{n,2k-eps}(h) (or s' when ``prime``)."""
    l = l_poly(params)
    h = Poly.gen(H)
    out = Poly.const(1, H)
    for i in range(1, 2 * k - eps):
        out = out * ((h - i) if prime else l.shift(-i))
    return out * l.shift(-n + (k - eps) * (k - 1))


# ideals and graded pieces

@dataclass(frozen=True)
class FractionalIdeal:
    """The right ideal a^N A(v) + s(h) A(v)."""
    algebra: GwaAlgebra
    gen_power: int
    gen_poly: Poly
    label: str = ""

    def __post_init__(self):
        if self.gen_poly.is_zero():
            raise ValueError("generator polynomial must be nonzero")
        object.__setattr__(self, "gen_poly", hpoly(self.gen_poly).monic())

    def to_json(self):
        return {"a_power": self.gen_power, "s": self.gen_poly.to_json(), "label": self.label}


def unit_ideal(alg: GwaAlgebra) -> FractionalIdeal:
    return FractionalIdeal(alg, 0, Poly.const(1, H), "unit")


@dataclass(frozen=True)
class GradedComponent:
    degree: int
    generator: RatFunc

    @property
    def profile_degree(self) -> int:
        """Number of zeros plus poles of the generator (0 iff constant)."""
        return self.generator.num.degree() + self.generator.den.degree()

    def contains(self, r: RatFunc) -> bool:
        if r.num.is_zero():
            return True
        return (r / self.generator).is_polynomial()

    def to_json(self):
        return {"t": self.degree, "generator": self.generator.to_json()}


def _rf(p) -> RatFunc:
    return p if isinstance(p, RatFunc) else RatFunc(hpoly(p))


def _intersect(r1: RatFunc, r2: RatFunc) -> RatFunc:
    """Generator of r1 C[h] cap r2 C[h] (fractional, PID)."""
    den = poly_lcm(r1.den, r2.den)
    n1 = r1.num * (den // r1.den)
    n2 = r2.num * (den // r2.den)
    return RatFunc(poly_lcm(n1, n2), den).monic()


def ideal_graded_component(P: FractionalIdeal, t: int) -> GradedComponent:
    """P cap D(t) = a^N D(t-N) + s D(t), collapsed by one gcd."""
    alg = P.algebra
    g_a = alg.xx(P.gen_power, t - P.gen_power)          # a^N X_{t-N} = X_t g_a
    g_s = P.gen_poly.shift(t)                            # s(h) X_t = X_t s(h+t)
    return GradedComponent(t, RatFunc(poly_gcd(g_a, g_s)))


def endo_graded_component(P: FractionalIdeal, t: int) -> GradedComponent:
    """E(t) = {X_t r(h) : X_t r a^N in P and X_t r s in P}."""
    alg = P.algebra
    N = P.gen_power
    # X_t r(h) a^N = X_{t+N} xx(t, N) r(h+N)
    G1 = ideal_graded_component(P, t + N).generator
    c1 = (G1 / _rf(alg.xx(t, N))).shift(-N)
    # X_t r(h) s(h) = X_t r s
    G0 = ideal_graded_component(P, t).generator
    c2 = G0 / _rf(P.gen_poly)
    return GradedComponent(t, _intersect(c1, c2))


def endo_profile(P: FractionalIdeal, degrees: Iterable[int]) -> Dict[int, int]:
    return {t: endo_graded_component(P, t).profile_degree for t in degrees}


def endo_closed_form(params: TauParams, n: int, k: int, eps: int, family: str, t: int,
                     reading: str = "printed") -> GradedComponent:
    """Five-case closed form for E(t) (family "a") or F(t) (family "b").

    ``reading`` picks the s appearing in the negative-degree cases:
    "printed" uses s_{n,2k}; "eps" uses s_{n,2k-eps}; "generator" uses the
    ideal's own generator polynomial.
    """
    from .quiver.points import in_L_epsilon
    if family == "a":
        if not in_L_epsilon(n - k, n, eps):
            raise ValueError("parameters outside L_eps")
        top = n - k * (k - eps + 1)
        lo = -n + k * (k - eps + 1)
        shift_pos = -n + (k - eps) * (k - 1)
    elif family == "b":
        if not in_L_epsilon(n, n - k, eps):
            raise ValueError("parameters outside L_eps")
        top = n - k * (k + eps) + 1
        lo = -n + k * (k + eps) - 1
        shift_pos = -n + (k + eps - 1) * (k - 1)
    else:
        raise ValueError("family must be 'a' or 'b'")
    shift_neg = -n + (k - eps) * (k - 1)
    l = l_poly(params)
    if reading == "printed":
        s = s_poly(params, n, k, 0)
    elif reading == "eps":
        s = s_poly(params, n, k, eps)
    elif reading == "generator":
        s = omega_generator(params, n, k, eps, family).gen_poly
    else:
        raise ValueError(f"unknown reading {reading!r}")
    one = RatFunc(Poly.const(1, H))
    if t == 0:
        g = one
    elif t > top:
        g = one
    elif t > 0:
        g = RatFunc(l.shift(shift_pos + t))
    else:
        frac = RatFunc(s.shift(t), s)
        g = frac * RatFunc(l.shift(shift_neg)) if t >= lo else frac
    return GradedComponent(t, g.monic())


def omega_generator(params: TauParams, n: int, k: int, eps: int, family: str) -> FractionalIdeal:
    """The two-generator ideal attached to the fixed point of (n-k, n; eps)
    (family "a") or (n, n-k; eps) (family "b")."""
    alg = GwaAlgebra(weyl_v(params))
    if n == 0 and k == 0 and eps == 0:
        return unit_ideal(alg)
    if family == "a":
        N = n - (k - eps) * (k - 1)
        s = s_poly(params, n, k, eps)
    else:
        N = n - (k + eps - 1) * (k - 1) + 1
        s = s_poly(params, n, k, 1 - eps, prime=True)
    if N < 0:
        raise ParameterError(f"the a-power {N} is negative for (n={n}, k={k}, eps={eps})")
    return FractionalIdeal(alg, N, s, f"{family}:(n={n},k={k},eps={eps})")


# recognition

def recognize_gwa(alg: GwaAlgebra, E: Dict[int, GradedComponent], check_degrees: int = 3):
    """Return w with E = A(w) (up to scalar), or None.

    a' = X_1 g_1 and b' = X_{-1} g_{-1}; then b'a' = v(h) g_{-1}(h+1) g_1(h)
    must be a polynomial w with a'b' = w(h-1), and powers of a', b' must
    generate every supplied component.
    """
    if 1 not in E or -1 not in E:
        return None
    g1, gm1 = E[1].generator, E[-1].generator
    v = RatFunc(alg.v)
    ba = v * gm1.shift(1) * g1
    ab = RatFunc(alg.v.shift(-1)) * g1.shift(-1) * gm1
    if not ba.is_polynomial() or not ab.is_polynomial():
        return None
    w = ba.as_poly()
    if ab.as_poly() != w.shift(-1):
        return None
    # generation: a'^t = X_t prod_{i<t} g_1(h+i), similarly for b'
    for t, comp in E.items():
        if abs(t) > check_degrees or t == 0:
            continue
        g = g1 if t > 0 else gm1
        acc = RatFunc(Poly.const(1, H))
        for i in range(abs(t)):
            acc = acc * g.shift(i if t > 0 else -i)
        if not (acc.monic() == comp.generator.monic()):
            return None
    return w


def nontriviality_certificate(profile: Dict[int, int]) -> bool:
    """True iff the degree profile on -1, 0, 1 is not the all-zero one."""
    for t in (-1, 0, 1):
        if t not in profile:
            raise ValueError("profile must cover degrees -1, 0, 1")
    return any(profile[t] != 0 for t in (-1, 0, 1))


def same_gwa(v1: Poly, v2: Poly) -> bool:
    return equivalent_up_to_shift(v1, v2)


def serialize_component(c: GradedComponent):
    return c.to_json()


__all__ = [
    "GwaAlgebra", "GwaElement", "GwaAutomorphism", "FractionalIdeal", "GradedComponent",
    "gwa_mul", "evaluate_poly", "sigma_shift", "delta_k", "bj_automorphism",
    "verify_gwa_automorphism", "compose_gwa", "equivalent_up_to_shift", "weyl_v", "l_poly",
    "f_closed_form", "s_poly", "unit_ideal", "ideal_graded_component",
    "endo_graded_component", "endo_profile", "endo_closed_form", "omega_generator",
    "recognize_gwa", "nontriviality_certificate", "to_json_scalar", "same_up_to_scalar",
]
