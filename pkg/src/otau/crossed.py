"""Normal forms in the crossed product S_tau(Z_m) and the corner map to A(v).

Elements are finite sums ``sum c * e_i y^a x^b`` keyed by ``(i, a, b)``.
Relations used for rewriting:

* ``e_i x = x e_{i+1}`` and ``e_i y = y e_{i-1}``, hence ``x e_j = e_{j-1} x``
  and ``y e_j = e_{j+1} y``;
* ``x y - y x = tau = sum_i tau_i e_i``.

Moving x leftwards past ``y^c`` produces ``sum_r y^r tau y^{c-1-r}``, and
each ``tau`` collapses against the idempotent in front of it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .core.exact import Poly, to_json_scalar
from .core.params import TauParams
from .gwa import GwaAlgebra, GwaElement, H, bj_automorphism

CrossedParams = TauParams
Key = Tuple[int, int, int]


class SElement:
    __slots__ = ("params", "terms")

    def __init__(self, params: TauParams, terms: Optional[Dict[Key, object]] = None):
        self.params = params
        m = params.m
        clean = {}
        for (i, a, b), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise ValueError("negative exponent")
            if c != 0:
                key = (i % m, a, b)
                clean[key] = clean[key] + c if key in clean else c
        self.terms = {k: c for k, c in clean.items() if c != 0}

    # constructors
    @classmethod
    def monomial(cls, params, i: int, a: int = 0, b: int = 0, c=1):
        return cls(params, {(i, a, b): Fraction(c) if isinstance(c, int) else c})

    @classmethod
    def idem(cls, params, i: int):
        return cls.monomial(params, i)

    @classmethod
    def one(cls, params):
        return cls(params, {(i, 0, 0): Fraction(1) for i in range(params.m)})

    @classmethod
    def x(cls, params):
        return cls(params, {(i, 0, 1): Fraction(1) for i in range(params.m)})

    @classmethod
    def y(cls, params):
        return cls(params, {(i, 1, 0): Fraction(1) for i in range(params.m)})

    @classmethod
    def tau(cls, params):
        return cls(params, {(i, 0, 0): params.tau(i) for i in range(params.m)})

    # arithmetic
    def _same(self, other):
        if not isinstance(other, SElement):
            return SElement.one(self.params).scale(other)
        if other.params != self.params:
            raise ValueError("parameter mismatch")
        return other

    def __add__(self, other):
        other = self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return SElement(self.params, out)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._same(other))

    def __rsub__(self, other):
        return self._same(other) - self

    def scale(self, c):
        return SElement(self.params, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, SElement):
            return s_mul(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = SElement.one(self.params)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SElement):
            return NotImplemented
        return self.params == other.params and self.terms == other.terms

    __hash__ = None

    def is_zero(self):
        return not self.terms

    def in_corner(self, i: int = 0) -> bool:
        m = self.params.m
        return all(j == i and (a - b) % m == 0 for (j, a, b) in self.terms)

    def to_json(self):
        return [[i, a, b, to_json_scalar(c)] for (i, a, b), c in sorted(self.terms.items())]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c})*e{i}*y^{a}*x^{b}" for (i, a, b), c in sorted(self.terms.items()))


def _left_x(params: TauParams, terms: Dict[Key, object]) -> Dict[Key, object]:
    out: Dict[Key, object] = {}

    def add(k, c):
        out[k] = out[k] + c if k in out else c

    m = params.m
    for (j, c, d), coef in terms.items():
        i = (j - 1) % m
        add((i, c, d + 1), coef)
        if c:
            s = Fraction(0)
            for r in range(c):
                s = s + params.tau(j - 1 - r)
            if s != 0:
                add((i, c - 1, d), coef * s)
    return out


def _left_y(params: TauParams, terms):
    m = params.m
    return {((j + 1) % m, c + 1, d): coef for (j, c, d), coef in terms.items()}


def s_mul(u: SElement, v: SElement) -> SElement:
    if u.params != v.params:
        raise ValueError("parameter mismatch")
    params = u.params
    out: Dict[Key, object] = {}
    # group u's terms by x-degree so x^b v is computed once per b
    cache: Dict[int, Dict[Key, object]] = {0: dict(v.terms)}
    for (i, a, b), coef in u.terms.items():
        top = max(cache)
        while top < b:
            cache[top + 1] = _left_x(params, cache[top])
            top += 1
        cur = cache[b]
        for _ in range(a):
            cur = _left_y(params, cur)
        for (j, c, d), val in cur.items():
            if j == i and val != 0:
                k = (i, c, d)
                out[k] = out[k] + coef * val if k in out else coef * val
    return SElement(params, out)


# corner and the map to A(v)

def corner_project(u: SElement, i: int = 0) -> SElement:
    e = SElement.idem(u.params, i)
    return e * u * e


def e_y_n_x_n(params: TauParams, n: int) -> SElement:
    return SElement.monomial(params, 0, n, n)


class CornerMap:
    """phi: e_0 S e_0 -> A(v) with e x^m -> b, e y^m -> a, e y x -> (sum tau) h."""

    def __init__(self, params: TauParams):
        self.params = params
        self._f = [Poly.const(1, H)]
        total = params.total
        self._hh = Poly.gen(H) * total
        m = params.m
        # v(h) is forced: it is the image of e x^m * e y^m = b a
        ba = SElement.monomial(params, 0, 0, m) * SElement.monomial(params, 0, m, 0)
        pieces = self._phi0(ba)
        if set(pieces) - {0}:
            raise AssertionError("e x^m y^m should have degree zero")
        self.v = pieces.get(0, Poly((), H))
        self.algebra = GwaAlgebra(self.v)

    def f(self, n: int) -> Poly:
        """phi(e y^n x^n), built from (e y x)(e y^{n-1} x^{n-1})."""
        p = self.params
        while len(self._f) <= n:
            j = len(self._f)
            prod_ = SElement.monomial(p, 0, 1, 1) * SElement.monomial(p, 0, j - 1, j - 1)
            extra = prod_ - SElement.monomial(p, 0, j, j)
            c = extra.terms.get((0, j - 1, j - 1), Fraction(0))
            if set(extra.terms) - {(0, j - 1, j - 1)}:
                raise AssertionError("unexpected terms in the f recursion")
            self._f.append((self._hh - c) * self._f[-1])
        return self._f[n]

    def _phi0(self, u: SElement) -> Dict[int, Poly]:
        m = self.params.m
        out: Dict[int, Poly] = {}
        for (i, a, b), c in u.terms.items():
            if i != 0 or (a - b) % m:
                raise ValueError("element is not in the e_0 corner")
            if a >= b:
                t = (a - b) // m
                piece = self.f(b) * c
            else:
                t = -((b - a) // m)
                piece = self.f(a).shift(t) * c
            out[t] = out[t] + piece if t in out else piece
        return out

    def __call__(self, u: SElement) -> GwaElement:
        return GwaElement(self.algebra, self._phi0(u))


_maps: Dict[TauParams, CornerMap] = {}


def corner_map(params: TauParams) -> CornerMap:
    if params not in _maps:
        _maps[params] = CornerMap(params)
    return _maps[params]


def phi_to_gwa(u: SElement) -> GwaElement:
    return corner_map(u.params)(u)


# automorphisms

@dataclass
class SAutomorphism:
    image_x: SElement
    image_y: SElement
    label: str = "map"
    word: tuple = ()
    meta: dict = field(default_factory=dict)

    @property
    def params(self):
        return self.image_x.params

    def then(self, other: "SAutomorphism") -> "SAutomorphism":
        """``self`` applied after ``other``; stored as a word."""
        word = (self.word or (self,)) + (other.word or (other,))
        return SAutomorphism(self.image_x, self.image_y, "*".join(g.label for g in word), word)


def _apply_generator(sigma: SAutomorphism, u: SElement) -> SElement:
    params = u.params
    xs = [SElement.one(params)]
    ys = [SElement.one(params)]
    out = SElement(params)
    for (i, a, b), c in u.terms.items():
        while len(xs) <= b:
            xs.append(xs[-1] * sigma.image_x)
        while len(ys) <= a:
            ys.append(ys[-1] * sigma.image_y)
        out = out + SElement.idem(params, i) * ys[a] * xs[b] * c
    return out


def apply_s_automorphism(sigma: SAutomorphism, u: SElement) -> SElement:
    if sigma.word:
        for g in reversed(sigma.word):
            u = _apply_generator(g, u)
        return u
    return _apply_generator(sigma, u)


def identity_s(params) -> SAutomorphism:
    return SAutomorphism(SElement.x(params), SElement.y(params), "id")


def theta(params, lam) -> SAutomorphism:
    lam = Fraction(lam)
    if lam == 0:
        raise ValueError("lambda must be nonzero")
    return SAutomorphism(SElement.x(params).scale(1 / lam), SElement.y(params).scale(lam),
                         f"theta({lam})", meta={"kind": "theta", "lam": lam})


def psi(params, k: int, lam) -> SAutomorphism:
    """x -> x - k lam (tau_0+...+tau_{m-1}) y^{km-1}."""
    lam = Fraction(lam)
    corr = SElement.y(params) ** (k * params.m - 1)
    img = SElement.x(params) - corr.scale(params.total * (k * lam))
    return SAutomorphism(img, SElement.y(params), f"psi({k},{lam})",
                         meta={"kind": "psi", "k": k, "lam": lam})


def phi(params, k: int, lam) -> SAutomorphism:
    """y -> y + k lam (tau_0+...+tau_{m-1}) x^{km-1}."""
    lam = Fraction(lam)
    corr = SElement.x(params) ** (k * params.m - 1)
    img = SElement.y(params) + corr.scale(params.total * (k * lam))
    return SAutomorphism(SElement.x(params), img, f"phi({k},{lam})",
                         meta={"kind": "phi", "k": k, "lam": lam})


def hscale(params, cs, ds) -> SAutomorphism:
    """x -> (sum c_i e_i) x, y -> (sum d_i e_i) y."""
    m = params.m
    if len(cs) != m or len(ds) != m:
        raise ValueError("need m scalars each")
    img_x = SElement(params, {(i, 0, 1): Fraction(cs[i]) for i in range(m)})
    img_y = SElement(params, {(i, 1, 0): Fraction(ds[i]) for i in range(m)})
    return SAutomorphism(img_x, img_y, f"hscale({list(cs)},{list(ds)})",
                         meta={"kind": "hscale", "c": tuple(cs), "d": tuple(ds)})


def verify_s_automorphism(sigma: SAutomorphism) -> bool:
    if sigma.word:
        return all(verify_s_automorphism(g) for g in sigma.word)
    p = sigma.params
    X, Y = sigma.image_x, sigma.image_y
    for i in range(p.m):
        e_i = SElement.idem(p, i)
        if e_i * X != X * SElement.idem(p, i + 1):
            return False
        if e_i * Y != Y * SElement.idem(p, i - 1):
            return False
    return X * Y - Y * X == SElement.tau(p)


def bj_image(sigma: SAutomorphism, alg: GwaAlgebra):
    """The A(v) generator that sigma is expected to induce."""
    kind = sigma.meta.get("kind")
    if kind == "theta":
        return bj_automorphism(alg, "theta", 1, sigma.meta["lam"])
    if kind in ("psi", "phi"):
        return bj_automorphism(alg, kind, sigma.meta["k"], sigma.meta["lam"])
    raise ValueError("no matching A(v) generator")


def induced_matches(sigma: SAutomorphism) -> bool:
    """phi(sigma(u)) == rho(sigma)(phi(u)) on e y^m, e x^m, e y x."""
    p = sigma.params
    m = p.m
    cm = corner_map(p)
    target = bj_image(sigma, cm.algebra)
    gens = [SElement.monomial(p, 0, m, 0), SElement.monomial(p, 0, 0, m),
            SElement.monomial(p, 0, 1, 1)]
    for u in gens:
        lhs = cm(corner_project(apply_s_automorphism(sigma, u)))
        rhs = target.apply(cm(u))
        if lhs != rhs:
            return False
    return True


def rho_correspondence_check(params: TauParams, k: int, lam) -> bool:
    checks = [theta(params, lam)] if lam != 0 else []
    checks += [psi(params, k, lam), phi(params, k, lam)]
    return all(induced_matches(s) for s in checks)


def kernel_element_acts_trivially(params: TauParams, cs) -> bool:
    """hscale with prod c_i = 1 (and d_{i+1} = 1/c_i) induces the identity on A(v)."""
    m = params.m
    ds = [Fraction(1) / Fraction(cs[(i - 1) % m]) for i in range(m)]
    sigma = hscale(params, cs, ds)
    cm = corner_map(params)
    gens = [SElement.monomial(params, 0, m, 0), SElement.monomial(params, 0, 0, m),
            SElement.monomial(params, 0, 1, 1)]
    return all(cm(corner_project(apply_s_automorphism(sigma, u))) == cm(u) for u in gens)
