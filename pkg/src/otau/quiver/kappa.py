"""The invariant kappa = 1 - w (Y - y)^{-1} (X - x)^{-1} v of a quiver point.

Expanding both resolvents at infinity gives
kappa = 1 - sum_{l,q} (w Y^l X^q v) y^{-l-1} x^{-q-1}.  At C*-fixed points only
the diagonal l = q survives and we store A_{l+1} = -w Y^l X^l v, so that
kappa = 1 + sum_l A_l y^{-l} x^{-l}.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict

from ..core.exact import ParameterError, binomial, to_json_scalar
from ..core.matrix import Matrix
from ..core.params import TauParams
from .points import QuiverPoint, in_L_epsilon

ZERO = Fraction(0)


def _dot(a, b):
    acc = ZERO
    for x, y in zip(a, b):
        acc = acc + x * y
    return acc


def _is_zero(c) -> bool:
    return c == 0


def kappa_bruteforce(p: QuiverPoint, L: int) -> Dict[tuple, object]:
    """{(l, q): w Y^l X^q v} for 0 <= l, q <= L."""
    X, Y = p.big_X(), p.big_Y()
    w = p.big_w()
    xs = [p.big_v()]
    for _ in range(L):
        xs.append(X.apply(xs[-1]))
    # row vectors w Y^l
    ws = [w]
    for _ in range(L):
        ws.append(Y.apply_left(ws[-1]))
    return {(l, q): _dot(ws[l], xs[q]) for l in range(L + 1) for q in range(L + 1)}


def off_diagonal_vanishes(table, modulus: int = 0) -> bool:
    """Entries with l != q (or l != q mod ``modulus``) are all zero."""
    for (l, q), val in table.items():
        if modulus:
            if (l - q) % modulus and not _is_zero(val):
                return False
        elif l != q and not _is_zero(val):
            return False
    return True


@dataclass
class KappaSeries:
    coefficients: Dict[int, object] = field(default_factory=dict)   # l -> A_l, l >= 1
    label: str = ""

    @classmethod
    def from_table(cls, table, label="") -> "KappaSeries":
        L = max(l for l, _ in table)
        return cls({l + 1: -table[(l, l)] for l in range(L + 1)}, label)

    def coeff(self, l: int):
        return self.coefficients.get(l, ZERO)

    def top(self) -> int:
        """Largest l with A_l != 0 (0 for kappa = 1)."""
        nz = [l for l, c in self.coefficients.items() if not _is_zero(c)]
        return max(nz) if nz else 0

    def agrees(self, other: "KappaSeries", upto: int) -> bool:
        return all(self.coeff(l) - other.coeff(l) == 0 for l in range(1, upto + 1))

    def to_json(self):
        return {"label": self.label,
                "A": {str(l): to_json_scalar(c) for l, c in sorted(self.coefficients.items())}}


# closed forms, written in (t0, t1) so swapping is a matter of argument order

def square_coefficient(k: int, L: int, t0, t1):
    """A_L for the square point of M(k^2-k, k^2; 1)."""
    if L < 1 or L > 2 * k - 1:
        return ZERO
    acc = Fraction(1)
    if L % 2:
        l = (L + 1) // 2
        for r in range(1, 2 * l):
            acc = acc * ((k + l - r - 1) * t0 + (k + l - r) * t1)
        return -binomial(k + l - 1, 2 * l - 1) * acc
    l = L // 2
    for r in range(0, 2 * l):
        acc = acc * ((k + l - r - 1) * t0 + (k + l - r) * t1)
    return binomial(k + l - 1, 2 * l) * acc


def rect_coefficient(k: int, n: int, L: int, t0, t1):
    """A_L for the point of M(n-k, n; 1), n >= k^2."""
    b = t0 + t1
    p = n - k * k
    acc = Fraction(1)
    if L % 2:
        l = (L - 1) // 2
        if l < 0 or l > k - 1:
            return ZERO
        for r in range(2, 2 * l + 2):
            acc = acc * ((k + l - r) * t0 + (k + l - r + 1) * t1)
        tail = (k + l - 1) * t0 + (k + l) * t1 + Fraction(p * (2 * l + 1), k + l) * b
        return -binomial(k + l, 2 * l + 1) * acc * tail
    l = (L - 2) // 2
    if l < 0 or l > k - 2:
        return ZERO
    for r in range(1, 2 * l + 2):
        acc = acc * ((k + l - r) * t0 + (k + l - r + 1) * t1)
    tail = (k + l) * t0 + (k + l + 1) * t1 + Fraction(p * (2 * l + 2), k + l) * b
    return binomial(k + l, 2 * l + 2) * acc * tail


def ascending_coefficient(k: int, n: int, L: int, t0, t1):
    """B_L for the point of M(n-k, n; 0), n >= k^2 + k."""
    if L < 1 or L > 2 * k:
        return ZERO
    b = t0 + t1
    p = n - k * k - k
    acc = Fraction(1)
    if L % 2:
        l = (L + 1) // 2
        for r in range(2, 2 * l):
            acc = acc * ((k + l - r) * t0 + (k + l - r + 1) * t1)
        tail = (k + l - 1) * t0 + (k + l) * t1 + Fraction(p * (2 * l - 1), k + l - 1) * b
        return -binomial(k + l - 1, 2 * l - 1) * acc * tail
    l = L // 2
    for r in range(1, 2 * l):
        acc = acc * ((k + l - r - 1) * t0 + (k + l - r) * t1)
    tail = (k + l - 1) * t0 + (k + l) * t1 + Fraction(p * 2 * l, k + l) * b
    return binomial(k + l, 2 * l) * acc * tail


def closed_form_dims(n: int, k: int, eps: int, family: str):
    """Dimension vector and framing of the variety a closed form refers to.

    family "a": (n-k, n; eps);  family "b": (n, n-k; eps).
    """
    if family == "a":
        return (n - k, n), eps
    if family == "b":
        return (n, n - k), eps
    raise ParameterError(f"unknown family {family!r}")


def kappa_closed_form(n: int, k: int, eps: int, family: str, params: TauParams,
                      lmax: int = 0) -> KappaSeries:
    (n0, n1), framing = closed_form_dims(n, k, eps, family)
    if not in_L_epsilon(n0, n1, eps):
        raise ParameterError(f"({n0}, {n1}) is not in L_{eps}")
    t0, t1 = params.tau(0), params.tau(1)
    if family == "b":
        t0, t1 = t1, t0
    top = max(lmax, 2 * k + 1)
    if k == 0:
        if n:
            raise ParameterError("closed forms are stated for k >= 1")
        return KappaSeries({l: ZERO for l in range(1, top + 1)}, "closed(empty)")
    # (n, n-k; eps) is (n-k, n; 1-eps) for the swapped parameters
    if (eps == 1) == (family == "a"):
        coeffs = {l: rect_coefficient(k, n, l, t0, t1) for l in range(1, top + 1)}
    else:
        coeffs = {l: ascending_coefficient(k, n, l, t0, t1) for l in range(1, top + 1)}
    return KappaSeries(coeffs, f"closed(n={n},k={k},eps={eps},{family})")


# block-product formula for w Y^l X^l v

def coeffkappa_formula(p: QuiverPoint, l: int):
    """w_f prod_q (Y X + q b) prod_q (Y X + q t_out + (q-1) t_in) v_f.

    Here f is the framing vertex, Y X means Y_{f-1} X_{f-1} acting on V_f,
    t_out = tau_{f-1} and t_in = tau_f.  For f = 1 this is the two-vertex
    product with Y_0 X_0, tau_0 and tau_1.
    """
    if p.dim.m != 2:
        raise ParameterError("the block-product formula is stated for two vertices")
    f = p.dim.framing
    t_out, t_in = p.params.tau(f - 1), p.params.tau(f)
    b = t_out + t_in
    YX = p.Y[f - 1] @ p.X[f - 1]
    n = YX.rows
    vec = list(p.v)
    # apply right factor first; the factors commute anyway
    for q in range(1, l // 2 + 1):
        vec = (YX + Matrix.identity(n, q * t_out + (q - 1) * t_in)).apply(vec)
    for q in range(0, (l - 1) // 2 + 1):
        vec = (YX + Matrix.identity(n, q * b)).apply(vec)
    return _dot(p.w, vec)


def coeffkappa_check(p: QuiverPoint, l: int) -> bool:
    table = kappa_bruteforce(p, l)
    return table[(l, l)] - coeffkappa_formula(p, l) == 0


def coeffkappa_defect(p: QuiverPoint, l: int):
    """Brute force minus block product, for reporting."""
    return kappa_bruteforce(p, l)[(l, l)] - coeffkappa_formula(p, l)
