"""From nilpotent two-vertex points to right ideals of A(v).

A C*-fixed point of M(n-k, n; eps) (family "a") or M(n, n-k; eps)
(family "b") corresponds to the ideal a^N A(v) + s(h) A(v).  For family
"a" the polynomial s is reproduced from the point itself: with A_0 = 1 and
A_l the kappa coefficients,

    phi( sum_l A_l e y^{N-l} x^{N-l} ) = b^N s(h),   N = 2k - eps,

computed here through the crossed product and the corner map.
"""

from __future__ import annotations

from fractions import Fraction

from ..core.exact import ParameterError, Poly
from ..core.matrix import Matrix
from ..gwa import FractionalIdeal, omega_generator, s_poly
from .kappa import KappaSeries, kappa_bruteforce
from .points import QuiverPoint, in_L_epsilon


def is_nilpotent(M: Matrix) -> bool:
    P = M
    for _ in range(M.rows):
        if P.is_zero():
            return True
        P = P @ M
    return P.is_zero()


def classify(p: QuiverPoint):
    """(n, k, eps, family) of a two-vertex point, or raise."""
    if p.dim.m != 2:
        raise ParameterError("two vertices expected")
    n0, n1 = p.dim.dims
    eps = p.dim.framing
    if n1 >= n0 and in_L_epsilon(n0, n1, eps):
        return n1, n1 - n0, eps, "a"
    if n0 > n1 and in_L_epsilon(n0, n1, eps):
        return n0, n0 - n1, eps, "b"
    raise ParameterError(f"({n0}, {n1}; {eps}) is not in L_{eps}")


def omega_ideal(p: QuiverPoint) -> FractionalIdeal:
    if not (is_nilpotent(p.big_X()) and is_nilpotent(p.big_Y())):
        raise ParameterError("X and Y must be nilpotent")
    n, k, eps, family = classify(p)
    return omega_generator(p.params, n, k, eps, family)


def key_identity(p: QuiverPoint):
    """(lhs, rhs) of phi(e y^N kappa x^N) = b^N s(h) for a family "a" point."""
    from ..crossed import SElement, corner_map
    n, k, eps, family = classify(p)
    if family != "a":
        raise ParameterError("the identity is checked for family a only")
    params = p.params
    N = 2 * k - eps
    kap = KappaSeries.from_table(kappa_bruteforce(p, N))
    elem = SElement.monomial(params, 0, N, N)
    for l in range(1, N + 1):
        c = kap.coeff(l)
        if c != 0:
            elem = elem + SElement.monomial(params, 0, N - l, N - l, c)
    image = corner_map(params)(elem)
    if set(image.support()) - {0}:
        raise AssertionError("image should sit in degree zero")
    lhs = image.component(0)
    rhs = s_poly(params, n, k, eps) * params.total ** N
    return lhs, rhs


def key_identity_check(p: QuiverPoint) -> bool:
    lhs, rhs = key_identity(p)
    return lhs == rhs
