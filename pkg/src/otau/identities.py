"""Polynomial identities in z behind the kappa closed forms.

Everything is an exact identity in Q[z]; ``(x)_n`` is the falling
factorial x (x-1) ... (x-n+1).

The sums F_{k,j}(z) come from diagonalising Y_0 X_0 on the k-dimensional
space through v_1 at the square fixed point (with b = 1, z = a):

* A: Y_0 X_0 f_i = -(k-i) f_i - (z + 2(k-i)) sum_{s>i} f_s;
* C (upper unitriangular) with c_ij = (z + 2(k-i))_{j-i} / (j-i)!, its
  inverse d_ij = (-1)^{j-i} (z + 2(k-i)) (z + 2k-i-j-1)_{j-i-1} / (j-i)!;
* w Y^j X^j v = b^{j+1} F_{k,j}(z).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .core.exact import Poly, binomial, finite_difference, pochhammer_lower, pochhammer_poly
from .core.matrix import Matrix
from .core.params import TauParams

Z = "z"


def zpoly(c) -> Poly:
    return c if isinstance(c, Poly) else Poly.const(c, Z)


def zgen() -> Poly:
    return Poly.gen(Z)


def poch(shift, n: int) -> Poly:
    """(z + shift)_n."""
    return pochhammer_poly(shift, n, Z)


@dataclass
class IdentityCase:
    name: str
    params: dict
    lhs: Poly
    rhs: Poly

    @property
    def passed(self) -> bool:
        return (zpoly(self.lhs) - zpoly(self.rhs)).is_zero()

    @property
    def case_id(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        return f"{self.name}({inner})"

    def to_json(self):
        return {"name": self.name, "params": dict(self.params),
                "lhs": zpoly(self.lhs).to_json(), "rhs": zpoly(self.rhs).to_json(),
                "pass": self.passed}


# change of basis

def c_entry(k: int, i: int, j: int) -> Poly:
    if i > j:
        return zpoly(0)
    return poch(2 * (k - i), j - i) * Fraction(1, factorial(j - i))


def d_entry(k: int, i: int, j: int) -> Poly:
    if i > j:
        return zpoly(0)
    if i == j:
        return zpoly(1)
    sign = -1 if (j - i) % 2 else 1
    return (zgen() + 2 * (k - i)) * poch(2 * k - i - j - 1, j - i - 1) * Fraction(sign, factorial(j - i))


def change_of_basis(k: int):
    """(C, C^{-1} as printed, A, D) as k x k matrices over Q[z], 1-based formulas.

    A is stored by rows: row i holds the coordinates of Y_0 X_0 f_i.  Rows of
    C are the eigenvectors g_i, so C A C^{-1} is diagonal.
    """
    C = Matrix(k, k)
    Cinv = Matrix(k, k)
    A = Matrix(k, k)
    D = Matrix(k, k)
    z = zgen()
    for i in range(1, k + 1):
        D[i - 1, i - 1] = zpoly(-(k - i))
        A[i - 1, i - 1] = zpoly(-(k - i))
        for s in range(i + 1, k + 1):
            A[i - 1, s - 1] = -(z + 2 * (k - i))
        for j in range(1, k + 1):
            C[i - 1, j - 1] = c_entry(k, i, j)
            Cinv[i - 1, j - 1] = d_entry(k, i, j)
    return C, Cinv, A, D


def change_of_basis_check(k: int) -> dict:
    C, Cinv, A, D = change_of_basis(k)
    ident = Matrix.identity(k)
    return {"C_Cinv": (C @ Cinv - ident).is_zero(),
            "diagonalises": (C @ A @ Cinv - D).is_zero()}


# F sums

def _eigen_factor(k: int, j: int, idx: int) -> Poly:
    """Product of the block-product factors on the eigenvector g_j (b = 1)."""
    l = idx // 2
    if idx % 2 == 0:
        return poch(k - j - 1, l) * pochhammer_lower(k - j, l)
    return poch(k - j - 1, l) * (-pochhammer_lower(k - j, l + 1))


def F_bruteforce(k: int, idx: int) -> Poly:
    """F_{k,idx}(z) = sum_{m} sum_{i<=j<=m} (z+2(k-m)) d_ij c_jm * eigenfactor(j),
    straight from the matrices C and C^{-1}."""
    z = zgen()
    out = zpoly(0)
    for m in range(1, k + 1):
        wm = z + 2 * (k - m)
        for i in range(1, m + 1):
            for j in range(i, m + 1):
                out = out + wm * d_entry(k, i, j) * c_entry(k, j, m) * _eigen_factor(k, j, idx)
    return out


def F_simplified(k: int, idx: int) -> Poly:
    """The same sum after merging d_ij c_jm into one falling factorial."""
    z = zgen()
    out = zpoly(0)
    for m in range(2, k + 1):
        wm = z + 2 * (k - m)
        for i in range(1, m):
            inner = zpoly(0)
            for j in range(i, m + 1):
                sign = -1 if (j - i) % 2 else 1
                inner = inner + (poch(2 * k - i - j - 1, m - i - 1)
                                 * Fraction(sign, factorial(j - i) * factorial(m - j))
                                 * _eigen_factor(k, j, idx))
            out = out + wm * (z + 2 * (k - i)) * inner
    for m in range(1, k + 1):
        out = out + (z + 2 * (k - m)) * _eigen_factor(k, m, idx)
    return out


def F_closed(k: int, idx: int) -> Poly:
    """C(k+l, 2l+1) (z+k+l-1)_{2l+1} for idx = 2l, -C(k+l, 2l+2) (z+k+l)_{2l+2} for idx = 2l+1."""
    l = idx // 2
    if idx % 2 == 0:
        if not 0 <= l <= k - 1:
            return zpoly(0)
        return poch(k + l - 1, 2 * l + 1) * binomial(k + l, 2 * l + 1)
    if not 0 <= l <= k - 2:
        return zpoly(0)
    return poch(k + l, 2 * l + 2) * (-binomial(k + l, 2 * l + 2))


def F_case(k: int, idx: int) -> IdentityCase:
    name = "F_even" if idx % 2 == 0 else "F_odd"
    return IdentityCase(name, {"k": k, "index": idx}, F_bruteforce(k, idx), F_closed(k, idx))


# H sums

def H_sum(k: int, l: int) -> Poly:
    out = zpoly(0)
    for j in range(k + 1):
        sign = -1 if j % 2 else 1
        out = out + poch(k - j - l, k + l) * Fraction(sign * pochhammer_lower(k - j, l),
                                                       factorial(k - j) * factorial(j))
    return out


def H_closed(k: int, l: int) -> Poly:
    return poch(0, 2 * l) * Fraction(factorial(k + l), factorial(2 * l) * factorial(k - l))


def H_check(k: int, l: int) -> IdentityCase:
    return IdentityCase("H", {"k": k, "l": l}, H_sum(k, l), H_closed(k, l))


def H_difference_checks(k: int, l: int) -> dict:
    """Delta^i H(0) = 0 for i < 2l, Delta^{2l} H = (k+l)!/(k-l)!, Delta^{2l+1} H = 0."""
    H = H_sum(k, l)
    low = all(finite_difference(H, 1, i)(0) == 0 for i in range(2 * l))
    top = finite_difference(H, 1, 2 * l) == zpoly(Fraction(factorial(k + l), factorial(k - l)))
    above = finite_difference(H, 1, 2 * l + 1).is_zero()
    return {"vanish_below": low, "top_constant": top, "vanish_above": above}


def Hhat_sum(k: int, l: int) -> Poly:
    """Hat-H_{k,2l} as the double sum over m and j before telescoping."""
    z = zgen()
    out = pochhammer_lower(k, l) * poch(k - 1, l)
    for m in range(1, k + 1):
        inner = zpoly(0)
        for j in range(m + 1):
            sign = -1 if j % 2 else 1
            inner = inner + (poch(2 * k - j - 1, m - 1) * Fraction(sign, factorial(j) * factorial(m - j))
                             * pochhammer_lower(k - j, l) * poch(k - j - 1, l))
        out = out + (z + 2 * (k - m)) * inner
    return out


def Fhat_recursion_check(k: int, l: int):
    """F_{k+1,2l} - F_{k,2l} = (z+2k) Hat-H_{k,2l} and Hat-H_{k,2l}(z) = H_{k,2l}(z+k+l-1)."""
    z = zgen()
    rec = IdentityCase("Fhat_relation", {"k": k, "l": l},
                       F_bruteforce(k + 1, 2 * l) - F_bruteforce(k, 2 * l),
                       (z + 2 * k) * Hhat_sum(k, l))
    shift = IdentityCase("Hhat_shift", {"k": k, "l": l},
                         Hhat_sum(k, l), H_sum(k, l).shift(k + l - 1))
    return rec, shift


def delta_pochhammer_check(shift: int, n: int) -> IdentityCase:
    """Delta (z+shift)_n = n (z+shift)_{n-1}."""
    return IdentityCase("delta_pochhammer", {"shift": shift, "n": n},
                        finite_difference(poch(shift, n)), poch(shift, n - 1) * n if n else zpoly(0))


def corner_power_check(n: int, params: TauParams) -> IdentityCase:
    """phi(e y^n x^n) computed in the crossed product against the product formula."""
    from .crossed import corner_map, e_y_n_x_n
    from .gwa import f_closed_form
    image = corner_map(params)(e_y_n_x_n(params, n))
    lhs = image.component(0)
    case = IdentityCase("iden_f_n", {"n": n, "tau": params.mode}, lhs, f_closed_form(n, params))
    return case


def appendix_cases(kmax: int = 8, hmax: int = 10):
    """Every F, H and recursion case in range."""
    cases = []
    for k in range(2, kmax + 1):
        # the last two indices are past the stated ranges, where F vanishes
        for idx in range(0, 2 * k + 1):
            cases.append(F_case(k, idx))
    for k in range(2, hmax + 1):
        for l in range(0, k + 1):
            cases.append(H_check(k, l))
    for k in range(2, kmax):
        for l in range(0, k + 1):
            cases.extend(Fhat_recursion_check(k, l))
    return cases
