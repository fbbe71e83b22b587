from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from otau.core.exact import (ParameterError, Poly, finite_difference, pochhammer_lower,
                             pochhammer_poly, poly_gcd, same_up_to_scalar)
from otau.core.matrix import Matrix, kernel_basis, rank_fraction_free
from otau.core.params import TauParams

h = Poly.gen("h")
z = Poly.gen("z")

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.lists(small, min_size=0, max_size=4).map(lambda cs: Poly(cs, "h"))
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def test_gcd_examples():
    assert poly_gcd(h * h - 1, h - 1) == h - 1
    p = 3 * h + 6
    assert poly_gcd(p, Poly((), "h")) == p.monic()
    assert poly_gcd((h + 1) * (h + 2), (h + 2) * (h + 3)) == h + 2


def test_pochhammer_examples():
    assert pochhammer_lower(z, 0) == 1
    assert pochhammer_lower(z, 2) == z * (z - 1)
    assert pochhammer_lower(3, 2) == 6


def test_finite_difference_examples():
    for a in range(-2, 3):
        for k in range(1, 5):
            assert finite_difference(pochhammer_poly(a, k)) == pochhammer_poly(a, k - 1) * k
    assert finite_difference(Poly.const(7, "z")).is_zero()
    assert finite_difference(z * z) == 2 * z + 1


def test_rank_and_kernel_examples():
    assert rank_fraction_free(Matrix.identity(3)) == 3
    assert rank_fraction_free(Matrix(2, 5)) == 0
    assert rank_fraction_free(Matrix.from_rows([[z, z * z], [Poly.const(1, "z"), z]])) == 1
    assert kernel_basis(Matrix.identity(3)) == []
    assert len(kernel_basis(Matrix(2, 3))) == 3
    (vec,) = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert vec[0] == -vec[1] != 0


def test_empty_blocks_multiply():
    a, b = Matrix(0, 1), Matrix(1, 0)
    assert (b @ a).shape == (1, 1) and (b @ a).is_zero()
    assert (a @ b).shape == (0, 0)


def test_degenerate_tau_rejected():
    with pytest.raises(ParameterError):
        TauParams.numeric(1, -1)


@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_gcd_scales(p, q, r):
    assert same_up_to_scalar(poly_gcd(p * r, q * r), r * poly_gcd(p, q))


@given(polys, polys, small)
def test_difference_linear_and_lowers_degree(p, q, c):
    assert finite_difference(p * c + q) == finite_difference(p) * c + finite_difference(q)
    if p.degree() >= 1:
        assert finite_difference(p).degree() == p.degree() - 1


@given(st.integers(-6, 6), st.integers(0, 5), st.integers(0, 5))
def test_pochhammer_splits(base, m, n):
    assert pochhammer_lower(base, m + n) == pochhammer_lower(base, m) * pochhammer_lower(base - m, n)


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=1, max_size=4),
       st.integers(1, 5))
def test_rank_transpose_and_scaling(rows, c):
    M = Matrix.from_rows(rows)
    r = rank_fraction_free(M)
    assert r == rank_fraction_free(M.transpose())
    scaled = Matrix.from_rows([[x * c for x in rows[0]]] + rows[1:])
    assert rank_fraction_free(scaled) == r
    assert len(kernel_basis(M)) == M.cols - r


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p
