import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from otau.core.exact import ParameterError
from otau.core.matrix import Matrix
from otau.core.params import TauParams
from otau.quiver import fixedpoints as fp
from otau.quiver.indexsets import build_index_sets, check_index_sets, t3_cap_s1_closed
from otau.quiver.kappa import (KappaSeries, coeffkappa_check, kappa_bruteforce, kappa_closed_form,
                               off_diagonal_vanishes, rect_coefficient, square_coefficient)
from otau.quiver.points import (DimensionData, Generator, QuiverPoint, apply_word, check_stability,
                                dimension, empty_point, group_action, in_L_epsilon,
                                moment_map_residual, on_variety, rotate, sparsity, trace_constraint)

TAU = TauParams.numeric(Fraction(2, 7), Fraction(3, 11))
generators = st.builds(Generator, st.sampled_from(["theta", "psi", "phi"]), st.integers(1, 2),
                       st.sampled_from([Fraction(1, 2), Fraction(-1), Fraction(2), Fraction(-2, 3)]))


def valid(p):
    return on_variety(p) and trace_constraint(p) and check_stability(p)


def test_index_sets_k3():
    s = build_index_sets(3)
    assert [s.s(i) for i in range(1, 5)] == [{2, 6}, {1, 3, 4, 9}, {5}, {7, 8}]
    assert [s.t(i) for i in range(1, 5)] == [{2}, {1, 4}, {5, 6}, {3}]
    assert s.t(3) & s.s(1) == t3_cap_s1_closed(3) == {6}


@pytest.mark.parametrize("k", range(1, 51))
def test_index_set_identities(k):
    assert all(check_index_sets(k).values())


def test_L_epsilon_examples():
    assert in_L_epsilon(0, 0, 0)
    assert in_L_epsilon(1, 2, 1)
    assert not in_L_epsilon(0, 2, 0)


def test_dimension_examples():
    for k in range(1, 4):
        assert dimension(DimensionData((k * k - k, k * k), 1, TAU)) == 0
        for n in range(k * k, k * k + 3):
            assert dimension(DimensionData((n - k, n), 1, TAU)) == 2 * (n - k * k)
    m1 = TauParams.numeric(1)
    assert dimension(DimensionData((3,), 0, m1)) == 6


def test_empty_point():
    p = empty_point(TAU)
    assert moment_map_residual(p).shape == (0, 0)
    assert check_stability(p)


def test_square_k1():
    p = fp.fixed_point_square(1, TAU)
    assert p.dim.dims == (0, 1)
    assert p.v[0] * p.w[0] == TAU.tau(1)
    assert kappa_bruteforce(p, 2) == {(0, 0): TAU.tau(1), (0, 1): 0, (0, 2): 0, (1, 0): 0, (1, 1): 0,
                                       (1, 2): 0, (2, 0): 0, (2, 1): 0, (2, 2): 0}


@pytest.mark.parametrize("k", range(1, 6))
def test_square_family(k):
    assert valid(fp.fixed_point_square(k, TAU))


@pytest.mark.parametrize("k", range(1, 4))
def test_square_family_symbolic(k, symbolic):
    assert valid(fp.fixed_point_square(k, symbolic))


@pytest.mark.parametrize("n,k", [(1, 1), (2, 1), (5, 2), (7, 2), (9, 3), (12, 3), (16, 4), (18, 4)])
def test_rect_and_swapped(n, k):
    assert valid(fp.fixed_point_rect(n, k, TAU))
    sw = fp.fixed_point_swapped(n, k, TAU)
    assert sw.dim.dims == (n, n - k) and sw.dim.framing == 0
    assert valid(sw)


def test_rect_square_agree():
    for k in (1, 2, 3):
        a, b = fp.fixed_point_rect(k * k, k, TAU), fp.fixed_point_square(k, TAU)
        assert a.big_X() == b.big_X() and a.big_Y() == b.big_Y() and a.v == b.v and a.w == b.w


def test_swapped_invariance():
    p = fp.fixed_point_rect(5, 2, TAU)
    back = rotate(rotate(p))
    assert back.big_X() == p.big_X() and back.big_Y() == p.big_Y()
    assert fp.unswap(fp.fixed_point_swapped(5, 2, TAU)).big_X() == fp.fixed_point_rect(5, 2, TAU.swapped()).big_X()


def test_rect_rejects_outside_L():
    with pytest.raises(ParameterError):
        fp.fixed_point_rect(3, 2, TAU)


def test_perturbation_breaks_residual():
    p = fp.fixed_point_rect(5, 2, TAU)
    X = p.big_X()
    r, c, _ = next(iter(X.nonzero_entries()))
    X2 = X.map(lambda x: x)
    X2[r, c] = X2[r, c] + 1
    q = QuiverPoint.from_big(p.dim, X2, p.big_Y(), p.big_v(), p.big_w())
    assert not moment_map_residual(q).is_zero()


def test_zero_framing_is_unstable():
    p = fp.fixed_point_rect(2, 1, TAU)
    q = QuiverPoint(p.dim, p.X, p.Y, [0] * len(p.v), p.w)
    assert not check_stability(q)


def test_search_examples():
    p = fp.fixed_point_ascending(2, 1, TAU)
    assert p.dim.dims == (1, 2) and valid(p)
    got = KappaSeries.from_table(kappa_bruteforce(p, 4))
    assert got.agrees(kappa_closed_form(2, 1, 0, "a", TAU, 5), 5)
    assert fp.fixed_point_ascending(6, 2, TAU) is None


@pytest.mark.parametrize("n,k", [(1, 1), (3, 1), (4, 2), (6, 2), (9, 3), (11, 3)])
@pytest.mark.parametrize("family", ["a", "b"])
def test_kappa_closed_forms(n, k, family, symbolic):
    for params in (TAU, symbolic):
        build = fp.fixed_point_rect if family == "a" else fp.fixed_point_swapped
        eps = 1 if family == "a" else 0
        p = build(n, k, params)
        table = kappa_bruteforce(p, 2 * k + 2)
        assert off_diagonal_vanishes(table)
        got = KappaSeries.from_table(table)
        assert got.agrees(kappa_closed_form(n, k, eps, family, params, 2 * k + 3), 2 * k + 3)


def test_kappa_closed_form_examples():
    t0, t1 = TAU.tau(0), TAU.tau(1)
    assert square_coefficient(1, 1, t0, t1) == -t1
    for k in (1, 2, 3, 4):
        for L in range(1, 2 * k + 2):
            assert rect_coefficient(k, k * k, L, t0, t1) == square_coefficient(k, L, t0, t1)
    assert kappa_closed_form(2, 1, 1, "a", TAU).coeff(1) == -(t0 + 2 * t1)


def test_kappa_mod_m_vanishing():
    # M(3, 5; 1) has dimension 2, so the orbit leaves the fixed point
    p = apply_word([Generator("psi", 1, Fraction(1, 2)), Generator("phi", 2, Fraction(-1))],
                   fp.fixed_point_rect(5, 2, TAU))
    assert off_diagonal_vanishes(kappa_bruteforce(p, 5), modulus=2)
    assert not off_diagonal_vanishes(kappa_bruteforce(p, 5))


@pytest.mark.parametrize("n,k", [(1, 1), (4, 2), (5, 2), (9, 3)])
def test_coeffkappa_at_fixed_points(n, k):
    for build in (fp.fixed_point_rect, fp.fixed_point_swapped):
        p = build(n, k, TAU)
        assert all(coeffkappa_check(p, l) for l in range(7))


def test_group_action_examples():
    p = fp.fixed_point_rect(5, 2, TAU)
    same = group_action(Generator("theta", 1, Fraction(1)), p)
    assert same.big_X() == p.big_X() and same.big_Y() == p.big_Y()
    g = Generator("psi", 2, Fraction(3, 4))
    back = group_action(g.inverse(), group_action(g, p))
    assert back.big_X() == p.big_X() and back.big_Y() == p.big_Y()


@given(st.lists(generators, min_size=1, max_size=5))
def test_action_keeps_points_on_variety(word):
    p = fp.fixed_point_rect(3, 1, TAU)
    assert on_variety(apply_word(word, p))


@given(st.lists(generators, min_size=0, max_size=3), st.sampled_from([Fraction(2), Fraction(-1, 3)]))
def test_theta_scales_kappa(word, lam):
    p = apply_word(word, fp.fixed_point_rect(4, 2, TAU))
    before = kappa_bruteforce(p, 4)
    after = kappa_bruteforce(group_action(Generator("theta", 1, lam), p), 4)
    assert all(after[key] == val * lam ** (key[1] - key[0]) for key, val in before.items())


@given(st.sampled_from([Fraction(3), Fraction(-1, 2)]))
def test_theta_keeps_sparsity(lam):
    p = fp.fixed_point_rect(5, 2, TAU)
    assert sparsity(group_action(Generator("theta", 1, lam), p)) == sparsity(p)


def _random_cm_point(rng):
    """A point of the m = 1 variety away from the fixed locus."""
    m1 = TauParams.numeric(Fraction(3, 5))
    base = fp.fixed_point_search((3,), 0, m1)
    word = [Generator(rng.choice(["psi", "phi"]), rng.randint(1, 3), Fraction(rng.randint(-3, 3) or 1, 2))
            for _ in range(3)]
    return apply_word(word, base)


@pytest.mark.parametrize("seed", range(3))
def test_yx_commutation_formula(seed):
    """(YX) Y^l - Y^l (YX) = sum_{i=1..l} Y^i (v w - T) Y^(l-i) on the variety."""
    p = _random_cm_point(random.Random(seed))
    X, Y, T = p.big_X(), p.big_Y(), p.big_T()
    vw = Matrix.from_columns(len(p.v), [p.big_v()]) @ Matrix.from_rows([p.big_w()])
    n = X.rows
    powers = [Matrix.identity(n)]
    for _ in range(4):
        powers.append(powers[-1] @ Y)
    for l in range(1, 5):
        lhs = (Y @ X) @ powers[l] - powers[l] @ (Y @ X)
        rhs = Matrix(n, n)
        for i in range(1, l + 1):
            rhs = rhs + powers[i] @ (vw - T) @ powers[l - i]
        assert lhs == rhs
