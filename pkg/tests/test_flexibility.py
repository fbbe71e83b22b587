import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from otau import flexibility as fx
from otau.core.params import TauParams
from otau.quiver import fixedpoints as fp
from otau.quiver.points import Generator, apply_word

TAU = TauParams.numeric(Fraction(4, 7), Fraction(3, 7))
ONE_VERTEX = TauParams.numeric(Fraction(3, 5))


def cm_point(n):
    return fp.fixed_point_search((n,), 0, ONE_VERTEX)


def test_echelon_rank_and_reduce():
    e = fx.Echelon(3)
    assert e.add([Fraction(1, 2), 1, 0])
    assert e.add([0, Fraction(2, 3), 1])
    assert not e.add([1, Fraction(10, 3), 2])
    assert e.rank == 2
    assert e.add([0, 0, 5])
    assert e.rank == 3
    assert not any(e.reduce([7, -1, Fraction(1, 9)]))


def test_dmu_vanishes_on_gauge_directions():
    p = fp.fixed_point_rect(5, 2, TAU)
    rows = fx.dmu_matrix(p)
    for g in fx.gauge_directions(p):
        flat = g.to_flat()
        assert all(fx.pair(r, flat) == 0 for r in rows)


def test_invariant_gradient_matches_finite_difference():
    # w (Y + cX)^N v is polynomial in the coordinates, so a directional
    # derivative is the linear coefficient of f(p + s t) in s
    p = fp.fixed_point_rect(2, 1, TAU)
    coords = fx.Coordinates(p.dim)
    rng = random.Random(3)
    t = [Fraction(rng.randint(-2, 2)) for _ in range(coords.size)]
    c, N = Fraction(2), 4
    grad = fx.invariant_gradient(p, c, N)

    def moved(s):
        from otau.quiver.points import QuiverPoint
        tv = coords.from_flat([s * x for x in t])
        X = [a + b for a, b in zip(p.X, tv.dX)]
        Y = [a + b for a, b in zip(p.Y, tv.dY)]
        v = [a + b for a, b in zip(p.v, tv.dv)]
        w = [a + b for a, b in zip(p.w, tv.dw)]
        return fx.invariant_value(QuiverPoint(p.dim, X, Y, v, w), c, N)

    # fit the degree <= 2N+2 polynomial in s and read off the linear term
    deg = 2 * N + 2
    pts = [Fraction(j) for j in range(deg + 1)]
    vals = [moved(s) for s in pts]
    lin = Fraction(0)
    for i, si in enumerate(pts):
        # derivative at 0 of the Lagrange basis polynomial L_i
        others = [sj for j, sj in enumerate(pts) if j != i]
        denom = Fraction(1)
        for sj in others:
            denom *= si - sj
        deriv = Fraction(0)
        for skip in others:
            term = Fraction(1)
            for sj in others:
                if sj != skip:
                    term *= -sj
            deriv += term
        lin += vals[i] * deriv / denom
    assert lin == fx.pair(grad, t)


def test_gradients_are_gauge_invariant():
    p = fp.fixed_point_rect(5, 2, TAU)
    for c, N in [(Fraction(1), 2), (Fraction(-2), 4)]:
        grad = fx.invariant_gradient(p, c, N)
        assert all(fx.pair(grad, g.to_flat()) == 0 for g in fx.gauge_directions(p))


@pytest.mark.parametrize("build,expected", [
    (lambda: fp.fixed_point_square(1, TAU), 0),
    (lambda: cm_point(1), 2),
    (lambda: cm_point(3), 6),
    (lambda: fp.fixed_point_rect(2, 1, TAU), 2),
    (lambda: fp.fixed_point_swapped(3, 1, TAU), 4),
])
def test_span_check_examples(build, expected):
    r = fx.span_check(build(), with_omega=True)
    assert r.expected_dim == expected
    assert r.passed, r.to_json()


def test_span_check_on_orbit_point():
    word = [Generator("psi", 1, Fraction(1, 2)), Generator("theta", 1, Fraction(-2)),
            Generator("phi", 2, Fraction(1))]
    p = apply_word(word, fp.fixed_point_rect(5, 2, TAU))
    assert fx.span_check(p).passed


def test_span_report_detects_shortfall():
    # a single sample cannot span a 4-dimensional cotangent space
    r = fx.span_check(fp.fixed_point_swapped(3, 1, TAU), samples=[(Fraction(0), 2)])
    assert r.gradient_rank < r.expected_dim
    assert not r.passed


GENS = [Generator("theta", 1, Fraction(2)), Generator("psi", 1, Fraction(1, 3)),
        Generator("psi", 2, Fraction(-2)), Generator("phi", 1, Fraction(3)),
        Generator("phi", 2, Fraction(1, 2))]


@pytest.mark.parametrize("g", GENS, ids=lambda g: f"{g.kind}{g.k}")
def test_generators_are_symplectic(g):
    p = fp.fixed_point_rect(5, 2, TAU)
    t1, t2 = fx.random_tangent_pair(p, random.Random(7))
    assert fx.symplectic_check(p, g, t1, t2)


def test_scale_x_is_not_symplectic():
    p = fp.fixed_point_rect(5, 2, TAU)
    t1, t2 = fx.random_tangent_pair(p, random.Random(7))
    assert not fx.symplectic_check(p, Generator("scale-x", 1, Fraction(2)), t1, t2)


@pytest.mark.parametrize("a", [Fraction(0), Fraction(1), Fraction(-1, 2)])
@pytest.mark.parametrize("n1,n2", [(1, 1), (1, 2), (2, 1)])
def test_hamiltonian_flow(a, n1, n2):
    assert fx.hamiltonian_flow_check(fp.fixed_point_rect(2, 1, TAU), a, n1, n2)
    assert fx.hamiltonian_flow_check(cm_point(2), a, n1, n2)


def test_hamiltonian_flow_rejects_wrong_function():
    # pairing the flow with the gradient of a different exponent fails
    p = fp.fixed_point_rect(2, 1, TAU)
    coords = fx.Coordinates(p.dim)
    from otau.core.matrix import Matrix, kernel_basis
    dX, dY = fx.flow_velocity(p, Fraction(1), 1, 1)
    grad = fx.flow_hamiltonian_gradient(p, Fraction(1), 1, 2)
    K = kernel_basis(Matrix.from_rows(fx.dmu_matrix(p)))
    mismatched = False
    for vec in K:
        t = coords.from_flat(vec)
        tX, tY = fx._big(p.dim, t.dX, "X"), fx._big(p.dim, t.dY, "Y")
        if fx.pair(grad, vec) + p.params.total * fx._omega_xy(dX, dY, tX, tY) != 0:
            mismatched = True
    assert mismatched


@settings(max_examples=10)
@given(st.integers(0, 10**6))
def test_symplectic_on_random_tangents(seed):
    rng = random.Random(seed)
    p = cm_point(2)
    g = Generator(rng.choice(["psi", "phi", "theta"]), rng.randint(1, 2),
                  Fraction(rng.choice([1, -1, 2])))
    t1, t2 = fx.random_tangent_pair(p, rng)
    assert fx.symplectic_check(p, g, t1, t2)
