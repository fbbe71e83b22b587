"""Verification suites run by the command-line front end.

Each suite yields ``CaseResult`` records.  A case is a zero-argument callable
returning ``(status, witness)``; exceptions become ``fail`` with the error
text as witness.  Randomness comes from one ``random.Random`` per suite,
seeded from the run seed and the suite name, so selecting a subset of
suites does not change the cases of the others.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, Iterator, List, Optional

from . import identities as idn
from .core.exact import ParameterError, Poly, to_json_scalar
from .core.params import TauParams
from .quiver.points import QuiverPoint

PASS, FAIL, SKIPPED, DISCREPANCY = "pass", "fail", "skipped", "discrepancy"

# a generic z used wherever a computation needs rational tau
SAMPLE_Z = Fraction(3, 7)


@dataclass
class CaseResult:
    suite: str
    case_id: str
    parameters: dict
    status: str
    witness: object = None
    wall_time: float = 0.0

    def to_json(self, timing: bool = True) -> dict:
        out = {"suite": self.suite, "case-id": self.case_id, "parameters": self.parameters,
               "status": self.status, "witness": self.witness}
        if timing:
            out["wall-time"] = round(self.wall_time, 4)
        return out


@dataclass
class SuiteConfig:
    suites: List[str]
    params: TauParams
    kmax: Optional[int] = None
    nmax: Optional[int] = None
    lmax: Optional[int] = None
    seed: int = 0
    out: Optional[str] = None
    fmt: str = "json"

    def k(self, default: int) -> int:
        return default if self.kmax is None else self.kmax

    def n(self, default: int) -> int:
        return default if self.nmax is None else self.nmax

    def l(self, default: int) -> int:
        return default if self.lmax is None else self.lmax

    def rng(self, suite: str) -> random.Random:
        return random.Random(f"{self.seed}:{suite}")

    @property
    def numeric_params(self) -> TauParams:
        """Rational tau for computations that need it (gcds in C[h], ranks)."""
        p = self.params
        return p.specialize(SAMPLE_Z) if p.symbolic else p

    def to_json(self) -> dict:
        return {"suites": list(self.suites), "tau": self.params.to_json(),
                "mode": self.params.mode, "kmax": self.kmax, "nmax": self.nmax,
                "lmax": self.lmax, "seed": self.seed, "format": self.fmt}


def run_case(suite: str, case_id: str, parameters: dict, fn: Callable) -> CaseResult:
    start = time.perf_counter()
    try:
        status, witness = fn()
    except Exception as exc:        # reported, never swallowed silently
        status, witness = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
    return CaseResult(suite, f"{suite}/{case_id}", parameters, status, witness,
                      time.perf_counter() - start)


def verdict(ok: bool, witness: Callable = lambda: None):
    return (PASS, None) if ok else (FAIL, witness())


def _checks(results: Dict[str, bool]):
    bad = sorted(name for name, ok in results.items() if not ok)
    return verdict(not bad, lambda: {"failed": bad})


def _js(x):
    if isinstance(x, (Poly, Fraction, int)):
        return to_json_scalar(x)
    if hasattr(x, "to_json"):
        return x.to_json()
    return x


def random_word(rng: random.Random, length: int, kmax: int = 2):
    from .quiver.points import Generator
    word = []
    for _ in range(length):
        kind = rng.choice(["theta", "psi", "phi"])
        lam = Fraction(rng.randint(1, 3), rng.randint(1, 3)) * rng.choice([1, -1])
        word.append(Generator(kind, rng.randint(1, kmax), lam))
    return word


def _word_json(word):
    return [g.to_json() for g in word]


# appendix

def appendix_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    s = "appendix"
    kmax = cfg.k(8)
    hmax = kmax + 2

    def ident(case_fn):
        def run():
            case = case_fn()
            return verdict(case.passed, lambda: (case.lhs - case.rhs).to_json())
        return run

    for k in range(2, kmax + 1):
        for idx in range(0, 2 * k + 1):
            yield run_case(s, f"F(k={k},index={idx})", {"k": k, "index": idx},
                           ident(lambda k=k, idx=idx: idn.F_case(k, idx)))
    for k in range(2, hmax + 1):
        for l in range(0, k + 1):
            yield run_case(s, f"H(k={k},l={l})", {"k": k, "l": l},
                           ident(lambda k=k, l=l: idn.H_check(k, l)))
            yield run_case(s, f"H_differences(k={k},l={l})", {"k": k, "l": l},
                           lambda k=k, l=l: _checks(idn.H_difference_checks(k, l)))
    for k in range(2, kmax):
        for l in range(0, k + 1):
            def rec(k=k, l=l):
                cases = idn.Fhat_recursion_check(k, l)
                bad = [c.to_json() for c in cases if not c.passed]
                return verdict(not bad, lambda: bad)
            yield run_case(s, f"Fhat_recursion(k={k},l={l})", {"k": k, "l": l}, rec)
    for k in range(1, kmax + 1):
        yield run_case(s, f"change_of_basis(k={k})", {"k": k},
                       lambda k=k: _checks(idn.change_of_basis_check(k)))
    for shift in range(-2, 3):
        for n in range(0, 6):
            yield run_case(s, f"delta_pochhammer(shift={shift},n={n})", {"shift": shift, "n": n},
                           ident(lambda shift=shift, n=n: idn.delta_pochhammer_check(shift, n)))
    for n in range(0, cfg.l(10) + 1):
        yield run_case(s, f"iden_f_n(n={n})", {"n": n, "tau": cfg.params.to_json()},
                       ident(lambda n=n: idn.corner_power_check(n, cfg.params)))


# index sets

def index_sets_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    from .quiver.indexsets import check_index_sets
    for k in range(1, cfg.k(50) + 1):
        yield run_case("index-sets", f"k={k:03d}", {"k": k},
                       lambda k=k: _checks(check_index_sets(k)))


# fixed points

def point_checks(p: QuiverPoint):
    from .quiver.points import check_stability, moment_map_residual, trace_constraint
    residual = moment_map_residual(p)
    results = {"residual_zero": residual.is_zero(), "trace": trace_constraint(p),
               "stable": check_stability(p)}
    bad = sorted(k for k, ok in results.items() if not ok)
    if not bad:
        return PASS, None
    return FAIL, {"failed": bad, "residual": residual.to_json()}


def two_vertex_points(cfg: SuiteConfig, params: TauParams, kmax_sq: int, kmax_rect: int,
                      nmax: int):
    """(case-id, parameters, builder) for every constructed two-vertex family."""
    from .quiver import fixedpoints as fp
    out = []
    for k in range(1, kmax_sq + 1):
        out.append((f"square(k={k})", {"k": k, "family": "square"},
                    lambda k=k: fp.fixed_point_square(k, params)))
    for k in range(1, kmax_rect + 1):
        for n in range(k * k, max(nmax, k * k + 2) + 1):
            out.append((f"rect(k={k},n={n:02d})", {"k": k, "n": n, "family": "a", "eps": 1},
                        lambda n=n, k=k: fp.fixed_point_rect(n, k, params)))
            out.append((f"swapped(k={k},n={n:02d})", {"k": k, "n": n, "family": "b", "eps": 0},
                        lambda n=n, k=k: fp.fixed_point_swapped(n, k, params)))
    return out


def ascending_points(params: TauParams, kmax: int = 2, nmax: int = 4):
    from .quiver import fixedpoints as fp
    out = []
    for k in range(1, kmax + 1):
        for n in range(k * k + k, max(nmax, k * k + k) + 1):
            out.append((f"ascending(k={k},n={n:02d})", {"k": k, "n": n, "family": "a", "eps": 0},
                        lambda n=n, k=k: fp.fixed_point_ascending(n, k, params)))
            out.append((f"ascending-swapped(k={k},n={n:02d})",
                        {"k": k, "n": n, "family": "b", "eps": 1},
                        lambda n=n, k=k: fp.fixed_point_ascending_swapped(n, k, params)))
    return out


NOT_CONSTRUCTED = {"reason": "not constructed: no thin C*-fixed chain fits this dimension vector"}


def fixed_points_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    from .quiver.fixedpoints import fixed_point_search
    from .quiver.points import apply_word, moment_map_residual, sparsity
    s = "fixed-points"
    params = cfg.params
    mode = params.mode
    kmax = cfg.k(5)
    builders = two_vertex_points(cfg, params, kmax, min(kmax, 4), cfg.n(12))
    builders += ascending_points(params)

    for cid, pars, build in builders:
        def run(build=build):
            p = build()
            if p is None:
                return SKIPPED, NOT_CONSTRUCTED
            return point_checks(p)
        yield run_case(s, f"{cid}/{mode}", dict(pars, mode=mode), run)

    # other cyclic quivers through the chain search, at rational tau
    m1 = TauParams.numeric(Fraction(3, 5))
    for n in range(1, 5):
        yield run_case(s, f"cyclic(m=1,n={n})", {"m": 1, "dims": [n], "tau": m1.to_json()},
                       lambda n=n: point_checks(fixed_point_search((n,), 0, m1)))
    m3 = TauParams.numeric(1, 2, Fraction(1, 3))
    for dims in [(1, 1, 1), (1, 2, 1), (2, 2, 2)]:
        def run3(dims=dims):
            p = fixed_point_search(dims, 0, m3)
            return (SKIPPED, NOT_CONSTRUCTED) if p is None else point_checks(p)
        yield run_case(s, f"cyclic(m=3,dims={dims})", {"m": 3, "dims": list(dims),
                                                        "tau": m3.to_json()}, run3)

    # orbit points: the action keeps points on the variety and keeps the sparsity
    rng = cfg.rng(s)
    orbit_params = cfg.numeric_params
    small = two_vertex_points(cfg, orbit_params, 2, 2, 6)
    for cid, pars, build in small:
        for j in range(5):
            word = random_word(rng, rng.randint(1, 6))

            def orbit(build=build, word=word):
                base = build()
                p = apply_word(word, base)
                res = moment_map_residual(p)
                back = apply_word([g.inverse() for g in reversed(word)], p)
                ok = {"residual_zero": res.is_zero(),
                      "inverse_word": back.big_X() == base.big_X() and back.big_Y() == base.big_Y()}
                # theta alone never changes which blocks are nonzero
                if all(g.kind == "theta" for g in word):
                    ok["sparsity"] = sparsity(p) == sparsity(base)
                bad = sorted(k for k, v in ok.items() if not v)
                return verdict(not bad, lambda: {"failed": bad, "residual": res.to_json()})
            yield run_case(s, f"orbit/{cid}/{j}",
                           dict(pars, word=_word_json(word), tau=orbit_params.to_json()), orbit)


# kappa

def kappa_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    from .quiver.kappa import (KappaSeries, kappa_bruteforce, kappa_closed_form,
                               off_diagonal_vanishes)
    from .quiver.points import Generator, group_action
    s = "kappa"
    params = cfg.params
    mode = params.mode
    kmax = cfg.k(4)
    builders = two_vertex_points(cfg, params, kmax, min(kmax, 3), cfg.n(12))
    builders += ascending_points(params, kmax=min(kmax, 2), nmax=4)

    for cid, pars, build in builders:
        def run(build=build, pars=pars):
            p = build()
            if p is None:
                return SKIPPED, NOT_CONSTRUCTED
            k = pars["k"]
            L = max(cfg.l(0), 2 * k + 2)
            table = kappa_bruteforce(p, L)
            got = KappaSeries.from_table(table)
            if pars["family"] == "square":
                n, fam, eps = k * k, "a", 1
            else:
                n, fam, eps = pars["n"], pars["family"], pars["eps"]
            want = kappa_closed_form(n, k, eps, fam, params, L + 1)
            diag = off_diagonal_vanishes(table)
            agree = got.agrees(want, L + 1)
            if diag and agree:
                return PASS, None
            return FAIL, {"off_diagonal_vanishes": diag, "brute_force": got.to_json(),
                          "closed_form": want.to_json()}
        yield run_case(s, f"{cid}/{mode}", dict(pars, mode=mode), run)

    # theta scales the (l, q) entry by lam^(q - l); checked off the fixed locus
    rng = cfg.rng(s)
    orbit_params = cfg.numeric_params
    for cid, pars, build in two_vertex_points(cfg, orbit_params, 2, 2, 5):
        word = random_word(rng, 3)
        lam = Fraction(rng.randint(2, 5), rng.randint(1, 3))

        def scaling(build=build, word=word, lam=lam):
            from .quiver.points import apply_word
            p = apply_word(word, build())
            before = kappa_bruteforce(p, 4)
            after = kappa_bruteforce(group_action(Generator("theta", 1, lam), p), 4)
            bad = [[l, q] for (l, q), val in before.items()
                   if after[(l, q)] != val * lam ** (q - l)]
            return verdict(not bad, lambda: {"entries": bad})
        yield run_case(s, f"theta-scaling/{cid}",
                       dict(pars, word=_word_json(word), lam=to_json_scalar(lam),
                            tau=orbit_params.to_json()), scaling)


def coeffkappa_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    """Block-product formula for w Y^l X^l v at fixed points and orbit points."""
    from .quiver.kappa import coeffkappa_defect, kappa_bruteforce
    from .quiver.points import apply_word
    s = "coeffkappa"
    lmax = cfg.l(6)
    params = cfg.params

    def check(p):
        bad = {}
        for l in range(lmax + 1):
            d = coeffkappa_defect(p, l)
            if d != 0:
                bad[str(l)] = _js(d)
        if not bad:
            return PASS, None
        # at l = 3 the defect is the product term -(w Y^2 v)(w X^2 v)
        table = kappa_bruteforce(p, 2)
        dropped = -table[(2, 0)] * table[(0, 2)]
        return FAIL, {"defect_by_l": bad, "l3_product_term": _js(dropped),
                      "l3_defect_equals_product_term": coeffkappa_defect(p, 3) == dropped}

    for cid, pars, build in two_vertex_points(cfg, params, cfg.k(3), min(cfg.k(3), 2), cfg.n(6)):
        yield run_case(s, f"{cid}/{params.mode}", dict(pars, mode=params.mode, lmax=lmax),
                       lambda build=build: check(build()))
    rng = cfg.rng(s)
    orbit_params = cfg.numeric_params
    for cid, pars, build in two_vertex_points(cfg, orbit_params, 2, 2, 5):
        for j in range(5):
            word = random_word(rng, rng.randint(1, 6))
            yield run_case(s, f"orbit/{cid}/{j}",
                           dict(pars, word=_word_json(word), lmax=lmax, tau=orbit_params.to_json()),
                           lambda build=build, word=word: check(apply_word(word, build())))


# crossed product

def _random_corner(params: TauParams, rng: random.Random, terms: int = 3, deg: int = 4):
    from .crossed import SElement
    m = params.m
    out = SElement(params)
    for _ in range(terms):
        b = rng.randint(0, deg)
        a = b + m * rng.randint(-(b // m), 2)
        out = out + SElement.monomial(params, 0, a, b, Fraction(rng.randint(-4, 4), rng.randint(1, 3)))
    return out


def _random_s(params: TauParams, rng: random.Random, terms: int = 3, deg: int = 3):
    from .crossed import SElement
    out = SElement(params)
    for _ in range(terms):
        out = out + SElement.monomial(params, rng.randrange(params.m), rng.randint(0, deg),
                                      rng.randint(0, deg), rng.randint(-3, 3))
    return out


def crossed_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    from . import crossed as cp
    s = "crossed"
    params = cfg.params
    rng = cfg.rng(s)
    cm = cp.corner_map(params)

    for j in range(100):
        u, w = _random_corner(params, rng), _random_corner(params, rng)

        def mult(u=u, w=w):
            lhs = cm(u * w)
            rhs = cm(u) * cm(w)
            return verdict(lhs == rhs, lambda: {"lhs": lhs.to_json(), "rhs": rhs.to_json()})
        yield run_case(s, f"phi-multiplicative/{j:03d}", {"u": u.to_json(), "v": w.to_json()}, mult)
    yield run_case(s, "phi-unit", {}, lambda: verdict(cm(cp.SElement.idem(params, 0)) == cm.algebra.one()))

    for j in range(20):
        a, b, c = (_random_s(params, rng) for _ in range(3))
        yield run_case(s, f"associative/{j:02d}", {"u": a.to_json(), "v": b.to_json(), "w": c.to_json()},
                       lambda a=a, b=b, c=c: verdict((a * b) * c == a * (b * c)))

    for n in range(0, cfg.l(10) + 1):
        def iden(n=n):
            case = idn.corner_power_check(n, params)
            return verdict(case.passed, lambda: (case.lhs - case.rhs).to_json())
        yield run_case(s, f"iden_f_n(n={n:02d})", {"n": n}, iden)

    for k in (1, 2):
        for lam in (Fraction(1), Fraction(1, 2), Fraction(-3)):
            yield run_case(s, f"rho(k={k},lam={lam})", {"k": k, "lam": to_json_scalar(lam)},
                           lambda k=k, lam=lam: verdict(cp.rho_correspondence_check(params, k, lam)))
            for sigma in (cp.psi(params, k, lam), cp.phi(params, k, lam), cp.theta(params, lam)):
                u, w = _random_s(params, rng), _random_s(params, rng)

                def hom(sigma=sigma, u=u, w=w):
                    lhs = cp.apply_s_automorphism(sigma, u * w)
                    rhs = cp.apply_s_automorphism(sigma, u) * cp.apply_s_automorphism(sigma, w)
                    return verdict(cp.verify_s_automorphism(sigma) and lhs == rhs)
                yield run_case(s, f"automorphism/{sigma.label}", {"label": sigma.label}, hom)

    # hscale: valid exactly when d_i = 1/c_{i+1}
    for cs in ([2, 3], [Fraction(1, 2), -5], [7, Fraction(2, 3)]):
        m = params.m
        good = [Fraction(1) / Fraction(cs[(i + 1) % m]) for i in range(m)]
        bad = [Fraction(c) for c in cs]
        yield run_case(s, f"hscale-valid(c={cs})", {"c": [to_json_scalar(c) for c in cs]},
                       lambda cs=cs, good=good: verdict(cp.verify_s_automorphism(cp.hscale(params, cs, good))))
        yield run_case(s, f"hscale-invalid(c={cs})", {"c": [to_json_scalar(c) for c in cs]},
                       lambda cs=cs, bad=bad: verdict(not cp.verify_s_automorphism(cp.hscale(params, cs, bad))))
    for cs in ([2, Fraction(1, 2)], [-3, Fraction(-1, 3)]):
        yield run_case(s, f"hscale-kernel(c={cs})", {"c": [to_json_scalar(c) for c in cs]},
                       lambda cs=cs: verdict(cp.kernel_element_acts_trivially(params, cs)))


# generalized Weyl algebra

def _random_gwa(alg, rng: random.Random, terms: int = 3):
    from .gwa import H
    graded = {}
    for _ in range(terms):
        t = rng.randint(-3, 3)
        coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
        graded[t] = Poly(coeffs, H)
    return alg.element(graded)


def gwa_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    from . import gwa as g
    s = "gwa"
    params = cfg.params
    rng = cfg.rng(s)
    alg = g.GwaAlgebra(g.weyl_v(params))
    a, b, h = alg.a(), alg.b(), alg.h()

    for t in range(0, 6):
        def rules(t=t):
            at, bt = a ** t, b ** t
            prod_ab = alg.poly(alg.vprod(-i for i in range(1, t + 1)))
            prod_ba = alg.poly(alg.vprod(range(0, t)))
            p = Poly([1, 2, 3], g.H)
            res = {"a^t b^t": at * bt == prod_ab, "b^t a^t": bt * at == prod_ba,
                   "p a^t": alg.poly(p) * at == at * alg.poly(p.shift(t)),
                   "p b^t": alg.poly(p) * bt == bt * alg.poly(p.shift(-t))}
            return _checks(res)
        yield run_case(s, f"product-rules(t={t})", {"t": t}, rules)

    for j in range(20):
        u, v, w = (_random_gwa(alg, rng) for _ in range(3))

        def assoc(u=u, v=v, w=w):
            grading = all(abs(d) <= 6 for d in (u * v).support())
            return verdict((u * v) * w == u * (v * w) and grading and u * alg.one() == u)
        yield run_case(s, f"associative/{j:02d}", {"seed-index": j}, assoc)

    for k in range(1, 4):
        for lam in (Fraction(1), Fraction(-2), Fraction(1, 3)):
            for kind in ("psi", "phi"):
                yield run_case(s, f"bj/{kind}(k={k},lam={lam})", {"kind": kind, "k": k,
                                                                 "lam": to_json_scalar(lam)},
                               lambda kind=kind, k=k, lam=lam:
                               verdict(g.verify_gwa_automorphism(g.bj_automorphism(alg, kind, k, lam))))
    for lam in (Fraction(2), Fraction(-1, 3)):
        yield run_case(s, f"bj/theta(lam={lam})", {"kind": "theta", "lam": to_json_scalar(lam)},
                       lambda lam=lam: verdict(g.verify_gwa_automorphism(g.bj_automorphism(alg, "theta", 1, lam))))

    def theta_compose():
        l1, l2 = Fraction(2), Fraction(-3, 5)
        th = lambda lam: g.bj_automorphism(alg, "theta", 1, lam)
        comp = th(l1).then(th(l2))
        direct = th(l1 * l2)
        return verdict(all(comp.apply(x) == direct.apply(x) for x in (a, b, h)))
    yield run_case(s, "theta-composition", {}, theta_compose)

    def shifted_h():
        sigma = g.GwaAutomorphism(a, h + alg.one(), b, "h->h+1")
        return verdict(not g.verify_gwa_automorphism(sigma))
    yield run_case(s, "negative/h-shift", {}, shifted_h)

    for j in range(10):
        f = Poly([rng.randint(-3, 3) for _ in range(3)], g.H)
        q = Poly([rng.randint(-3, 3) for _ in range(3)], g.H)
        k = rng.randint(1, 3)
        yield run_case(s, f"delta-derivation/{j}", {"f": f.to_json(), "g": q.to_json(), "k": k},
                       lambda f=f, q=q, k=k: verdict(
                           g.delta_k(f * q, k) == g.delta_k(f, k) * q + g.sigma_shift(f, k) * g.delta_k(q, k)))


# endomorphism rings

def ideal_grid(kmax: int, nmax: int):
    """(family, eps, n, k) for every two-vertex class with k <= kmax, n <= nmax."""
    from .quiver.points import in_L_epsilon
    out = []
    for fam in ("a", "b"):
        for eps in (0, 1):
            for k in range(0, kmax + 1):
                for n in range(k, nmax + 1):
                    dims = (n - k, n) if fam == "a" else (n, n - k)
                    if in_L_epsilon(dims[0], dims[1], eps):
                        out.append((fam, eps, n, k))
    return out


def _ideal_id(fam, eps, n, k):
    return f"{fam}(eps={eps},k={k},n={n})"


def endo_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    from . import gwa as g
    from .core.exact import RatFunc
    s = "endo"
    params = cfg.numeric_params
    alg = g.GwaAlgebra(g.weyl_v(params))
    span = 4

    for fam, eps, n, k in ideal_grid(cfg.k(2), cfg.n(6)):
        pars = {"family": fam, "eps": eps, "n": n, "k": k, "tau": params.to_json()}
        ideal = lambda fam=fam, eps=eps, n=n, k=k: g.omega_generator(params, n, k, eps, fam)

        def closure(ideal=ideal):
            try:
                P = ideal()
            except ParameterError as exc:
                return SKIPPED, {"reason": f"no ideal: {exc}"}
            E = {t: g.endo_graded_component(P, t) for t in range(-2 * span, 2 * span + 1)}
            bad = []
            if not E[0].generator.is_polynomial() or E[0].profile_degree != 0:
                bad.append("E(0) != C[h]")
            for s1 in range(-span, span + 1):
                for t in range(-span, span + 1):
                    prod_ = RatFunc(alg.xx(s1, t)) * E[s1].generator.shift(t) * E[t].generator
                    if not E[s1 + t].contains(prod_):
                        bad.append([s1, t])
            return verdict(not bad, lambda: {"failures": bad[:10]})
        yield run_case(s, f"closure/{_ideal_id(fam, eps, n, k)}", pars, closure)

        # only (0, 0; 0) may have End isomorphic to A(v)
        def certificate(ideal=ideal, trivial=(n == 0 and eps == 0)):
            P = ideal()
            prof = g.endo_profile(P, (-1, 0, 1))
            return verdict(g.nontriviality_certificate(prof) != trivial, lambda: {"profile": prof})
        yield run_case(s, f"certificate/{_ideal_id(fam, eps, n, k)}", pars, certificate)

    l = g.l_poly(params)
    hh = Poly.gen(g.H)
    for k in range(1, cfg.k(3) + 1):
        for label, eps, n, shift in (("w1", 0, k * k + k, 2 * k + 1), ("w2", 1, k * k, 2 * k)):
            def recog(eps=eps, n=n, k=k, shift=shift):
                P = g.omega_generator(params, n, k, eps, "a")
                E = {t: g.endo_graded_component(P, t) for t in range(-3, 4)}
                w = g.recognize_gwa(alg, E)
                target = hh * l.shift(-shift)
                if w is not None and g.equivalent_up_to_shift(w, target):
                    return PASS, None
                return FAIL, {"recognized": None if w is None else w.to_json(),
                              "expected": target.to_json()}
            yield run_case(s, f"recognize/{label}(k={k})", {"k": k, "n": n, "eps": eps,
                                                           "tau": params.to_json()}, recog)
    yield run_case(s, "recognize/self", {}, lambda: verdict(
        g.recognize_gwa(alg, {t: g.GradedComponent(t, RatFunc(Poly.const(1, g.H)))
                              for t in range(-3, 4)}) == alg.v))


def endo_crosscheck_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    """Printed closed forms for E(t)/F(t) against the definitional E(t)."""
    from . import gwa as g
    s = "endo-crosscheck"
    params = cfg.numeric_params
    span = 4
    for fam, eps, n, k in ideal_grid(cfg.k(2), cfg.n(6)):
        for reading in ("printed", "eps"):
            def cross(fam=fam, eps=eps, n=n, k=k, reading=reading):
                try:
                    P = g.omega_generator(params, n, k, eps, fam)
                except Exception as exc:
                    return DISCREPANCY, {"first": {"n": n, "k": k, "eps": eps,
                                                   "ideal": f"error: {exc}"}}
                mismatches = []
                for t in range(-span, span + 1):
                    truth = g.endo_graded_component(P, t).generator.monic()
                    try:
                        closed = g.endo_closed_form(params, n, k, eps, fam, t, reading).generator.monic()
                    except Exception as exc:
                        mismatches.append({"t": t, "closed_form": f"error: {exc}",
                                           "definitional": truth.to_json()})
                        continue
                    if closed != truth:
                        mismatches.append({"t": t, "closed_form": closed.to_json(),
                                           "definitional": truth.to_json()})
                if not mismatches:
                    return PASS, None
                first = min(mismatches, key=lambda r: (abs(r["t"]), r["t"]))
                return DISCREPANCY, {"first": dict(first, n=n, k=k, eps=eps),
                                     "mismatching_t": [r["t"] for r in mismatches],
                                     "all": mismatches}
            yield run_case(s, f"{_ideal_id(fam, eps, n, k)}/{reading}",
                           {"family": fam, "eps": eps, "n": n, "k": k, "reading": reading,
                            "tau": params.to_json()}, cross)


# flexibility

def flex_points(cfg: SuiteConfig, params: TauParams):
    """(case-id, builder) for C_n, n <= 4, and two-vertex varieties of dimension <= 6.

    Two-vertex varieties of a given dimension recur for every k, so the grid
    stops at k = 3; ascending points exist only for k = 1 here.
    """
    from .quiver import fixedpoints as fp
    from .quiver.points import dimension
    m1 = TauParams.numeric(Fraction(3, 5))
    out = [(f"C(n={n})", lambda n=n: fp.fixed_point_search((n,), 0, m1)) for n in range(1, 5)]
    for eps in (0, 1):
        for n in range(1, 4):
            out.append((f"equal(n={n},eps={eps})",
                        lambda n=n, eps=eps: fp.fixed_point_search((n, n), eps, params)))
    for k in range(1, 4):
        for n in range(k * k, k * k + 4):
            out.append((f"rect(k={k},n={n:02d})", lambda n=n, k=k: fp.fixed_point_rect(n, k, params)))
            out.append((f"swapped(k={k},n={n:02d})", lambda n=n, k=k: fp.fixed_point_swapped(n, k, params)))
    for n in range(2, 5):
        out.append((f"ascending(k=1,n={n})", lambda n=n: fp.fixed_point_ascending(n, 1, params)))
        out.append((f"ascending-swapped(k=1,n={n})",
                    lambda n=n: fp.fixed_point_ascending_swapped(n, 1, params)))
    return out


def flex_suite(cfg: SuiteConfig) -> Iterator[CaseResult]:
    from . import flexibility as fx
    from .quiver.points import Generator, apply_word
    s = "flex"
    params = cfg.numeric_params
    rng = cfg.rng(s)
    orbits = 5

    def span(p):
        r = fx.span_check(p, with_omega=p.dim.total <= 8)
        return verdict(r.passed, lambda: r.to_json())

    for cid, build in flex_points(cfg, params):
        yield run_case(s, f"span/{cid}/fixed", {"point": cid, "tau": params.to_json()},
                       lambda build=build: span(build()))
        for j in range(orbits):
            word = random_word(rng, rng.randint(1, 6))
            yield run_case(s, f"span/{cid}/orbit-{j}", {"point": cid, "word": _word_json(word)},
                           lambda build=build, word=word: span(apply_word(word, build())))

    gens = [Generator("theta", 1, Fraction(2)), Generator("theta", 1, Fraction(-1, 3)),
            Generator("psi", 1, Fraction(1, 3)), Generator("psi", 2, Fraction(-2)),
            Generator("phi", 1, Fraction(3)), Generator("phi", 2, Fraction(1, 2))]
    from .quiver import fixedpoints as fp
    samples = [("rect(k=1,n=2)", fp.fixed_point_rect(2, 1, params)),
               ("rect(k=2,n=5)", fp.fixed_point_rect(5, 2, params)),
               ("C(n=2)", fp.fixed_point_search((2,), 0, TauParams.numeric(Fraction(3, 5))))]
    for cid, base in samples:
        for j in range(2):
            word = random_word(rng, 3)
            p = apply_word(word, base)
            t1, t2 = fx.random_tangent_pair(p, rng)
            for g in gens:
                yield run_case(s, f"symplectic/{cid}/{j}/{g.kind}(k={g.k},lam={g.lam})",
                               {"point": cid, "word": _word_json(word), "generator": g.to_json()},
                               lambda p=p, g=g, t1=t1, t2=t2: verdict(fx.symplectic_check(p, g, t1, t2)))
            control = Generator("scale-x", 1, Fraction(2))
            # the control must fail unless omega(t1, t2) happens to vanish
            yield run_case(s, f"symplectic/{cid}/{j}/control-scale-x",
                           {"point": cid, "word": _word_json(word)},
                           lambda p=p, t1=t1, t2=t2, control=control: verdict(
                               fx._omega_xy(*t1, *t2) == 0 or not fx.symplectic_check(p, control, t1, t2)))
            for a in (Fraction(0), Fraction(1), Fraction(-1, 2)):
                for n1, n2 in ((1, 1), (1, 2), (2, 1)):
                    yield run_case(s, f"hamiltonian/{cid}/{j}/a={a}/n1={n1}/n2={n2}",
                                   {"point": cid, "word": _word_json(word), "a": to_json_scalar(a),
                                    "n1": n1, "n2": n2},
                                   lambda p=p, a=a, n1=n1, n2=n2: verdict(
                                       fx.hamiltonian_flow_check(p, a, n1, n2)))


SUITES: Dict[str, Callable[[SuiteConfig], Iterator[CaseResult]]] = {
    "appendix": appendix_suite,
    "index-sets": index_sets_suite,
    "fixed-points": fixed_points_suite,
    "kappa": kappa_suite,
    "coeffkappa": coeffkappa_suite,
    "crossed": crossed_suite,
    "gwa": gwa_suite,
    "endo": endo_suite,
    "endo-crosscheck": endo_crosscheck_suite,
    "flex": flex_suite,
}

# statuses a suite may emit without failing the run
INFORMATIONAL = {"endo-crosscheck"}


def run_suites(cfg: SuiteConfig) -> List[CaseResult]:
    records = []
    for name in cfg.suites:
        records.extend(SUITES[name](cfg))
    records.sort(key=lambda r: r.case_id)
    return records
