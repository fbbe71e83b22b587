"""Points of cyclic quiver varieties and the checks that certify them.

Conventions: vertex i carries V_i of dimension n_i, ``X_i: V_{i+1} -> V_i``
(an n_i x n_{i+1} matrix) and ``Y_i: V_i -> V_{i+1}`` (n_{i+1} x n_i).  The
framing sits at vertex k with ``v`` a column in V_k and ``w`` a row on V_k.
In the assembled n x n matrices X_i is the block (i, i+1) and Y_i the
block (i+1, i), so the moment map is ``X Y - Y X + T - v w``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Sequence

from ..core.exact import Poly, to_json_scalar
from ..core.matrix import Matrix, outer, rank_rational
from ..core.params import TauParams

ZERO = Fraction(0)


@dataclass(frozen=True)
class DimensionData:
    dims: tuple
    framing: int
    params: TauParams

    def __post_init__(self):
        if len(self.dims) != self.params.m:
            raise ValueError("one dimension per vertex")
        if any(d < 0 for d in self.dims):
            raise ValueError("dimensions must be non-negative")
        if not 0 <= self.framing < self.m:
            raise ValueError("framing vertex out of range")

    @property
    def m(self) -> int:
        return self.params.m

    def n(self, i: int) -> int:
        return self.dims[i % self.m]

    @property
    def total(self) -> int:
        return sum(self.dims)

    def offsets(self) -> List[int]:
        out = [0]
        for d in self.dims:
            out.append(out[-1] + d)
        return out

    def to_json(self):
        return {"dims": list(self.dims), "framing": self.framing, "tau": self.params.to_json()}


@dataclass
class QuiverPoint:
    dim: DimensionData
    X: List[Matrix]
    Y: List[Matrix]
    v: list
    w: list
    label: str = ""
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        d = self.dim
        for i in range(d.m):
            if self.X[i].shape != (d.n(i), d.n(i + 1)):
                raise ValueError(f"X_{i} has shape {self.X[i].shape}")
            if self.Y[i].shape != (d.n(i + 1), d.n(i)):
                raise ValueError(f"Y_{i} has shape {self.Y[i].shape}")
        if len(self.v) != d.n(d.framing) or len(self.w) != d.n(d.framing):
            raise ValueError("framing vectors have the wrong length")

    @property
    def params(self):
        return self.dim.params

    def big_X(self) -> Matrix:
        d = self.dim
        if d.m == 1:
            return self.X[0]
        return Matrix.blocks(d.dims, d.dims, {(i, (i + 1) % d.m): self.X[i] for i in range(d.m)})

    def big_Y(self) -> Matrix:
        d = self.dim
        if d.m == 1:
            return self.Y[0]
        return Matrix.blocks(d.dims, d.dims, {((i + 1) % d.m, i): self.Y[i] for i in range(d.m)})

    def big_v(self) -> list:
        off = self.dim.offsets()
        out = [ZERO] * off[-1]
        for j, x in enumerate(self.v):
            out[off[self.dim.framing] + j] = x
        return out

    def big_w(self) -> list:
        off = self.dim.offsets()
        out = [ZERO] * off[-1]
        for j, x in enumerate(self.w):
            out[off[self.dim.framing] + j] = x
        return out

    def big_T(self) -> Matrix:
        d = self.dim
        out = Matrix(d.total, d.total)
        off = d.offsets()
        for i in range(d.m):
            for j in range(off[i], off[i + 1]):
                out[j, j] = d.params.tau(i)
        return out

    def with_blocks(self, X=None, Y=None, v=None, w=None, label=None) -> "QuiverPoint":
        return QuiverPoint(self.dim, list(X if X is not None else self.X),
                           list(Y if Y is not None else self.Y),
                           list(v if v is not None else self.v),
                           list(w if w is not None else self.w),
                           self.label if label is None else label, dict(self.meta))

    @classmethod
    def from_big(cls, dim: DimensionData, X: Matrix, Y: Matrix, v, w, label="", meta=None):
        off = dim.offsets()
        m = dim.m
        Xs, Ys = [], []
        for i in range(m):
            j = (i + 1) % m
            Xs.append(X.block(off[i], off[i + 1], off[j], off[j + 1]))
            Ys.append(Y.block(off[j], off[j + 1], off[i], off[i + 1]))
        k = dim.framing
        return cls(dim, Xs, Ys, list(v[off[k]:off[k + 1]]), list(w[off[k]:off[k + 1]]),
                   label, dict(meta or {}))

    def map_entries(self, fn) -> "QuiverPoint":
        return self.with_blocks([x.map(fn) for x in self.X], [y.map(fn) for y in self.Y],
                                [fn(c) for c in self.v], [fn(c) for c in self.w])

    def specialize(self, zval) -> "QuiverPoint":
        """Substitute z = zval in a symbolic point."""
        zval = Fraction(zval)

        def ev(c):
            return c.substitute("z", zval) if isinstance(c, Poly) else c

        pt = self.map_entries(ev)
        pt.dim = DimensionData(self.dim.dims, self.dim.framing, self.params.specialize(zval))
        return pt

    def to_json(self):
        return {
            "dim": self.dim.to_json(),
            "X": [x.to_json() for x in self.X],
            "Y": [y.to_json() for y in self.Y],
            "v": [to_json_scalar(c) for c in self.v],
            "w": [to_json_scalar(c) for c in self.w],
        }


def empty_point(params: TauParams, framing: int = 0) -> QuiverPoint:
    dim = DimensionData(tuple([0] * params.m), framing, params)
    return QuiverPoint(dim, [Matrix(0, 0)] * params.m, [Matrix(0, 0)] * params.m, [], [],
                       "empty")


def moment_map_residual(p: QuiverPoint) -> Matrix:
    X, Y = p.big_X(), p.big_Y()
    return X @ Y - Y @ X + p.big_T() - outer(p.big_v(), p.big_w())


def vertex_residuals(p: QuiverPoint) -> List[Matrix]:
    """X_i Y_i - Y_{i-1} X_{i-1} + tau_i Id (- v w at the framing vertex)."""
    d = p.dim
    out = []
    for i in range(d.m):
        r = p.X[i] @ p.Y[i] - p.Y[i - 1] @ p.X[i - 1] + Matrix.identity(d.n(i), d.params.tau(i))
        if i == d.framing:
            r = r - outer(p.v, p.w)
        out.append(r)
    return out


def on_variety(p: QuiverPoint) -> bool:
    return moment_map_residual(p).is_zero()


def trace_constraint(p: QuiverPoint) -> bool:
    """sum_i tau_i n_i = w v."""
    lhs = ZERO
    for i, n in enumerate(p.dim.dims):
        lhs = lhs + p.params.tau(i) * n
    rhs = ZERO
    for a, b in zip(p.w, p.v):
        rhs = rhs + a * b
    return lhs - rhs == 0


def _numeric(p: QuiverPoint, sample_z) -> QuiverPoint:
    if p.params.symbolic:
        return p.specialize(sample_z)
    return p


def check_stability(p: QuiverPoint, sample_z=Fraction(3, 7)) -> bool:
    """Is V the smallest X,Y-stable subspace containing v?

    Symbolic points are specialised at a generic z first.  A specialisation
    can only lower the rank, so a True answer there is also True generically.
    """
    p = _numeric(p, sample_z)
    n = p.dim.total
    if n == 0:
        return True
    X, Y = p.big_X(), p.big_Y()
    basis: List[list] = []
    frontier = [p.big_v()]
    while frontier:
        vec = frontier.pop()
        trial = basis + [vec]
        if rank_rational(Matrix.from_rows(trial)) == len(basis):
            continue
        basis.append(vec)
        if len(basis) == n:
            return True
        frontier.append(X.apply(vec))
        frontier.append(Y.apply(vec))
    return len(basis) == n


def dimension(d: DimensionData) -> int:
    """Expected dimension of the variety (formula as usually quoted)."""
    ns = d.dims
    nk = ns[d.framing]
    if d.m == 1:
        return 2 * ns[0]
    if d.m == 2:
        return 2 * (nk - (ns[0] - ns[1]) ** 2)
    quad = sum(x * x for x in ns) - sum(ns[i] * ns[j] for i in range(d.m) for j in range(i + 1, d.m))
    return 2 * (nk - quad)


def dimension_cyclic(d: DimensionData) -> int:
    """2(n_k - q(n)) with q the Cartan form of the cyclic quiver (adjacent pairs only)."""
    ns = d.dims
    if d.m == 1:
        return 2 * ns[0]
    if d.m == 2:
        return 2 * (ns[d.framing] - (ns[0] - ns[1]) ** 2)
    quad = sum(x * x for x in ns) - sum(ns[i] * ns[(i + 1) % d.m] for i in range(d.m))
    return 2 * (ns[d.framing] - quad)


def in_L_epsilon(n0: int, n1: int, eps: int) -> bool:
    """(n0, n1) in L_eps: (n-k, n) with n >= k^2+(1-eps)k, or (n, n-k) with n >= k^2+eps*k."""
    if n0 < 0 or n1 < 0 or eps not in (0, 1):
        return False
    if n1 >= n0:
        k, n = n1 - n0, n1
        return n >= k * k + (1 - eps) * k
    k, n = n0 - n1, n0
    return n >= k * k + eps * k


# group action

def _power(M: Matrix, e: int) -> Matrix:
    out = Matrix.identity(M.rows)
    for _ in range(e):
        out = out @ M
    return out


@dataclass(frozen=True)
class Generator:
    kind: str          # theta | psi | phi
    k: int = 1
    lam: Fraction = Fraction(1)

    def inverse(self) -> "Generator":
        if self.kind == "theta":
            return Generator("theta", self.k, 1 / self.lam)
        return Generator(self.kind, self.k, -self.lam)

    def to_json(self):
        return {"kind": self.kind, "k": self.k, "lam": to_json_scalar(self.lam)}


def group_action(g: Generator, p: QuiverPoint) -> QuiverPoint:
    """sigma.(X, Y, v, w) = (sigma^{-1}(X), sigma^{-1}(Y), v, w).

    theta_lam: (X, Y) -> (lam X, lam^{-1} Y)
    psi_{k,lam}: X -> X + k lam (sum tau) Y^{km-1}
    phi_{k,lam}: Y -> Y - k lam (sum tau) X^{km-1}
    """
    X, Y = p.big_X(), p.big_Y()
    m = p.dim.m
    c = p.params.total * g.k * g.lam
    if g.kind == "theta":
        if g.lam == 0:
            raise ValueError("theta needs lambda != 0")
        X2, Y2 = X.scale(g.lam), Y.scale(1 / g.lam)
    elif g.kind == "psi":
        X2, Y2 = X + _power(Y, g.k * m - 1).scale(c), Y
    elif g.kind == "phi":
        X2, Y2 = X, Y - _power(X, g.k * m - 1).scale(c)
    else:
        raise ValueError(f"unknown generator {g.kind!r}")
    return QuiverPoint.from_big(p.dim, X2, Y2, p.big_v(), p.big_w(),
                                p.label, p.meta)


def apply_word(word: Sequence[Generator], p: QuiverPoint) -> QuiverPoint:
    for g in word:
        p = group_action(g, p)
    return p


def sparsity(p: QuiverPoint):
    """Nonzero block pattern of X and Y."""
    return ([not x.is_zero() for x in p.X], [not y.is_zero() for y in p.Y])


def rotate(p: QuiverPoint, params: Optional[TauParams] = None) -> QuiverPoint:
    """Relabel vertex i+1 as vertex i.

    The new point lives over tau'_i = tau_{i+1}; ``params`` can supply an
    equivalent parameter object (for example the unswapped symbolic one).
    """
    d = p.dim
    m = d.m
    new_params = params if params is not None else d.params.rotated(1)
    dims = tuple(d.n(i + 1) for i in range(m))
    dim = DimensionData(dims, (d.framing - 1) % m, new_params)
    X = [p.X[(i + 1) % m] for i in range(m)]
    Y = [p.Y[(i + 1) % m] for i in range(m)]
    return QuiverPoint(dim, X, Y, list(p.v), list(p.w), p.label + "|rot", dict(p.meta))
