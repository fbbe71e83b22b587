"""Tangent-space linear algebra at points of cyclic quiver varieties.

Ambient coordinates are the entries of every X_i block, then every Y_i
block, then v, then w.  The symplectic pairing used throughout is

    omega(t1, t2) = Tr(dX1 dY2 - dX2 dY1) + (dw1 . dv2 - dw2 . dv1),

whose framing part makes the gauge vector fields Hamiltonian for the
moment map XY - YX + T - vw.  The flows act on X and Y only, so the framing
part never enters the invariance checks.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import List, Optional, Sequence

from .core.matrix import Matrix
from .quiver.points import DimensionData, QuiverPoint, dimension, moment_map_residual

ZERO = Fraction(0)


@dataclass
class TangentVector:
    dX: List[Matrix]
    dY: List[Matrix]
    dv: list
    dw: list

    def to_flat(self) -> list:
        out = []
        for M in self.dX + self.dY:
            for row in M.data:
                out.extend(row)
        return out + list(self.dv) + list(self.dw)


class Coordinates:
    """Flat indexing of the ambient space of a dimension vector."""

    def __init__(self, dim: DimensionData):
        self.dim = dim
        m = dim.m
        off = dim.offsets()
        self.big_offsets = off
        self.entries = []      # (kind, block, r, c) per coordinate
        for kind in ("X", "Y"):
            for i in range(m):
                rows, cols = (dim.n(i), dim.n(i + 1)) if kind == "X" else (dim.n(i + 1), dim.n(i))
                for r in range(rows):
                    for c in range(cols):
                        self.entries.append((kind, i, r, c))
        nk = dim.n(dim.framing)
        for r in range(nk):
            self.entries.append(("v", dim.framing, r, 0))
        for r in range(nk):
            self.entries.append(("w", dim.framing, 0, r))
        self.size = len(self.entries)

    def big_position(self, idx: int):
        """(row, col) in the assembled n x n matrix for an X/Y coordinate."""
        kind, i, r, c = self.entries[idx]
        off, m = self.big_offsets, self.dim.m
        j = (i + 1) % m
        if kind == "X":
            return off[i] + r, off[j] + c
        if kind == "Y":
            return off[j] + r, off[i] + c
        return off[i] + (r if kind == "v" else c), None

    def from_flat(self, vec) -> TangentVector:
        d = self.dim
        dX = [Matrix(d.n(i), d.n(i + 1)) for i in range(d.m)]
        dY = [Matrix(d.n(i + 1), d.n(i)) for i in range(d.m)]
        nk = d.n(d.framing)
        dv = [ZERO] * nk
        dw = [ZERO] * nk
        for idx, x in enumerate(vec):
            kind, i, r, c = self.entries[idx]
            if kind == "X":
                dX[i][r, c] = x
            elif kind == "Y":
                dY[i][r, c] = x
            elif kind == "v":
                dv[r] = x
            else:
                dw[c] = x
        return TangentVector(dX, dY, dv, dw)


def _big(dim: DimensionData, blocks, kind: str) -> Matrix:
    m = dim.m
    if m == 1:
        return blocks[0]
    if kind == "X":
        return Matrix.blocks(dim.dims, dim.dims, {(i, (i + 1) % m): blocks[i] for i in range(m)})
    return Matrix.blocks(dim.dims, dim.dims, {((i + 1) % m, i): blocks[i] for i in range(m)})


def _embed(dim: DimensionData, vec) -> list:
    off = dim.offsets()
    out = [ZERO] * off[-1]
    for j, x in enumerate(vec):
        out[off[dim.framing] + j] = x
    return out


def dmu_apply(p: QuiverPoint, t: TangentVector) -> Matrix:
    """dX Y + X dY - dY X - Y dX - dv w - v dw."""
    d = p.dim
    if len(t.dX) != d.m or any(a.shape != b.shape for a, b in zip(t.dX, p.X)) \
            or any(a.shape != b.shape for a, b in zip(t.dY, p.Y)):
        raise ValueError("tangent vector does not match the point")
    X, Y = p.big_X(), p.big_Y()
    dX, dY = _big(d, t.dX, "X"), _big(d, t.dY, "Y")
    v, w = p.big_v(), p.big_w()
    dv, dw = _embed(d, t.dv), _embed(d, t.dw)
    out = dX @ Y + X @ dY - dY @ X - Y @ dX
    n = out.rows
    for r in range(n):
        for c in range(n):
            out[r, c] = out[r, c] - dv[r] * w[c] - v[r] * dw[c]
    return out


def dmu_matrix(p: QuiverPoint) -> List[list]:
    """Rows: entries (r, c) of the n x n differential; columns: coordinates."""
    coords = Coordinates(p.dim)
    X, Y = p.big_X(), p.big_Y()
    v, w = p.big_v(), p.big_w()
    n = X.rows
    rows = [[ZERO] * coords.size for _ in range(n * n)]

    def add(r, c, col, val):
        if val != 0:
            rows[r * n + c][col] = rows[r * n + c][col] + val

    for idx in range(coords.size):
        kind = coords.entries[idx][0]
        a, b = coords.big_position(idx)
        if kind == "X":
            # E_ab Y - Y E_ab
            for c in range(n):
                add(a, c, idx, Y[b, c])
                add(c, b, idx, -Y[c, a])
        elif kind == "Y":
            # X E_ab - E_ab X
            for c in range(n):
                add(c, b, idx, X[c, a])
                add(a, c, idx, -X[b, c])
        elif kind == "v":
            for c in range(n):
                add(a, c, idx, -w[c])
        else:
            for c in range(n):
                add(c, a, idx, -v[c])
    return rows


def gauge_directions(p: QuiverPoint) -> List[TangentVector]:
    """Infinitesimal action of each elementary matrix of gl(n_0) + ... + gl(n_{m-1})."""
    d = p.dim
    out = []
    for i in range(d.m):
        ni = d.n(i)
        for r in range(ni):
            for c in range(ni):
                xi = [Matrix(d.n(j), d.n(j)) for j in range(d.m)]
                xi[i][r, c] = Fraction(1)
                dX = [xi[j] @ p.X[j] - p.X[j] @ xi[(j + 1) % d.m] for j in range(d.m)]
                dY = [xi[(j + 1) % d.m] @ p.Y[j] - p.Y[j] @ xi[j] for j in range(d.m)]
                k = d.framing
                dv = xi[k].apply(p.v)
                dw = [-x for x in xi[k].apply_left(p.w)]
                out.append(TangentVector(dX, dY, dv, dw))
    return out


def invariant_value(p: QuiverPoint, c, N: int):
    M = p.big_Y() + p.big_X().scale(c)
    vec = p.big_v()
    for _ in range(N):
        vec = M.apply(vec)
    acc = ZERO
    for a, b in zip(p.big_w(), vec):
        acc = acc + a * b
    return acc


def invariant_gradient(p: QuiverPoint, c, N: int) -> list:
    """Differential of w (Y + cX)^N v as a row over the ambient coordinates."""
    coords = Coordinates(p.dim)
    M = p.big_Y() + p.big_X().scale(c)
    lefts = [p.big_w()]
    rights = [p.big_v()]
    for _ in range(N):
        lefts.append(M.apply_left(lefts[-1]))
        rights.append(M.apply(rights[-1]))
    n = M.rows
    # sum_j (w M^j)_r (M^{N-1-j} v)_s
    core = [[ZERO] * n for _ in range(n)]
    for j in range(N):
        L, R = lefts[j], rights[N - 1 - j]
        for r in range(n):
            if L[r] == 0:
                continue
            row = core[r]
            for s in range(n):
                if R[s] != 0:
                    row[s] = row[s] + L[r] * R[s]
    grad = []
    for idx in range(coords.size):
        kind = coords.entries[idx][0]
        a, b = coords.big_position(idx)
        if kind == "X":
            grad.append(c * core[a][b])
        elif kind == "Y":
            grad.append(core[a][b])
        elif kind == "v":
            grad.append(lefts[N][a])
        else:
            grad.append(rights[N][a])
    return grad


def pair(row: Sequence, vec: Sequence):
    acc = ZERO
    for a, b in zip(row, vec):
        if a != 0 and b != 0:
            acc = acc + a * b
    return acc


class Echelon:
    """Incrementally maintained row echelon basis over Q.

    Rows are stored as primitive integer vectors and reduced fraction-free;
    a new row is reduced against the stored ones in insertion order, which
    is enough because each stored row vanishes at all earlier pivots.
    """

    def __init__(self, width: int):
        self.width = width
        self.rows: List[list] = []
        self.pivots: List[int] = []

    @staticmethod
    def _integral(vec) -> list:
        den = 1
        for x in vec:
            if x != 0:
                den = lcm(den, Fraction(x).denominator)
        return [int(Fraction(x) * den) for x in vec]

    @staticmethod
    def _primitive(vec: list) -> list:
        g = 0
        for x in vec:
            if x:
                g = gcd(g, x)
                if g == 1:
                    return vec
        return [x // g for x in vec] if g > 1 else vec

    def reduce(self, vec) -> list:
        vec = self._integral(vec)
        for row, pc in zip(self.rows, self.pivots):
            f = vec[pc]
            if f:
                piv = row[pc]
                vec = self._primitive([piv * x - f * y for x, y in zip(vec, row)])
        return vec

    def add(self, vec) -> bool:
        vec = self.reduce(vec)
        pc = next((j for j, x in enumerate(vec) if x), None)
        if pc is None:
            return False
        self.rows.append(self._primitive(vec))
        self.pivots.append(pc)
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)


def default_samples(p: QuiverPoint):
    """(c, N) pairs: even N for two or more vertices, N up to the matrix size,
    N + 1 distinct constants for each N."""
    n = p.dim.total
    step = p.dim.m if p.dim.m > 1 else 1
    out = []
    for N in range(0, n + step + 1, step):
        cs = [0]
        j = 1
        while len(cs) < N + 1:
            cs.extend([Fraction(j), Fraction(-j)])
            j += 1
        out.extend((c, N) for c in cs[:N + 1])
    return out


@dataclass
class SpanReport:
    label: str
    ambient: int
    dmu_rank: int
    gauge_rank: int
    tangent_dim: int
    gradient_rank: int
    expected_dim: int
    gauge_invariant: bool
    omega_rank: Optional[int] = None
    samples_used: int = 0

    @property
    def passed(self) -> bool:
        ok = (self.gradient_rank == self.tangent_dim - self.gauge_rank == self.expected_dim
              and self.gauge_invariant)
        if self.omega_rank is not None:
            ok = ok and self.omega_rank == self.expected_dim
        return ok

    def to_json(self):
        return {"label": self.label, "ambient": self.ambient, "dmu_rank": self.dmu_rank,
                "gauge_rank": self.gauge_rank, "tangent_dim": self.tangent_dim,
                "gradient_rank": self.gradient_rank, "expected_dim": self.expected_dim,
                "gauge_invariant": self.gauge_invariant, "omega_rank": self.omega_rank,
                "pass": self.passed}


def omega(coords: Coordinates, t1: Sequence, t2: Sequence):
    """omega on flat vectors."""
    a = coords.from_flat(t1)
    b = coords.from_flat(t2)
    d = coords.dim
    X1, Y1 = _big(d, a.dX, "X"), _big(d, a.dY, "Y")
    X2, Y2 = _big(d, b.dX, "X"), _big(d, b.dY, "Y")
    val = (X1 @ Y2).trace() - (X2 @ Y1).trace()
    return val + pair(a.dw, b.dv) - pair(b.dw, a.dv)


def span_check(p: QuiverPoint, samples=None, with_omega: bool = False) -> SpanReport:
    """Do the differentials of w (Y + cX)^N v span the cotangent space of the
    variety at p?

    rank of the differentials on ker(d mu) is read off as
    rank([d mu; grads]) - rank(d mu).  Sampling stops as soon as the rank
    reaches tangent - gauge, its upper bound once invariance is confirmed.
    """
    coords = Coordinates(p.dim)
    ech = Echelon(coords.size)
    for row in dmu_matrix(p):
        ech.add(row)
    dmu_rank = ech.rank
    tangent = coords.size - dmu_rank
    gauge = [g.to_flat() for g in gauge_directions(p)]
    g_ech = Echelon(coords.size)
    for g in gauge:
        g_ech.add(g)
    gauge_rank = g_ech.rank
    target = tangent - gauge_rank
    samples = default_samples(p) if samples is None else list(samples)
    invariant = True
    used = 0
    grads = []
    for c, N in samples:
        if ech.rank - dmu_rank >= target:
            break
        grad = invariant_gradient(p, c, N)
        used += 1
        if len(grads) < 3 and any(pair(grad, g) != 0 for g in gauge):
            invariant = False
        grads.append(grad)
        ech.add(grad)
    omega_rank = None
    if with_omega:
        omega_rank = omega_rank_on_tangent(p, coords, g_ech)
    return SpanReport(p.label, coords.size, dmu_rank, gauge_rank, tangent,
                      ech.rank - dmu_rank, dimension(p.dim), invariant, omega_rank, used)


def omega_rank_on_tangent(p: QuiverPoint, coords: Coordinates, g_ech: Echelon) -> int:
    """Rank of omega restricted to ker(d mu), via a complement of the gauge span."""
    from .core.matrix import kernel_basis, rank_rational
    K = kernel_basis(Matrix.from_rows(dmu_matrix(p)))
    comp = []
    work = Echelon(coords.size)
    for r in g_ech.rows:
        work.add(r)
    for vec in K:
        if work.add(vec):
            comp.append(vec)
    if not comp:
        return 0
    gram = Matrix.from_rows([[omega(coords, a, b) for b in comp] for a in comp])
    return rank_rational(gram)


# the group action, differentiated

def _power(M: Matrix, e: int) -> Matrix:
    out = Matrix.identity(M.rows)
    for _ in range(e):
        out = out @ M
    return out


def _dpower(M: Matrix, dM: Matrix, e: int) -> Matrix:
    """Derivative of M^e in the direction dM."""
    out = Matrix(M.rows, M.cols)
    for j in range(e):
        out = out + _power(M, j) @ dM @ _power(M, e - 1 - j)
    return out


def action_derivative(g, p: QuiverPoint, dX: Matrix, dY: Matrix):
    """Push (dX, dY) forward through the action of a generator at p."""
    X, Y = p.big_X(), p.big_Y()
    m = p.dim.m
    if g.kind == "theta":
        return dX.scale(g.lam), dY.scale(1 / g.lam)
    c = p.params.total * g.k * g.lam
    if g.kind == "psi":
        return dX + _dpower(Y, dY, g.k * m - 1).scale(c), dY
    if g.kind == "phi":
        return dX, dY - _dpower(X, dX, g.k * m - 1).scale(c)
    if g.kind == "scale-x":
        # deliberately not symplectic: (X, Y) -> (lam X, Y)
        return dX.scale(g.lam), dY
    raise ValueError(f"unknown generator {g.kind!r}")


def _omega_xy(dX1, dY1, dX2, dY2):
    return (dX1 @ dY2).trace() - (dX2 @ dY1).trace()


def random_tangent_pair(p: QuiverPoint, rng: random.Random):
    d = p.dim

    def rnd(rows, cols):
        M = Matrix(rows, cols)
        for r in range(rows):
            for c in range(cols):
                M[r, c] = Fraction(rng.randint(-3, 3))
        return M

    out = []
    for _ in range(2):
        dX = [rnd(d.n(i), d.n(i + 1)) for i in range(d.m)]
        dY = [rnd(d.n(i + 1), d.n(i)) for i in range(d.m)]
        out.append((_big(d, dX, "X"), _big(d, dY, "Y")))
    return out


def symplectic_check(p: QuiverPoint, g, t1, t2) -> bool:
    """omega(D sigma t1, D sigma t2) == omega(t1, t2) for (dX, dY) pairs."""
    a = action_derivative(g, p, *t1)
    b = action_derivative(g, p, *t2)
    return _omega_xy(*a, *b) - _omega_xy(*t1, *t2) == 0


def flow_velocity(p: QuiverPoint, a, n1: int, n2: int):
    """d/dt at 0 of (X, Y) -> S_a U_t S_{-a} (X, Y), where
    S_a: X -> X + a Y^{m n1 - 1} and U_t: Y -> Y + t X^{m n2 - 1}."""
    m = p.dim.m
    X, Y = p.big_X(), p.big_Y()
    e1, e2 = m * n1 - 1, m * n2 - 1
    Xs = X - _power(Y, e1).scale(a)
    dY = _power(Xs, e2)
    dX = _dpower(Y, dY, e1).scale(a)
    return dX, dY


def flow_hamiltonian_gradient(p: QuiverPoint, a, n1: int, n2: int) -> list:
    """Differential of H = w (X - a Y^{m n1 - 1})^{m n2} v over all coordinates."""
    m = p.dim.m
    coords = Coordinates(p.dim)
    X, Y = p.big_X(), p.big_Y()
    e1, N = m * n1 - 1, m * n2
    M = X - _power(Y, e1).scale(a)
    lefts = [p.big_w()]
    rights = [p.big_v()]
    for _ in range(N):
        lefts.append(M.apply_left(lefts[-1]))
        rights.append(M.apply(rights[-1]))
    n = M.rows
    core = Matrix(n, n)        # dH/dM[r, s]
    for j in range(N):
        for r in range(n):
            for s in range(n):
                core[r, s] = core[r, s] + lefts[j][r] * rights[N - 1 - j][s]
    # dM = dX - a d(Y^{e1}); pull the Y part back through the power
    grad = []
    # d/dY[r,s] of Tr(core^T dM) = -a sum_j (Y^j)^T core (Y^{e1-1-j})^T at (r, s)
    coreT = core.transpose()
    yback = Matrix(n, n)
    for j in range(e1):
        yback = yback + _power(Y, e1 - 1 - j) @ coreT @ _power(Y, j)
    for idx in range(coords.size):
        kind = coords.entries[idx][0]
        r, s = coords.big_position(idx)
        if kind == "X":
            grad.append(core[r, s])
        elif kind == "Y":
            grad.append(-a * yback[s, r])
        elif kind == "v":
            grad.append(lefts[N][r])
        else:
            grad.append(rights[N][r])
    return grad


def hamiltonian_flow_check(p: QuiverPoint, a, n1: int, n2: int) -> bool:
    """dH(t) = -n2 (sum tau) omega(V, t) for every t in ker(d mu).

    V is the velocity of the conjugated flow and H = w(X - aY^{mn1-1})^{mn2} v.
    On the variety w M^{mN} v = Tr(M^{mN} T) for any M differing from X by a
    polynomial in Y, which fixes the constant.
    """
    from .core.matrix import kernel_basis
    coords = Coordinates(p.dim)
    dX, dY = flow_velocity(p, a, n1, n2)
    grad = flow_hamiltonian_gradient(p, a, n1, n2)
    const = n2 * p.params.total
    K = kernel_basis(Matrix.from_rows(dmu_matrix(p)))
    for vec in K:
        t = coords.from_flat(vec)
        tX, tY = _big(p.dim, t.dX, "X"), _big(p.dim, t.dY, "Y")
        if pair(grad, vec) + const * _omega_xy(dX, dY, tX, tY) != 0:
            return False
    return True
