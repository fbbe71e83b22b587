"""Explicit C*-fixed points of the two-vertex quiver varieties.

``fixed_point_square``  -> M(k^2-k, k^2; 1)
``fixed_point_rect``    -> M(n-k, n; 1), n >= k^2 (square block plus a padding chain)
``fixed_point_swapped`` -> M(n, n-k; 0), the rect point with the vertices relabelled
``fixed_point_search``  -> thin-chain solutions for small dimension vectors

Entries are written down column by column: column ``idx`` of Y_1 (resp.
Y_0) depends on which index family S_l (resp. T_l) contains ``idx`` and on
the (i, j) pair that produced it.  With ``a = tau_1`` and ``b = tau_0 + tau_1``
every entry is an integer combination of a and b, so the same code serves
numeric and symbolic parameters.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional

from ..core.exact import ParameterError
from ..core.matrix import Matrix
from ..core.params import TauParams
from .indexsets import build_index_sets
from .points import DimensionData, QuiverPoint, empty_point, in_L_epsilon

ONE = Fraction(1)


def _adder(M: Matrix):
    def add(col: int, row: int, c):
        if not 1 <= row <= M.rows:
            raise AssertionError(f"row {row} outside 1..{M.rows} (column {col})")
        M[row - 1, col - 1] = M[row - 1, col - 1] + c
    return add


def _square_blocks(k: int, params: TauParams, pad: int = 0):
    """Y_1 (k(k-1) x k^2), Y_0 (k^2 x k(k-1)) of the square point.

    ``pad`` = n - k^2 enlarges the coefficient of the diagonal columns
    (j = i in S3, S4, T3, T4) from a + 2(k-1)b to a + (2(k-1) + pad)b, which
    is what the padded rectangular point needs.
    """
    a, b = params.a, params.b
    n0, n1 = k * (k - 1), k * k
    sets = build_index_sets(k)

    def coef(i, j, diag_family=False):
        extra = pad if (diag_family and i == j) else 0
        return a + (2 * (k - i + j - 1) + extra) * b

    Y1 = Matrix(n0, n1)
    addv = _adder(Y1)
    for idx, (i, j) in sets.S[0].items():
        addv(idx, i * i + 1 - j, (2 * j - 1) * b)
        c = coef(i, j)
        for l in range(1, (i - j + 1) // 2 + 1):
            addv(idx, (i - l + 1) ** 2 - i - j + 1, c)
        for l in range(1, (i - j) // 2 + 1):
            addv(idx, (i - l) * (i - l + 1) - i - j + 1, c)
    for idx, (i, j) in sets.S[1].items():
        if j:
            addv(idx, i * (i + 1) - j + 1, 2 * j * b)
        c = coef(i, j)
        for l in range(1, (i - j + 1) // 2 + 1):
            addv(idx, (i - l + 1) * (i - l + 2) - i - j, c)
        for l in range(1, (i - j) // 2 + 1):
            addv(idx, (i - l + 1) ** 2 - i - j, c)
    for idx, (i, j) in sets.S[2].items():
        addv(idx, i * i - j + 1, -(a + (2 * k - 2 * i - 1) * b))
        c = coef(i, j, True)
        for l in range(0, k - i):
            addv(idx, (i + l + 1) ** 2 - i - j + 1, -c)
        for l in range(0, k - i - 1):
            addv(idx, (i + l + 1) * (i + l + 2) - i - j + 1, -c)
    for idx, (i, j) in sets.S[3].items():
        addv(idx, i * (i + 1) - j + 1, -(a + 2 * (k - i - 1) * b))
        c = coef(i, j, True)
        for l in range(0, k - i - 1):
            addv(idx, (i + l + 1) * (i + l + 2) - i - j, -c)
            addv(idx, (i + l + 2) ** 2 - i - j, -c)

    Y0 = Matrix(n1, n0)
    addu = _adder(Y0)
    for idx, (i, j) in sets.T[0].items():
        addu(idx, i * (i + 1) - j + 1, a + (2 * j - 1) * b)
        c = coef(i, j)
        for l in range(1, (i - j + 1) // 2 + 1):
            addu(idx, (i - l + 1) * (i - l + 2) - i - j, c)
        for l in range(1, (i - j) // 2 + 1):
            addu(idx, (i - l + 1) ** 2 - i - j, c)
    for idx, (i, j) in sets.T[1].items():
        addu(idx, (i + 1) ** 2 - j, a + 2 * j * b)
        c = coef(i, j)
        for l in range(1, (i - j + 1) // 2 + 1):
            addu(idx, (i - l + 2) ** 2 - i - j - 1, c)
        for l in range(1, (i - j) // 2 + 1):
            addu(idx, (i - l + 1) * (i - l + 2) - i - j - 1, c)
    for idx, (i, j) in sets.T[2].items():
        addu(idx, i * (i + 1) - j + 1, -(2 * k - 2 * i - 1) * b)
        c = coef(i, j, True)
        for l in range(0, k - i):
            addu(idx, (i + l + 1) * (i + l + 2) - i - j, -c)
        for l in range(0, k - i - 1):
            addu(idx, (i + l + 2) ** 2 - i - j, -c)
    for idx, (i, j) in sets.T[3].items():
        addu(idx, (i + 1) ** 2 - j, -2 * (k - i - 1) * b)
        c = coef(i, j, True)
        for l in range(0, k - i - 1):
            addu(idx, (i + l + 2) ** 2 - i - j - 1, -c)
            addu(idx, (i + l + 2) * (i + l + 3) - i - j - 1, -c)
    return Y0, Y1


def _square_framing(k: int, params: TauParams):
    a, b = params.a, params.b
    v = [Fraction(0)] * (k * k)
    w = [Fraction(0)] * (k * k)
    for l in range(k // 2 + 1, k + 1):
        v[l * (l + 1) - k - 1] += 1
        w[l * (l + 1) - k - 1] += a + 4 * (k - l) * b
    for l in range((k + 1) // 2 + 1, k + 1):
        v[l * l - k - 1] += 1
        w[l * l - k - 1] += a + (4 * k - 4 * l + 2) * b
    return v, w


def _check_two(params: TauParams):
    if params.m != 2:
        raise ParameterError("fixed points are constructed for two vertices")


def fixed_point_square(k: int, params: TauParams) -> QuiverPoint:
    return fixed_point_rect(k * k, k, params)


def spiral_successor(q: int) -> int:
    """Next element of the Y_0-diagonal chain 1, 2, 3, 5, 7, 10, 13, ...

    q lies in the row block (i(i-1), i(i+1)]; the successor sits in the
    corresponding position of (i^2, (i+1)^2].
    """
    i = 1
    while i * (i + 1) < q:
        i += 1
    return i * i + (q - i * (i - 1))


def spiral_chain(k: int) -> List[int]:
    out = [1]
    while len(out) < k:
        out.append(spiral_successor(out[-1]))
    return out


def fixed_point_rect(n: int, k: int, params: TauParams) -> QuiverPoint:
    """C*-fixed point of M(n-k, n; 1) for n >= k^2 >= 1.

    The first p = n - k^2 basis vectors of each space form a padding chain,
    the remaining ones carry the square point with its indices shifted by p.
    """
    _check_two(params)
    if k < 1 or n < k * k:
        raise ParameterError(f"(n, k) = ({n}, {k}) needs n >= k^2 >= 1")
    a, b = params.a, params.b
    p = n - k * k
    n0, n1 = n - k, n
    sY0, sY1 = _square_blocks(k, params, p)
    sv, sw = _square_framing(k, params)

    X0 = Matrix(n0, n1)
    for s in range(n0):
        X0[s, s] = ONE
    X1 = Matrix(n1, n0)
    for s in range(1, p + 1):
        X1[s, s - 1] = ONE
    for i in range(1, k):
        for j in range(1, 2 * i + 1):
            X1[i * i + j + p - 1, i * (i - 1) + j + p - 1] = ONE

    Y0 = Matrix(n1, n0)
    Y1 = Matrix(n0, n1)
    for s in range(1, p + 1):
        Y0[s - 1, s - 1] = a + (s - 1) * b
    for s in range(2, p + 1):
        Y1[s - 2, s - 1] = (s - 1) * b
    for i, j, x in sY0.nonzero_entries():
        Y0[i + p, j + p] = x
    for i, j, x in sY1.nonzero_entries():
        Y1[i + p, j + p] = x
    if p:
        chain = spiral_chain(k)
        for q in chain[:k - 1]:
            Y0[q + p - 1, q + p - 1] += p * b
        prev = [0] + chain
        for r in range(1, k):
            Y1[prev[r] + p - 1, chain[r] + p - 1] += p * b
        # hook the padding chain onto the first chain element
        Y1[p - 1, chain[0] + p - 1] += p * b

    v = [Fraction(0)] * p + sv
    w = [Fraction(0)] * p + sw
    if p:
        w[k * k // 4 + p] += p * b
    dim = DimensionData((n0, n1), 1, params)
    label = f"square(k={k})" if p == 0 else f"rect(n={n},k={k})"
    return QuiverPoint(dim, [X0, X1], [Y0, Y1], v, w, label, {"n": n, "k": k, "eps": 1})


def fixed_point_swapped(n: int, k: int, params: TauParams) -> QuiverPoint:
    """C*-fixed point of M(n, n-k; 0): build the rect point for the swapped
    parameters and relabel vertex 1 as vertex 0."""
    from .points import rotate
    _check_two(params)
    src = fixed_point_rect(n, k, params.swapped())
    out = rotate(src, params)
    out.label = f"swapped(n={n},k={k})"
    out.meta = {"n": n, "k": k, "eps": 0, "swapped": True}
    return out


def unswap(p: QuiverPoint) -> QuiverPoint:
    """Inverse relabelling (also a rotation for two vertices)."""
    from .points import rotate
    return rotate(p, p.params.swapped())


# thin chains

def chain_candidates(dims, framing: int, params: TauParams):
    """All thin C*-fixed points with the given dimension vector.

    Basis e_d for consecutive degrees dmin <= d <= dmax, with e_d at vertex
    (framing - d) mod m, v = e_0, X raising and Y lowering the degree by one.
    Writing p_d for the product of the two arrows between degrees d and d+1,
    the moment map reads p_{d-1} - p_d + tau_{vertex(d)} = [d = 0] w.v, which
    telescopes from p_{dmin-1} = 0.  Arrows pointing away from degree 0 are
    set to 1, the others carry p_d, so v generates and every chain is stable.
    """
    m = params.m
    dims = tuple(dims)
    N = sum(dims)
    if N == 0:
        return [empty_point(params, framing)]
    c = Fraction(0)
    for i, d in enumerate(dims):
        c = c + params.tau(i) * d
    out = []
    for dmin in range(-N + 1, 1):
        dmax = dmin + N - 1
        if dmax < 0:
            continue
        degrees = list(range(dmin, dmax + 1))
        counts = [0] * m
        for d in degrees:
            counts[(framing - d) % m] += 1
        if tuple(counts) != dims:
            continue
        prods = {}
        acc = Fraction(0)
        for d in degrees[:-1]:
            acc = acc + params.tau(framing - d)
            if d == 0:
                acc = acc - c
            prods[d] = acc
        out.append(_chain_point(dims, framing, params, dmin, dmax, prods, c))
    return out


def _chain_point(dims, framing, params, dmin, dmax, prods, c):
    m = params.m
    dim = DimensionData(tuple(dims), framing, params)
    # position of each degree inside its vertex space
    slot = {}
    fill = [0] * m
    for d in range(dmin, dmax + 1):
        vert = (framing - d) % m
        slot[d] = (vert, fill[vert])
        fill[vert] += 1
    X = [Matrix(dim.n(i), dim.n(i + 1)) for i in range(m)]
    Y = [Matrix(dim.n(i + 1), dim.n(i)) for i in range(m)]
    for d in range(dmin, dmax):
        (vs, ps), (vt, pt) = slot[d], slot[d + 1]
        # X: e_d (vertex vs) -> e_{d+1} (vertex vt = vs - 1); Y goes back
        xval, yval = (ONE, prods[d]) if d >= 0 else (prods[d], ONE)
        X[vt][pt, ps] = xval
        Y[vt][ps, pt] = yval
    v = [Fraction(0)] * dim.n(framing)
    w = [Fraction(0)] * dim.n(framing)
    v[slot[0][1]] = ONE
    w[slot[0][1]] = c
    return QuiverPoint(dim, X, Y, v, w, f"chain(dims={tuple(dims)},fr={framing},dmin={dmin})",
                       {"dmin": dmin, "dmax": dmax})


def fixed_point_search(dims, framing: int, params: TauParams) -> Optional[QuiverPoint]:
    """A thin C*-fixed point, or None when no chain fits the dimension vector.

    Among several chains the one reaching the lowest top degree is returned.
    """
    if sum(dims) > 12:
        return None
    cands = chain_candidates(dims, framing, params)
    if not cands:
        return None
    return min(cands, key=lambda p: p.meta.get("dmax", 0))


def fixed_point_ascending(n: int, k: int, params: TauParams) -> Optional[QuiverPoint]:
    """Point of M(n-k, n; 0), n >= k^2 + k, found by the thin-chain search."""
    _check_two(params)
    if not in_L_epsilon(n - k, n, 0):
        raise ParameterError(f"(n-k, n) = ({n - k}, {n}) is not in L_0")
    p = fixed_point_search((n - k, n), 0, params)
    if p is not None:
        p.meta.update({"n": n, "k": k, "eps": 0})
    return p


def fixed_point_ascending_swapped(n: int, k: int, params: TauParams) -> Optional[QuiverPoint]:
    """Point of M(n, n-k; 1): the ascending point for swapped parameters, relabelled."""
    from .points import rotate
    src = fixed_point_ascending(n, k, params.swapped())
    if src is None:
        return None
    out = rotate(src, params)
    out.label = f"ascending-swapped(n={n},k={k})"
    out.meta = {"n": n, "k": k, "eps": 1, "swapped": True}
    return out


def fixed_point_for(n0: int, n1: int, framing: int, params: TauParams) -> Optional[QuiverPoint]:
    """Dispatch a two-vertex dimension vector to the matching construction."""
    _check_two(params)
    if n0 == n1 == 0:
        return empty_point(params, framing)
    if framing == 1 and n1 >= n0:
        k, n = n1 - n0, n1
        if k >= 1 and n >= k * k:
            return fixed_point_rect(n, k, params)
        return fixed_point_search((n0, n1), 1, params)
    if framing == 0 and n0 >= n1:
        k, n = n0 - n1, n0
        if k >= 1 and n >= k * k:
            return fixed_point_swapped(n, k, params)
        return fixed_point_search((n0, n1), 0, params)
    return fixed_point_search((n0, n1), framing, params)
