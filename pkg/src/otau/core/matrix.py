"""Dense exact matrices over Q or Q[z], with fraction-free elimination.

Zero-row and zero-column shapes are valid throughout; multiplying a
``p x 0`` by a ``0 x q`` matrix gives the ``p x q`` zero matrix.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, List, Sequence

from .exact import Poly, RatFunc, _rf, exact_div, poly_lcm_many, to_json_scalar

ZERO = Fraction(0)
ONE = Fraction(1)


class Matrix:
    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data=None):
        self.rows = rows
        self.cols = cols
        if data is None:
            self.data = [[ZERO] * cols for _ in range(rows)]
        else:
            self.data = [list(r) for r in data]
            if len(self.data) != rows or any(len(r) != cols for r in self.data):
                raise ValueError("shape mismatch")

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int, scale=ONE) -> "Matrix":
        m = cls(n, n)
        for i in range(n):
            m.data[i][i] = scale
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Sequence]) -> "Matrix":
        m = cls(nrows, len(columns))
        for j, col in enumerate(columns):
            for i in range(nrows):
                m.data[i][j] = col[i]
        return m

    @classmethod
    def blocks(cls, row_sizes: Sequence[int], col_sizes: Sequence[int], entries: dict) -> "Matrix":
        """Assemble from ``{(bi, bj): Matrix}``; missing blocks are zero."""
        roff = [0]
        for s in row_sizes:
            roff.append(roff[-1] + s)
        coff = [0]
        for s in col_sizes:
            coff.append(coff[-1] + s)
        out = cls(roff[-1], coff[-1])
        for (bi, bj), blk in entries.items():
            if blk.rows != row_sizes[bi] or blk.cols != col_sizes[bj]:
                raise ValueError(f"block {(bi, bj)} has shape {blk.shape}")
            for i in range(blk.rows):
                row = out.data[roff[bi] + i]
                for j in range(blk.cols):
                    row[coff[bj] + j] = blk.data[i][j]
        return out

    def block(self, r0: int, r1: int, c0: int, c1: int) -> "Matrix":
        return Matrix(r1 - r0, c1 - c0, [row[c0:c1] for row in self.data[r0:r1]])

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, idx):
        i, j = idx
        return self.data[i][j]

    def __setitem__(self, idx, value):
        i, j = idx
        self.data[i][j] = value

    def column(self, j: int) -> list:
        return [self.data[i][j] for i in range(self.rows)]

    def row(self, i: int) -> list:
        return list(self.data[i])

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, [list(c) for c in zip(*self.data)] if self.rows else [[] for _ in range(self.cols)])

    T = property(transpose)

    def map(self, fn) -> "Matrix":
        return Matrix(self.rows, self.cols, [[fn(x) for x in r] for r in self.data])

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.rows, self.cols,
                      [[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)])

    def __neg__(self):
        return self.map(lambda x: -x)

    def scale(self, c) -> "Matrix":
        return self.map(lambda x: c * x)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = Matrix(self.rows, other.cols)
        ocols = other.transpose().data if other.cols else []
        for i, row in enumerate(self.data):
            nz = [(k, a) for k, a in enumerate(row) if a != 0]
            if not nz:
                continue
            orow = out.data[i]
            for j in range(other.cols):
                col = ocols[j]
                acc = ZERO
                for k, a in nz:
                    b = col[k]
                    if b != 0:
                        acc = acc + a * b
                orow[j] = acc
        return out

    def apply(self, vec: Sequence) -> list:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        nz = [(k, x) for k, x in enumerate(vec) if x != 0]
        out = []
        for row in self.data:
            acc = ZERO
            for k, x in nz:
                a = row[k]
                if a != 0:
                    acc = acc + a * x
            out.append(acc)
        return out

    def apply_left(self, vec: Sequence) -> list:
        """Row vector times matrix."""
        if len(vec) != self.rows:
            raise ValueError("vector length mismatch")
        out = [ZERO] * self.cols
        for k, x in enumerate(vec):
            if x == 0:
                continue
            for j, a in enumerate(self.data[k]):
                if a != 0:
                    out[j] = out[j] + x * a
        return out

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)

    def trace(self):
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.data[i][i]
        return acc

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.data, other.data) for a, b in zip(r, s))

    __hash__ = None

    def _same_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def nonzero_entries(self):
        for i, r in enumerate(self.data):
            for j, x in enumerate(r):
                if x != 0:
                    yield i, j, x

    def to_json(self):
        return [[to_json_scalar(x) for x in r] for r in self.data]

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols}, {self.data!r})"


PolyMatrix = Matrix


def outer(col: Sequence, row: Sequence) -> Matrix:
    return Matrix(len(col), len(row), [[a * b for b in row] for a in col])


def rank_fraction_free(m: Matrix) -> int:
    """Rank over the fraction field via Bareiss elimination.

    Entries may be rationals or polynomials; every division performed is
    exact in the coefficient ring.
    """
    a = [list(r) for r in m.data]
    nrows, ncols = m.rows, m.cols
    prev = ONE
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, ncols):
                row_i[j] = exact_div(p * row_i[j] - f * row_r[j], prev)
            row_i[c] = ZERO
        # rows above the pivot row keep their entries; only rows below change
        prev = p
        r += 1
    return r


def _rref(rows: List[list]):
    """In-place reduced row echelon form over a field; returns pivot columns."""
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = rows[r][c]
        rows[r] = [x / inv for x in rows[r]]
        for i in range(nrows):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def _polyvar(m: Matrix):
    for _, _, x in m.nonzero_entries():
        if isinstance(x, Poly) and not x.is_constant():
            return x.var
    return None


def kernel_basis(m: Matrix) -> List[list]:
    """Basis of the right kernel over the fraction field.

    Rational input gives rational vectors.  Polynomial input gives vectors
    with polynomial entries (denominators cleared).
    """
    var = _polyvar(m)
    if var is None:
        rows = [[x.constant_term() if isinstance(x, Poly) else Fraction(x) for x in r] for r in m.data]
        conv = None
    else:
        rows = [[_rf(x, var) for x in r] for r in m.data]
        conv = var
    pivots = _rref(rows)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0) if conv is None else _rf(0, conv) for _ in range(m.cols)]
        vec[f] = Fraction(1) if conv is None else _rf(1, conv)
        for r, pc in enumerate(pivots):
            vec[pc] = -rows[r][f]
        if conv is not None:
            den = poly_lcm_many([x.den for x in vec])
            vec = [exact_div(x.num * den, x.den) for x in vec]
        basis.append(vec)
    return basis


def rank_rational(m: Matrix) -> int:
    rows = [list(r) for r in m.data]
    return len(_rref(rows)) if rows else 0


def solve_rational(m: Matrix, rhs: Sequence):
    """One rational solution of ``m x = rhs`` or None."""
    aug = [list(r) + [rhs[i]] for i, r in enumerate(m.data)]
    pivots = _rref(aug)
    if m.cols in pivots:
        return None
    x = [Fraction(0)] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][-1]
    return x


def hstack(mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    rows = mats[0].rows
    return Matrix(rows, sum(m.cols for m in mats),
                  [sum((m.data[i] for m in mats), []) for i in range(rows)])


def vstack(mats: Iterable[Matrix]) -> Matrix:
    mats = list(mats)
    cols = mats[0].cols
    return Matrix(sum(m.rows for m in mats), cols, [r for m in mats for r in m.data])
