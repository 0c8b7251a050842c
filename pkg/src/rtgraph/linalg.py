"""Dense exact matrices over the rationals.

Entries are :class:`fractions.Fraction`.  Nothing in this module touches
floating point: determinants use Bareiss fraction-free elimination on an
integer rescaling, characteristic polynomials come from a Hessenberg
reduction (or Faddeev-LeVerrier as an independent cross-check).
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, NotSquare, SingularMatrix
from .polynomial import Polynomial, to_fraction

__all__ = [
    "RationalMatrix",
    "determinant_exact",
    "inverse_exact",
    "char_poly",
    "schur_determinant",
    "kronecker_product",
]


class RationalMatrix:
    """Immutable dense ``rows x cols`` matrix of :class:`~fractions.Fraction`."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, data: Iterable[Iterable], cols: int | None = None):
        rows = [tuple(to_fraction(x) for x in row) for row in data]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DimensionMismatch("rows have unequal lengths")
        self.rows = len(rows)
        self.cols = cols
        self._data: tuple[tuple[Fraction, ...], ...] = tuple(rows)

    # constructors -----------------------------------------------------------

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        cols = rows if cols is None else cols
        return cls._raw([[Fraction(0)] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls.diagonal([1] * n)

    @classmethod
    def diagonal(cls, values: Sequence) -> RationalMatrix:
        n = len(values)
        data = [[Fraction(0)] * n for _ in range(n)]
        for i, v in enumerate(values):
            data[i][i] = to_fraction(v)
        return cls._raw(data, n, n)

    @classmethod
    def ones(cls, rows: int, cols: int | None = None) -> RationalMatrix:
        cols = rows if cols is None else cols
        return cls._raw([[Fraction(1)] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[RationalMatrix]]) -> RationalMatrix:
        """Assemble a block matrix; every block row must share a height and every block column a width."""
        out = []
        widths = [b.cols for b in blocks[0]]
        for brow in blocks:
            if [b.cols for b in brow] != widths:
                raise DimensionMismatch("block columns have inconsistent widths")
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise DimensionMismatch("block row has inconsistent heights")
            for i in range(height):
                row = []
                for b in brow:
                    row.extend(b._data[i])
                out.append(row)
        return cls._raw(out, len(out), sum(widths))

    @classmethod
    def _raw(cls, data, rows, cols) -> RationalMatrix:
        # trusted constructor: ``data`` already holds Fractions of the right shape
        self = object.__new__(cls)
        self.rows, self.cols = rows, cols
        self._data = tuple(tuple(r) for r in data)
        return self

    # access -----------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, idx):
        i, j = idx
        if isinstance(i, slice) or isinstance(j, slice):
            rs = range(self.rows)[i] if isinstance(i, slice) else [i]
            cs = range(self.cols)[j] if isinstance(j, slice) else [j]
            return RationalMatrix._raw([[self._data[a][b] for b in cs] for a in rs], len(rs), len(cs))
        return self._data[i][j]

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self._data]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    @property
    def T(self) -> RationalMatrix:
        return RationalMatrix._raw(list(zip(*self._data)) if self.rows else [], self.cols, self.rows)

    def trace(self) -> Fraction:
        if not self.is_square():
            raise NotSquare(f"trace of a {self.rows}x{self.cols} matrix")
        return sum((self._data[i][i] for i in range(self.rows)), Fraction(0))

    def is_symmetric(self) -> bool:
        return self == self.T

    # arithmetic -------------------------------------------------------------

    def _same_shape(self, other: RationalMatrix):
        if self.shape != other.shape:
            raise DimensionMismatch(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        self._same_shape(other)
        return RationalMatrix._raw(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.rows, self.cols
        )

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        self._same_shape(other)
        return RationalMatrix._raw(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)], self.rows, self.cols
        )

    def __neg__(self) -> RationalMatrix:
        return self.scale(-1)

    def scale(self, c) -> RationalMatrix:
        c = to_fraction(c)
        return RationalMatrix._raw([[c * a for a in r] for r in self._data], self.rows, self.cols)

    def __mul__(self, c) -> RationalMatrix:
        if isinstance(c, RationalMatrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
        cols_b = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            out.append([sum((a * col[k] for k, a in nz), Fraction(0)) for col in cols_b])
        return RationalMatrix._raw(out, self.rows, other.cols)

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash((self.shape, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._data)
        return f"RationalMatrix([{body}])"

    def det(self) -> Fraction:
        return determinant_exact(self)

    def inverse(self) -> RationalMatrix:
        return inverse_exact(self)


def _require_square(mat: RationalMatrix, what: str):
    if not mat.is_square():
        raise NotSquare(f"{what} needs a square matrix, got {mat.rows}x{mat.cols}")


def _bareiss(rows: list[list[int]]) -> int:
    """Determinant of an integer matrix by Bareiss elimination (destroys ``rows``)."""
    n = len(rows)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for i in range(k + 1, n):
                if rows[i][k] != 0:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot, rk = rows[k][k], rows[k]
        for i in range(k + 1, n):
            ri = rows[i]
            a = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - a * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]


def determinant_exact(mat: RationalMatrix) -> Fraction:
    """Exact determinant.

    The matrix is scaled by the lcm ``d`` of its denominators so the Bareiss
    recurrence runs over the integers, then ``det(dM) / d**n`` is returned.
    """
    _require_square(mat, "determinant")
    n = mat.rows
    d = lcm(*(x.denominator for r in mat._data for x in r)) if n else 1
    rows = [[x.numerator * (d // x.denominator) for x in r] for r in mat._data]
    return Fraction(_bareiss(rows), d**n)


def inverse_exact(mat: RationalMatrix) -> RationalMatrix:
    """Gauss-Jordan inverse over the rationals; raises :class:`SingularMatrix`."""
    _require_square(mat, "inverse")
    n = mat.rows
    a = [list(r) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(mat._data)]
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            raise SingularMatrix("matrix is singular")
        a[k], a[p] = a[p], a[k]
        inv_pivot = 1 / a[k][k]
        rk = [x * inv_pivot for x in a[k]]
        a[k] = rk
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k]
                ri = a[i]
                a[i] = [x - f * y if y else x for x, y in zip(ri, rk)]
    return RationalMatrix._raw([r[n:] for r in a], n, n)


def _charpoly_hessenberg(mat: RationalMatrix) -> list[Fraction]:
    n = mat.rows
    h = mat.tolist()
    # similarity reduction to upper Hessenberg form
    for m in range(1, n - 1):
        piv = next((i for i in range(m, n) if h[i][m - 1] != 0), None)
        if piv is None:
            continue
        if piv != m:
            h[piv], h[m] = h[m], h[piv]
            for r in h:
                r[piv], r[m] = r[m], r[piv]
        t = h[m][m - 1]
        for i in range(m + 1, n):
            u = h[i][m - 1] / t
            if u == 0:
                continue
            hm, hi = h[m], h[i]
            for j in range(n):
                hi[j] -= u * hm[j]
            for r in h:
                r[m] += u * r[i]
    # p_k is the charpoly of the leading k x k block, ascending coefficients
    polys: list[list[Fraction]] = [[Fraction(1)]]
    for k in range(1, n + 1):
        prev = polys[k - 1]
        hk = h[k - 1][k - 1]
        cur = [Fraction(0)] + prev  # x * p_{k-1}
        for i, c in enumerate(prev):
            cur[i] -= hk * c
        prod = Fraction(1)
        for i in range(k - 1, 0, -1):
            prod *= h[i][i - 1]
            if prod == 0:
                break
            coef = h[i - 1][k - 1] * prod
            if coef:
                for j, c in enumerate(polys[i - 1]):
                    cur[j] -= coef * c
        polys.append(cur)
    return polys[n]


def _charpoly_faddeev(mat: RationalMatrix) -> list[Fraction]:
    n = mat.rows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    identity = RationalMatrix.identity(n)
    m_k = RationalMatrix.zeros(n)
    for k in range(1, n + 1):
        m_k = mat @ m_k + identity.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(mat @ m_k).trace() / k
    return coeffs


def char_poly(mat: RationalMatrix, method: str = "hessenberg", symbol: str = "μ") -> Polynomial:
    """Monic ``det(xI - mat)``, computed exactly.

    ``method`` is ``"hessenberg"`` (O(n^3), the default) or ``"faddeev"``
    (Faddeev-LeVerrier, O(n^4), kept as an independent route for testing).
    """
    _require_square(mat, "characteristic polynomial")
    if method == "hessenberg":
        cs = _charpoly_hessenberg(mat)
    elif method == "faddeev":
        cs = _charpoly_faddeev(mat)
    else:
        raise ValueError(f"unknown method {method!r}")
    return Polynomial(cs, symbol)


def schur_determinant(m1: RationalMatrix, m2: RationalMatrix, m3: RationalMatrix, m4: RationalMatrix) -> Fraction:
    """Determinant of ``[[m1, m2], [m3, m4]]`` through a Schur complement.

    Uses ``det(m4) * det(m1 - m2 m4^-1 m3)`` when ``m4`` is invertible, else
    ``det(m1) * det(m4 - m3 m1^-1 m2)``, else the assembled determinant.
    """
    _require_square(m1, "Schur block M1")
    _require_square(m4, "Schur block M4")
    p, q = m1.rows, m4.rows
    if m2.shape != (p, q) or m3.shape != (q, p):
        raise DimensionMismatch(f"off-diagonal blocks must be {p}x{q} and {q}x{p}, got {m2.shape} and {m3.shape}")
    d4 = determinant_exact(m4)
    if d4 != 0:
        return d4 * determinant_exact(m1 - m2 @ inverse_exact(m4) @ m3)
    d1 = determinant_exact(m1)
    if d1 != 0:
        return d1 * determinant_exact(m4 - m3 @ inverse_exact(m1) @ m2)
    return determinant_exact(RationalMatrix.from_blocks([[m1, m2], [m3, m4]]))


def kronecker_product(a: RationalMatrix, b: RationalMatrix) -> RationalMatrix:
    """``a ⊗ b``: each entry ``a[i, j]`` replaced by the block ``a[i, j] * b``."""
    out = []
    for ra in a._data:
        for rb in b._data:
            out.append([x * y for x in ra for y in rb])
    return RationalMatrix._raw(out, a.rows * b.rows, a.cols * b.cols)
