"""Dense exact linear algebra over Q(a).

Matrices are dense and row-major with RationalFunction entries.  All
algorithms are fraction-free in spirit only: entries stay in Q(a) and every
result is exact.  Pivoting in row reduction always takes the first nonzero
entry in column order, so outputs are deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .ratfun import RationalFunction, _RF_ONE, _RF_ZERO


class NoSolution(Exception):
    """The right-hand side lies outside the column span of the matrix."""


class QMatrix:
    """Dense matrix over Q(a)."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, rows: int, cols: int, entries=None):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        self.rows = rows
        self.cols = cols
        if entries is None:
            self._data = [[_RF_ZERO] * cols for _ in range(rows)]
        else:
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise ValueError("entry grid does not match the given dimensions")
            self._data = [[_coerce_entry(x) for x in row] for row in entries]

    @classmethod
    def _wrap(cls, rows: int, cols: int, data) -> QMatrix:
        m = cls.__new__(cls)
        m.rows = rows
        m.cols = cols
        m._data = data
        return m

    @classmethod
    def identity(cls, n: int) -> QMatrix:
        data = [[_RF_ZERO] * n for _ in range(n)]
        for i in range(n):
            data[i][i] = _RF_ONE
        return cls._wrap(n, n, data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> QMatrix:
        return cls(rows, cols)

    @classmethod
    def column(cls, entries) -> QMatrix:
        return cls(len(entries), 1, [[x] for x in entries])

    # -- access --------------------------------------------------------------

    def __getitem__(self, key) -> RationalFunction:
        i, j = key
        return self._data[i][j]

    def row_list(self, i: int) -> list[RationalFunction]:
        return list(self._data[i])

    def column_vector(self, j: int) -> QMatrix:
        return QMatrix._wrap(self.rows, 1, [[self._data[i][j]] for i in range(self.rows)])

    def is_zero(self) -> bool:
        return all(not x for row in self._data for x in row)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other) -> QMatrix:
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_same_shape(other)
        data = [
            [a if not b else (b if not a else a + b) for a, b in zip(ra, rb)]
            for ra, rb in zip(self._data, other._data)
        ]
        return QMatrix._wrap(self.rows, self.cols, data)

    def __sub__(self, other) -> QMatrix:
        if not isinstance(other, QMatrix):
            return NotImplemented
        self._check_same_shape(other)
        data = [
            [a if not b else a - b for a, b in zip(ra, rb)]
            for ra, rb in zip(self._data, other._data)
        ]
        return QMatrix._wrap(self.rows, self.cols, data)

    def __neg__(self) -> QMatrix:
        return QMatrix._wrap(
            self.rows, self.cols, [[-x if x else x for x in row] for row in self._data]
        )

    def __mul__(self, other) -> QMatrix:
        if isinstance(other, QMatrix):
            if self.cols != other.rows:
                raise ValueError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            out = [[_RF_ZERO] * other.cols for _ in range(self.rows)]
            for i in range(self.rows):
                arow = self._data[i]
                orow = out[i]
                for k in range(self.cols):
                    aik = arow[k]
                    if not aik:
                        continue
                    brow = other._data[k]
                    for j in range(other.cols):
                        bkj = brow[j]
                        if bkj:
                            orow[j] = orow[j] + aik * bkj
            return QMatrix._wrap(self.rows, other.cols, out)
        coerced = _try_scalar(other)
        if coerced is None:
            return NotImplemented
        return self.scale(coerced)

    def __rmul__(self, other) -> QMatrix:
        coerced = _try_scalar(other)
        if coerced is None:
            return NotImplemented
        return self.scale(coerced)

    def scale(self, s) -> QMatrix:
        s = _coerce_entry(s)
        data = [[s * x if x else _RF_ZERO for x in row] for row in self._data]
        return QMatrix._wrap(self.rows, self.cols, data)

    def transpose(self) -> QMatrix:
        data = [[self._data[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return QMatrix._wrap(self.cols, self.rows, data)

    def _check_same_shape(self, other: QMatrix) -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self._data == other._data
        )

    # -- evaluation / display --------------------------------------------------

    def evaluate(self, x) -> list[list[Fraction]]:
        """Entrywise substitution a := x; raises DenominatorVanishes at poles."""
        return [[entry.evaluate(x) for entry in row] for row in self._data]

    def __str__(self) -> str:
        cells = [[str(x) for x in row] for row in self._data]
        widths = [max((len(r[j]) for r in cells), default=0) for j in range(self.cols)]
        return "\n".join(
            "[ " + "  ".join(c.rjust(w) for c, w in zip(row, widths)) + " ]"
            for row in cells
        )

    def __repr__(self) -> str:
        return f"QMatrix({self.rows}x{self.cols})"

    # -- JSON ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[x.to_json() for x in row] for row in self._data],
        }

    @classmethod
    def from_json(cls, obj: dict) -> QMatrix:
        entries = [[RationalFunction.from_json(x) for x in row] for row in obj["entries"]]
        return cls(obj["rows"], obj["cols"], entries)


def _coerce_entry(x) -> RationalFunction:
    if isinstance(x, RationalFunction):
        return x
    return RationalFunction(x)


def _try_scalar(x):
    if isinstance(x, (RationalFunction, int, Fraction)):
        return _coerce_entry(x)
    return None


def hstack(blocks: list[QMatrix]) -> QMatrix:
    """Concatenate matrices side by side."""
    if not blocks:
        raise ValueError("nothing to stack")
    rows = blocks[0].rows
    if any(b.rows != rows for b in blocks):
        raise ValueError("hstack requires equal row counts")
    data = [sum((b._data[i] for b in blocks), []) for i in range(rows)]
    return QMatrix._wrap(rows, sum(b.cols for b in blocks), data)


def vstack(blocks: list[QMatrix]) -> QMatrix:
    """Concatenate matrices on top of each other."""
    if not blocks:
        raise ValueError("nothing to stack")
    cols = blocks[0].cols
    if any(b.cols != cols for b in blocks):
        raise ValueError("vstack requires equal column counts")
    data = [list(row) for b in blocks for row in b._data]
    return QMatrix._wrap(sum(b.rows for b in blocks), cols, data)


def rref(m: QMatrix) -> tuple[QMatrix, list[int]]:
    """Reduced row echelon form and pivot columns.

    Pivot selection is the first row with a nonzero entry in column order;
    there is no magnitude pivoting because the arithmetic is exact.
    """
    data = [list(row) for row in m._data]
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        pivot_row = None
        for i in range(r, m.rows):
            if data[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        data[r], data[pivot_row] = data[pivot_row], data[r]
        inv = data[r][c].inverse()
        data[r] = [inv * x if x else x for x in data[r]]
        for i in range(m.rows):
            if i == r:
                continue
            factor = data[i][c]
            if not factor:
                continue
            prow = data[r]
            data[i] = [
                x - factor * p if p else x for x, p in zip(data[i], prow)
            ]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return QMatrix._wrap(m.rows, m.cols, data), pivots


def nullspace(m: QMatrix) -> list[QMatrix]:
    """Basis of the right kernel {v : m v = 0}, as column vectors.

    The empty list means the kernel is trivial.  The basis vector attached
    to free column f has entry 1 there and back-substituted pivot entries.
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    basis = []
    for f in range(m.cols):
        if f in pivot_set:
            continue
        entries = [_RF_ZERO] * m.cols
        entries[f] = _RF_ONE
        for i, p in enumerate(pivots):
            coeff = reduced._data[i][f]
            if coeff:
                entries[p] = -coeff
        basis.append(QMatrix.column(entries))
    return basis


def solve_linear(a: QMatrix, b: QMatrix) -> QMatrix:
    """Some exact solution x of a x = b; raises NoSolution if none exists."""
    if a.rows != b.rows:
        raise ValueError("matrix and right-hand side have different row counts")
    reduced, pivots = rref(hstack([a, b]))
    if pivots and pivots[-1] >= a.cols:
        raise NoSolution("right-hand side is outside the column span")
    data = [[_RF_ZERO] * b.cols for _ in range(a.cols)]
    for i, p in enumerate(pivots):
        data[p] = reduced._data[i][a.cols :]
    return QMatrix._wrap(a.cols, b.cols, data)


def fraction_rank(rows: list[list[Fraction]]) -> int:
    """Rank of an exact rational matrix (plain Gaussian elimination)."""
    data = [list(r) for r in rows]
    if not data:
        return 0
    ncols = len(data[0])
    rank = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(rank, len(data)):
            if data[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        data[rank], data[pivot_row] = data[pivot_row], data[rank]
        inv = 1 / data[rank][c]
        data[rank] = [x * inv for x in data[rank]]
        for i in range(len(data)):
            if i != rank and data[i][c]:
                factor = data[i][c]
                data[i] = [x - factor * p for x, p in zip(data[i], data[rank])]
        rank += 1
        if rank == len(data):
            break
    return rank
