"""Dense exact matrices over Q(i).

Elimination is fraction-free (Bareiss): every update of a row divides by the
previous pivot, which keeps intermediate entries equal to minors of the
input instead of letting numerators and denominators grow freely.  The pivot
in each column is the first nonzero entry at or below the current row, so
echelon forms and kernel bases are deterministic.
"""

from .errors import DimensionError
from .scalars import GaussianRational, ONE, ZERO

__all__ = [
    "ExactMatrix",
    "rank",
    "kernel_basis",
    "determinant",
    "solve",
    "span_contains",
    "same_span",
]


def _c(x):
    return GaussianRational.coerce(x)


class ExactMatrix:
    """Immutable ``rows x cols`` grid of :class:`GaussianRational` entries."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries, cols=None):
        data = tuple(tuple(_c(x) for x in row) for row in entries)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise DimensionError("ragged matrix rows")
        else:
            width = cols or 0
        if cols is not None and width != cols:
            raise DimensionError(f"expected {cols} columns, got {width}")
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)
        object.__setattr__(self, "_data", data)

    def __setattr__(self, name, value):
        raise AttributeError("ExactMatrix is immutable")

    # constructors

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[ZERO] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def identity(cls, n):
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(col) for col in columns]
        if not columns:
            return cls.zeros(rows or 0, 0)
        height = len(columns[0])
        if any(len(col) != height for col in columns):
            raise DimensionError("columns of different lengths")
        return cls([[col[i] for col in columns] for i in range(height)], cols=len(columns))

    @classmethod
    def column_vector(cls, values):
        return cls([[v] for v in values], cols=1)

    @classmethod
    def diagonal(cls, values):
        values = list(values)
        n = len(values)
        return cls([[values[i] if i == j else ZERO for j in range(n)] for i in range(n)], cols=n)

    # access

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, key):
        i, j = key
        return self._data[i][j]

    def row(self, i):
        return list(self._data[i])

    def column(self, j):
        return [row[j] for row in self._data]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def tolist(self):
        return [list(row) for row in self._data]

    def submatrix(self, rows, cols):
        rows = range(self.rows)[rows] if isinstance(rows, slice) else rows
        cols = range(self.cols)[cols] if isinstance(cols, slice) else cols
        return ExactMatrix([[self._data[i][j] for j in cols] for i in rows], cols=len(cols))

    def is_square(self):
        return self.rows == self.cols

    def is_zero(self):
        return all(x.is_zero() for row in self._data for x in row)

    def is_real(self):
        return all(x.is_real() for row in self._data for x in row)

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __hash__(self):
        return hash(self._data)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in row) for row in self._data)
        return f"ExactMatrix({self.rows}x{self.cols}: [{body}])"

    # algebra

    def _check_same_shape(self, other):
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(
            [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return ExactMatrix(
            [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)],
            cols=self.cols,
        )

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self._data], cols=self.cols)

    def scale(self, scalar):
        scalar = _c(scalar)
        return ExactMatrix([[scalar * a for a in r] for r in self._data], cols=self.cols)

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        other_cols = other.columns()
        out = []
        for r in self._data:
            out_row = []
            for col in other_cols:
                acc = ZERO
                for a, b in zip(r, col):
                    if a.re or a.im:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return ExactMatrix(out, cols=other.cols)

    def apply(self, vector):
        """``M @ v`` for a plain list ``v``; returns a list."""
        vector = [_c(x) for x in vector]
        if len(vector) != self.cols:
            raise DimensionError(f"vector of length {len(vector)} for {self.shape} matrix")
        out = []
        for r in self._data:
            acc = ZERO
            for a, b in zip(r, vector):
                if a.re or a.im:
                    acc = acc + a * b
            out.append(acc)
        return out

    @property
    def T(self):
        return ExactMatrix([list(col) for col in zip(*self._data)] if self.rows else [], cols=self.rows)

    def conj(self):
        return ExactMatrix([[a.conj() for a in r] for r in self._data], cols=self.cols)

    @property
    def H(self):
        """Conjugate transpose."""
        return self.T.conj()

    def hstack(self, *others):
        mats = (self,) + others
        if any(m.rows != self.rows for m in mats):
            raise DimensionError("hstack needs equal row counts")
        return ExactMatrix(
            [sum((list(m._data[i]) for m in mats), []) for i in range(self.rows)],
            cols=sum(m.cols for m in mats),
        )

    def vstack(self, *others):
        mats = (self,) + others
        if any(m.cols != self.cols for m in mats):
            raise DimensionError("vstack needs equal column counts")
        return ExactMatrix([row for m in mats for row in m._data], cols=self.cols)

    # elimination-based queries

    def rank(self):
        return rank(self)

    def kernel_basis(self):
        return kernel_basis(self)

    def determinant(self):
        return determinant(self)

    def inverse(self):
        if not self.is_square():
            raise DimensionError("inverse of a non-square matrix")
        n = self.rows
        reduced, pivots = _rref(self.hstack(ExactMatrix.identity(n)).tolist(), n)
        if pivots != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix([row[n:] for row in reduced], cols=n)

    def solve(self, rhs):
        return solve(self, rhs)


def _echelon(rows, pivot_cols, width=None):
    """Fraction-free forward elimination of ``rows`` in place.

    Pivots are searched among the first ``pivot_cols`` columns only, while all
    ``width`` columns are updated (the extra ones carry augmented data).
    Returns ``(pivot_columns, swaps)``; rows below the rank end up zero in
    the pivot region.
    """
    width = pivot_cols if width is None else width
    nrows = len(rows)
    prev = ONE
    r = 0
    pivots = []
    swaps = 0
    for c in range(pivot_cols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[p], rows[r] = rows[r], rows[p]
            swaps += 1
        piv = rows[r][c]
        pivot_row = rows[r]
        for i in range(r + 1, nrows):
            row = rows[i]
            lead = row[c]
            for j in range(c + 1, width):
                row[j] = (piv * row[j] - lead * pivot_row[j]) / prev
            row[c] = ZERO
        prev = piv
        pivots.append(c)
        r += 1
    return pivots, swaps


def _rref(rows, pivot_cols):
    """Reduced row echelon form with pivots restricted to the first
    ``pivot_cols`` columns."""
    rows = [list(r) for r in rows]
    width = len(rows[0]) if rows else 0
    pivots, _ = _echelon(rows, pivot_cols, width)
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        inv = rows[k][c].inverse()
        rows[k] = [x * inv if x else x for x in rows[k]]
        for i in range(k):
            f = rows[i][c]
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[k])]
    return rows, pivots


def rank(M):
    """Exact rank over Q(i)."""
    if M.rows == 0 or M.cols == 0:
        return 0
    pivots, _ = _echelon(M.tolist(), M.cols)
    return len(pivots)


def kernel_basis(M):
    """Basis of ``{v : M v = 0}``, one vector per free column, as lists."""
    n = M.cols
    if n == 0:
        return []
    if M.rows == 0:
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    reduced, pivots = _rref(M.tolist(), n)
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for k, c in enumerate(pivots):
            v[c] = -reduced[k][f]
        basis.append(v)
    return basis


def determinant(M):
    if not M.is_square():
        raise DimensionError(f"determinant of a non-square {M.rows}x{M.cols} matrix")
    n = M.rows
    if n == 0:
        return ONE
    rows = M.tolist()
    pivots, swaps = _echelon(rows, n)
    if len(pivots) < n:
        return ZERO
    det = rows[n - 1][n - 1]
    return -det if swaps % 2 else det


def solve(M, rhs):
    """One solution ``x`` of ``M x = rhs`` (free variables set to zero) or
    ``None`` when the system is inconsistent."""
    rhs = [_c(x) for x in rhs]
    if len(rhs) != M.rows:
        raise DimensionError(f"right-hand side of length {len(rhs)} for {M.rows} rows")
    n = M.cols
    augmented = [row + [b] for row, b in zip(M.tolist(), rhs)]
    if not augmented:
        return [ZERO] * n
    reduced, pivots = _rref(augmented, n)
    for row in reduced[len(pivots):]:
        if row[n]:
            return None
    x = [ZERO] * n
    for k, c in enumerate(pivots):
        x[c] = reduced[k][n]
    return x


def span_contains(vectors, target):
    """True iff ``target`` lies in the span of ``vectors`` (lists of equal length)."""
    if not vectors:
        return all(not _c(t) for t in target)
    base = ExactMatrix.from_columns(vectors)
    return rank(base) == rank(ExactMatrix.from_columns(list(vectors) + [target]))


def same_span(first, second):
    """True iff two lists of vectors span the same subspace."""
    if not first and not second:
        return True
    r1 = rank(ExactMatrix.from_columns(first)) if first else 0
    r2 = rank(ExactMatrix.from_columns(second)) if second else 0
    if r1 != r2:
        return False
    return rank(ExactMatrix.from_columns(list(first) + list(second))) == r1


def matrix_of(fn, domain_dim, codomain_dim):
    """Matrix of a linear map given as a function on coordinate lists."""
    cols = []
    for j in range(domain_dim):
        e = [ONE if i == j else ZERO for i in range(domain_dim)]
        image = fn(e)
        if len(image) != codomain_dim:
            raise DimensionError("linear map returned a vector of the wrong length")
        cols.append(image)
    if not cols:
        return ExactMatrix.zeros(codomain_dim, 0)
    return ExactMatrix.from_columns(cols)

