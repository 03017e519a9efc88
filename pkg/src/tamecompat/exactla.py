"""Exact rational linear algebra.

Everything here works over :class:`fractions.Fraction`; no floating point is
ever produced. Matrices are small (at most 16x16 in practice) and dense.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

Vector = tuple  # tuple[Fraction, ...]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def Q(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'p/q' string")
    return Fraction(x)


def parse_rational(s: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Raises ValueError on anything else."""
    m = _RATIONAL_RE.match(s)
    if not m:
        raise ValueError(f"not a rational number: {s!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator: {s!r}")
    return Fraction(num, den)


def format_rational(q) -> str:
    return str(Q(q))


def vec(*xs) -> Vector:
    if len(xs) == 1 and not isinstance(xs[0], (int, Fraction, str)):
        xs = tuple(xs[0])
    return tuple(Q(x) for x in xs)


def dot(u: Sequence, v: Sequence) -> Fraction:
    # integer accumulation, one normalization at the end
    num, den = 0, 1
    for a, b in zip(u, v):
        if a and b:
            a, b = Q(a), Q(b)
            d = a.denominator * b.denominator
            num = num * d + a.numerator * b.numerator * den
            den *= d
    return Fraction(num, den)


def unit(n: int, i: int) -> Vector:
    return tuple(Fraction(int(k == i)) for k in range(n))


class SignatureTriple(NamedTuple):
    q_plus: int
    q_minus: int
    q_zero: int


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        rows = tuple(tuple(Q(x) for x in r) for r in rows)
        if rows:
            ncols = len(rows[0])
            if any(len(r) != ncols for r in rows):
                raise ValueError("ragged rows")
        elif ncols is None:
            ncols = 0
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows, ncols: int) -> "Matrix":
        # trusted internal constructor: rows already hold Fractions
        m = cls.__new__(cls)
        m.rows = tuple(tuple(r) for r in rows)
        m.nrows = len(m.rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls([[0] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)], ncols=n)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int | None = None) -> "Matrix":
        columns = list(columns)
        if not columns:
            if nrows is None:
                raise ValueError("nrows required for an empty column list")
            return cls([[] for _ in range(nrows)], ncols=0) if nrows else cls([], ncols=0)
        n = len(columns[0])
        return cls([[c[i] for c in columns] for i in range(n)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "Matrix":
        if self.nrows == 0:
            return Matrix([[] for _ in range(self.ncols)], ncols=0)
        return Matrix._raw(zip(*self.rows), self.nrows)

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def __getitem__(self, idx):
        if isinstance(idx, tuple):
            i, j = idx
            return self.rows[i][j]
        return self.rows[idx]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.shape, self.rows))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(([a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(([a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)), self.ncols)

    def __neg__(self) -> "Matrix":
        return Matrix._raw(([-a for a in r] for r in self.rows), self.ncols)

    def __mul__(self, c) -> "Matrix":
        c = Q(c)
        return Matrix._raw(([c * a for a in r] for r in self.rows), self.ncols)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = other.T.rows
            return Matrix._raw(([dot(r, c) for c in cols] for r in self.rows), other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(v)}")
        return tuple(dot(r, v) for r in self.rows)

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_symmetric(self) -> bool:
        return self.is_square() and all(
            self.rows[i][j] == self.rows[j][i] for i in range(self.nrows) for j in range(i)
        )

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def is_diagonal(self) -> bool:
        return all(self.rows[i][j] == 0 for i in range(self.nrows) for j in range(self.ncols) if i != j)

    def trace(self) -> Fraction:
        return sum((self.rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return Matrix._raw((r + s for r, s in zip(self.rows, other.rows)), self.ncols + other.ncols)

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix._raw(self.rows + other.rows, self.ncols)

    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    a = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for c in range(m.ncols):
        if r == m.nrows:
            break
        p = next((i for i in range(r, m.nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y if y else x for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return Matrix._raw(a, m.ncols), pivots


def rank(m: Matrix) -> int:
    return len(rref(m)[1])


def kernel(m: Matrix) -> "Subspace":
    """Basis of ``{x : m x = 0}``, one vector per free column of the RREF."""
    red, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.ncols
        x[f] = Fraction(1)
        for row, pc in enumerate(pivots):
            x[pc] = -red[row][f]
        basis.append(tuple(x))
    return Subspace(m.ncols, basis)


def solve(m: Matrix, b: Sequence) -> Vector | None:
    """One solution of ``m x = b`` (free variables set to zero), or None."""
    b = vec(b)
    if len(b) != m.nrows:
        raise ValueError("right-hand side has wrong length")
    aug = m.hstack(Matrix.from_columns([b], nrows=m.nrows))
    red, pivots = rref(aug)
    if m.ncols in pivots:
        return None
    x = [Fraction(0)] * m.ncols
    for row, pc in enumerate(pivots):
        x[pc] = red[row][m.ncols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if not m.is_square():
        raise ValueError("inverse of a non-square matrix")
    n = m.nrows
    red, pivots = rref(m.hstack(Matrix.identity(n)))
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return Matrix(r[n:] for r in red.rows)


def independent_columns(vectors: Sequence[Sequence]) -> list[Vector]:
    """Greedy maximal independent subfamily, order preserved."""
    vectors = [vec(v) for v in vectors]
    if not vectors:
        return []
    _, pivots = rref(Matrix.from_columns(vectors))
    return [vectors[p] for p in pivots]


def congruent_diagonalize(s: Matrix) -> tuple[Matrix, Matrix]:
    """Return ``(p, d)`` with ``p`` invertible, ``d`` diagonal, ``p.T @ s @ p == d``.

    Symmetric Gaussian elimination. A zero pivot with a nonzero row is fixed by
    a swap with a later nonzero diagonal entry or, failing that, by adding row
    and column ``j`` to row and column ``i`` (giving pivot ``2 s[i][j]``).
    """
    if not s.is_symmetric():
        raise ValueError("congruent_diagonalize requires a symmetric matrix")
    n = s.nrows
    a = [list(r) for r in s.rows]
    # p is kept as a list of columns; column operations on p mirror those on a
    p = [list(unit(n, j)) for j in range(n)]

    def add_to(i: int, j: int, f: Fraction) -> None:
        # col_i += f col_j and row_i += f row_j
        for k in range(n):
            if a[k][j]:
                a[k][i] += f * a[k][j]
        for k in range(n):
            if a[j][k]:
                a[i][k] += f * a[j][k]
        p[i] = [x + f * y if y else x for x, y in zip(p[i], p[j])]

    def swap(i: int, j: int) -> None:
        a[i], a[j] = a[j], a[i]
        for row in a:
            row[i], row[j] = row[j], row[i]
        p[i], p[j] = p[j], p[i]

    for i in range(n):
        if a[i][i] == 0:
            j = next((j for j in range(i + 1, n) if a[j][j] != 0), None)
            if j is not None:
                swap(i, j)
            else:
                j = next((j for j in range(i + 1, n) if a[i][j] != 0), None)
                if j is None:
                    continue
                add_to(i, j, Fraction(1))
        piv = a[i][i]
        for j in range(i + 1, n):
            if a[i][j] != 0:
                add_to(j, i, -a[i][j] / piv)
    d = Matrix._raw(a, n)
    pm = Matrix.from_columns(p, nrows=n)
    if not d.is_diagonal():
        raise ArithmeticError("congruence diagonalization left off-diagonal entries")
    return pm, d


def signature(s: Matrix) -> SignatureTriple:
    _, d = congruent_diagonalize(s)
    diag = [d[i, i] for i in range(d.nrows)]
    return SignatureTriple(
        sum(1 for x in diag if x > 0),
        sum(1 for x in diag if x < 0),
        sum(1 for x in diag if x == 0),
    )


class Subspace:
    """Linear subspace of Q^n given by linearly independent spanning columns."""

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, vectors: Sequence[Sequence] = ()):
        vectors = [vec(v) for v in vectors]
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector of length {len(v)} in a subspace of Q^{ambient_dim}")
        if vectors and rank(Matrix.from_columns(vectors)) != len(vectors):
            raise ValueError("subspace basis vectors are linearly dependent")
        self.ambient_dim = ambient_dim
        self.basis = Matrix.from_columns(vectors, nrows=ambient_dim)

    @classmethod
    def span(cls, vectors: Sequence[Sequence], ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, independent_columns([v for v in vectors]))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n, [])

    @property
    def dim(self) -> int:
        return self.basis.ncols

    @property
    def vectors(self) -> list[Vector]:
        return self.basis.columns()

    def contains(self, v: Sequence) -> bool:
        v = vec(v)
        if all(x == 0 for x in v):
            return True
        if self.dim == 0:
            return False
        return solve(self.basis, v) is not None

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.dim == other.dim
            and self.contains_subspace(other)
        )

    def __hash__(self):
        raise TypeError("Subspace is compared by span and is not hashable")

    def __repr__(self) -> str:
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.vectors)
        return f"Subspace(Q^{self.ambient_dim}, dim={self.dim}: [{vs}])"
