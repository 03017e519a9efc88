"""Lie algebras given by rational structure constants, and their
Chevalley-Eilenberg differentials on forms and multivectors.

Structure constants are stored only for ``i < j``: ``[e_i, e_j] = sum_k c[i,j][k] e_k``.
Indices are 0-based in the API and 1-based in labels and files.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, NamedTuple, Sequence

from .exactla import Matrix, Q, Subspace, Vector, kernel, vec
from .forms import KForm, KVector, index_tuples, pairing, wedge_coords  # noqa: F401  (pairing re-exported)
from .pseudoeuclid import CertificateError
from .wedge4 import MU0, vector_space
from .pseudoeuclid import q_numbers


class InvalidAlgebraError(ValueError):
    pass


class JacobiViolation(NamedTuple):
    i: int
    j: int
    k: int
    l: int
    value: Fraction

    def __str__(self) -> str:
        return f"Jac(e{self.i}, e{self.j}, e{self.k}) has e{self.l}-component {self.value}"


@dataclass(frozen=True)
class JacobiReport:
    violations: tuple[JacobiViolation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    constants: tuple[tuple[tuple[int, int], Vector], ...]
    name: str = ""
    _table: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        table = {}
        for (i, j), coeffs in self.constants:
            if not (0 <= i < j < self.dim):
                raise ValueError(f"structure constants need 0 <= i < j < dim, got ({i}, {j})")
            coeffs = vec(coeffs)
            if len(coeffs) != self.dim:
                raise ValueError(f"bracket [e{i + 1}, e{j + 1}] has {len(coeffs)} coefficients, expected {self.dim}")
            if (i, j) in table:
                raise ValueError(f"bracket [e{i + 1}, e{j + 1}] given twice")
            if any(coeffs):
                table[(i, j)] = coeffs
        object.__setattr__(self, "constants", tuple(sorted(table.items())))
        object.__setattr__(self, "_table", table)

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]],
                      name: str = "") -> "LieAlgebra":
        """Build from 1-based brackets, e.g. ``{(1, 2): {2: 1}}`` for ``[e1, e2] = e2``.

        ``(i, j)`` with ``i > j`` is accepted and stored as ``-[e_j, e_i]``.
        """
        table: dict[tuple[int, int], list[Fraction]] = {}
        for (i, j), terms in brackets.items():
            if i == j:
                raise ValueError(f"[e{i}, e{i}] is always zero")
            sign = 1
            if i > j:
                i, j, sign = j, i, -1
            row = table.setdefault((i - 1, j - 1), [Fraction(0)] * dim)
            for k, c in terms.items():
                if not 1 <= k <= dim:
                    raise ValueError(f"index e{k} out of range")
                row[k - 1] += sign * Q(c)
        return cls(dim, tuple((key, tuple(v)) for key, v in table.items()), name)

    def with_name(self, name: str) -> "LieAlgebra":
        return LieAlgebra(self.dim, self.constants, name)

    def c(self, i: int, j: int) -> Vector:
        """Coefficients of ``[e_i, e_j]`` (any order, antisymmetry applied)."""
        if i == j:
            return (Fraction(0),) * self.dim
        if i < j:
            return self._table.get((i, j), (Fraction(0),) * self.dim)
        return tuple(-x for x in self.c(j, i))

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        x, y = vec(x), vec(y)
        out = [Fraction(0)] * self.dim
        for (i, j), coeffs in self._table.items():
            f = x[i] * y[j] - x[j] * y[i]
            if f:
                for k, ck in enumerate(coeffs):
                    out[k] += f * ck
        return tuple(out)

    def ad(self, i: int) -> Matrix:
        return Matrix.from_columns([self.c(i, j) for j in range(self.dim)])

    def is_abelian(self) -> bool:
        return not self._table

    @cached_property
    def jacobi(self) -> JacobiReport:
        return validate(self)

    def require_valid(self) -> None:
        if not self.jacobi.ok:
            raise InvalidAlgebraError(
                f"{self.name or 'algebra'} violates the Jacobi identity: {self.jacobi.violations[0]}"
            )


def validate(g: LieAlgebra) -> JacobiReport:
    n = g.dim
    e = [tuple(Fraction(int(a == b)) for b in range(n)) for a in range(n)]
    out = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                terms = (
                    g.bracket(g.bracket(e[i], e[j]), e[k]),
                    g.bracket(g.bracket(e[j], e[k]), e[i]),
                    g.bracket(g.bracket(e[k], e[i]), e[j]),
                )
                for l in range(n):
                    s = sum(t[l] for t in terms)
                    if s != 0:
                        out.append(JacobiViolation(i + 1, j + 1, k + 1, l + 1, s))
    return JacobiReport(tuple(out))


def center(g: LieAlgebra) -> Subspace:
    g.require_valid()
    if g.is_abelian():
        return Subspace.full(g.dim)
    stacked = g.ad(0)
    for i in range(1, g.dim):
        stacked = stacked.vstack(g.ad(i))
    return kernel(stacked)


def derived(g: LieAlgebra) -> Subspace:
    g.require_valid()
    return Subspace.span([g.c(i, j) for i in range(g.dim) for j in range(i + 1, g.dim)], g.dim)


def is_unimodular(g: LieAlgebra) -> bool:
    g.require_valid()
    return all(g.ad(i).trace() == 0 for i in range(g.dim))


def d_one_form(g: LieAlgebra, m: int) -> Vector:
    """Coordinates of ``d e^m`` in degree 2: ``d e^m (e_i, e_j) = -c_{ij}^m``."""
    return tuple(-g.c(i, j)[m] for i, j in index_tuples(g.dim, 2))


def d_forms(g: LieAlgebra, k: int) -> Matrix:
    """Matrix of ``d`` from k-forms to (k+1)-forms (columns: images of ``e^I``)."""
    n = g.dim
    if not 1 <= k < n:
        raise ValueError(f"d on forms needs 1 <= k < {n}, got k = {k}")
    de = [d_one_form(g, m) for m in range(n)]
    cols = []
    for t in index_tuples(n, k):
        total = [Fraction(0)] * len(index_tuples(n, k + 1))
        # Leibniz: d(e^{t0} ∧ ... ∧ e^{t_{k-1}}) = sum_s (-1)^s ... ∧ d e^{t_s} ∧ ...
        for s, m in enumerate(t):
            left = _basis_coords(n, t[:s])
            right = _basis_coords(n, t[s + 1:])
            piece = wedge_coords(n, wedge_coords(n, left, s, de[m], 2), s + 2, right, k - s - 1)
            sign = -1 if s % 2 else 1
            total = [a + sign * b for a, b in zip(total, piece)]
        cols.append(total)
    return Matrix.from_columns(cols, nrows=len(index_tuples(n, k + 1)))


def _basis_coords(n: int, t: tuple[int, ...]) -> Vector:
    return tuple(Fraction(int(u == t)) for u in index_tuples(n, len(t)))


def d_vectors(g: LieAlgebra, k: int) -> Matrix:
    """Matrix of ``d`` from k-vectors to (k-1)-vectors, fixed by
    ``a(du) = (-1)^(k-1) (da)(u)`` for every (k-1)-form ``a``."""
    n = g.dim
    if not 2 <= k <= n:
        raise ValueError(f"d on multivectors needs 2 <= k <= {n}, got k = {k}")
    return d_forms(g, k - 1).T * (-1) ** (k - 1)


def apply_d(g: LieAlgebra, x):
    if isinstance(x, KForm):
        return KForm(g.dim, x.degree + 1, d_forms(g, x.degree) @ x.coords)
    if isinstance(x, KVector):
        return KVector(g.dim, x.degree - 1, d_vectors(g, x.degree) @ x.coords)
    raise TypeError("apply_d takes a KForm or KVector")


def _require_dim4(g: LieAlgebra) -> None:
    if g.dim != 4:
        raise ValueError(f"this operation is only defined for 4-dimensional algebras (got {g.dim})")


def closed_two_forms(g: LieAlgebra) -> Subspace:
    _require_dim4(g)
    g.require_valid()
    return kernel(d_forms(g, 2))


def boundary_two_vectors(g: LieAlgebra) -> Subspace:
    """Boundary 2-vectors, computed as the annihilator of the closed 2-forms and
    as the image of ``d`` on 3-vectors; the two must agree."""
    z2 = closed_two_forms(g)
    if z2.dim == 0:
        annihilator = Subspace.full(6)
    else:
        annihilator = kernel(z2.basis.T)
    image = Subspace.span(d_vectors(g, 3).columns(), 6)
    if annihilator != image:
        raise CertificateError(f"B2 mismatch: annihilator {annihilator} vs image {image}")
    return image


def is_b2_isotropic(g: LieAlgebra) -> bool:
    """True iff ``u ∧ u = 0`` for every boundary 2-vector ``u``."""
    b2 = boundary_two_vectors(g)
    sig = q_numbers(vector_space(MU0), b2)
    return sig.q_plus == 0 and sig.q_minus == 0


ABELIAN = LieAlgebra.from_brackets(4, {}, "abelian")
R2R2 = LieAlgebra.from_brackets(4, {(1, 2): {2: 1}, (3, 4): {4: 1}}, "r2r2")
D42 = LieAlgebra.from_brackets(
    4,
    {(1, 2): {3: 1}, (4, 3): {3: 1}, (4, 1): {1: 2}, (4, 2): {2: -1}},
    "d4,2",
)
HEIS3_R = LieAlgebra.from_brackets(4, {(1, 2): {3: 1}}, "heis3+R")

_CATALOG = {g.name: g for g in (ABELIAN, R2R2, D42, HEIS3_R)}


def catalog() -> list[LieAlgebra]:
    return list(_CATALOG.values())


def lookup(name: str) -> LieAlgebra:
    try:
        return _CATALOG[name]
    except KeyError:
        raise KeyError(f"unknown catalog algebra {name!r}; known: {', '.join(_CATALOG)}") from None
