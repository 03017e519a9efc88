"""Wedge pairings on 2-forms and 2-vectors of a 4-dimensional space.

For an orientation ``mu = c e^{1234}``:

* ``phi_vector_matrix(mu)`` is the Gram matrix of ``(u, v) -> mu(u ∧ v)`` on 2-vectors;
* ``phi_form_matrix(mu)`` is the Gram matrix of the form pairing defined by
  ``a ∧ b = phi(a, b) mu`` on 2-forms.

Both have signature (3, 3). Coordinates follow the order 12, 13, 14, 23, 24, 34.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactla import Matrix, Q
from .forms import KForm, KVector, index_tuples, wedge_coords
from .pseudoeuclid import PseudoEuclideanSpace

N = 4


@dataclass(frozen=True)
class Orientation:
    """The volume form ``c * e^{1234}``."""

    c: Fraction = Fraction(1)

    def __post_init__(self):
        c = Q(self.c)
        if c == 0:
            raise ValueError("orientation scale must be nonzero")
        object.__setattr__(self, "c", c)

    @property
    def sign(self) -> int:
        return 1 if self.c > 0 else -1

    def __neg__(self) -> "Orientation":
        return Orientation(-self.c)

    def __str__(self) -> str:
        return str(self.c)


MU0 = Orientation(1)


def _top_coefficient_matrix() -> Matrix:
    # coefficient of e^{1234} in e^I ∧ e^J
    basis = index_tuples(N, 2)
    rows = []
    for i in range(len(basis)):
        a = [int(i == k) for k in range(len(basis))]
        row = []
        for j in range(len(basis)):
            b = [int(j == k) for k in range(len(basis))]
            row.append(wedge_coords(N, a, 2, b, 2)[0])
        rows.append(row)
    return Matrix(rows)


_WEDGE = _top_coefficient_matrix()


def phi_form_matrix(mu: Orientation = MU0) -> Matrix:
    return _WEDGE * (1 / mu.c)


def phi_vector_matrix(mu: Orientation = MU0) -> Matrix:
    return _WEDGE * mu.c


def form_space(mu: Orientation = MU0) -> PseudoEuclideanSpace:
    return PseudoEuclideanSpace(phi_form_matrix(mu))


def vector_space(mu: Orientation = MU0) -> PseudoEuclideanSpace:
    return PseudoEuclideanSpace(phi_vector_matrix(mu))


@dataclass(frozen=True)
class WedgeSpace:
    form_side: PseudoEuclideanSpace
    vector_side: PseudoEuclideanSpace


def wedge_space(mu: Orientation = MU0) -> WedgeSpace:
    return WedgeSpace(form_space(mu), vector_space(mu))


def phi_forms(a: KForm, b: KForm, mu: Orientation = MU0) -> Fraction:
    return form_space(mu).inner(a.coords, b.coords)


def phi_vectors(u: KVector, v: KVector, mu: Orientation = MU0) -> Fraction:
    return vector_space(mu).inner(u.coords, v.coords)


def riesz(mu: Orientation, x):
    """Riesz map of the wedge pairing: 2-form <-> 2-vector.

    A 2-form ``a`` goes to the 2-vector ``u`` with ``b(u) = phi(a, b)`` for all
    2-forms ``b``; a 2-vector goes to the 2-form representing ``mu(u ∧ .)``.
    """
    if isinstance(x, KForm):
        if (x.n, x.degree) != (N, 2):
            raise ValueError("riesz is defined on 2-forms of a 4-dimensional space")
        return KVector(N, 2, phi_form_matrix(mu) @ x.coords)
    if isinstance(x, KVector):
        if (x.n, x.degree) != (N, 2):
            raise ValueError("riesz is defined on 2-vectors of a 4-dimensional space")
        return KForm(N, 2, phi_vector_matrix(mu) @ x.coords)
    raise TypeError(f"riesz expects a KForm or KVector, got {type(x).__name__}")


def two_form_matrix(a: KForm) -> Matrix:
    """Skew matrix ``A[p][q] = a(e_p, e_q)``."""
    if a.degree != 2:
        raise ValueError("expected a 2-form")
    m = [[Fraction(0)] * a.n for _ in range(a.n)]
    for c, (p, q) in zip(a.coords, index_tuples(a.n, 2)):
        m[p][q] = c
        m[q][p] = -c
    return Matrix(m)


def interior(v, a: KForm) -> KForm:
    """Contraction ``(i_v a)(w) = a(v, w)`` of a 2-form with a vector."""
    if a.degree != 2:
        raise ValueError("interior product is implemented for 2-forms")
    v = tuple(Q(x) for x in v)
    if len(v) != a.n:
        raise ValueError("vector has the wrong dimension")
    # (i_v a)_q = sum_p v_p a(e_p, e_q)
    return KForm(a.n, 1, two_form_matrix(a).T @ v)


def interior_matrix(a: KForm) -> Matrix:
    """Matrix of ``v -> i_v a`` (columns indexed by v, rows by the 1-form coordinate)."""
    return two_form_matrix(a).T
