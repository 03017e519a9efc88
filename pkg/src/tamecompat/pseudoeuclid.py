"""Pseudo-Euclidean spaces and the Z-extendability predicates.

A positive (k-1)-plane ``H`` in a space of signature (k, l) is *Z-extendable*
when some ``z`` in ``Z`` makes ``H + Rz`` a positive k-plane, and
*Z-orthogonally-extendable* when such a ``z`` can be taken in ``Z`` and
orthogonal to ``H``. Both are decided by Sylvester numbers of auxiliary
subspaces; every witness returned here is re-checked by an exact signature
computation before it leaves the function.

Bases are orthogonal but never normalized, so everything stays rational.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactla import (
    Matrix,
    SignatureTriple,
    Subspace,
    Vector,
    congruent_diagonalize,
    dot,
    kernel,
    signature,
    solve,
    vec,
)


class PreconditionError(ValueError):
    """An operation was called outside its documented domain."""


class CertificateError(AssertionError):
    """A constructed object failed its own exact verification."""


@dataclass(frozen=True)
class PseudoEuclideanSpace:
    gram: Matrix
    sig: SignatureTriple = field(init=False)

    def __post_init__(self):
        if not self.gram.is_symmetric():
            raise ValueError("gram matrix must be symmetric")
        sig = signature(self.gram)
        if sig.q_zero:
            raise ValueError(f"degenerate bilinear form, signature {tuple(sig)}")
        object.__setattr__(self, "sig", sig)

    @property
    def dim(self) -> int:
        return self.gram.nrows

    @property
    def k(self) -> int:
        return self.sig.q_plus

    @property
    def l(self) -> int:
        return self.sig.q_minus

    def inner(self, u: Sequence, v: Sequence) -> "Fraction":
        return dot(vec(u), self.gram @ vec(v))

    def norm2(self, u: Sequence):
        return self.inner(u, u)

    def restricted_gram(self, sub: Subspace) -> Matrix:
        self._check(sub)
        b = sub.basis
        return b.T @ self.gram @ b

    def _check(self, sub: Subspace) -> None:
        if sub.ambient_dim != self.dim:
            raise ValueError(f"subspace lives in Q^{sub.ambient_dim}, space has dimension {self.dim}")

    def full(self) -> Subspace:
        return Subspace.full(self.dim)


def q_numbers(v: PseudoEuclideanSpace, sub: Subspace) -> SignatureTriple:
    return signature(v.restricted_gram(sub))


def orthogonal_complement(v: PseudoEuclideanSpace, sub: Subspace) -> Subspace:
    v._check(sub)
    if sub.dim == 0:
        return v.full()
    return kernel(sub.basis.T @ v.gram)


def _check_pair(l1: Subspace, l2: Subspace) -> None:
    if l1.ambient_dim != l2.ambient_dim:
        raise ValueError(f"ambient dimensions differ: {l1.ambient_dim} vs {l2.ambient_dim}")


def subspace_sum(l1: Subspace, l2: Subspace) -> Subspace:
    _check_pair(l1, l2)
    return Subspace.span(l1.vectors + l2.vectors, l1.ambient_dim)


def subspace_intersect(l1: Subspace, l2: Subspace) -> Subspace:
    _check_pair(l1, l2)
    n = l1.ambient_dim
    if l1.dim == 0 or l2.dim == 0:
        return Subspace.zero(n)
    # l1 a = l2 b  <=>  [l1 | -l2] (a, b) = 0
    ker = kernel(l1.basis.hstack(-l2.basis))
    return Subspace.span([l1.basis @ x[: l1.dim] for x in ker.vectors], n)


def positive_orthogonal_vectors(v: PseudoEuclideanSpace, sub: Subspace) -> list[Vector]:
    """Mutually orthogonal vectors spanning a maximal positive subspace of ``sub``."""
    if sub.dim == 0:
        return []
    p, d = congruent_diagonalize(v.restricted_gram(sub))
    return [sub.basis @ p.column(i) for i in range(d.nrows) if d[i, i] > 0]


def is_positive_plane(v: PseudoEuclideanSpace, sub: Subspace, dim: int) -> bool:
    return sub.dim == dim and q_numbers(v, sub) == SignatureTriple(dim, 0, 0)


def _require_hyperplane(v: PseudoEuclideanSpace, h: Subspace) -> None:
    v._check(h)
    if not is_positive_plane(v, h, v.k - 1):
        raise PreconditionError(
            f"H must be a positive {v.k - 1}-plane; got dim {h.dim}, q-numbers {tuple(q_numbers(v, h))}"
        )


def is_z_extendable(v: PseudoEuclideanSpace, h: Subspace, z: Subspace) -> bool:
    _require_hyperplane(v, h)
    return q_numbers(v, subspace_sum(h, z)).q_plus == v.k


def is_z_extendable_via_complement(v: PseudoEuclideanSpace, h: Subspace, z: Subspace) -> bool:
    """Equivalent criterion: (H + Z) meets the orthogonal complement of H positively."""
    _require_hyperplane(v, h)
    sub = subspace_intersect(subspace_sum(h, z), orthogonal_complement(v, h))
    return q_numbers(v, sub).q_plus >= 1


def is_z_orth_extendable(v: PseudoEuclideanSpace, h: Subspace, z: Subspace) -> bool:
    _require_hyperplane(v, h)
    return q_numbers(v, subspace_intersect(z, orthogonal_complement(v, h))).q_plus >= 1


def _verify_extension(v: PseudoEuclideanSpace, h: Subspace, w: Vector) -> None:
    ext = Subspace.span(h.vectors + [w], v.dim)
    if not is_positive_plane(v, ext, v.k):
        raise CertificateError(f"H + Rw is not a positive {v.k}-plane: {tuple(q_numbers(v, ext))}")


def extends_positively(v: PseudoEuclideanSpace, h: Subspace, w: Sequence) -> bool:
    """True when ``H + Rw`` is a positive k-plane."""
    w = vec(w)
    ext = Subspace.span(h.vectors + [w], v.dim)
    return is_positive_plane(v, ext, v.k)


def extension_witness(v: PseudoEuclideanSpace, h: Subspace, z: Subspace) -> Vector:
    """A vector ``z0`` in ``Z`` with ``H + R z0`` a positive k-plane.

    A positive vector ``w`` of ``(H + Z) ∩ H^⊥`` is split as ``w = h0 + z0``;
    since ``w - z0`` lies in ``H``, ``H + R z0 = H + R w``.
    """
    if not is_z_extendable(v, h, z):
        raise PreconditionError("H is not Z-extendable")
    sub = subspace_intersect(subspace_sum(h, z), orthogonal_complement(v, h))
    w = positive_orthogonal_vectors(v, sub)[0]
    coeffs = solve(h.basis.hstack(z.basis), w)
    if coeffs is None:
        raise CertificateError("positive vector of (H+Z) ∩ H^⊥ is not in H + Z")
    z0 = z.basis @ coeffs[h.dim:]
    _verify_extension(v, h, z0)
    return z0


def orth_extension_witness(v: PseudoEuclideanSpace, h: Subspace, z: Subspace) -> Vector:
    if not is_z_orth_extendable(v, h, z):
        raise PreconditionError("H is not Z-orthogonally-extendable")
    w = positive_orthogonal_vectors(v, subspace_intersect(z, orthogonal_complement(v, h)))[0]
    _verify_extension(v, h, w)
    if any(v.inner(w, b) != 0 for b in h.vectors):
        raise CertificateError("orthogonal witness is not orthogonal to H")
    return w


def witness_plane(v: PseudoEuclideanSpace, z: Subspace) -> Subspace:
    """A positive (k-1)-plane that is Z-extendable but not Z-orthogonally-extendable.

    Requires ``q+(Z) >= 1`` and ``q+(Z^⊥) >= 1``. With positive orthogonal
    ``w_1..w_r`` in Z, positive ``u`` in Z^⊥ and positive ``eta`` completing
    ``span(w, u)`` to a positive k-plane, the plane is
    ``span(u + w_1, w_2, .., w_r, eta_{r+2}, .., eta_k)``.
    """
    v._check(z)
    zperp = orthogonal_complement(v, z)
    omegas = positive_orthogonal_vectors(v, z)
    us = positive_orthogonal_vectors(v, zperp)
    if not omegas or not us:
        raise PreconditionError(
            f"witness_plane needs q+(Z) >= 1 and q+(Z^perp) >= 1; got {len(omegas)} and {len(us)}"
        )
    u = us[0]
    lplane = Subspace(v.dim, omegas + [u])
    etas = positive_orthogonal_vectors(v, orthogonal_complement(v, lplane))
    first = tuple(a + b for a, b in zip(u, omegas[0]))
    h = Subspace(v.dim, [first] + omegas[1:] + etas)
    if not is_positive_plane(v, h, v.k - 1):
        raise CertificateError(f"witness plane is not a positive {v.k - 1}-plane")
    if not is_z_extendable(v, h, z):
        raise CertificateError("witness plane is not Z-extendable")
    if is_z_orth_extendable(v, h, z):
        raise CertificateError("witness plane is Z-orthogonally-extendable")
    return h


def non_extendable_plane(v: PseudoEuclideanSpace, z: Subspace) -> Subspace:
    """When ``q+(Z) < k``: a positive (k-1)-plane containing a maximal positive subspace of Z.

    Such a plane cannot be Z-extendable.
    """
    omegas = positive_orthogonal_vectors(v, z)
    r = len(omegas)
    if r >= v.k:
        raise PreconditionError("q+(Z) = k; every positive (k-1)-plane is Z-extendable")
    rest = []
    if r < v.k - 1:
        comp = orthogonal_complement(v, Subspace(v.dim, omegas)) if omegas else v.full()
        rest = positive_orthogonal_vectors(v, comp)[: v.k - 1 - r]
    h = Subspace(v.dim, omegas + rest)
    if not is_positive_plane(v, h, v.k - 1):
        raise CertificateError("constructed plane is not a positive (k-1)-plane")
    if is_z_extendable(v, h, z):
        raise CertificateError("constructed plane is Z-extendable")
    return h
