"""Almost complex structures on 4-dimensional Lie algebras.

An almost complex structure ``J`` is carried exactly as a pair ``(M, lam)``
with ``M`` rational, ``lam > 0`` and ``M @ M == -lam * I``; it stands for
``J = M / sqrt(lam)``. Every decision below is a sign or rank condition, and
``sqrt(lam) > 0`` never changes a sign, so rationals suffice.

Tameness and compatibility are decided in the pseudo-Euclidean space of
2-forms with the wedge pairing: ``J`` is tamed iff its anti-invariant plane
extends positively inside the closed forms, and compatible iff it does so
orthogonally.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exactla import (
    Matrix,
    Q,
    SignatureTriple,
    Subspace,
    inverse,
    kernel,
    signature,
    unit,
    vec,
)
from .forms import KForm, index_tuples
from .lie import (
    LieAlgebra,
    boundary_two_vectors,
    center,
    closed_two_forms,
    derived,
)
from .pseudoeuclid import (
    CertificateError,
    PreconditionError,
    is_z_extendable,
    is_z_orth_extendable,
    extension_witness,
    orth_extension_witness,
    orthogonal_complement,
    q_numbers,
    subspace_intersect,
    witness_plane,
)
from .wedge4 import MU0, Orientation, form_space, interior_matrix, two_form_matrix, vector_space


class OrientationMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AlmostComplexStructure:
    m: Matrix
    lam: Fraction = Fraction(1)

    def __post_init__(self):
        lam = Q(self.lam)
        if lam <= 0:
            raise ValueError("lambda must be positive")
        object.__setattr__(self, "lam", lam)
        n = self.m.nrows
        if not self.m.is_square() or n % 2:
            raise ValueError("almost complex structures need an even-dimensional square matrix")
        if self.m @ self.m != Matrix.identity(n) * (-lam):
            raise ValueError(f"M @ M != -{lam} * I")

    @classmethod
    def from_images(cls, images: Sequence[Sequence], lam=1) -> "AlmostComplexStructure":
        """``images[i]`` is ``M e_{i+1}`` (the i-th column)."""
        return cls(Matrix.from_columns([vec(v) for v in images]), Q(lam))

    @property
    def dim(self) -> int:
        return self.m.nrows

    def __neg__(self) -> "AlmostComplexStructure":
        return AlmostComplexStructure(-self.m, self.lam)


def standard_j(sign: int = 1) -> AlmostComplexStructure:
    """``Je1 = e2, Je3 = e4`` (positively oriented); ``sign=-1`` uses ``Je3 = -e4``."""
    e = [unit(4, i) for i in range(4)]
    neg = lambda v: tuple(-x for x in v)  # noqa: E731
    if sign > 0:
        return AlmostComplexStructure.from_images([e[1], neg(e[0]), e[3], neg(e[2])])
    return AlmostComplexStructure.from_images([e[1], neg(e[0]), neg(e[3]), e[2]])


def pullback_matrix(m: Matrix) -> Matrix:
    """Matrix of ``a -> a(M., M.)`` on 2-form coordinates: entries are 2x2 minors of M."""
    pairs = index_tuples(m.nrows, 2)
    return Matrix(
        [[m[p, i] * m[q, j] - m[q, i] * m[p, j] for (p, q) in pairs] for (i, j) in pairs]
    )


def invariant_plane(j: AlmostComplexStructure) -> Subspace:
    """J-invariant 2-forms: ``a(M., M.) = lam * a``."""
    return kernel(pullback_matrix(j.m) - Matrix.identity(6) * j.lam)


def anti_invariant_plane(j: AlmostComplexStructure, mu: Orientation = MU0) -> Subspace:
    """J-anti-invariant 2-forms: ``a(M., M.) = -lam * a``. Always 2-dimensional."""
    if j.dim != 4:
        raise ValueError("anti-invariant planes are implemented in dimension 4")
    h = kernel(pullback_matrix(j.m) + Matrix.identity(6) * j.lam)
    if h.dim != 2:
        raise CertificateError(f"anti-invariant space has dimension {h.dim}, expected 2")
    return h


def orientation_of(j: AlmostComplexStructure) -> int:
    sig = q_numbers(form_space(MU0), anti_invariant_plane(j))
    if sig == (2, 0, 0):
        return 1
    if sig == (0, 2, 0):
        return -1
    raise CertificateError(f"anti-invariant plane is indefinite: {tuple(sig)}")


def j_from_plane(h: Subspace, mu: Orientation = MU0) -> AlmostComplexStructure:
    """An almost complex structure whose anti-invariant plane is ``h``.

    ``h`` is orthogonalized to ``{a, b}``; with ``A``, ``B`` the maps
    ``v -> i_v a``, ``v -> i_v b`` the result is ``M = A^-1 B``,
    ``lam = phi(b, b) / phi(a, a)``. Only one of the two structures ``±J``
    with this plane is returned.
    """
    space = form_space(mu)
    if h.ambient_dim != 6 or h.dim != 2 or q_numbers(space, h) != (2, 0, 0):
        raise PreconditionError("j_from_plane needs a positive-definite 2-plane of 2-forms")
    a, b0 = h.vectors
    f = space.inner(a, b0) / space.inner(a, a)
    b = tuple(y - f * x for x, y in zip(a, b0))
    alpha, beta = KForm(4, 2, a), KForm(4, 2, b)
    m = inverse(interior_matrix(alpha)) @ interior_matrix(beta)
    lam = space.inner(b, b) / space.inner(a, a)
    if m @ m != Matrix.identity(4) * (-lam):
        raise CertificateError("constructed M does not square to -lambda I")
    j = AlmostComplexStructure(m, lam)
    if anti_invariant_plane(j) != h:
        raise CertificateError("constructed J does not reproduce the plane")
    if orientation_of(j) != mu.sign:
        raise CertificateError("constructed J has the wrong orientation")
    return j


def verify_taming_direct(omega: KForm, j: AlmostComplexStructure) -> bool:
    """``omega(u, Ju) > 0`` for all ``u != 0``: the symmetric part of ``Omega M`` is positive definite."""
    om = two_form_matrix(omega) @ j.m
    sym = om + om.T
    return signature(sym) == SignatureTriple(j.dim, 0, 0)


def verify_invariance_direct(omega: KForm, j: AlmostComplexStructure) -> bool:
    """``omega(Jv, Jw) = omega(v, w)``, i.e. ``M^T Omega M = lam Omega``."""
    big = two_form_matrix(omega)
    return j.m.T @ big @ j.m == big * j.lam


@dataclass(frozen=True)
class SignatureRecord:
    name: str
    gram: Matrix
    signature: SignatureTriple


def record(name: str, gram: Matrix) -> SignatureRecord:
    return SignatureRecord(name, gram, signature(gram))


@dataclass
class TameReport:
    tamed: bool = False
    taming_form: KForm | None = None
    compatible: bool = False
    compatible_form: KForm | None = None
    transcript: list[SignatureRecord] = field(default_factory=list)


def _check_orientation(g: LieAlgebra, mu: Orientation, j: AlmostComplexStructure) -> None:
    if g.dim != 4 or j.dim != 4:
        raise ValueError("tameness decisions are implemented for 4-dimensional algebras only")
    if orientation_of(j) != mu.sign:
        raise OrientationMismatch(
            f"J is {'positively' if orientation_of(j) > 0 else 'negatively'} oriented "
            f"for e^1234 but the orientation is {mu}"
        )


def _signed_form(coords, j: AlmostComplexStructure, also_invariant: bool) -> KForm:
    # the signature test fixes omega only up to sign; J and -J swap which sign tames
    for s in (1, -1):
        omega = KForm(4, 2, tuple(s * x for x in coords))
        if verify_taming_direct(omega, j) and (not also_invariant or verify_invariance_direct(omega, j)):
            return omega
    raise CertificateError("witness form fails the direct taming check for both signs")


def is_tamed(g: LieAlgebra, mu: Orientation, j: AlmostComplexStructure,
             report: TameReport | None = None) -> TameReport:
    _check_orientation(g, mu, j)
    report = report if report is not None else TameReport()
    space = form_space(mu)
    h = anti_invariant_plane(j)
    z2 = closed_two_forms(g)
    report.transcript.append(record("anti-invariant plane", space.restricted_gram(h)))
    hz = Subspace.span(h.vectors + z2.vectors, 6)
    report.transcript.append(record("anti-invariant plane + closed forms", space.restricted_gram(hz)))
    report.tamed = is_z_extendable(space, h, z2)
    if report.tamed:
        w = extension_witness(space, h, z2)
        omega = _signed_form(w, j, also_invariant=False)
        if not z2.contains(omega.coords):
            raise CertificateError("taming form is not closed")
        report.taming_form = omega
        ext = Subspace.span(h.vectors + [omega.coords], 6)
        report.transcript.append(record("anti-invariant plane + taming form", space.restricted_gram(ext)))
    return report


def is_compatible(g: LieAlgebra, mu: Orientation, j: AlmostComplexStructure,
                  report: TameReport | None = None) -> TameReport:
    _check_orientation(g, mu, j)
    report = report if report is not None else TameReport()
    space = form_space(mu)
    h = anti_invariant_plane(j)
    z2 = closed_two_forms(g)
    inter = subspace_intersect(z2, orthogonal_complement(space, h))
    if inter.dim:
        report.transcript.append(record("closed forms orthogonal to anti-invariant plane",
                                        space.restricted_gram(inter)))
    report.compatible = is_z_orth_extendable(space, h, z2)
    if report.compatible:
        w = orth_extension_witness(space, h, z2)
        omega = _signed_form(w, j, also_invariant=True)
        if not z2.contains(omega.coords):
            raise CertificateError("compatible form is not closed")
        report.compatible_form = omega
        if not report.tamed and report.taming_form is None:
            report.tamed = True
            report.taming_form = omega
    return report


def tame_report(g: LieAlgebra, mu: Orientation, j: AlmostComplexStructure) -> TameReport:
    report = is_tamed(g, mu, j)
    is_compatible(g, mu, j, report)
    if report.compatible and not report.tamed:
        raise CertificateError("compatible but not tamed")
    return report


class VerdictKind(str, enum.Enum):
    VACUOUS = "VacuousNoSymplectic"
    HOLDS = "Holds"
    FAILS = "Fails"


@dataclass
class Verdict:
    kind: VerdictKind
    orientation: Orientation
    z2: Subspace
    b2: Subspace
    z2_signature: SignatureTriple
    b2_signature: SignatureTriple
    witness_j: AlmostComplexStructure | None = None
    report: TameReport | None = None
    transcript: list[SignatureRecord] = field(default_factory=list)


def decide_tame_compatible(g: LieAlgebra, mu: Orientation = MU0, witness: bool = True) -> Verdict:
    """Decide the tame-compatible property of ``(g, mu)``.

    It holds iff ``mu(u ∧ u) <= 0`` on every boundary 2-vector ``u``. On
    failure (and with ``witness``) a tamed, non-compatible J is built and
    certified.
    """
    if g.dim != 4:
        raise ValueError(f"the tame-compatible decision is only defined in dimension 4 (got {g.dim})")
    g.require_valid()
    fspace, vspace = form_space(mu), vector_space(mu)
    z2 = closed_two_forms(g)
    b2 = boundary_two_vectors(g)
    transcript = [
        record("closed 2-forms under the form pairing", fspace.restricted_gram(z2)),
        record("boundary 2-vectors under the vector pairing", vspace.restricted_gram(b2)),
    ]
    zsig, bsig = transcript[0].signature, transcript[1].signature
    out = Verdict(VerdictKind.HOLDS, mu, z2, b2, zsig, bsig, transcript=transcript)
    if zsig.q_plus == 0:
        out.kind = VerdictKind.VACUOUS
        return out
    if bsig.q_plus == 0:
        return out
    out.kind = VerdictKind.FAILS
    if witness:
        h = witness_plane(fspace, z2)
        j = j_from_plane(h, mu)
        rep = tame_report(g, mu, j)
        if not rep.tamed or rep.compatible:
            raise CertificateError("witness J is not tamed-but-not-compatible")
        out.witness_j = j
        out.report = rep
        out.transcript.extend(rep.transcript)
    return out


def central_certificate(g: LieAlgebra, j: AlmostComplexStructure) -> bool:
    """Whether J maps some nonzero central vector into the derived algebra."""
    xi = center(g)
    if xi.dim == 0:
        return False
    jxi = Subspace.span([j.m @ v for v in xi.vectors], g.dim)
    return subspace_intersect(jxi, derived(g)).dim > 0


def non_tamed_j(g: LieAlgebra) -> AlmostComplexStructure:
    """An almost complex structure admitting no taming symplectic form.

    Picks ``u`` central and ``v`` in the derived algebra, independent, sets
    ``Ju = v, Jv = -u`` and pairs up a complement.
    """
    g.require_valid()
    n = g.dim
    if n < 4 or n % 2:
        raise PreconditionError(f"needs even dimension >= 4, got {n}")
    if g.is_abelian():
        raise PreconditionError("abelian algebras have no non-tamed almost complex structure")
    xi, der = center(g), derived(g)
    if xi.dim == 0:
        raise PreconditionError("the center is trivial")
    pair = next(
        ((u, v) for u in xi.vectors for v in der.vectors if Subspace.span([u, v], n).dim == 2),
        None,
    )
    if pair is None:
        raise PreconditionError("no central vector independent of a derived vector")
    u, v = pair
    basis = [u, v]
    for i in range(n):
        if Subspace.span(basis + [unit(n, i)], n).dim == len(basis) + 1:
            basis.append(unit(n, i))
    p = Matrix.from_columns(basis)
    block = [[Fraction(0)] * n for _ in range(n)]
    for a in range(0, n, 2):
        block[a + 1][a] = Fraction(1)
        block[a][a + 1] = Fraction(-1)
    j = AlmostComplexStructure(p @ Matrix(block) @ inverse(p), Fraction(1))
    if not central_certificate(g, j):
        raise CertificateError("J does not map the center into the derived algebra")
    if n == 4:
        mu = Orientation(orientation_of(j))
        if is_tamed(g, mu, j).tamed:
            raise CertificateError("constructed J is tamed")
    return j


def nijenhuis_vanishes(g: LieAlgebra, j: AlmostComplexStructure) -> bool:
    """``lam N(X, Y) = [MX, MY] - M[MX, Y] - M[X, MY] - lam [X, Y]`` vanishes on basis pairs."""
    n = g.dim
    m = j.m
    e = [unit(n, i) for i in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            mx, my = m @ e[a], m @ e[b]
            t1 = g.bracket(mx, my)
            t2 = m @ g.bracket(mx, e[b])
            t3 = m @ g.bracket(e[a], my)
            t4 = g.bracket(e[a], e[b])
            if any(p - q - r - j.lam * s for p, q, r, s in zip(t1, t2, t3, t4)):
                return False
    return True


# The tamed-but-not-compatible structure on r2r2 (lam = 2, i.e. entries over sqrt 2)
EXPLICIT_J = AlmostComplexStructure.from_images(
    [(0, 1, 0, -1), (-1, 0, -1, 0), (0, 1, 0, 1), (1, 0, -1, 0)], 2
)
