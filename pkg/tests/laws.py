"""Randomized law checks shared by the module tests and the acceptance suite.

Each ``law_*`` function draws one random instance from ``rng``, asserts the
law on it, and returns a short tag describing which branch was exercised.
"""

from __future__ import annotations

import random
from fractions import Fraction

from tamecompat.acs4 import anti_invariant_plane, j_from_plane
from tamecompat.exactla import Matrix, Subspace, inverse, kernel
from tamecompat.forms import KForm
from tamecompat.lie import (
    ABELIAN,
    D42,
    HEIS3_R,
    R2R2,
    LieAlgebra,
    boundary_two_vectors,
    closed_two_forms,
    d_forms,
    d_vectors,
)
from tamecompat.oracle import (
    random_invertible,
    random_isomorphic,
    random_positive_plane,
    random_rational,
    random_space,
    random_subspace,
)
from tamecompat.pseudoeuclid import (
    PseudoEuclideanSpace,
    extends_positively,
    extension_witness,
    is_z_extendable,
    is_z_extendable_via_complement,
    is_z_orth_extendable,
    non_extendable_plane,
    orth_extension_witness,
    orthogonal_complement,
    q_numbers,
    witness_plane,
)
from tamecompat.wedge4 import Orientation, form_space, phi_form_matrix, phi_vector_matrix, riesz

SHAPES = [(2, 2), (2, 3), (3, 2), (3, 3), (2, 4), (4, 2)]

# extra 4-dimensional algebras (valid by construction; verified in test_lie)
R4_2 = LieAlgebra.from_brackets(4, {(4, 1): {1: 1}, (4, 2): {2: 2}, (4, 3): {3: -3}}, "r4,2-like")
D4_1 = LieAlgebra.from_brackets(4, {(1, 2): {3: 1}, (4, 1): {1: 1}, (4, 3): {3: 1}}, "d4,1")
AFF_C = LieAlgebra.from_brackets(
    4, {(1, 3): {3: 1}, (1, 4): {4: 1}, (2, 3): {4: 1}, (2, 4): {3: -1}}, "aff(C)"
)
FOUR_DIM = [ABELIAN, R2R2, D42, HEIS3_R, R4_2, D4_1, AFF_C]

# other dimensions, for d∘d = 0
HEIS3 = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}}, "heis3")
SL2 = LieAlgebra.from_brackets(3, {(1, 2): {2: 2}, (1, 3): {3: -2}, (2, 3): {1: 1}}, "sl2")
R2_CUBED = LieAlgebra.from_brackets(6, {(1, 2): {2: 1}, (3, 4): {4: 1}, (5, 6): {6: 1}}, "r2^3")
FIVE = LieAlgebra.from_brackets(5, {(1, 2): {3: 1}, (1, 3): {4: 1}, (2, 3): {5: 1}}, "n5")
OTHER_DIM = [HEIS3, SL2, R2_CUBED, FIVE]


def _space(rng: random.Random) -> PseudoEuclideanSpace:
    k, l = rng.choice(SHAPES)
    return random_space(rng, k, l)


def _z_with_positive(rng, v: PseudoEuclideanSpace) -> Subspace:
    while True:
        z = random_subspace(rng, v.dim, rng.randint(1, v.dim))
        if q_numbers(v, z).q_plus >= 1:
            return z


def law_extendable_implies_orthogonal(rng: random.Random) -> str:
    """q+(Z^perp) = 0 iff every Z-extendable plane is Z-orthogonally-extendable."""
    v = _space(rng)
    z = _z_with_positive(rng, v)
    if q_numbers(v, orthogonal_complement(v, z)).q_plus == 0:
        h = random_positive_plane(rng, v, v.k - 1)
        ext, orth = is_z_extendable(v, h, z), is_z_orth_extendable(v, h, z)
        assert not ext or orth
        return f"perp-nonpositive/ext={ext}"
    h = witness_plane(v, z)
    assert is_z_extendable(v, h, z) and not is_z_orth_extendable(v, h, z)
    return "perp-positive/witness"


def law_full_positive_iff_all_extendable(rng: random.Random) -> str:
    """q+(Z) = k iff every positive (k-1)-plane is Z-extendable (and orthogonally)."""
    v = _space(rng)
    z = random_subspace(rng, v.dim, rng.randint(0, v.dim))
    if q_numbers(v, z).q_plus == v.k:
        h = random_positive_plane(rng, v, v.k - 1)
        assert is_z_extendable(v, h, z)
        assert is_z_orth_extendable(v, h, z)
        return "full"
    h = non_extendable_plane(v, z)
    assert not is_z_extendable(v, h, z)
    return "deficient"


def law_plane_criteria_agree(rng: random.Random) -> str:
    v = _space(rng)
    z = random_subspace(rng, v.dim, rng.randint(1, v.dim))
    h = random_positive_plane(rng, v, v.k - 1)
    a = is_z_extendable(v, h, z)
    assert a == is_z_extendable_via_complement(v, h, z)
    orth = is_z_orth_extendable(v, h, z)
    assert not orth or a
    if a:
        w = extension_witness(v, h, z)
        assert z.contains(w) and extends_positively(v, h, w)
    if orth:
        w = orth_extension_witness(v, h, z)
        assert z.contains(w) and extends_positively(v, h, w)
        assert all(v.inner(w, b) == 0 for b in h.vectors)
    return f"ext={a}/orth={orth}"


def minkowski_space(rng: random.Random, l: int) -> tuple[PseudoEuclideanSpace, tuple, list]:
    """Signature (1, l) space with gram ``G^T diag(1, -1, ...) G`` and its
    orthonormal frame ``p`` (time-like), ``ns`` (space-like)."""
    g = random_invertible(rng, l + 1, 2)
    v = PseudoEuclideanSpace(g.T @ Matrix.diag([1] + [-1] * l) @ g)
    frame = inverse(g).columns()
    return v, frame[0], frame[1:]


def _causal(rng, p, ns, null: bool):
    bs = [random_rational(rng, 3) for _ in ns]
    if null:
        # a^2 = sum b^2 with a rational: use a single space-like direction
        i = rng.randrange(len(ns))
        bs = [Fraction(0)] * len(ns)
        bs[i] = random_rational(rng, 3, nonzero=True)
        a = abs(bs[i]) * rng.choice([1, -1])
    else:
        a = (abs(sum(b * b for b in bs)) + 1) * rng.choice([1, -1])
    return tuple(a * x + sum((b * y[t] for b, y in zip(bs, ns)), Fraction(0)) for t, x in enumerate(p))


def law_minkowski_causal(rng: random.Random) -> str:
    """Reverse Cauchy-Schwarz for causal vectors; orthogonal causal pairs are proportional null vectors."""
    v, p, ns = minkowski_space(rng, rng.randint(2, 4))
    u = _causal(rng, p, ns, null=rng.random() < 0.3)
    w = _causal(rng, p, ns, null=rng.random() < 0.3)
    uu, ww, uw = v.norm2(u), v.norm2(w), v.inner(u, w)
    assert uu >= 0 and ww >= 0
    assert uw * uw >= uu * ww
    if uu + ww > 0:
        assert uw != 0
    elif uw == 0:
        assert Subspace.span([u, w], v.dim).dim == 1
    return "null-pair" if uu + ww == 0 else "timelike"


def law_minkowski_negative_complement(rng: random.Random) -> str:
    """A negative-definite subspace of a Minkowski space has a time-like vector in its complement."""
    v, p, ns = minkowski_space(rng, rng.randint(2, 4))
    dim = rng.randint(1, len(ns))
    while True:
        vs = []
        for _ in range(dim):
            eps = random_rational(rng, 2) / 4
            coeffs = [random_rational(rng, 3) for _ in ns]
            vs.append(tuple(eps * x + sum((c * y[t] for c, y in zip(coeffs, ns)), Fraction(0))
                            for t, x in enumerate(p)))
        l = Subspace.span(vs, v.dim)
        sig = q_numbers(v, l)
        if l.dim and sig.q_plus == 0 and sig.q_zero == 0:
            break
    assert q_numbers(v, orthogonal_complement(v, l)).q_plus >= 1
    return f"dim={l.dim}"


def law_dd_zero(rng: random.Random) -> str:
    g = random_isomorphic(rng, rng.choice(FOUR_DIM + OTHER_DIM))
    for k in range(1, g.dim - 1):
        assert (d_forms(g, k + 1) @ d_forms(g, k)).is_zero()
    # adjunction with the pairing, on random arguments
    k = rng.randint(2, g.dim)
    u = [random_rational(rng, 3) for _ in range(d_vectors(g, k).ncols)]
    a = [random_rational(rng, 3) for _ in range(d_forms(g, k - 1).ncols)]
    lhs = sum(x * y for x, y in zip(d_vectors(g, k) @ u, a))
    rhs = (-1) ** (k - 1) * sum(x * y for x, y in zip(u, d_forms(g, k - 1) @ a))
    assert lhs == rhs
    return f"dim={g.dim}"


def law_b2_double_computation(rng: random.Random) -> str:
    g = random_isomorphic(rng, rng.choice(FOUR_DIM))
    z2 = closed_two_forms(g)
    b2 = boundary_two_vectors(g)
    annihilator = kernel(z2.basis.T) if z2.dim else Subspace.full(6)
    image = Subspace.span(d_vectors(g, 3).columns(), 6)
    assert annihilator == image == b2
    assert z2.dim + b2.dim == 6
    return g.name


def _orientation(rng) -> Orientation:
    return Orientation(random_rational(rng, 4, nonzero=True))


def law_riesz_isometry(rng: random.Random) -> str:
    mu = _orientation(rng)
    a = KForm(4, 2, [random_rational(rng, 3) for _ in range(6)])
    b = KForm(4, 2, [random_rational(rng, 3) for _ in range(6)])
    ra, rb = riesz(mu, a), riesz(mu, b)
    fa = Matrix([a.coords]) @ phi_form_matrix(mu) @ Matrix.from_columns([b.coords])
    va = Matrix([ra.coords]) @ phi_vector_matrix(mu) @ Matrix.from_columns([rb.coords])
    assert fa == va
    assert riesz(mu, ra) == a
    assert riesz(mu, riesz(mu, rb)) == rb
    return "sign+" if mu.sign > 0 else "sign-"


def law_plane_round_trip(rng: random.Random) -> str:
    mu = _orientation(rng)
    h = random_positive_plane(rng, form_space(mu), 2)
    j = j_from_plane(h, mu)
    assert anti_invariant_plane(j) == h
    assert anti_invariant_plane(-j) == h
    return "ok"


ALL_LAWS = {
    "prop1 extendable => orthogonally extendable": law_extendable_implies_orthogonal,
    "prop2 q+(Z)=k <=> all extendable": law_full_positive_iff_all_extendable,
    "plane criteria agree": law_plane_criteria_agree,
    "minkowski causal pairs": law_minkowski_causal,
    "minkowski negative complement": law_minkowski_negative_complement,
    "d∘d = 0 and adjunction": law_dd_zero,
    "B2 double computation": law_b2_double_computation,
    "riesz isometry": law_riesz_isometry,
    "anti-invariant plane round trip": law_plane_round_trip,
}


def run_law(law, seed: int, count: int) -> dict[str, int]:
    rng = random.Random(seed)
    tags: dict[str, int] = {}
    for _ in range(count):
        tag = law(rng)
        tags[tag] = tags.get(tag, 0) + 1
    return tags
