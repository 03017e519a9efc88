"""Independent checks and seeded random sampling.

Nothing in the decision path imports this module. The wedge and Nijenhuis
oracles recompute their quantities from raw definitions without touching
the coordinate machinery they are meant to check.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Iterable, Iterator

from .acs4 import (
    AlmostComplexStructure,
    VerdictKind,
    anti_invariant_plane,
    decide_tame_compatible,
    invariant_plane,
    orientation_of,
    standard_j,
    tame_report,
    verify_invariance_direct,
    verify_taming_direct,
)
from .exactla import Matrix, Subspace, congruent_diagonalize, inverse, rank
from .forms import KForm
from .lie import LieAlgebra, closed_two_forms
from .pseudoeuclid import PseudoEuclideanSpace, is_positive_plane, subspace_intersect
from .wedge4 import Orientation


# -- independent recomputations ------------------------------------------------

_PAIRS = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def _parity(perm) -> int:
    # sign via cycle decomposition
    seen, sign = set(), 1
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def wedge_oracle(a: KForm, b: KForm) -> Fraction:
    """Coefficient of e^{1234} in ``a ∧ b``, expanded over all 4! orderings."""
    if a.degree != 2 or b.degree != 2 or a.n != 4 or b.n != 4:
        raise ValueError("wedge_oracle takes two 2-forms on a 4-dimensional space")
    total = Fraction(0)
    for perm in permutations(range(4)):
        # e^{pq} ∧ e^{rs} contributes when (p, q, r, s) is a permutation of (0, 1, 2, 3)
        p, q, r, s = perm
        if p < q and r < s:
            ca = a.coords[_PAIRS.index((p, q))]
            cb = b.coords[_PAIRS.index((r, s))]
            total += _parity(perm) * ca * cb
    return total


def nijenhuis_oracle(g: LieAlgebra, j: AlmostComplexStructure) -> bool:
    """Brute-force evaluation of ``lam * N`` from the full bracket tensor."""
    n = g.dim
    tensor = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for k in range(n):
            coeffs = g.c(i, k)
            for l in range(n):
                tensor[i][k][l] = coeffs[l]
    m = [[j.m[r, c] for c in range(n)] for r in range(n)]

    def br(x, y):
        return [sum(x[i] * y[k] * tensor[i][k][l] for i in range(n) for k in range(n)) for l in range(n)]

    def jm(x):
        return [sum(m[r][c] * x[c] for c in range(n)) for r in range(n)]

    for a in range(n):
        for b in range(n):
            x = [Fraction(int(t == a)) for t in range(n)]
            y = [Fraction(int(t == b)) for t in range(n)]
            jx, jy = jm(x), jm(y)
            val = [
                p - q - r - j.lam * s
                for p, q, r, s in zip(br(jx, jy), jm(br(jx, y)), jm(br(x, jy)), br(x, y))
            ]
            if any(val):
                return False
    return True


# -- sampling ------------------------------------------------------------------


@dataclass(frozen=True)
class SampleConfig:
    seed: int = 0
    count: int = 100
    entry_bound: int = 3

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def random_rational(rng: random.Random, bound: int, nonzero: bool = False) -> Fraction:
    while True:
        q = Fraction(rng.randint(-bound, bound), rng.randint(1, bound))
        if q or not nonzero:
            return q


def random_matrix(rng: random.Random, nrows: int, ncols: int, bound: int) -> Matrix:
    return Matrix([[random_rational(rng, bound) for _ in range(ncols)] for _ in range(nrows)], ncols)


def random_invertible(rng: random.Random, n: int, bound: int) -> Matrix:
    while True:
        m = random_matrix(rng, n, n, bound)
        if rank(m) == n:
            return m


def random_symmetric(rng: random.Random, n: int, bound: int) -> Matrix:
    a = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = random_rational(rng, bound)
    return Matrix(a)


def random_space(rng: random.Random, k: int, l: int, bound: int = 2) -> PseudoEuclideanSpace:
    """A random nondegenerate form of signature (k, l), ``G^T D G`` with random G."""
    d = [Fraction(rng.randint(1, bound)) for _ in range(k)] + [Fraction(-rng.randint(1, bound)) for _ in range(l)]
    rng.shuffle(d)
    g = random_invertible(rng, k + l, bound)
    return PseudoEuclideanSpace(g.T @ Matrix.diag(d) @ g)


def random_subspace(rng: random.Random, n: int, dim: int, bound: int = 2) -> Subspace:
    while True:
        vs = [tuple(random_rational(rng, bound) for _ in range(n)) for _ in range(dim)]
        if not vs or rank(Matrix.from_columns(vs)) == dim:
            return Subspace(n, vs)


def random_positive_plane(rng: random.Random, v: PseudoEuclideanSpace, dim: int,
                          bound: int = 2, tries: int = 50) -> Subspace:
    """Mix a positive orthogonal frame with a small random negative perturbation."""
    p, d = congruent_diagonalize(v.gram)
    pos = [p.column(i) for i in range(v.dim) if d[i, i] > 0]
    neg = [p.column(i) for i in range(v.dim) if d[i, i] < 0]
    for attempt in range(tries):
        scale = Fraction(1, 2 + attempt)
        vs = []
        for _ in range(dim):
            w = [Fraction(0)] * v.dim
            for b in pos:
                c = random_rational(rng, bound)
                w = [x + c * y for x, y in zip(w, b)]
            for b in neg:
                c = random_rational(rng, bound) * scale
                w = [x + c * y for x, y in zip(w, b)]
            vs.append(tuple(w))
        if rank(Matrix.from_columns(vs)) != dim:
            continue
        h = Subspace(v.dim, vs)
        if is_positive_plane(v, h, dim):
            return h
    return Subspace(v.dim, pos[:dim])


def random_isomorphic(rng: random.Random, g: LieAlgebra, bound: int = 2) -> LieAlgebra:
    """Structure constants of ``g`` in a random basis ``f_i = P e_i``."""
    n = g.dim
    p = random_invertible(rng, n, bound)
    pinv = inverse(p)
    fs = p.columns()
    consts = []
    for i in range(n):
        for j in range(i + 1, n):
            consts.append(((i, j), pinv @ g.bracket(fs[i], fs[j])))
    return LieAlgebra(n, tuple(consts), g.name + "'")


def sample_acs(cfg: SampleConfig, mu: Orientation) -> Iterator[AlmostComplexStructure]:
    """``count`` structures ``s P J0 P^-1`` (``lam = s^2``) with the orientation of ``mu``."""
    rng = cfg.rng()
    j0 = standard_j()
    emitted = 0
    while emitted < cfg.count:
        p = random_invertible(rng, 4, cfg.entry_bound)
        s = Fraction(rng.randint(1, cfg.entry_bound), rng.randint(1, cfg.entry_bound))
        j = AlmostComplexStructure(p @ j0.m @ inverse(p) * s, s * s)
        if orientation_of(j) != mu.sign:
            j = AlmostComplexStructure(p @ standard_j(-1).m @ inverse(p) * s, s * s)
        yield j
        emitted += 1


# -- cross validation ----------------------------------------------------------


@dataclass
class CrossValidationReport:
    algebra: str
    orientation: Fraction
    verdict: str
    samples: int = 0
    tamed: int = 0
    compatible: int = 0
    tamed_not_compatible: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "algebra": self.algebra,
            "orientation": str(self.orientation),
            "verdict": self.verdict,
            "samples": self.samples,
            "tamed": self.tamed,
            "compatible": self.compatible,
            "tamed_not_compatible": self.tamed_not_compatible,
            "mismatches": list(self.mismatches),
        }


def _random_combo(rng: random.Random, sub: Subspace, bound: int):
    w = [Fraction(0)] * sub.ambient_dim
    for b in sub.vectors:
        c = random_rational(rng, bound)
        w = [x + c * y for x, y in zip(w, b)]
    return tuple(w)


def _search(candidates: Iterable, j: AlmostComplexStructure, need_invariant: bool) -> bool:
    for coords in candidates:
        for s in (1, -1):
            omega = KForm(4, 2, tuple(s * x for x in coords))
            if verify_taming_direct(omega, j) and (not need_invariant or verify_invariance_direct(omega, j)):
                return True
    return False


def cross_validate(g: LieAlgebra, mu: Orientation, cfg: SampleConfig,
                   extra: Iterable[AlmostComplexStructure] = (), probes: int = 12) -> CrossValidationReport:
    """Compare signature verdicts against a direct search over closed forms.

    For each sampled J the signature-based tame/compatible verdicts are
    authoritative; a mismatch is recorded when a claimed witness fails the
    direct definition, when the direct search finds a form the verdict says
    cannot exist, or when a J contradicts the algebra-level verdict.
    """
    verdict = decide_tame_compatible(g, mu)
    rep = CrossValidationReport(g.name, mu.c, verdict.kind.value)
    rng = random.Random(cfg.seed + 1)
    z2 = closed_two_forms(g)
    stream = list(extra) + ([verdict.witness_j] if verdict.witness_j else []) + list(sample_acs(cfg, mu))
    for idx, j in enumerate(stream):
        r = tame_report(g, mu, j)
        rep.samples += 1
        rep.tamed += r.tamed
        rep.compatible += r.compatible
        rep.tamed_not_compatible += r.tamed and not r.compatible
        tag = f"sample {idx}"
        if r.tamed and not verify_taming_direct(r.taming_form, j):
            rep.mismatches.append(f"{tag}: taming witness fails the direct check")
        if r.compatible and not (verify_taming_direct(r.compatible_form, j)
                                 and verify_invariance_direct(r.compatible_form, j)):
            rep.mismatches.append(f"{tag}: compatible witness fails the direct checks")
        if not r.tamed:
            probes_t = z2.vectors + [_random_combo(rng, z2, cfg.entry_bound) for _ in range(probes)]
            if _search(probes_t, j, need_invariant=False):
                rep.mismatches.append(f"{tag}: direct search found a taming form, verdict says untamed")
        if not r.compatible:
            inv = subspace_intersect(z2, invariant_plane(j))
            probes_c = inv.vectors + [_random_combo(rng, inv, cfg.entry_bound) for _ in range(probes)]
            if inv.dim and _search(probes_c, j, need_invariant=True):
                rep.mismatches.append(f"{tag}: direct search found a compatible form, verdict says none")
        if verdict.kind is VerdictKind.HOLDS and r.tamed and not r.compatible:
            rep.mismatches.append(f"{tag}: tamed but not compatible on an algebra where the property holds")
        if verdict.kind is VerdictKind.VACUOUS and r.tamed:
            rep.mismatches.append(f"{tag}: tamed although there is no symplectic form")
        if anti_invariant_plane(-j) != anti_invariant_plane(j):
            rep.mismatches.append(f"{tag}: J and -J have different anti-invariant planes")
    return rep
