import random

import pytest

from tamecompat import oracle
from tamecompat.acs4 import (
    EXPLICIT_J,
    AlmostComplexStructure,
    VerdictKind,
    orientation_of,
    standard_j,
    tame_report,
)
from tamecompat.exactla import Matrix
from tamecompat.forms import KForm
from tamecompat.lie import ABELIAN, D42, R2R2
from tamecompat.oracle import (
    SampleConfig,
    cross_validate,
    random_rational,
    sample_acs,
    wedge_oracle,
)
from tamecompat.wedge4 import MU0, phi_forms


def f(terms):
    return KForm.from_terms(4, terms)


def test_wedge_oracle_examples():
    assert wedge_oracle(f({"12": 1}), f({"34": 1})) == 1
    assert wedge_oracle(f({"13": 1}), f({"24": 1})) == -1
    assert wedge_oracle(f({"14": 1, "23": 1}), f({"14": 1, "23": 1})) == 2
    with pytest.raises(ValueError):
        wedge_oracle(f({"1": 1}), f({"2": 1}))


def test_wedge_oracle_matches_pairing():
    basis = [KForm(4, 2, [int(i == k) for i in range(6)]) for k in range(6)]
    for a in basis:
        for b in basis:
            assert wedge_oracle(a, b) == phi_forms(a, b)
    rng = random.Random(9)
    for _ in range(50):
        a, b = (KForm(4, 2, [random_rational(rng, 4) for _ in range(6)]) for _ in range(2))
        assert wedge_oracle(a, b) == phi_forms(a, b)


def test_sample_acs():
    cfg = SampleConfig(seed=12, count=25)
    for mu in (MU0, -MU0):
        js = list(sample_acs(cfg, mu))
        assert len(js) == 25
        for j in js:
            assert j.m @ j.m == Matrix.identity(4) * -j.lam
            assert orientation_of(j) == mu.sign
    assert [j.m for j in sample_acs(cfg, MU0)] == [j.m for j in sample_acs(cfg, MU0)]


def test_identity_conjugation_gives_j0():
    j0 = standard_j()
    p = Matrix.identity(4)
    assert AlmostComplexStructure(p @ j0.m @ p, 1) == j0


def test_cross_validate_abelian():
    rep = cross_validate(ABELIAN, MU0, SampleConfig(count=30))
    assert rep.ok and rep.samples == 30
    assert rep.tamed == rep.compatible == 30


def test_cross_validate_r2r2_with_explicit_j():
    rep = cross_validate(R2R2, MU0, SampleConfig(count=20), extra=[EXPLICIT_J])
    assert rep.ok
    assert rep.tamed_not_compatible >= 1
    r = tame_report(R2R2, MU0, EXPLICIT_J)
    assert r.tamed and not r.compatible


def test_cross_validate_d42_negative():
    rep = cross_validate(D42, -MU0, SampleConfig(count=30))
    assert rep.ok and rep.tamed_not_compatible == 0
    assert rep.to_dict()["verdict"] == "Holds"


def test_cross_validate_flags_a_wrong_verdict(monkeypatch):
    real = oracle.decide_tame_compatible

    def lying(g, mu, witness=True):
        v = real(g, mu, witness)
        v.kind = VerdictKind.HOLDS
        return v

    monkeypatch.setattr(oracle, "decide_tame_compatible", lying)
    rep = cross_validate(R2R2, MU0, SampleConfig(count=5))
    assert not rep.ok
    assert any("property holds" in m for m in rep.mismatches)
