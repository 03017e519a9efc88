import pytest

import laws
from tamecompat.exactla import Subspace
from tamecompat.forms import KForm, KVector, pairing
from tamecompat.lie import (
    ABELIAN,
    D42,
    HEIS3_R,
    R2R2,
    InvalidAlgebraError,
    LieAlgebra,
    apply_d,
    boundary_two_vectors,
    catalog,
    center,
    closed_two_forms,
    d_forms,
    d_vectors,
    derived,
    is_b2_isotropic,
    is_unimodular,
    lookup,
    validate,
)
from tamecompat.pseudoeuclid import q_numbers
from tamecompat.wedge4 import form_space

BROKEN = LieAlgebra.from_brackets(3, {(1, 2): {3: 1}, (1, 3): {1: 1}}, "broken")


def forms(*terms):
    return Subspace(6, [KForm.from_terms(4, t).coords for t in terms])


def vectors(*terms):
    return Subspace(6, [KVector.from_terms(4, t).coords for t in terms])


def test_extra_algebras_are_valid():
    for g in laws.FOUR_DIM + laws.OTHER_DIM:
        assert validate(g).ok, g.name


def test_validate_examples():
    assert validate(ABELIAN).ok
    assert validate(R2R2).ok
    rep = validate(BROKEN)
    assert not rep.ok
    assert {(v.i, v.j, v.k) for v in rep.violations} == {(1, 2, 3)}
    assert [v.l for v in rep.violations] == [3]


def test_invalid_algebra_is_rejected_downstream():
    with pytest.raises(InvalidAlgebraError):
        center(BROKEN)
    with pytest.raises(InvalidAlgebraError):
        is_unimodular(BROKEN)


def test_from_brackets_antisymmetry():
    g = LieAlgebra.from_brackets(2, {(2, 1): {2: 1}})
    assert g.bracket((1, 0), (0, 1)) == (0, -1)
    with pytest.raises(ValueError):
        LieAlgebra.from_brackets(2, {(1, 1): {1: 1}})


def test_center_derived_unimodular():
    assert center(ABELIAN) == Subspace.full(4)
    assert derived(ABELIAN).dim == 0
    assert is_unimodular(ABELIAN)
    assert center(R2R2).dim == 0
    assert derived(R2R2) == Subspace(4, [(0, 1, 0, 0), (0, 0, 0, 1)])
    assert not is_unimodular(R2R2)
    assert R2R2.ad(0).trace() == 1
    assert center(HEIS3_R) == Subspace(4, [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert derived(HEIS3_R) == Subspace(4, [(0, 0, 1, 0)])
    assert is_unimodular(HEIS3_R)
    assert not is_unimodular(D42)


def test_d_forms_examples():
    assert d_forms(ABELIAN, 1).is_zero() and d_forms(ABELIAN, 2).is_zero()
    d1 = d_forms(R2R2, 1)
    got = [KForm(4, 2, d1.column(m)) for m in range(4)]
    assert got == [KForm(4, 2, [0] * 6), KForm.from_terms(4, {"12": -1}),
                   KForm(4, 2, [0] * 6), KForm.from_terms(4, {"34": -1})]
    d2 = d_forms(HEIS3_R, 2)
    for t in ["12", "13", "14", "23", "24"]:
        assert not any(apply_d(HEIS3_R, KForm.from_terms(4, {t: 1})).coords)
    assert apply_d(HEIS3_R, KForm.from_terms(4, {"34": 1})) == KForm.from_terms(4, {"124": -1})
    assert d2.nrows == 4 and d2.ncols == 6


def test_d_range_errors():
    with pytest.raises(ValueError):
        d_forms(R2R2, 0)
    with pytest.raises(ValueError):
        d_forms(R2R2, 4)
    with pytest.raises(ValueError):
        d_vectors(R2R2, 1)
    with pytest.raises(ValueError):
        d_vectors(R2R2, 5)


def test_pairing_examples():
    assert pairing(KVector.from_terms(4, {"12": 1}), KForm.from_terms(4, {"12": 1})) == 1
    assert pairing(KVector.from_terms(4, {"12": 1}), KForm.from_terms(4, {"34": 1})) == 0
    assert pairing(KVector.from_terms(4, {"14": 1, "23": 1}), KForm.from_terms(4, {"14": 1, "23": -1})) == 0
    with pytest.raises(ValueError):
        pairing(KVector.from_terms(4, {"12": 1}), KForm.from_terms(4, {"1": 1}))


def test_d_vectors_examples():
    assert d_vectors(ABELIAN, 2).is_zero()
    image = Subspace.span(d_vectors(R2R2, 3).columns(), 6)
    assert image == vectors({"14": 1}, {"23": 1}, {"24": 1})


def test_z2_b2():
    assert closed_two_forms(R2R2) == forms({"12": 1}, {"13": 1}, {"34": 1})
    assert boundary_two_vectors(R2R2) == vectors({"14": 1}, {"23": 1}, {"24": 1})
    assert closed_two_forms(D42) == forms({"12": 1, "34": -1}, {"14": 1}, {"23": 1}, {"24": 1})
    assert boundary_two_vectors(D42) == vectors({"12": 1, "34": 1}, {"13": 1})
    assert closed_two_forms(ABELIAN) == Subspace.full(6)
    assert boundary_two_vectors(ABELIAN).dim == 0


def test_z2_b2_need_dimension_four():
    with pytest.raises(ValueError):
        closed_two_forms(laws.HEIS3)
    with pytest.raises(ValueError):
        is_b2_isotropic(laws.FIVE)


def test_b2_isotropy():
    assert is_b2_isotropic(HEIS3_R)
    assert boundary_two_vectors(HEIS3_R) == vectors({"34": 1})
    assert not is_b2_isotropic(R2R2)
    assert is_b2_isotropic(ABELIAN)


def test_catalog():
    names = [g.name for g in catalog()]
    assert names == ["abelian", "r2r2", "d4,2", "heis3+R"]
    for g in catalog():
        assert validate(g).ok
        assert lookup(g.name) is g
    with pytest.raises(KeyError):
        lookup("nope")
    e = [tuple(int(i == j) for j in range(4)) for i in range(4)]
    assert D42.bracket(e[0], e[1]) == e[2]
    assert D42.bracket(e[3], e[2]) == e[2]
    assert D42.bracket(e[3], e[0]) == (2, 0, 0, 0)
    assert D42.bracket(e[3], e[1]) == (0, -1, 0, 0)


def test_unimodular_entries_are_isotropic():
    for g in catalog() + laws.FOUR_DIM:
        if is_unimodular(g):
            assert is_b2_isotropic(g), g.name


def test_only_abelian_has_full_positive_closed_forms():
    for g in laws.FOUR_DIM:
        full = q_numbers(form_space(), closed_two_forms(g)).q_plus == 3
        assert full == g.is_abelian(), g.name


@pytest.mark.parametrize("name", ["d∘d = 0 and adjunction", "B2 double computation"])
def test_laws_small(name):
    tags = laws.run_law(laws.ALL_LAWS[name], seed=3, count=40)
    assert sum(tags.values()) == 40
