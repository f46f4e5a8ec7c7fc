from fractions import Fraction

import pytest

from models.errors import UnsupportedKindError
from models.matrices import Mat2
from models.padic import LocalFieldCtx
from models.suite_config import INERT_CASE, RAMIFIED_CASE
from services.characters import enumerate_mult_chars, enumerate_omegas, trivial_char, unramified_char
from services.steinberg import (
    IWAHORI_CELL,
    W_CELL,
    SteinbergModel,
    cell_representative,
    classify_double_coset,
    coset_criterion,
    integrated_values,
    tower_consistency,
    value_rules,
    verify_B_relations,
)
from suites.common import standard_extension
from suites.steinberg import _induced_proportionality


@pytest.fixture(params=[INERT_CASE, RAMIFIED_CASE])
def ext(request):
    return standard_extension(3, request.param, 16)


def test_coset_criterion(ext):
    """nbar(u) joins the w cell exactly when beta_(u, r) is a unit."""
    assert all(coset_criterion(ext, 2).values())


def test_diag_label(ext):
    """diag(varpi^2, 1) lies in the Iwahori cell at depth 2."""
    label = classify_double_coset(Mat2.diag_pi(ext.ctx, 2), ext, 5)
    assert (label.r, label.cell) == (2, IWAHORI_CELL)


@pytest.mark.parametrize("c", [1, 2])
def test_model_normalisation(ext, c):
    """B(diag(varpi^c(Omega), 1) w) = 1 and the tower rules hold."""
    omega = enumerate_omegas(ext, c)[0]
    model = SteinbergModel(ext, omega, trivial_char(3), depth=6)
    assert abs(model(cell_representative(ext, c, W_CELL)) - 1) < 1e-9
    assert all(value_rules(model, 3).values())
    assert tower_consistency(model, 3) < 1e-9


@pytest.mark.parametrize("c", [1, 2])
def test_hecke_relations(ext, c):
    """Trace over nbar(u) and the Atkin-Lehner eigenvalue."""
    omega = enumerate_omegas(ext, c)[0]
    report = verify_B_relations(ext, omega, unramified_char(3, Fraction(1, 2)), 2)
    assert report.max_residual < 1e-9
    assert not report.vanishes


def test_norm_character_vanishes():
    """Over an inert L, Omega = chi o N leaves no Waldspurger model."""
    ext = standard_extension(3, INERT_CASE, 12)
    model = SteinbergModel(ext, enumerate_omegas(ext, 0)[0], trivial_char(3))
    assert model.vanishes
    assert model(Mat2.weyl(ext.ctx)) == 0


def test_ramified_twist_unsupported():
    """The table covers unramified twists only."""
    ext = standard_extension(3, INERT_CASE, 12)
    chi = enumerate_mult_chars(LocalFieldCtx(3, 12), 1)[0]
    with pytest.raises(UnsupportedKindError):
        SteinbergModel(ext, enumerate_omegas(ext, 2)[0], chi)


def test_induced_model_proportional(ext):
    """A(f) of the induced Steinberg newform is a multiple of B."""
    omega = enumerate_omegas(ext, 1)[0]
    assert _induced_proportionality(ext, omega, trivial_char(3)) < 1e-9


@pytest.mark.parametrize("c", [1, 2])
def test_integrated_values_match_table(ext, c):
    """B integrated from the induced Steinberg vector reproduces the tabulated tower."""
    omega = enumerate_omegas(ext, c)[0]
    model = SteinbergModel(ext, omega, unramified_char(3, Fraction(1, 2)), depth=6)
    got = integrated_values(model, c + 1)
    assert abs(got[(c + 1, W_CELL)] - model.alpha / 3) < 1e-9
    assert abs(got[(c + 1, IWAHORI_CELL)] + model.alpha) < 1e-9
    assert abs(got[(1, IWAHORI_CELL)] - model(cell_representative(ext, 1, IWAHORI_CELL))) < 1e-9
    rules = value_rules(model, 3)
    assert rules["table"]
    assert all(rules.values())


def test_integrated_values_vanish_for_norm_character():
    """Omega = chi o N: the toric integral of the Steinberg vector is zero everywhere."""
    ext = standard_extension(3, INERT_CASE, 12)
    model = SteinbergModel(ext, enumerate_omegas(ext, 0)[0], trivial_char(3))
    assert value_rules(model, 2) == {"vanishes": True}
