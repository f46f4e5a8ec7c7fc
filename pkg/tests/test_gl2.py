import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from models.matrices import Mat2, is_upper_triangular
from models.suite_config import INERT_CASE, RAMIFIED_CASE, RAMIFIED_VA1_CASE
from services.gl2 import (
    K1,
    borel_decompose,
    conjugate_membership,
    iwasawa,
    subgroup_member,
    toric_coset_identity,
    torus_element,
)
from suites.common import standard_extension

EXTS = {case: standard_extension(3, case, 14) for case in (INERT_CASE, RAMIFIED_CASE, RAMIFIED_VA1_CASE)}
CTX = EXTS[INERT_CASE].ctx

units = st.integers(min_value=1, max_value=3 ** 4).filter(lambda n: n % 3 != 0)
shifts = st.integers(min_value=-1, max_value=2)


@settings(max_examples=120)
@given(st.sampled_from(sorted(EXTS)), units, shifts, units, shifts, st.integers(min_value=-2, max_value=2))
def test_borel_reconstruction(case, x, vx, y, vy, s):
    """t diag(varpi^s, 1) = b k with b upper triangular and k in GL2(o)."""
    ext = EXTS[case]
    ctx = ext.ctx
    t = torus_element(ext, ctx.element(x) * ctx.uniformizer(vx), ctx.element(y) * ctx.uniformizer(vy))
    b, k, label = borel_decompose(t, s)
    assert label in ("i", "ii", "iii", "iv")
    assert is_upper_triangular(b)
    assert k.in_GL2o()
    assert b * k == t.matrix() * Mat2.diag_pi(ctx, s)


@settings(max_examples=120)
@given(st.lists(st.tuples(units, st.integers(min_value=-2, max_value=2)), min_size=4, max_size=4))
def test_iwasawa_reconstruction(entries):
    """g = b k with b upper triangular and k in GL2(o)."""
    g = Mat2(CTX, *(CTX.element(u) * CTX.uniformizer(v) for u, v in entries))
    if g.det.is_zero():
        return
    b, k = iwasawa(g)
    assert is_upper_triangular(b)
    assert k.in_GL2o()
    assert b * k == g


@pytest.mark.parametrize("case", [INERT_CASE, RAMIFIED_CASE, RAMIFIED_VA1_CASE])
@pytest.mark.parametrize("m,n", [(0, 0), (1, 1), (2, 2), (3, 1)])
def test_toric_coset_identity(case, m, n):
    """diag(varpi^-m, 1) lies in T diag(varpi^(m - v(a)), 1) w K1(p^n)."""
    ok, diagnostics = toric_coset_identity(EXTS[case], m, n)
    assert ok, diagnostics


def test_k1_membership():
    """K1(p^2) asks for c in p^2 and d in 1 + p^2."""
    assert subgroup_member(Mat2(CTX, 2, 5, 9, 10), K1, 2)
    assert not subgroup_member(Mat2(CTX, 2, 5, 3, 10), K1, 2)
    assert not subgroup_member(Mat2(CTX, 2, 5, 9, 4), K1, 2)


@pytest.mark.parametrize("s", [0, 1, 2])
def test_conjugate_membership(s):
    """Membership of K1^(s)(p^2) tested by conjugation matches its entrywise shape."""
    for g in (Mat2(CTX, 2, 9, 9, 10), Mat2(CTX, 1, 3, 3, 1), Mat2(CTX, 3, 1, 1, 1)):
        assert conjugate_membership(g, 2, s)
