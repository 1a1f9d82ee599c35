import pytest

from endlam.surface import SurfaceError
from endlam.lengthmodel import (LengthModelParams, synthesize_schedule,
                                model_length, limit_trace)
from endlam.ergodics import default_family
from conftest import mkseq


@pytest.fixture(scope="module")
def seq7d():
    return mkseq(7, 304, 2, 12)


def test_params_validation():
    with pytest.raises(ValueError):
        LengthModelParams(L0=0)
    with pytest.raises(ValueError):
        LengthModelParams(regime="C3")


def test_c1_regime_has_zero_y(seq7d):
    states = synthesize_schedule(seq7d, LengthModelParams(regime="C1"),
                                 k_range=range(3, 6))
    assert states
    for st in states:
        assert st.u == 0.0
        assert st.yk == 0.0
        assert st.tag == "C1"
        assert st.xk > 0


def test_sweep_monotone_ratio(seq7d):
    params = LengthModelParams(samples=8)
    states = synthesize_schedule(seq7d, params, k_range=range(4, 5))
    ratios = [st.yk / st.xk for st in states]
    assert ratios == sorted(ratios)
    assert ratios[0] == 0.0
    for st in states:
        assert st.xk + st.yk > 0


def test_model_length_error_term(seq7d):
    state = synthesize_schedule(seq7d, LengthModelParams(regime="C1"),
                                k_range=range(4, 5))[0]
    from endlam.intersect import intersection_number
    delta = seq7d.gamma[0]
    got = model_length(state, delta)
    expect_err = sum(intersection_number(delta, beta)
                     for beta in state.pants
                     if intersection_number(delta, beta))
    assert got.error_term == expect_err
    assert got.value > 0


def test_projectivization_scale_invariant():
    from endlam.lengthmodel import _normalize
    vec = [3.0, 1.5, 0.75]
    assert _normalize(vec) == _normalize([7 * v for v in vec])
    with pytest.raises(SurfaceError):
        _normalize([0.0, 0.0])


def test_nonfilling_family_rejected(seq7d):
    with pytest.raises(SurfaceError):
        limit_trace(seq7d, family=[seq7d.gamma[0], seq7d.gamma[1]])


def test_trace_points_carry_residual(seq7d):
    pts = limit_trace(seq7d, default_family(seq7d),
                      LengthModelParams(samples=4), k_range=range(4, 6))
    assert len(pts) == 2 * 4
    for pt in pts:
        assert 0 <= pt.residual <= 2
        assert max(abs(v) for v in pt.projective) == 1.0
        assert pt.tag in ("C1", "C2")
