import pytest
from fractions import Fraction

from endlam.ergodics import (DepthError, qualifying, intersection_ratio_table,
                             growth_ratio_check, convergence_report,
                             cross_ratio_distinctness, singularity_ratios)
from conftest import mkseq


def test_qualifying_predicate():
    m = 2
    assert qualifying(0, 4, m)
    assert qualifying(2, 6, m)
    assert not qualifying(0, 3, m)
    assert qualifying(1, 6, m)          # i <= 2m-1 and gap >= m^2+m-1
    assert not qualifying(4, 9, m)      # gap 5 not multiple of m, i too big
    m = 3
    assert qualifying(0, 6, m)
    assert not qualifying(0, 5, m)
    assert qualifying(5, 16, m)


def test_kappa0_frozen_value(seq5):
    table = intersection_ratio_table(seq5)
    assert table.kappa0 == Fraction(15732703, 4194304)
    assert table.kappa0 < 4


def test_qualifying_ratios_within_band(seq5):
    table = intersection_ratio_table(seq5)
    for pair, is_q in table.pairs.items():
        if is_q:
            r = table.ratios[pair]
            assert Fraction(1, 1) / table.kappa0 <= r <= table.kappa0


def test_growth_ratio_exact(seq5, seq7):
    for seq in (seq5, seq7):
        rows = growth_ratio_check(seq)
        assert rows
        assert all(ok for _, ok in rows)


def test_convergence_shallow_raises():
    seq = mkseq(5, 16, 2, 2)
    with pytest.raises(DepthError):
        convergence_report(seq)


def test_convergence(seq5):
    rep = convergence_report(seq5)
    assert set(rep.residuals) == {0, 1}
    for h in rep.residuals:
        assert rep.ok[h]
        assert rep.residuals[h][-1] < rep.residuals[h][0]


def test_cross_ratio_distinctness(seq5):
    out = cross_ratio_distinctness(seq5)
    assert out[(0, 1)] > 100


def test_singularity(seq5):
    rep = singularity_ratios(seq5, proxy_depth=4, steps=2)
    assert rep.ok_band
    assert rep.ok_monotone
    for h, vals in rep.same.items():
        assert len(vals) == 2
    with pytest.raises(DepthError):
        singularity_ratios(seq5, proxy_depth=40)
