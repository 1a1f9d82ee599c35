import pytest
from fractions import Fraction

from endlam.seqgen import (ScheduleError, TwistSchedule, make_schedule,
                           build_sequence, verify_condition_P, twist_product)
from endlam.intersect import intersection_number


def test_make_schedule_growth():
    sch = make_schedule(16, 2, 5)
    assert sch.e == [16, 32, 64, 128, 256, 512]
    assert sch.a == 2


def test_make_schedule_fractional_ratio():
    sch = make_schedule(10, Fraction(3, 2), 4)
    assert sch.e == [10, 15, 23, 35, 53]
    for k in range(len(sch.e) - 1):
        assert sch.e[k + 1] >= Fraction(3, 2) * sch.e[k]


def test_schedule_errors():
    with pytest.raises(ScheduleError):
        make_schedule(0, 2, 3)
    with pytest.raises(ScheduleError):
        make_schedule(4, Fraction(1, 2), 3)
    with pytest.raises(ScheduleError):
        make_schedule(4, 1, 3, strict=True)
    with pytest.raises(ScheduleError):
        TwistSchedule([4, 2], 1)


def test_gate_flag():
    assert make_schedule(304, 2, 3).gate_passed
    assert not make_schedule(16, 2, 3).gate_passed


def test_build_needs_long_enough_schedule():
    with pytest.raises(ScheduleError):
        build_sequence(5, make_schedule(16, 2, 3), 10)


def test_early_curves_are_rotated_reference(seq5, seq7):
    from endlam.surface import base_curve
    for seq in (seq5, seq7):
        for j in range(2 * seq.model.m):
            assert seq.gamma[j].diagram == base_curve(seq.model, j).diagram


def test_condition_P_passes(seq5, seq7):
    for seq in (seq5, seq7):
        rows = verify_condition_P(seq)
        assert rows
        assert all(r.ok for r in rows), [r for r in rows if not r.ok]


def test_condition_P_detects_damage(seq5):
    import copy
    broken = copy.copy(seq5)
    broken.gamma = list(seq5.gamma)
    broken.gamma[5], broken.gamma[7] = broken.gamma[7], broken.gamma[5]
    rows = verify_condition_P(broken)
    assert any(not r.ok for r in rows)


def test_aux_curve_pattern(seq5):
    m = seq5.model.m
    for j, aux in seq5.gamma_aux.items():
        k = j - m
        assert intersection_number(aux, seq5.gamma[k]) == seq5.b
        if k >= 1:
            assert intersection_number(aux, seq5.gamma[k - 1]) == seq5.b
        for i in range(k + 1, min(k + m, seq5.depth + 1)):
            assert intersection_number(aux, seq5.gamma[i]) == 0


def test_twist_product_values(seq5):
    e = seq5.schedule.e
    m = seq5.model.m
    assert twist_product(seq5, 0, m) == 1
    assert twist_product(seq5, 0, 2 * m) == 2 * e[m]
    assert twist_product(seq5, 0, 3 * m) == (2 * e[m]) * (2 * e[2 * m])
    with pytest.raises(ScheduleError):
        twist_product(seq5, 3, 3)
