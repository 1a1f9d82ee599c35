import pytest

from endlam.surface import SurfaceError, build_surface, base_curve
from endlam.intersect import (ScaleError, intersection_number,
                              intersection_number_with_method,
                              oracle_intersection, is_filling,
                              complete_to_pants)


def test_consecutive_m_gap_is_two(seq5, seq7):
    for seq in (seq5, seq7):
        m = seq.model.m
        for k in range(seq.depth - m + 1):
            assert intersection_number(seq.gamma[k], seq.gamma[k + m]) == 2


def test_gamma0_gamma4_is_four_e2(seq5):
    got = intersection_number(seq5.gamma[0], seq5.gamma[4])
    assert got == 4 * seq5.schedule.e[2] == 256


def test_symmetry(seq5):
    for i in range(0, 8, 2):
        for j in range(i + 1, 9, 3):
            assert (intersection_number(seq5.gamma[i], seq5.gamma[j])
                    == intersection_number(seq5.gamma[j], seq5.gamma[i]))


def test_self_intersection_zero(seq5):
    for c in seq5.gamma[:5]:
        assert intersection_number(c, c) == 0


def test_dual_routes_agree(small5, small7):
    for seq in (small5, small7):
        for i in range(seq.depth + 1):
            for j in range(i + 1, seq.depth + 1):
                fast = intersection_number(seq.gamma[i], seq.gamma[j])
                slow = oracle_intersection(seq.gamma[i], seq.gamma[j])
                assert fast == slow


def test_method_labels(seq5):
    n, method = intersection_number_with_method(seq5.gamma[0], seq5.gamma[2])
    assert method == "transport"
    assert n == 2


def test_different_surfaces_rejected(seq5, seq7):
    with pytest.raises(SurfaceError):
        intersection_number(seq5.gamma[0], seq7.gamma[0])


def test_base_family_census_p5():
    model = build_surface(5)
    bases = [base_curve(model, j) for j in range(4)]
    cert = is_filling(bases)
    assert cert.verdict
    assert cert.crossings == 6
    assert sorted(cert.regions) == (
        [("disk", 1, 0)] * 3 + [("once-punctured disk", 1, 1)] * 5)
    assert cert.check_euler(5)


def test_nonfilling_family_detected():
    model = build_surface(7)
    cert = is_filling([base_curve(model, 0), base_curve(model, 1)])
    assert not cert.verdict
    assert any(kind == "other" for kind, _, _ in cert.regions)


def test_oracle_cap_refuses(seq5):
    with pytest.raises(ScaleError):
        oracle_intersection(seq5.gamma[8], seq5.gamma[9], cap=10)


def test_complete_to_pants_p5():
    model = build_surface(5)
    sigma = [base_curve(model, 0), base_curve(model, 1)]
    pd = complete_to_pants(sigma)
    assert len(pd.curves) == model.p - 3 == 2
    assert pd.completion == []


def test_complete_to_pants_p7(seq7):
    m = seq7.model.m
    sigma = list(seq7.gamma[4:4 + m])
    pd = complete_to_pants(sigma, 4)
    assert len(pd.curves) == seq7.model.p - 3
    curves = pd.curves
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            assert intersection_number(curves[i], curves[j]) == 0


def test_complete_to_pants_rejects_crossing(seq5):
    with pytest.raises(SurfaceError):
        complete_to_pants([seq5.gamma[0], seq5.gamma[2]])
