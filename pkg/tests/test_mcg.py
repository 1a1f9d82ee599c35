import pytest
from hypothesis import given, settings, strategies as st

from endlam.surface import build_surface, base_curve
from endlam.mcg import MCWord, WordError, apply_word, dehn_twist
from endlam.intersect import intersection_number

MODEL5 = build_surface(5)
MODEL7 = build_surface(7)


def _letters(model):
    gens = [base_curve(model, j) for j in range(2 * model.m)]
    return st.lists(
        st.tuples(st.sampled_from(["rho"] + list(range(len(gens)))),
                  st.integers(min_value=-3, max_value=3)),
        min_size=0, max_size=6).map(
        lambda raw: MCWord([(g if g == "rho" else gens[g], e)
                            for g, e in raw]))


@settings(max_examples=40, deadline=None)
@given(_letters(MODEL5))
def test_word_inverse_is_identity_p5(w):
    c = base_curve(MODEL5, 0)
    assert apply_word(w.inverse(), apply_word(w, c)).diagram == c.diagram


@settings(max_examples=25, deadline=None)
@given(_letters(MODEL7))
def test_word_inverse_is_identity_p7(w):
    c = base_curve(MODEL7, 1)
    assert apply_word(w.inverse(), apply_word(w, c)).diagram == c.diagram


@settings(max_examples=30, deadline=None)
@given(_letters(MODEL5), st.integers(min_value=0, max_value=4))
def test_intersection_invariant_under_words(w, j):
    a = base_curve(MODEL5, j % (2 * MODEL5.m))
    b = base_curve(MODEL5, (j + 1) % (2 * MODEL5.m))
    before = intersection_number(a, b)
    after = intersection_number(apply_word(w, a), apply_word(w, b))
    assert before == after


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=-5, max_value=5),
       st.integers(min_value=-5, max_value=5))
def test_twist_powers_compose(a, b):
    axis = base_curve(MODEL5, 1)
    c = base_curve(MODEL5, 0)
    one = dehn_twist(dehn_twist(c, axis, a), axis, b)
    two = dehn_twist(c, axis, a + b)
    assert one.diagram == two.diagram


def test_conjugation_identity(seq5):
    # twisting about a moved axis equals moving, twisting, moving back
    w = seq5.words[3]
    axis = base_curve(seq5.model, seq5.model.m)
    moved_axis = apply_word(w, axis)
    c = seq5.gamma[1]
    direct = dehn_twist(c, moved_axis, 2)
    conj = apply_word(w, dehn_twist(apply_word(w.inverse(), c), axis, 2))
    assert direct.diagram == conj.diagram


def test_letters_merge_and_cancel():
    axis = base_curve(MODEL5, 0)
    w = MCWord([(axis, 2), (axis, -2), ("rho", 1), ("rho", 3)])
    assert w.letters == (("rho", 4),)
    assert MCWord([(axis, 1), (axis, -1)]).is_identity()


def test_wordless_nonround_axis_rejected():
    from endlam.surface import Curve
    c = dehn_twist(base_curve(MODEL5, 0), base_curve(MODEL5, 2), 3)
    assert c.round_block() is None
    bare_axis = Curve(MODEL5, c.diagram, None)
    with pytest.raises(WordError):
        dehn_twist(base_curve(MODEL5, 1), bare_axis, 1)


def test_zero_power_twist_is_identity():
    c = base_curve(MODEL5, 0)
    assert dehn_twist(c, base_curve(MODEL5, 1), 0) is c
