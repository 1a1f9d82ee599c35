import pytest

from endlam.seqgen import TwistSchedule, make_schedule, build_sequence


def mkseq(p, e0, a, depth, E0=304):
    m = (p - 1) // 2
    return build_sequence(p, make_schedule(e0, a, depth + m - 1, E0=E0),
                          depth)


def mkseq_const(p, e, depth):
    m = (p - 1) // 2
    return build_sequence(p, TwistSchedule([e] * (depth + m), 1), depth)


@pytest.fixture(scope="session")
def seq5():
    return mkseq(5, 16, 2, 10)


@pytest.fixture(scope="session")
def seq7():
    return mkseq(7, 16, 2, 9)


@pytest.fixture(scope="session")
def small5():
    return mkseq_const(5, 2, 6)


@pytest.fixture(scope="session")
def small7():
    return mkseq_const(7, 2, 8)
