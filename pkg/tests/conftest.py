from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from cosetalg.core import GroupElem
from cosetalg.instances import make_instance

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("default")

NAMES = ("rational", "numberfield", "lamplighter")


@pytest.fixture(scope="session")
def rat():
    return make_instance("rational")


@pytest.fixture(scope="session")
def nf():
    return make_instance("numberfield")


@pytest.fixture(scope="session")
def lamp():
    return make_instance("lamplighter")


@pytest.fixture(scope="session")
def systems(rat, nf, lamp):
    return {"rational": rat, "numberfield": nf, "lamplighter": lamp}


@pytest.fixture(params=NAMES, scope="session")
def sysx(request, systems):
    return systems[request.param]


def F(x):
    return Fraction(x)


# ---- strategies keyed on a system ----------------------------------------------

def n_elems(sys):
    return st.sampled_from(list(sys.config.n))


def m_elems(sys):
    return st.sampled_from(list(sys.config.m))


def h_elems(sys):
    return st.sampled_from(list(sys.config.h) + list(sys.config.hplus))


def hplus_elems(sys):
    return st.sampled_from(list(sys.config.hplus))


def g_elems(sys):
    return st.builds(GroupElem, n_elems(sys), h_elems(sys))


def cosets(sys):
    return st.builds(lambda x, h: sys.coset(x, sys.subgroup(h)), n_elems(sys), h_elems(sys))


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda q: q != 0)


# ---- acceptance summary ----------------------------------------------------------

ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
