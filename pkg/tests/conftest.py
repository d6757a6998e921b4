"""
Shared fixtures and strategies for the IVIFN lattice tests
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.ivifn_core import IVIFN, make_ivifn  # noqa: E402
from src.order_engine import OrderSelector  # noqa: E402


F = Fraction


@st.composite
def ivifns(draw, max_denominator: int = 60):
    """Exact IVIFNs on a common denominator"""
    d = draw(st.integers(min_value=1, max_value=max_denominator))
    mu_hi = draw(st.integers(min_value=0, max_value=d))
    mu_lo = draw(st.integers(min_value=0, max_value=mu_hi))
    nu_hi = draw(st.integers(min_value=0, max_value=d - mu_hi))
    nu_lo = draw(st.integers(min_value=0, max_value=nu_hi))
    return IVIFN(Fraction(mu_lo, d), Fraction(mu_hi, d), Fraction(nu_lo, d), Fraction(nu_hi, d))


@pytest.fixture(params=[OrderSelector.HZX, OrderSelector.WLW], ids=["hzx", "wlw"])
def order(request):
    return request.param


@pytest.fixture
def stats_example():
    """<[1/10,3/10],[2/10,4/10]>"""
    return make_ivifn("1/10", "3/10", "2/10", "4/10")


@pytest.fixture
def degenerate_example():
    """<[2/10,2/10],[3/10,3/10]>, ties the stats example on S and H"""
    return make_ivifn("0.2", "0.2", "0.3", "0.3")


@pytest.fixture
def disagreement_pair():
    """Equal S and H, ranked oppositely by the two orders"""
    return make_ivifn("3/10", "3/10", "1/10", "5/10"), make_ivifn("3/20", "9/20", "3/10", "3/10")
