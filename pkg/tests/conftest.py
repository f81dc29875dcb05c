import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from capelli.poly import Poly, mono_from_dict, xv, yv
from capelli.weyl import WeylOp

settings.register_profile(
    "repo", deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")

SMALL_VARS = [xv(1, 1), xv(2, 1), yv(1, 1)]

coefs = st.fractions(min_value=-3, max_value=3, max_denominator=3)
exponents = st.lists(st.integers(0, 2), min_size=len(SMALL_VARS), max_size=len(SMALL_VARS))


@st.composite
def polys(draw, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        e = draw(exponents)
        terms[mono_from_dict(dict(zip(SMALL_VARS, e)))] = draw(coefs)
    return Poly(terms)


@st.composite
def weyl_ops(draw, max_terms=3):
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        p = mono_from_dict(dict(zip(SMALL_VARS, draw(exponents))))
        d = mono_from_dict(dict(zip(SMALL_VARS, draw(exponents))))
        terms[p, d] = draw(coefs)
    return WeylOp(terms)


def random_weyl_op(rng: random.Random, max_terms: int = 3) -> WeylOp:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        p = mono_from_dict({v: rng.randint(0, 2) for v in SMALL_VARS})
        d = mono_from_dict({v: rng.randint(0, 2) for v in SMALL_VARS})
        terms[p, d] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return WeylOp(terms)


def random_poly(rng: random.Random, max_terms: int = 4) -> Poly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        m = mono_from_dict({v: rng.randint(0, 3) for v in SMALL_VARS})
        terms[m] = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return Poly(terms)


@pytest.fixture
def rng():
    return random.Random(20240611)
