from fractions import Fraction

import pytest
from hypothesis import given

from capelli.poly import Poly, x, xv, yv
from capelli.weyl import (
    WeylOp,
    agree_on_monomials,
    weyl_apply,
    weyl_commutator,
    weyl_equal,
    weyl_from_poly,
    weyl_mul,
)
from conftest import polys, weyl_ops

X11 = WeylOp.mult(xv(1, 1))
D11 = WeylOp.deriv(xv(1, 1))
X21 = WeylOp.mult(xv(2, 1))
D21 = WeylOp.deriv(xv(2, 1))


def test_from_poly():
    assert str(weyl_from_poly(x(1, 1))) == "x[1,1]"
    assert weyl_from_poly(Poly()).is_zero()
    assert str(weyl_from_poly(x(1, 1) * Poly.variable(yv(1, 1)))) == "x[1,1]*y[1,1]"


def test_canonical_commutation():
    assert weyl_equal(weyl_mul(D11, X11), X11 * D11 + 1)


def test_euler_square():
    e = X11 * D11
    assert weyl_equal(weyl_mul(e, e), X11 * X11 * D11 * D11 + e)


def test_d2_x2():
    lhs = weyl_mul(D11 * D11, X11 * X11)
    rhs = X11 * X11 * D11 * D11 + 4 * X11 * D11 + 2
    assert weyl_equal(lhs, rhs)
    assert str(lhs) == "x[1,1]^2*d[x,1,1]^2 + 4*x[1,1]*d[x,1,1] + 2"


def test_products_match_action_oracle():
    for a, b in [(D11, X11), (X11 * D11, X11 * D11), (D11 * D11, X11 * X11)]:
        prod = weyl_mul(a, b)
        for m in range(4):
            f = x(1, 1) ** m
            assert weyl_apply(prod, f) == weyl_apply(a, weyl_apply(b, f))


def test_apply_examples():
    assert weyl_apply(D11, x(1, 1) ** 2) == 2 * x(1, 1)
    euler = X11 * D11 + 1
    for m in range(5):
        assert weyl_apply(euler, x(1, 1) ** m) == (m + 1) * x(1, 1) ** m
    delta = WeylOp.deriv(xv(1, 1)) * WeylOp.deriv(yv(1, 1))
    assert weyl_apply(delta, x(1, 1) * Poly.variable(yv(1, 1))) == 1


def test_commutator_examples():
    assert weyl_equal(weyl_commutator(D11, X11), WeylOp.const(1))
    assert weyl_commutator(X11, WeylOp.mult(yv(1, 1))).is_zero()
    lhs = weyl_commutator(X11 * D21, X21 * D11)
    assert weyl_equal(lhs, X11 * D11 - X21 * D21)


def test_equality_examples():
    assert weyl_equal(D11 * X11, X11 * D11 + 1)
    assert not weyl_equal(X11 * D11, D11 * X11)
    assert weyl_equal(WeylOp.zero(), X11 * D11 - X11 * D11)


def test_rendering():
    op = Fraction(-3, 2) * X11 * X11 * D11 * D11
    assert str(op) == "-3/2*x[1,1]^2*d[x,1,1]^2"
    assert str(X11.times_i()) == "I*(x[1,1])"


def test_imaginary_unit_folding():
    g = (X11 * X11).times_i()
    f = (D11 * D11).times_i()
    assert g.ipow == 1 and f.ipow == 1
    prod = g * f
    assert prod.ipow == 0
    assert str(prod) == "-x[1,1]^2*d[x,1,1]^2"
    with pytest.raises(ValueError):
        g + X11
    with pytest.raises(ValueError):
        weyl_apply(g, x(1, 1))


def test_order_and_top_part():
    op = X11 * D11 * D11 + D11 + 3
    assert op.order() == 2
    assert str(op.top_order_part()) == "x[1,1]*d[x,1,1]^2"
    assert WeylOp.zero().order() == -1


@given(weyl_ops(), weyl_ops(), weyl_ops())
def test_associativity(a, b, c):
    assert weyl_equal(weyl_mul(weyl_mul(a, b), c), weyl_mul(a, weyl_mul(b, c)))


@given(weyl_ops(), weyl_ops(), polys())
def test_action_compatibility(a, b, f):
    assert weyl_apply(weyl_mul(a, b), f) == weyl_apply(a, weyl_apply(b, f))


@given(weyl_ops(max_terms=2), weyl_ops(max_terms=2), weyl_ops(max_terms=2))
def test_jacobi(a, b, c):
    total = (
        weyl_commutator(a, weyl_commutator(b, c))
        + weyl_commutator(b, weyl_commutator(c, a))
        + weyl_commutator(c, weyl_commutator(a, b))
    )
    assert total.is_zero()


@given(weyl_ops(), weyl_ops())
def test_faithful_at_bounded_degree(a, b):
    bound = max(a.order(), b.order(), 0)
    assert weyl_equal(a, b) == agree_on_monomials(a, b, bound)


@given(weyl_ops(), weyl_ops())
def test_product_matches_oracle(a, b):
    prod = weyl_mul(a, b)
    for f in [Poly.const(1), x(1, 1) ** 2 * Poly.variable(yv(1, 1)), x(2, 1) ** 3]:
        assert weyl_apply(prod, f) == weyl_apply(a, weyl_apply(b, f))
