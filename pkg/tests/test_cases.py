from fractions import Fraction

import pytest

from capelli.cases import (
    capelli_Cd,
    first_term,
    iota_Xd,
    lemma_double_star_holds,
    lemma_star_holds,
    omega_bracket_check,
    verify_capelli_lemma,
    verify_degree_consistency,
    verify_h_invariance,
    verify_identity,
)
from capelli.context import CaseContext, omega_E, omega_F, omega_G, omega_H
from capelli.pbw import PBWElement, pbw_map_omega
from capelli.poly import xv
from capelli.weyl import WeylOp, weyl_equal

R11 = CaseContext.real(1, 1)
C111 = CaseContext.complex(1, 1, 1)
H21 = CaseContext.quaternionic(2, 1)


def E(a, b, m=1, copy=1, copies=1):
    return PBWElement.gen(m, a, b, copy, copies)


def test_context_validation():
    assert R11.rank == 1
    assert CaseContext.complex(2, 3, 1).rank == 2
    assert CaseContext.quaternionic(5, 1).rank == 2
    assert H21.gl_size == 2
    with pytest.raises(ValueError):
        CaseContext.real(0, 1)
    with pytest.raises(ValueError):
        CaseContext.complex(1, 0, 1)


def test_omega_examples():
    assert str(omega_G(R11, 1, 1)) == "I*(x[1,1]^2)"
    assert str(omega_F(R11, 1, 1)) == "I*(d[x,1,1]^2)"
    assert str(omega_H(R11, 1, 1)) == "x[1,1]*d[x,1,1] + 1/2"
    assert str(omega_H(C111, 1, 1, "y")) == "-y[1,1]*d[y,1,1] - 1/2"
    assert str(omega_G(H21, 1, 2)) == "I*(x[1,1]*x[2,2] - x[2,1]*x[1,2])"


def test_omega_index_errors():
    with pytest.raises(IndexError):
        omega_G(R11, 2, 1)
    with pytest.raises(IndexError):
        omega_E(R11, 1, 2)


def test_iota_examples():
    assert str(iota_Xd(R11, 1)) == "-x[1,1]^2*d[x,1,1]^2"
    assert iota_Xd(CaseContext.real(2, 1), 2).is_zero()
    expected = (omega_G(H21, 1, 2) * omega_F(H21, 1, 2))
    assert weyl_equal(iota_Xd(H21, 1), WeylOp._raw(expected.terms))
    with pytest.raises(ValueError):
        iota_Xd(R11, 2)


def test_capelli_examples():
    assert capelli_Cd(R11, 1) == -(E(1, 1) - Fraction(3, 2)) * (E(1, 1) - Fraction(1, 2))
    Ex = E(1, 1, 1, 1, 2)
    Ey = E(1, 1, 1, 2, 2)
    assert capelli_Cd(C111, 1) == -(Ex - Fraction(1, 2)) * (Ey - Fraction(1, 2))
    M = [[E(1, 1, 2), E(1, 2, 2)], [E(2, 1, 2), E(2, 2, 2) - 1]]
    assert capelli_Cd(H21, 1) == M[0][0] * M[1][1] - M[1][0] * M[0][1]
    assert capelli_Cd(CaseContext.real(2, 1), 2).is_zero()


def test_identity_hand_example():
    r = verify_identity(R11, 1)
    assert r["holds"] and r["diff"].is_zero()
    assert str(r["rhs"]) == "-x[1,1]^2*d[x,1,1]^2"


@pytest.mark.parametrize(
    "ctx,d",
    [
        (CaseContext.real(2, 2), 1),
        (CaseContext.real(2, 2), 2),
        (CaseContext.complex(1, 2, 2), 1),
        (CaseContext.complex(2, 2, 1), 1),
        (H21, 1),
        (CaseContext.quaternionic(3, 2), 1),
    ],
)
def test_identity_instances(ctx, d):
    assert verify_identity(ctx, d)["holds"]


def test_identity_failure_is_localized():
    # a deliberately wrong element: drop the shift
    ctx = R11
    wrong = pbw_map_omega(capelli_Cd(ctx, 1, shifted=False), ctx)
    diff = iota_Xd(ctx, 1) - wrong
    assert not diff.is_zero()
    assert first_term(diff) != ""
    assert first_term(WeylOp.zero()) == ""


@pytest.mark.parametrize(
    "ctx,d",
    [
        (CaseContext.real(1, 2), 1),
        (CaseContext.complex(1, 1, 2), 1),
        (R11, 1),
        (H21, 1),
        (CaseContext.real(2, 2), 2),
    ],
)
def test_h_invariance(ctx, d):
    r = verify_h_invariance(ctx, d)
    assert r["holds"], r


def test_h_invariance_vacuous():
    assert verify_h_invariance(R11, 1)["basis_size"] == 0


def test_degree_consistency():
    for ctx, d in [(R11, 1), (CaseContext.real(2, 2), 2), (C111, 1), (H21, 1)]:
        r = verify_degree_consistency(ctx, d)
        assert r["holds"] and r["order"] == 2 * d


@pytest.mark.parametrize("ctx", [R11, CaseContext.real(2, 2), CaseContext.complex(1, 2, 1), H21, CaseContext.quaternionic(3, 1)])
def test_omega_respects_brackets(ctx):
    assert omega_bracket_check(ctx)["holds"]


def test_lemma_star_d1():
    assert lemma_star_holds(2, 2, 1, (1,), (2,))
    assert lemma_star_holds(1, 1, 1, (1,), (1,))


def test_original_capelli_identity():
    assert lemma_star_holds(2, 2, 2, (1, 2), (1, 2))


def test_lemma_double_star_d1():
    # x_s (x_s d_s + u) = (x_s d_s + u - 1) x_s
    X = WeylOp.mult(xv(1, 1))
    D = WeylOp.deriv(xv(1, 1))
    assert weyl_equal(X * (X * D + 5), (X * D + 4) * X)
    assert lemma_double_star_holds(1, 1, 1, (1,), (1,), (1,), lambda b: Fraction(5))


def test_lemma_double_star_needs_the_shift():
    from capelli.cases import _euler_matrix, _xdet
    from capelli.nclinalg import column_det

    S = T = I = (1, 2)
    u = lambda b: 2 - b
    X = WeylOp.from_poly(_xdet(S, I))
    unshifted = column_det(_euler_matrix(2, S, T, u)) * X
    assert not weyl_equal(X * column_det(_euler_matrix(2, S, T, u)), unshifted)
    assert lemma_double_star_holds(2, 2, 2, S, T, I, u)


@pytest.mark.parametrize("k,n,d", [(1, 1, 1), (2, 2, 1), (2, 2, 2), (3, 2, 2)])
def test_capelli_lemma_suite(k, n, d):
    assert verify_capelli_lemma(k, n, d)["holds"]


def test_capelli_lemma_range():
    with pytest.raises(ValueError):
        verify_capelli_lemma(1, 2, 2)


@pytest.mark.parametrize("c", [Fraction(7, 3), Fraction(-5), Fraction(1, 2)])
def test_lemma_double_star_arbitrary_shifts(c):
    from capelli.nclinalg import index_sets

    for S in index_sets(2, 2):
        for I in index_sets(3, 2):
            assert lemma_double_star_holds(3, 2, 2, S, S, I, lambda b: 2 - b + c)
