from fractions import Fraction

import pytest

from hlsb.errors import HypothesisError
from hlsb.scalar import ParamRing
from hlsb.structures import (
    HomSuperAlgebra,
    HomSuperBialgebra,
    ad_basis,
    bialgebra_from_deltas,
    delta0,
    zero_bracket,
)
from hlsb.superlinear import EvenMap, SuperBasis, Tensor2, tau
from hlsb.yangbaxter import (
    alpha_fixed_tensors,
    alpha_otimes_delta,
    check_coboundary,
    check_perturbation_hypotheses,
    check_quasi_triangular,
    coboundary_from_r,
    perturb_cobracket,
    quasi_triangular_equivalences,
    random_fixed_tensor,
    rational_nullspace,
    yang_baxter_residual,
)

from dense_oracle import t2_dict, t3_dict

QQ = ParamRing()


def odd_heisenberg():
    """alpha = id, [e2,e2] = e1 with e2 odd; the abelian-even toy case."""
    basis = SuperBasis([0, 1])
    br = zero_bracket(QQ, basis)
    br[1][1][0] = QQ.one()
    return HomSuperAlgebra(QQ, basis, br, EvenMap.identity(QQ, basis))


def scaling_family(a4):
    """alpha = diag(1, a4, -1), [e1,e2] = 2 e2, [e1,e3] = 3 e3."""
    basis = SuperBasis([0, 0, 1])
    br = zero_bracket(QQ, basis)
    br[0][1][1] = QQ.from_fraction(2)
    br[1][0][1] = QQ.from_fraction(-2)
    br[0][2][2] = QQ.from_fraction(3)
    br[2][0][2] = QQ.from_fraction(-3)
    return HomSuperAlgebra(QQ, basis, br, EvenMap.diagonal(QQ, basis, [1, a4, -1]))


def test_rational_nullspace():
    basis = rational_nullspace([[Fraction(1), Fraction(1)]], 2)
    assert basis == [[Fraction(-1), Fraction(1)]]
    assert rational_nullspace([[Fraction(1), Fraction(0)],
                               [Fraction(0), Fraction(1)]], 2) == []


def test_fixed_tensor_space_dimensions():
    A = scaling_family(2)
    assert len(alpha_fixed_tensors(A)) == 2          # e1(x)e1 and e3(x)e3
    assert len(alpha_fixed_tensors(A, even_only=True)) == 2
    assert len(alpha_fixed_tensors(A, skew=True, even_only=True)) == 1
    B = scaling_family(1)
    assert len(alpha_fixed_tensors(B)) == 5
    assert len(alpha_fixed_tensors(B, skew=True, even_only=True)) == 2


def test_random_fixed_tensor_is_fixed_skew_even(rng):
    A = scaling_family(1)
    for _ in range(5):
        r = random_fixed_tensor(A, rng, skew=True, even_only=True)
        assert r.apply_all(A.alpha) == r
        assert (r + tau(r)).is_zero()
        for i, j, _ in r.items():
            assert (A.basis.parity(i) + A.basis.parity(j)) % 2 == 0


def test_yang_baxter_residual_hand_value():
    A = odd_heisenberg()
    r = Tensor2.from_dict(QQ, A.basis, {(1, 1): 1})
    yb = yang_baxter_residual(A, r)
    one = QQ.one()
    assert t3_dict(yb) == {(0, 1, 1): -one, (1, 0, 1): one, (1, 1, 0): -one}


def test_coboundary_construction_and_check():
    A = odd_heisenberg()
    r = Tensor2.from_dict(QQ, A.basis, {(1, 1): 1})
    B = coboundary_from_r(A, r)
    one = QQ.one()
    assert t2_dict(B.delta(1)) == {(0, 1): one, (1, 0): -one}
    assert B.delta(0).is_zero()
    assert B.check().passed
    assert check_coboundary(B, r).passed
    # a different cobracket is not the coboundary of this r
    other = HomSuperBialgebra(QQ, A.basis, A.bracket,
                              [[[0, 0], [0, 0]], [[0, 0], [0, 0]]], A.alpha)
    report = check_coboundary(other, r)
    assert not report.passed
    assert report.by_axiom("coboundary")


def test_quasi_triangular_statements_all_false_together():
    A = odd_heisenberg()
    r = Tensor2.from_dict(QQ, A.basis, {(1, 1): 1})
    B = coboundary_from_r(A, r)
    eq = quasi_triangular_equivalences(B, r)
    assert eq.as_tuple() == (False, False, False)
    assert eq.all_agree()
    report = check_quasi_triangular(B, r)
    assert not report.passed
    assert report.by_axiom("yang-baxter")


def test_quasi_triangular_statements_all_true_together():
    A = scaling_family(2)
    r = Tensor2.from_dict(QQ, A.basis, {(2, 2): 7})
    B = coboundary_from_r(A, r)
    assert not B.delta(0).is_zero()  # a genuinely nonzero cobracket
    eq = quasi_triangular_equivalences(B, r)
    assert eq.as_tuple() == (True, True, True)
    assert check_quasi_triangular(B, r).passed


def test_cojacobi_defect_is_alpha_cube_of_adjoint_yang_baxter(rng):
    # the co-Jacobi defect of ad(r) equals the alpha-cube of the adjoint
    # image of the Yang-Baxter residual, computed along independent paths
    A = scaling_family(1)
    span = alpha_fixed_tensors(A, skew=True, even_only=True)
    for _ in range(6):
        r = random_fixed_tensor(A, rng, span=span)
        B = bialgebra_from_deltas(A, delta0(A, r))
        yb = yang_baxter_residual(A, r)
        for i in range(A.dim):
            lhs = B.coalgebra.cojacobi_residual(i)
            rhs = ad_basis(A, i, yb).apply_all(A.alpha)
            assert lhs == rhs


def test_coboundary_hypothesis_failures():
    A = scaling_family(2)
    with pytest.raises(HypothesisError, match="skew"):
        coboundary_from_r(A, Tensor2.from_dict(QQ, A.basis, {(0, 0): 1}))
    with pytest.raises(HypothesisError, match="alpha-fixed"):
        coboundary_from_r(A, Tensor2.from_dict(QQ, A.basis,
                                               {(0, 1): 1, (1, 0): -1}))
    with pytest.raises(HypothesisError, match="even"):
        coboundary_from_r(A, Tensor2.from_dict(QQ, A.basis, {(0, 2): 1}))
    # alpha = diag(1,1,-1) leaves a skew even fixed r whose Yang-Baxter
    # residual survives the adjoint action: the last hypothesis bites
    B = scaling_family(1)
    r = Tensor2.from_dict(QQ, B.basis, {(0, 1): -1, (1, 0): 1, (2, 2): 2})
    with pytest.raises(HypothesisError, match="adjoint-yang-baxter"):
        coboundary_from_r(B, r)


def symbolic_family():
    ring = ParamRing(["a4", "b4", "b5", "c5"], invertible=["a4"])
    basis = SuperBasis([0, 0, 1])
    br = zero_bracket(ring, basis)
    br[0][1][1] = ring.param("b4")
    br[1][0][1] = -ring.param("b4")
    br[0][2][2] = ring.param("b5")
    br[2][0][2] = -ring.param("b5")
    co = zero_bracket(ring, basis)
    co[0][2][2] = ring.param("c5")
    alpha = EvenMap.diagonal(ring, basis, [ring.one(), ring.param("a4"),
                                           -ring.one()])
    return ring, HomSuperBialgebra(ring, basis, br, co, alpha)


def test_perturbation_shifts_within_the_family():
    ring, B = symbolic_family()
    t = Tensor2.from_dict(ring, B.basis, {(2, 2): 1})
    report = check_perturbation_hypotheses(B, t)
    assert report.passed
    assert report.details["defect_vanishes"] is True
    P = perturb_cobracket(B, t)
    c5, b5 = ring.param("c5"), ring.param("b5")
    assert t2_dict(P.delta(0)) == {(2, 2): c5 - 2 * b5}
    assert P.delta(1).is_zero() and P.delta(2).is_zero()
    assert P.check(multiplicative=True).passed


def test_perturbation_by_zero_is_identity():
    ring, B = symbolic_family()
    P = perturb_cobracket(B, Tensor2(ring, B.basis))
    assert P.cobracket == B.cobracket
    assert P.bracket == B.bracket


def test_perturbation_rejects_unfixed_tensor():
    ring, B = symbolic_family()
    t = Tensor2.from_dict(ring, B.basis, {(0, 1): 1, (1, 0): -1})
    with pytest.raises(HypothesisError):
        perturb_cobracket(B, t)
    report = check_perturbation_hypotheses(B, t)
    assert "t-alpha-fixed" in report.axioms_violated()


def test_alpha_otimes_delta_hand_value():
    ring, B = symbolic_family()
    r = Tensor2.from_dict(ring, B.basis, {(2, 2): 1})
    out = alpha_otimes_delta(B, r)
    # alpha(e3) = -e3 and delta(e3) = 0, so the image dies entirely
    assert out.is_zero()
    r2 = Tensor2.from_dict(ring, B.basis, {(0, 0): 1})
    out2 = alpha_otimes_delta(B, r2)
    assert t3_dict(out2) == {(0, 2, 2): ring.param("c5")}
