"""The linearization pipeline on worked examples and constructed failures."""

import pytest

from falin import (AxiomsFail, FreePoly, LaurentPoly, NotEffective, PolyMap,
                   TorusAction, build_phi, build_tau, extract_beta,
                   identity_map, linearize, parse, verify_conjugation)
from falin.corpusgen import conjugated_action
from falin.errors import NotDiagonalizable

EX_A = """rank 2
action
z1 -> t1*z1
z2 -> t2*z2 + (t2 - t1^2)*z1^2
end
"""


@pytest.fixture
def ex_a():
    return parse(EX_A).to_action()


def elementary_alpha():
    alpha = PolyMap([FreePoly(2, {(1,): 1}), FreePoly(2, {(2,): 1, (1, 1): 1})])
    alpha_inv = PolyMap([FreePoly(2, {(1,): 1}),
                         FreePoly(2, {(2,): 1, (1, 1): -1})])
    return alpha, alpha_inv


class TestBuildTau:
    def test_identity_weights(self):
        tau = build_tau([[1, 0], [0, 1]])
        assert tau.map.images[0] == FreePoly(2, {(1,): LaurentPoly.var(2, 1)}, 2)
        assert tau.map.images[1] == FreePoly(2, {(2,): LaurentPoly.var(2, 2)}, 2)

    def test_general_rows(self):
        tau = build_tau([[1, 2], [0, 1]])
        assert tau.map.images[0] == \
            FreePoly(2, {(1,): LaurentPoly.monomial(2, (1, 2))}, 2)
        assert tau.map.images[1] == FreePoly(2, {(2,): LaurentPoly.var(2, 2)}, 2)

    def test_zero_matrix_gives_identity_action(self):
        tau = build_tau([[0, 0], [0, 0]])
        assert tau.map == identity_map(2, 2)
        assert tau.degree == 1


class TestBuildPhi:
    def test_tau_gives_identity_action(self):
        tau = build_tau([[2, 1], [1, 1]])
        phi = build_phi(tau, [[2, 1], [1, 1]])
        assert phi.map == identity_map(2, 2)

    def test_ex_a(self, ex_a):
        phi = build_phi(ex_a, [[1, 0], [0, 1]])
        assert phi.map.images[0] == FreePoly(2, {(1,): 1}, 2)
        coeff = LaurentPoly(2, {(0, 0): 1, (2, -1): -1})  # 1 - t1^2/t2
        assert phi.map.images[1] == FreePoly(2, {(2,): 1, (1, 1): coeff}, 2)

    def test_rejects_non_diagonal_linear_part(self):
        doc = parse("rank 2\naction\nz1 -> t1*z1 + t1*z2\nz2 -> t2*z2\nend\n")
        with pytest.raises(NotDiagonalizable):
            build_phi(doc.to_action(), [[1, 0], [0, 1]])


class TestExtractBeta:
    def test_identity_phi(self):
        phi = build_tau([[0, 0], [0, 0]])
        assert extract_beta(phi) == identity_map(2)

    def test_ex_a(self, ex_a):
        phi = build_phi(ex_a, [[1, 0], [0, 1]])
        beta = extract_beta(phi)
        assert beta == PolyMap([FreePoly(2, {(1,): 1}),
                                FreePoly(2, {(2,): 1, (1, 1): 1})])

    def test_coefficient_without_constant_part_contributes_nothing(self):
        coeff = LaurentPoly(1, {(1,): 1, (2,): -1})  # t1 - t1^2
        action = TorusAction(PolyMap([
            FreePoly(1, {(1,): 1, (1, 1): coeff}, 1)]))
        beta = extract_beta(action)
        assert beta == identity_map(1)


class TestVerifyConjugation:
    def test_standard_identity(self):
        doc = parse("rank 1\naction\nz1 -> t1*z1\nend\n")
        assert verify_conjugation(doc.to_action(), identity_map(1), [[1]])

    def test_ex_a_beta(self, ex_a):
        beta = PolyMap([FreePoly(2, {(1,): 1}),
                        FreePoly(2, {(2,): 1, (1, 1): 1})])
        assert verify_conjugation(ex_a, beta, [[1, 0], [0, 1]])

    def test_ex_a_identity_fails(self, ex_a):
        assert not verify_conjugation(ex_a, identity_map(2), [[1, 0], [0, 1]])


class TestLinearize:
    def test_standard_action(self):
        doc = parse("rank 2\naction\nz1 -> t1*z1\nz2 -> t2*z2\nend\n")
        report = linearize(doc.to_action())
        assert report.verified and report.effective
        assert report.fixed_point == (0, 0)
        assert report.base_change == [[1, 0], [0, 1]]
        assert report.weights == [[1, 0], [0, 1]]
        assert report.beta == identity_map(2)
        assert report.beta_inverse == identity_map(2)

    def test_ex_a_full_run(self, ex_a):
        report = linearize(ex_a)
        assert report.verified
        assert report.fixed_point == (0, 0)
        assert report.base_change == [[1, 0], [0, 1]]
        assert report.weights == [[1, 0], [0, 1]]
        assert report.beta == PolyMap([FreePoly(2, {(1,): 1}),
                                       FreePoly(2, {(2,): 1, (1, 1): 1})])
        assert report.beta_inverse == PolyMap([FreePoly(2, {(1,): 1}),
                                               FreePoly(2, {(2,): 1, (1, 1): -1})])
        assert report.degree == 2

    def test_ex_a_is_a_conjugated_diagonal_action(self, ex_a):
        alpha, alpha_inv = elementary_alpha()
        built = conjugated_action(alpha, alpha_inv, [[1, 0], [0, 1]])
        assert built.map == ex_a.map

    def test_not_effective(self):
        alpha, alpha_inv = elementary_alpha()
        action = conjugated_action(alpha, alpha_inv, [[1, 0], [1, 0]])
        with pytest.raises(NotEffective) as err:
            linearize(action)
        report = err.value.report
        assert report.effective is False
        assert report.weights in ([[1, 0], [1, 0]],)
        assert report.beta is None

    def test_axioms_failure_raises_with_witness(self):
        doc = parse("rank 1\naction\nz1 -> t1*z1 + 1\nend\n")
        with pytest.raises(AxiomsFail) as err:
            linearize(doc.to_action())
        assert err.value.witness is not None
        assert err.value.witness.axiom == "compatibility"

    def test_translated_ex_a_recovers_center(self, ex_a):
        from falin import conjugate_by_translation
        moved = TorusAction(conjugate_by_translation(ex_a.map, [2, -1]))
        report = linearize(moved)
        assert report.verified
        assert report.fixed_point == (-2, 1)
        assert sorted(map(tuple, report.weights)) == [(0, 1), (1, 0)]

    def test_degree_bound_honored(self, ex_a):
        report = linearize(ex_a)
        assert max(img.degree() for img in report.beta.images) <= ex_a.degree
        assert max(img.degree() for img in report.beta_inverse.images) <= ex_a.degree

    def test_beta_always_has_identity_linear_part(self):
        from falin.corpusgen import CorpusSpec, gen_action
        from falin.endo import scalar_linear_part
        for seed in range(5):
            spec = CorpusSpec(rank=2, seed=seed, n_elementary=1,
                              max_poly_degree=2, weight_bound=2)
            action, _ = gen_action(spec)
            report = linearize(action)
            assert scalar_linear_part(report.beta) == [[1, 0], [0, 1]]
