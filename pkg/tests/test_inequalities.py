import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import sectoria as s
from sectoria import (
    NotAccretiveDissipativeError,
    NotAccretiveError,
    NotPositiveDefiniteError,
    NotSectorialError,
    TrialConfig,
)

PI4 = math.pi / 4


def pd_pair(n, seed):
    return s.gen_positive_definite(n, s.child_seed(seed, 0)), s.gen_positive_definite(
        n, s.child_seed(seed, 1)
    )


def sectorial_pair(n, alpha, seed):
    return s.gen_sectorial(n, alpha, s.child_seed(seed, 0)), s.gen_sectorial(
        n, alpha, s.child_seed(seed, 1)
    )


class TestDetSuperadditivity:
    def test_identity_pair(self):
        report = s.check_det_superadditivity(np.eye(2), np.eye(2))
        assert report.holds
        assert report.slack == pytest.approx((4.0 - 2.0) / 4.0)

    def test_equal_operands_homogeneity(self):
        a = s.gen_positive_definite(2, 3)
        report = s.check_det_superadditivity(a, a)
        # det(2A) = 4 det A >= 2 det A
        assert report.holds and report.slack == pytest.approx(0.5, abs=1e-12)

    def test_seeded_pair(self):
        a, b = pd_pair(5, 1)
        assert s.check_det_superadditivity(a, b).slack >= 0.0

    def test_rejects_non_pd(self):
        with pytest.raises(NotPositiveDefiniteError):
            s.check_det_superadditivity(np.diag([1.0, -1.0]), np.eye(2))
        with pytest.raises(NotPositiveDefiniteError):
            s.check_det_superadditivity(np.array([[1.0, 2.0], [0.0, 1.0]]), np.eye(2))


class TestHaynsworth:
    def test_n1_reduces_to_superadditivity(self):
        a = np.array([[2.0]])
        b = np.array([[3.0]])
        report = s.check_haynsworth(a, b)
        base = s.check_det_superadditivity(a, b)
        assert report.slack == base.slack

    def test_equal_operands_power_vs_linear(self):
        for n in (1, 2, 3, 4):
            a = s.gen_positive_definite(n, 70 + n)
            report = s.check_haynsworth(a, a)
            levels = s.determinant_bound_levels(a, a)
            det = abs(s.determinant(a))
            assert levels.lhs == pytest.approx(2.0**n * det, rel=1e-12)
            assert levels.ratio_refined == pytest.approx(2.0 * n * det, rel=1e-12)
            assert report.holds

    def test_seeded_pair(self):
        a, b = pd_pair(4, 2)
        assert s.check_haynsworth(a, b).holds


class TestHartfiel:
    def test_identity_pair_equality(self):
        for n in (2, 3, 5):
            report = s.check_hartfiel(np.eye(n), np.eye(n))
            assert abs(report.slack) <= 1e-14

    def test_n2_equal_operands_equality(self):
        a = s.gen_positive_definite(2, 8)
        assert abs(s.check_hartfiel(a, a).slack) <= 1e-13

    def test_seeded_pair(self):
        a, b = pd_pair(5, 3)
        assert s.check_hartfiel(a, b).holds

    def test_refinement_ladder(self):
        a, b = pd_pair(4, 17)
        levels = s.determinant_bound_levels(a, b)
        assert levels.lhs >= levels.sqrt_refined >= levels.ratio_refined
        assert levels.ratio_refined >= levels.superadditive


class TestSchurPd:
    def test_equal_operands_equality(self):
        a = s.gen_positive_definite(4, 5)
        report = s.check_schur_pd(a, a, 2)
        assert abs(report.slack) <= 1e-13

    def test_block_diagonal_equality(self):
        b = s.gen_positive_definite(2, 1)
        c = s.gen_positive_definite(2, 2)
        a1 = np.block([[b, np.zeros((2, 2))], [np.zeros((2, 2)), c]])
        a2 = np.block([[c, np.zeros((2, 2))], [np.zeros((2, 2)), b]])
        report = s.check_schur_pd(a1, a2, 2)
        assert abs(report.slack) <= 1e-13

    def test_seeded_pair(self):
        a, b = pd_pair(4, 4)
        report = s.check_schur_pd(a, b, 2)
        assert report.kind == "loewner" and report.slack >= 0.0


class TestInverseRealPart:
    def test_hermitian_equality(self):
        report = s.check_inverse_real_part(s.gen_positive_definite(3, 9))
        assert abs(report.slack) <= 1e-12

    def test_unit_real_part(self):
        a = np.eye(2) + 1j * np.array([[0.0, 1.0], [1.0, 0.0]])
        report = s.check_inverse_real_part(a)
        # (Re A)^{-1} - Re(A^{-1}) = I - I/2 = I/2
        assert report.slack == pytest.approx(0.5 / math.sqrt(2.0), rel=1e-12)

    def test_seeded_sectorial(self):
        a = s.gen_sectorial(4, math.pi / 3, 5)
        assert s.check_inverse_real_part(a).slack >= -1e-10

    def test_rejects_non_accretive(self):
        with pytest.raises(NotAccretiveError):
            s.check_inverse_real_part(np.array([[-1.0]]))


class TestSchurRealPart:
    def test_hermitian_equality(self):
        report = s.check_schur_real_part(s.gen_positive_definite(4, 11), 2)
        assert abs(report.slack) <= 1e-12

    def test_accretive_dissipative_sample(self):
        a = s.gen_accretive_dissipative(4, 6)
        assert s.check_schur_real_part(a, 2).slack >= -1e-10

    def test_upper_triangular_blocks(self):
        # A21 = 0 and N21 = 0: the complement is A22 itself
        a = np.array([[1.0 + 0.5j, 0.4], [0.0, 1.0 - 0.3j]])
        report = s.check_schur_real_part(a, 1)
        assert report.holds

    def test_rejects_non_accretive(self):
        with pytest.raises(NotAccretiveError):
            s.check_schur_real_part(np.diag([-1.0, 1.0]), 1)


class TestOstrowskiTausskyComplement:
    def test_positive_definite_equality(self):
        report = s.check_ostrowski_taussky_complement(s.gen_positive_definite(3, 7))
        assert abs(report.slack) <= 1e-10

    def test_extremal_scalar_phase(self):
        a = np.exp(1j * math.pi / 5) * np.eye(3)
        report = s.check_ostrowski_taussky_complement(a)
        assert abs(report.slack) <= 1e-12

    def test_seeded_sectorial(self):
        report = s.check_ostrowski_taussky_complement(s.gen_sectorial(5, PI4, 7))
        assert report.holds

    def test_rejects_non_sectorial(self):
        with pytest.raises(NotSectorialError):
            s.check_ostrowski_taussky_complement(np.array([[1j]]))


class TestWeakLogMajorization:
    def test_diagonal_unitary(self):
        a = np.diag(np.exp(1j * np.array([0.3, -0.9, 0.7])))
        report = s.check_weak_log_majorization(a)
        assert report.holds

    def test_positive_definite_equality(self):
        report = s.check_weak_log_majorization(s.gen_positive_definite(4, 8))
        assert abs(report.slack) <= 1e-12

    def test_seeded_sectorial(self):
        report = s.check_weak_log_majorization(s.gen_sectorial(4, math.pi / 3, 8))
        assert report.slack >= -1e-8


class TestClaim1:
    def test_positive_definite_equality(self):
        report = s.check_claim1(s.gen_positive_definite(4, 12), 2)
        assert abs(report.slack) <= 1e-12

    def test_rotated_accretive_dissipative(self):
        a = np.exp(-1j * PI4) * s.gen_accretive_dissipative(4, 9)
        assert s.check_claim1(a, 2).slack >= -1e-10

    def test_block_diagonal(self):
        b = s.gen_sectorial(2, 0.6, 31)
        c = s.gen_sectorial(2, 0.6, 32)
        a = np.block([[b, np.zeros((2, 2))], [np.zeros((2, 2)), c]])
        assert s.check_claim1(a, 2).holds


class TestMain1:
    def test_alpha_zero_matches_pd_bound(self):
        a, b = pd_pair(4, 21)
        main1 = s.check_main1(a, b, 0.0, 2)
        pd = s.check_schur_pd(a, b, 2)
        assert main1.slack == pytest.approx(pd.slack, abs=1e-10)

    def test_conjugate_pair_matches_claim1(self):
        a = s.gen_sectorial(4, PI4, 10)
        alpha = s.sector_angle(a)
        main1 = s.check_main1(a, a.conj().T, alpha, 2)
        claim1 = s.check_claim1(a, 2)
        # with B = A* both sides double, so the normalized slacks coincide
        assert main1.slack == pytest.approx(claim1.slack, abs=1e-10)
        assert main1.holds

    def test_seeded_pair(self):
        a, b = sectorial_pair(5, math.pi / 3, 10)
        assert s.check_main1(a, b, math.pi / 3, 2).slack >= -1e-8

    def test_rejects_outside_sector(self):
        a, b = sectorial_pair(3, PI4, 11)
        with pytest.raises(NotSectorialError):
            s.check_main1(a, b, 0.1, 1)


class TestSchurWrongsec:
    def test_hermitian_degenerate_equality(self):
        report = s.check_schur_wrongsec(s.gen_positive_definite(4, 13), 2)
        assert abs(report.slack) <= 1e-12

    def test_generic_sectorial_violates(self):
        report = s.check_schur_wrongsec(s.gen_sectorial(2, PI4, 14), 1)
        assert not report.holds

    def test_falsifier_finds_counterexample(self):
        cfg = TrialConfig(seed=0, n=2, alpha=PI4, trials=100)
        report = s.falsify_schur_wrongsec(cfg)
        assert report.slack <= -1e-6
        assert "counterexample" in report.detail

    def test_falsifier_deterministic(self):
        cfg = TrialConfig(seed=7, n=3, alpha=0.5, trials=25, partition=1)
        first = s.falsify_schur_wrongsec(cfg)
        second = s.falsify_schur_wrongsec(cfg)
        assert first == second

    def test_no_counterexample_at_alpha_zero(self):
        cfg = TrialConfig(seed=0, n=2, alpha=0.0, trials=50)
        report = s.falsify_schur_wrongsec(cfg)
        assert report.slack > -1e-6
        assert "no counterexample" in report.detail


class TestDetStep:
    def test_identity_pair_equality(self):
        report = s.check_det_step(np.eye(4), np.eye(4), 0.0, 2)
        assert abs(report.slack) <= 1e-14

    def test_diagonal_pair_matches_direct_ratios(self):
        pa = np.array([0.4, -0.2, 0.3])
        pb = np.array([-0.4, 0.1, 0.2])
        a = np.diag(2.0 * np.exp(1j * pa))
        b = np.diag(0.5 * np.exp(1j * pb))
        alpha = 0.4
        k = 2
        lhs = (1 / math.cos(alpha)) ** 3 * abs(
            np.prod(2.0 * np.exp(1j * pa[: k + 1]) + 0.5 * np.exp(1j * pb[: k + 1]))
            / np.prod(2.0 * np.exp(1j * pa[:k]) + 0.5 * np.exp(1j * pb[:k]))
        )
        rhs = 2.0 + 0.5
        expected = (lhs - rhs) / max(lhs, rhs, 1.0)
        report = s.check_det_step(a, b, alpha, k)
        assert report.slack == pytest.approx(expected, rel=1e-10)

    def test_all_k_seeded(self):
        a, b = sectorial_pair(5, math.pi / 6, 11)
        for k in range(1, 5):
            assert s.check_det_step(a, b, math.pi / 6, k).slack >= -1e-8

    def test_k_out_of_range(self):
        a, b = sectorial_pair(3, 0.2, 12)
        with pytest.raises(ValueError):
            s.check_det_step(a, b, 0.2, 3)


class TestMain2:
    def test_identity_pair_equality(self):
        report = s.check_main2(np.eye(3), np.eye(3), 0.0)
        assert abs(report.slack) <= 1e-14

    def test_equal_operands_hold(self):
        a = s.gen_sectorial(3, 0.9, 30)
        report = s.check_main2(a, a, 0.9)
        assert report.holds

    def test_seeded_pair(self):
        a, b = sectorial_pair(4, PI4, 12)
        assert s.check_main2(a, b, PI4).slack >= -1e-8

    def test_alpha_zero_equals_hartfiel(self):
        for seed in range(5):
            a, b = pd_pair(4, 50 + seed)
            main2 = s.check_main2(a, b, 0.0)
            hart = s.check_hartfiel(a, b)
            assert abs(main2.slack - hart.slack) <= 1e-12

    def test_rejects_outside_sector(self):
        a, b = sectorial_pair(3, 0.9, 13)
        with pytest.raises(NotSectorialError):
            s.check_main2(a, b, 0.2)


class TestCorollaryAd:
    def test_constant_is_sec_power(self):
        # 2^{3n/2 - 1} agrees with sec(pi/4)^{3n - 2}
        for n in range(1, 11):
            expected = 2.0 ** (1.5 * n - 1.0)
            sec_power = (1.0 / math.cos(PI4)) ** (3 * n - 2)
            assert abs(sec_power - expected) <= 1e-13 * expected

    def test_scalar_multiple_closed_form(self):
        n = 3
        a = (1.0 + 1.0j) * np.eye(n)
        report = s.check_corollary_ad(a, a)
        lhs = 2.0 ** (1.5 * n - 1.0) * abs(np.linalg.det(2.0 * a))
        rhs = 2.0**1.5 * n * 2.0 + (2.0**n - 2.0 * n) * 2.0 ** (n / 2.0)
        # lhs = 2^{3n-1}, rhs = 2^{3n/2}
        assert lhs == pytest.approx(2.0 ** (3 * n - 1))
        assert report.slack == pytest.approx((lhs - 2.0 ** (1.5 * n)) / lhs, rel=1e-12)

    def test_seeded_pair(self):
        a = s.gen_accretive_dissipative(3, s.child_seed(13, 0))
        b = s.gen_accretive_dissipative(3, s.child_seed(13, 1))
        assert s.check_corollary_ad(a, b).holds

    def test_rejects_non_accretive_dissipative(self):
        with pytest.raises(NotAccretiveDissipativeError):
            s.check_corollary_ad(np.eye(2), np.eye(2) + 1j * np.eye(2))


class TestReportContract:
    def test_holds_iff_slack_above_tolerance(self):
        a, b = sectorial_pair(3, PI4, 40)
        for report in (
            s.check_main2(a, b, PI4),
            s.check_schur_wrongsec(s.gen_sectorial(2, PI4, 41), 1),
        ):
            assert report.holds == (report.slack >= -report.tol)

    def test_dict_round_trip(self):
        import json

        report = s.check_main2(*sectorial_pair(3, 0.5, 42), 0.5)
        doc = json.loads(json.dumps(report.to_dict()))
        assert doc["name"] == "main2"
        assert set(doc) == {"name", "kind", "slack", "holds", "tol", "detail"}

    def test_line_form(self):
        report = s.check_hartfiel(*pd_pair(3, 43))
        line = report.to_line()
        assert line.startswith("hartfiel [scalar]")
        assert "holds" in line

    @given(seed=st.integers(0, 2**31), alpha_hi=st.floats(0.9, 1.4))
    @settings(max_examples=20, deadline=None)
    def test_alpha_monotonicity(self, seed, alpha_hi):
        # widening the declared sector only helps: sec powers grow with alpha
        a, b = sectorial_pair(3, 0.8, seed)
        low = s.check_main2(a, b, 0.8)
        high = s.check_main2(a, b, alpha_hi)
        assert high.slack >= low.slack - 1e-12
        assert not low.holds or high.holds
