import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sectoria import (
    NotPositiveDefiniteError,
    SingularMatrixError,
    cartesian_split,
    complex_gaussian,
    determinant,
    frobenius,
    hermitian_eigen,
    hermitian_sqrt,
    inverse,
    leading_principal_submatrix,
    rng_stream,
    singular_values,
    solve,
)
from oracles import eigenvalues_by_charpoly


def random_matrix(n, seed):
    return complex_gaussian(n, rng_stream(seed))


def random_hermitian(n, seed):
    g = random_matrix(n, seed)
    return (g + g.conj().T) / 2.0


class TestCartesianSplit:
    def test_hermitian_input_has_zero_imag_part(self):
        re, im = cartesian_split(np.eye(2))
        np.testing.assert_array_equal(re, np.eye(2))
        np.testing.assert_array_equal(im, np.zeros((2, 2)))

    def test_skew_hermitian_input(self):
        re, im = cartesian_split(np.array([[1j]]))
        np.testing.assert_array_equal(re, np.array([[0.0]]))
        np.testing.assert_array_equal(im, np.array([[1.0]]))

    def test_frozen_2x2(self):
        a = np.array([[1 + 2j, 3.0], [-3.0, 1 - 2j]])
        re, im = cartesian_split(a)
        np.testing.assert_allclose(re, np.eye(2), atol=0)
        np.testing.assert_allclose(im, np.array([[2.0, -3j], [3j, -2.0]]), atol=0)

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 8))
    @settings(max_examples=40, deadline=None)
    def test_recombine_reproduces_input(self, seed, n):
        a = random_matrix(n, seed)
        re, im = cartesian_split(a)
        assert frobenius(re - re.conj().T) <= 1e-13 * frobenius(a)
        assert frobenius(im - im.conj().T) <= 1e-13 * frobenius(a)
        assert frobenius(re + 1j * im - a) <= 1e-14 * frobenius(a)

    def test_rejects_non_square(self):
        with pytest.raises(ValueError):
            cartesian_split(np.ones((2, 3)))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            cartesian_split(np.array([[np.nan, 0.0], [0.0, 1.0]]))


class TestHermitianEigen:
    def test_diagonal(self):
        w, _ = hermitian_eigen(np.diag([3.0, 1.0, 2.0]))
        np.testing.assert_allclose(w, [1.0, 2.0, 3.0], atol=0)

    def test_symmetric_swap(self):
        w, _ = hermitian_eigen(np.array([[0.0, 1.0], [1.0, 0.0]]))
        np.testing.assert_allclose(w, [-1.0, 1.0], atol=1e-15)

    def test_matches_charpoly_oracle(self):
        h = random_hermitian(5, 42)
        w, _ = hermitian_eigen(h)
        np.testing.assert_allclose(w, eigenvalues_by_charpoly(h), atol=1e-9)

    def test_contracts_over_1000_seeded_matrices(self):
        from sectoria.linalg import EIGEN_RTOL

        for i in range(1000):
            n = 1 + i % 12
            h = random_hermitian(n, 90_000 + i)
            w, v = hermitian_eigen(h)
            scale = max(frobenius(h), 1e-300)
            assert frobenius(h @ v - v * w) <= EIGEN_RTOL * scale
            assert frobenius(v.conj().T @ v - np.eye(n)) <= EIGEN_RTOL
            assert np.all(np.diff(w) >= 0)

    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError):
            hermitian_eigen(np.array([[0.0, 1.0], [0.0, 0.0]]))


class TestInverse:
    def test_identity(self):
        np.testing.assert_allclose(inverse(np.eye(3)), np.eye(3), atol=0)

    def test_diagonal(self):
        np.testing.assert_allclose(
            inverse(np.diag([2.0, 4.0])), np.diag([0.5, 0.25]), atol=0
        )

    def test_unit_triangular(self):
        a = np.array([[1.0, 1.0], [0.0, 1.0]])
        np.testing.assert_allclose(inverse(a), [[1.0, -1.0], [0.0, 1.0]], atol=1e-15)
        np.testing.assert_allclose(a @ inverse(a), np.eye(2), atol=1e-15)

    def test_residual_bound(self):
        for seed in range(25):
            a = random_matrix(6, 7000 + seed)
            sv = singular_values(a)
            cond = sv[0] / sv[-1]
            if cond >= 1e6:
                continue
            res = frobenius(a @ inverse(a) - np.eye(6))
            assert res <= 1e-10 * cond

    def test_involution_for_well_conditioned(self):
        for seed in range(25):
            a = random_matrix(5, 8000 + seed)
            sv = singular_values(a)
            if sv[0] / sv[-1] >= 1e6:
                continue
            assert frobenius(inverse(inverse(a)) - a) <= 1e-8 * frobenius(a)

    def test_singular_raises(self):
        with pytest.raises(SingularMatrixError):
            inverse(np.array([[1.0, 1.0], [1.0, 1.0]]))

    def test_solve_matches_inverse(self):
        a = random_matrix(4, 11)
        b = random_matrix(4, 12)
        np.testing.assert_allclose(solve(a, b), inverse(a) @ b, atol=1e-12)


class TestDeterminant:
    def test_identity(self):
        assert determinant(np.eye(3)) == pytest.approx(1.0)

    def test_phases_cancel(self):
        a = np.diag([np.exp(1j * np.pi / 4), np.exp(-1j * np.pi / 4)])
        assert determinant(a) == pytest.approx(1.0, abs=1e-15)

    def test_2x2_formula(self):
        assert determinant(np.array([[2.0, 1.0], [1.0, 2.0]])) == pytest.approx(3.0)

    def test_singular_input_gives_zero(self):
        assert abs(determinant(np.array([[1.0, 1.0], [1.0, 1.0]]))) <= 1e-15

    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 8))
    @settings(max_examples=40, deadline=None)
    def test_multiplicative(self, seed, n):
        a = random_matrix(n, seed)
        b = random_matrix(n, seed + 1)
        lhs = determinant(a @ b)
        rhs = determinant(a) * determinant(b)
        assert abs(lhs - rhs) <= 1e-9 * max(abs(lhs), abs(rhs), 1e-300)


class TestLeadingPrincipalSubmatrix:
    def test_full_matrix(self):
        a = random_matrix(4, 3)
        np.testing.assert_array_equal(leading_principal_submatrix(a, 4), a)

    def test_first_entry(self):
        a = np.array([[1.0, 2.0], [3.0, 4.0]])
        np.testing.assert_array_equal(leading_principal_submatrix(a, 1), [[1.0]])

    @pytest.mark.parametrize("k", [0, 3, -1])
    def test_out_of_range(self, k):
        with pytest.raises(IndexError):
            leading_principal_submatrix(np.eye(2), k)


class TestHermitianSqrt:
    def test_identity(self):
        np.testing.assert_allclose(hermitian_sqrt(np.eye(2)), np.eye(2), atol=1e-15)

    def test_diagonal(self):
        np.testing.assert_allclose(
            hermitian_sqrt(np.diag([4.0, 9.0])), np.diag([2.0, 3.0]), atol=1e-15
        )

    def test_square_matches_input(self):
        g = random_matrix(4, 7)
        h = g @ g.conj().T + 0.1 * np.eye(4)
        s = hermitian_sqrt(h)
        assert frobenius(s @ s - h) <= 1e-10 * frobenius(h)
        assert frobenius(s - s.conj().T) == 0.0

    def test_rejects_indefinite(self):
        with pytest.raises(NotPositiveDefiniteError):
            hermitian_sqrt(np.diag([1.0, -1.0]))


class TestSingularValues:
    def test_identity(self):
        np.testing.assert_allclose(singular_values(np.eye(4)), np.ones(4), atol=0)

    def test_diagonal_moduli(self):
        np.testing.assert_allclose(
            singular_values(np.diag([3.0, -4j])), [4.0, 3.0], atol=1e-15
        )

    def test_matches_gram_eigenvalue_oracle(self):
        a = random_matrix(3, 11)
        gram_eigs = hermitian_eigen(a.conj().T @ a).eigenvalues
        oracle = np.sqrt(gram_eigs[::-1])
        np.testing.assert_allclose(singular_values(a), oracle, atol=1e-10)
