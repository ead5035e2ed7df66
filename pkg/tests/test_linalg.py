import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from imaginarity import linalg as la
from imaginarity.errors import DimMismatch, InvalidExponent, NotHermitian, NotPSD
from imaginarity.states import random_density, random_pure

from oracles import hermitian_eigenvalues, trace_power

seeds = st.integers(0, 2**32 - 1)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_eigh_matches_jacobi(d):
    rho = random_density(d, d)
    w, v = la.eigh(rho)
    np.testing.assert_allclose(w, hermitian_eigenvalues(rho), atol=1e-12)
    np.testing.assert_allclose((v * w) @ v.conj().T, rho, atol=1e-12)


def test_eigh_rejects_non_hermitian():
    with pytest.raises(NotHermitian):
        la.eigh(np.array([[1, 1], [0, 1]]))


def test_non_square_rejected():
    with pytest.raises(DimMismatch):
        la.as_matrix(np.zeros((2, 3)))


def test_negative_spectrum_rejected():
    with pytest.raises(NotPSD):
        la.mat_pow(np.diag([1.0, -0.1]), 0.5)


def test_tiny_negative_eigenvalue_is_clipped():
    out = la.mat_pow(np.diag([1.0, -1e-12]), 0.5)
    np.testing.assert_allclose(out, np.diag([1.0, 0.0]))


@pytest.mark.parametrize("p", [0.0, -0.5, 1.5])
def test_mat_pow_exponent_domain(p):
    with pytest.raises(InvalidExponent):
        la.mat_pow(np.eye(2), p)


def test_pure_state_powers_are_exact():
    # rounding noise in the zero eigenvalues must not be amplified
    psi = random_pure(4, 3)
    np.testing.assert_allclose(la.mat_pow(psi, 0.05), psi, atol=1e-12)


@settings(max_examples=40, deadline=None)
@given(seeds, st.floats(0.05, 0.95))
def test_complementary_powers_multiply_back(seed, p):
    rho = random_density(3, seed)
    prod = la.mat_pow(rho, p) @ la.mat_pow(rho, 1 - p)
    np.testing.assert_allclose(prod, rho, atol=1e-10)


@settings(max_examples=30, deadline=None)
@given(seeds, st.floats(0.05, 0.95))
def test_trace_product_power_matches_oracle(seed, alpha):
    rho, sigma = random_density(3, seed), random_density(3, seed + 1)
    assert la.trace_product_power(rho, sigma, alpha) == pytest.approx(
        trace_power(rho, sigma, alpha), abs=1e-10)


def test_support_projector():
    p = la.support_projector(np.diag([0.5, 0.5, 0.0]))
    np.testing.assert_allclose(p, np.diag([1, 1, 0]))


def test_tensor_and_partial_trace_invert():
    a, b = random_density(2, 1), random_density(3, 2)
    ab = la.tensor(a, b)
    np.testing.assert_allclose(la.partial_trace(ab, (2, 3), "first"), a, atol=1e-14)
    np.testing.assert_allclose(la.partial_trace(ab, (2, 3), "second"), b, atol=1e-14)
    with pytest.raises(DimMismatch):
        la.partial_trace(ab, (2, 2))
    with pytest.raises(ValueError):
        la.partial_trace(ab, (2, 3), "third")


def test_tensor_is_first_factor_major():
    assert la.tensor(np.diag([1, 0]), np.diag([0, 1]))[1, 1] == 1


def test_direct_sum_blocks():
    a, b = random_density(2, 1), random_density(3, 2)
    s = la.direct_sum(0.25, a, b)
    assert s.shape == (5, 5)
    np.testing.assert_allclose(s[:2, :2], 0.25 * a)
    np.testing.assert_allclose(s[2:, 2:], 0.75 * b)
    assert np.all(s[:2, 2:] == 0)
    with pytest.raises(ValueError):
        la.direct_sum(1.5, a, b)


def test_conjugate_transpose_dagger():
    m = np.array([[1, 2j], [3, 4 - 1j]])
    np.testing.assert_array_equal(la.dagger(m), la.transpose(la.conjugate(m)))
    assert la.transpose(m)[0, 1] == 3


def test_von_neumann_entropy_bits():
    assert la.von_neumann_entropy(np.eye(4) / 4) == pytest.approx(2.0)
    assert la.von_neumann_entropy(np.diag([1.0, 0.0])) == 0.0


def test_tolerances_validated():
    with pytest.raises(ValueError):
        la.Tolerances(psd_tol=-1)
