import numpy as np
import pytest

from witnesskit import (
    DimensionMismatch,
    NotHermitian,
    Singular,
    hermitian_eig,
    hs_inner,
    kron,
    partial_trace,
    partial_transpose,
    solve_hermitian_system,
)
from witnesskit.basis import PAULI_X, PAULI_Y, PAULI_Z, pauli_basis
from witnesskit.states import max_entangled

from conftest import ptrace_loops, ptranspose_loops, random_hermitian, swap_matrix

I2 = np.eye(2)


class TestKron:
    def test_identity(self):
        assert np.array_equal(kron(I2, I2), np.eye(4))

    def test_diagonal(self):
        assert np.allclose(kron(PAULI_Z, PAULI_Z), np.diag([1, -1, -1, 1]))

    def test_entrywise_formula(self, rng):
        # expected value from the direct index formula, computed independently
        A = np.diag([1.0, 0.0])
        B = I2 / 2
        expected = np.zeros((4, 4), dtype=complex)
        for i in range(2):
            for j in range(2):
                for k in range(2):
                    for l in range(2):
                        expected[i * 2 + k, j * 2 + l] = A[i, j] * B[k, l]
        assert np.allclose(kron(A, B), expected)
        assert np.allclose(kron(A, B), np.diag([1, 1, 0, 0]) / 2)

    def test_random_against_loops(self, rng):
        A = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        B = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
        got = kron(A, B)
        for i in range(3):
            for j in range(3):
                for k in range(2):
                    for l in range(2):
                        assert got[i * 2 + k, j * 2 + l] == pytest.approx(
                            A[i, j] * B[k, l], abs=1e-14
                        )


class TestPartialTranspose:
    def test_max_entangled_spectrum(self):
        # oracle: eigensolve of the explicitly constructed 4x4 matrix
        proj = max_entangled(2).projector()
        expected = np.sort(np.linalg.eigvalsh(ptranspose_loops(proj, 2, 2)))
        got = hermitian_eig(partial_transpose(proj, (2, 2), "B")).eigenvalues
        assert np.allclose(got, expected, atol=1e-12)
        assert np.allclose(got, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)

    def test_product_case(self, rng):
        a = random_hermitian(rng, 3)
        b = random_hermitian(rng, 2)
        got = partial_transpose(kron(a, b), (3, 2), "B")
        assert np.allclose(got, kron(a, b.T), atol=1e-14)
        got_a = partial_transpose(kron(a, b), (3, 2), "A")
        assert np.allclose(got_a, kron(a.T, b), atol=1e-14)

    def test_werner_boundary(self):
        from witnesskit import werner

        rho = werner(1 / 3)
        vals = hermitian_eig(partial_transpose(rho.mat, (2, 2), "B")).eigenvalues
        assert abs(vals[0]) < 1e-14

    @pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 3), (4, 2)])
    def test_involution_trace_hermiticity(self, rng, dims):
        dA, dB = dims
        for _ in range(250):
            M = random_hermitian(rng, dA * dB)
            for sub in ("A", "B"):
                T = partial_transpose(M, dims, sub)
                assert np.allclose(partial_transpose(T, dims, sub), M, atol=1e-14)
                assert abs(np.trace(T) - np.trace(M)) < 1e-12
                assert np.abs(T - T.conj().T).max() < 1e-12

    def test_matches_loop_oracle(self, rng):
        M = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
        assert np.allclose(partial_transpose(M, (2, 3), "B"), ptranspose_loops(M, 2, 3))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            partial_transpose(np.eye(5), (2, 2), "B")


class TestPartialTrace:
    def test_max_entangled_reduction(self):
        proj = max_entangled(2).projector()
        assert np.allclose(partial_trace(proj, (2, 2), "B"), I2 / 2, atol=1e-14)

    def test_product_case(self, rng):
        a = random_hermitian(rng, 2)
        a /= np.trace(a)
        b = random_hermitian(rng, 3)
        got = partial_trace(kron(a, b), (2, 3), "A")
        assert np.allclose(got, b, atol=1e-13)

    def test_swap_contraction(self):
        got = partial_trace(swap_matrix(2) / 2, (2, 2), "B")
        expected = ptrace_loops(swap_matrix(2) / 2, 2, 2, "B")
        assert np.allclose(got, expected, atol=1e-15)
        assert np.allclose(got, I2 / 2)

    def test_trace_preserved(self, rng):
        M = random_hermitian(rng, 12)
        for traced in ("A", "B"):
            assert abs(np.trace(partial_trace(M, (3, 4), traced)) - np.trace(M)) < 1e-12

    def test_kron_identity(self, rng):
        a = random_hermitian(rng, 3)
        b = random_hermitian(rng, 3)
        got = partial_trace(kron(a, b), (3, 3), "B")
        assert np.allclose(got, a * np.trace(b), atol=1e-12)


class TestHermitianEig:
    def test_pauli_spectra(self):
        assert np.allclose(hermitian_eig(PAULI_Z).eigenvalues, [-1, 1])
        assert np.allclose(hermitian_eig(PAULI_Y).eigenvalues, [-1, 1])

    def test_swap_half_spectrum(self):
        # SWAP/2 squares to I/4, so eigenvalues are +-1/2; trace 1 fixes
        # multiplicities (3, 1).
        W = swap_matrix(2) / 2
        assert np.allclose(W @ W, np.eye(4) / 4)
        got = hermitian_eig(W).eigenvalues
        assert np.allclose(got, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)

    @pytest.mark.parametrize("d", [2, 5, 17, 81])
    def test_reconstruction(self, rng, d):
        M = random_hermitian(rng, d)
        vals, vecs = hermitian_eig(M)
        assert np.all(np.diff(vals) >= -1e-14)
        assert np.abs((vecs * vals) @ vecs.conj().T - M).max() < 1e-10
        assert np.abs(vecs.conj().T @ vecs - np.eye(d)).max() < 1e-10
        assert np.abs(M @ vecs - vecs * vals).max() < 1e-10

    def test_rejects_non_hermitian(self):
        with pytest.raises(NotHermitian):
            hermitian_eig(np.array([[0, 1], [0, 0]], dtype=complex))


class TestHsInner:
    def test_pauli_norm_and_orthogonality(self):
        assert hs_inner(PAULI_X, PAULI_X) == pytest.approx(2)
        assert abs(hs_inner(PAULI_X, PAULI_Z)) < 1e-15

    def test_trace_of_witness(self):
        W = ptranspose_loops(max_entangled(2).projector(), 2, 2)
        assert hs_inner(np.eye(4), W) == pytest.approx(1.0, abs=1e-14)

    def test_self_inner_nonnegative(self, rng):
        for _ in range(50):
            A = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
            v = hs_inner(A, A)
            assert abs(v.imag) < 1e-12
            assert v.real >= 0

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            hs_inner(np.eye(2), np.eye(3))


class TestSolveHermitianSystem:
    def test_identity(self, rng):
        b = rng.standard_normal(7)
        assert np.allclose(solve_hermitian_system(np.eye(7), b), b)

    def test_scaled_identity(self):
        x = solve_hermitian_system(2 * np.eye(2), np.array([4.0, 6.0]))
        assert np.allclose(x, [2.0, 3.0])

    def test_pauli_gram_system(self, rng):
        # explicit 16x16 Gram construction plus residual check
        basis = pauli_basis()
        els = [kron(a.mat, b.mat) for a in basis.elements for b in basis.elements]
        G = np.array([[hs_inner(e, f).real for f in els] for e in els])
        coeff = rng.standard_normal(16)
        target = sum(c * e for c, e in zip(coeff, els))
        b = np.array([hs_inner(e, target).real for e in els])
        x = solve_hermitian_system(G, b)
        assert np.abs(G @ x - b).max() <= 1e-9 * max(np.abs(b).max(), 1)
        assert np.allclose(x, coeff, atol=1e-9)

    def test_singular(self):
        G = np.array([[1.0, 1.0], [1.0, 1.0]])
        with pytest.raises(Singular):
            solve_hermitian_system(G, np.array([1.0, 2.0]))
