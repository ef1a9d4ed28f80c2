import numpy as np
import pytest

from witnesskit import (
    DimensionMismatch,
    LinearMap,
    adjoint_map,
    apply_map,
    bound_entangled_b,
    choi_m1,
    extend_apply,
    hs_inner,
    identity_map,
    kron,
    map_norm_g,
    transpose_map,
)
from witnesskit.maps import map_from_action
from witnesskit.verify import random_density, random_separable

from conftest import random_hermitian


def unit(d, i, j):
    E = np.zeros((d, d), dtype=complex)
    E[i, j] = 1.0
    return E


def m1_printed(a):
    """The published entrywise table, kept independent of the library path."""
    return np.array(
        [
            [a[0, 0] + a[2, 2], -a[0, 1], -a[0, 2]],
            [-a[1, 0], a[1, 1] + a[0, 0], -a[1, 2]],
            [-a[2, 0], -a[2, 1], a[2, 2] + a[1, 1]],
        ]
    )


class TestChoiM1:
    def test_matches_printed_formula_on_all_units(self):
        M = choi_m1()
        for i in range(3):
            for j in range(3):
                E = unit(3, i, j)
                assert np.allclose(apply_map(M, E), m1_printed(E), atol=1e-15)

    def test_selected_units(self):
        M = choi_m1()
        assert np.allclose(apply_map(M, unit(3, 0, 1)), -unit(3, 0, 1))
        assert np.allclose(apply_map(M, unit(3, 2, 2)), np.diag([1.0, 0.0, 1.0]))
        assert np.allclose(apply_map(M, unit(3, 0, 0)), np.diag([1.0, 1.0, 0.0]))

    def test_trace_doubling(self):
        M = choi_m1()
        for i in range(3):
            for j in range(3):
                E = unit(3, i, j)
                assert np.trace(apply_map(M, E)) == pytest.approx(2 * np.trace(E))

    def test_identity_goes_to_twice_identity(self):
        assert np.allclose(apply_map(choi_m1(), np.eye(3)), 2 * np.eye(3))


class TestApplyMap:
    def test_identity_map(self, rng):
        M = identity_map(3)
        rho = random_hermitian(rng, 3)
        assert np.allclose(apply_map(M, rho), rho, atol=1e-14)

    def test_linearity_matches_unit_expansion(self, rng):
        M = choi_m1()
        rho = rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3))
        expected = sum(
            rho[i, j] * apply_map(M, unit(3, i, j)) for i in range(3) for j in range(3)
        )
        assert np.allclose(apply_map(M, rho), expected, atol=1e-13)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            apply_map(choi_m1(), np.eye(2))


class TestExtendApply:
    def test_detection_window(self):
        M = choi_m1()
        assert np.linalg.eigvalsh(extend_apply(M, bound_entangled_b(4.0)))[0] < -1e-6
        assert np.linalg.eigvalsh(extend_apply(M, bound_entangled_b(2.0)))[0] >= -1e-10

    def test_product_state_factorizes(self, rng):
        M = choi_m1()
        sa = random_density(3, rng).mat
        sb = random_density(3, rng).mat
        from witnesskit import DensityMatrix, BipartiteDims

        rho = DensityMatrix(kron(sa, sb), BipartiteDims(3, 3))
        got = extend_apply(M, rho)
        assert np.allclose(got, kron(sa, apply_map(M, sb)), atol=1e-13)
        assert np.linalg.eigvalsh(got)[0] >= -1e-12

    def test_positive_on_separables(self, rng):
        M = choi_m1()
        for _ in range(1000):
            sigma, _ = random_separable((3, 3), 4, rng)
            assert np.linalg.eigvalsh(extend_apply(M, sigma))[0] >= -1e-10

    def test_output_hermitian(self, rng):
        M = choi_m1()
        rho = random_density(9, rng)
        from witnesskit import DensityMatrix, BipartiteDims

        rho = DensityMatrix(rho.mat, BipartiteDims(3, 3))
        out = extend_apply(M, rho)
        assert np.abs(out - out.conj().T).max() < 1e-12


class TestAdjoint:
    def test_duality_identity(self, rng):
        M = choi_m1()
        Mp = adjoint_map(M)
        for _ in range(1000):
            P = random_hermitian(rng, 3)
            Q = random_hermitian(rng, 3)
            lhs = hs_inner(apply_map(M, P), Q)
            rhs = hs_inner(P, apply_map(Mp, Q))
            assert abs(lhs - rhs) < 1e-10

    def test_adjoint_of_m1_on_identity(self):
        assert np.allclose(apply_map(adjoint_map(choi_m1()), np.eye(3)), 2 * np.eye(3))

    def test_adjoint_of_identity(self, rng):
        Mp = adjoint_map(identity_map(4))
        rho = random_hermitian(rng, 4)
        assert np.allclose(apply_map(Mp, rho), rho, atol=1e-14)

    def test_double_adjoint(self):
        M = choi_m1()
        assert np.abs(adjoint_map(adjoint_map(M)).choi - M.choi).max() < 1e-12


class TestMapNormG:
    def test_choi_map(self):
        assert map_norm_g(choi_m1()) == pytest.approx(2.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_identity_and_transpose(self, d):
        assert map_norm_g(identity_map(d)) == pytest.approx(1.0, abs=1e-12)
        assert map_norm_g(transpose_map(d)) == pytest.approx(1.0, abs=1e-12)

    def test_matches_random_state_scan(self, rng):
        # max_sigma Tr[M(sigma)] over random states never exceeds g
        M = choi_m1()
        g = map_norm_g(M)
        best = max(
            np.trace(apply_map(M, random_density(3, rng).mat)).real for _ in range(300)
        )
        assert best <= g + 1e-12


class TestChoiRepresentation:
    def test_faithful_roundtrip(self, rng):
        M = choi_m1()
        rebuilt = map_from_action(lambda E: apply_map(M, E), 3, 3)
        assert np.abs(rebuilt.choi - M.choi).max() < 1e-12

    def test_transpose_map_choi_is_swap(self):
        from conftest import swap_matrix

        assert np.allclose(transpose_map(3).choi, swap_matrix(3))

    def test_rejects_non_hermiticity_preserving(self):
        with pytest.raises(ValueError):
            LinearMap(2, 2, np.array(np.arange(16).reshape(4, 4), dtype=complex))
