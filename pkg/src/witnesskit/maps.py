"""Positive-but-not-completely-positive maps in Choi representation.

A map M from d_in x d_in to d_out x d_out operators is stored as its Choi
matrix sum_ij E_ij (x) M(E_ij), input factor slow, output factor fast.  Maps
here are Hermiticity-preserving, so the Choi matrix is Hermitian.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import DimensionMismatch
from .linalg import as_cmatrix, dagger, hermitian_eig
from .states import DensityMatrix, as_dims


@dataclass(frozen=True)
class LinearMap:
    dim_in: int
    dim_out: int
    choi: np.ndarray

    def __post_init__(self):
        choi = as_cmatrix(self.choi)
        object.__setattr__(self, "choi", choi)
        if choi.shape[0] != self.dim_in * self.dim_out:
            raise DimensionMismatch(
                f"Choi dim {choi.shape[0]} != dim_in*dim_out = {self.dim_in * self.dim_out}"
            )
        dev = float(np.abs(choi - dagger(choi)).max())
        if dev > TOL.hermiticity:
            raise ValueError(f"Choi matrix not Hermitian: deviation {dev:.3e}")

    def kernel(self) -> np.ndarray:
        """Action tensor K[m, n, k, l] = M(E_kl)[m, n]."""
        din, dout = self.dim_in, self.dim_out
        return self.choi.reshape(din, dout, din, dout).transpose(1, 3, 0, 2)


def map_from_action(action, dim_in: int, dim_out: int) -> LinearMap:
    """Build a LinearMap by sampling ``action`` on all matrix units."""
    choi = np.zeros((dim_in * dim_out, dim_in * dim_out), dtype=complex)
    for i in range(dim_in):
        for j in range(dim_in):
            E = np.zeros((dim_in, dim_in), dtype=complex)
            E[i, j] = 1.0
            out = as_cmatrix(action(E))
            if out.shape[0] != dim_out:
                raise DimensionMismatch("action output has wrong dimension")
            choi[i * dim_out:(i + 1) * dim_out, j * dim_out:(j + 1) * dim_out] = out
    return LinearMap(dim_in, dim_out, choi)


def identity_map(d: int) -> LinearMap:
    return map_from_action(lambda E: E, d, d)


def transpose_map(d: int) -> LinearMap:
    return map_from_action(lambda E: E.T, d, d)


def choi_m1() -> LinearMap:
    """The indecomposable positive qutrit map of Choi.

    Entrywise action on a 3x3 matrix [a_ij] (zero-indexed):
    diagonal (0,0) -> a00 + a22, (1,1) -> a11 + a00, (2,2) -> a22 + a11;
    every off-diagonal entry is negated.
    """

    def action(E: np.ndarray) -> np.ndarray:
        a = E
        return np.array(
            [
                [a[0, 0] + a[2, 2], -a[0, 1], -a[0, 2]],
                [-a[1, 0], a[1, 1] + a[0, 0], -a[1, 2]],
                [-a[2, 0], -a[2, 1], a[2, 2] + a[1, 1]],
            ]
        )

    return map_from_action(action, 3, 3)


def apply_map(M: LinearMap, rho: np.ndarray) -> np.ndarray:
    """Apply M to a matrix: Tr_in[(rho^T x I_out) choi]."""
    rho = as_cmatrix(rho)
    if rho.shape[0] != M.dim_in:
        raise DimensionMismatch(f"input dim {rho.shape[0]} != {M.dim_in}")
    return np.einsum("mnkl,kl->mn", M.kernel(), rho)


def extend_apply_raw(M: LinearMap, mat: np.ndarray, dims) -> np.ndarray:
    """Apply I (x) M to an operator on A x B, acting on the B factor."""
    dims = as_dims(dims)
    mat = as_cmatrix(mat)
    if dims.dB != M.dim_in:
        raise DimensionMismatch(f"B dimension {dims.dB} != map input dim {M.dim_in}")
    if mat.shape[0] != dims.total:
        raise DimensionMismatch(f"operator dim {mat.shape[0]} != dA*dB = {dims.total}")
    T = mat.reshape(dims.dA, dims.dB, dims.dA, dims.dB)
    out = np.einsum("mnkl,ikjl->imjn", M.kernel(), T)
    return np.ascontiguousarray(out.reshape(dims.dA * M.dim_out, dims.dA * M.dim_out))


def extend_apply(M: LinearMap, rhoAB: DensityMatrix) -> np.ndarray:
    """Apply I (x) M to a bipartite state; output is Hermitian."""
    if rhoAB.dims is None:
        raise DimensionMismatch("state carries no bipartite dimensions")
    return extend_apply_raw(M, rhoAB.mat, rhoAB.dims)


def adjoint_map(M: LinearMap) -> LinearMap:
    """Hilbert-Schmidt adjoint, defined by Tr[M(P)^dag Q] = Tr[P^dag M+(Q)].

    Computed by resampling the dual action on matrix units rather than by a
    closed-form Choi transform.
    """
    outs = [
        [apply_map(M, _unit(M.dim_in, i, j)) for j in range(M.dim_in)]
        for i in range(M.dim_in)
    ]

    def dual(Q: np.ndarray) -> np.ndarray:
        res = np.empty((M.dim_in, M.dim_in), dtype=complex)
        for i in range(M.dim_in):
            for j in range(M.dim_in):
                res[i, j] = np.sum(outs[i][j].conj() * Q)
        return res

    return map_from_action(dual, M.dim_out, M.dim_in)


def map_norm_g(M: LinearMap) -> float:
    """max over states sigma of Tr[M(sigma)].

    The objective is linear in sigma, so the maximum is the top eigenvalue of
    M+(I); no numeric search over the state space is involved.
    """
    dual_of_identity = apply_map(adjoint_map(M), np.eye(M.dim_out, dtype=complex))
    return float(hermitian_eig(dual_of_identity).eigenvalues[-1])


def _unit(d: int, i: int, j: int) -> np.ndarray:
    E = np.zeros((d, d), dtype=complex)
    E[i, j] = 1.0
    return E
