"""Linear and nonlinear entanglement witnesses.

A linear witness W has nonnegative expectation on every separable state and a
negative expectation on at least one entangled state.  The nonlinear
improvement subtracts a squared term:

    F(rho) = <W> - (<H>^2 + <A>^2) / denom,

where H + iA is the Hermitian/anti-Hermitian split of the generating operator
(X^T_B for the partial-transpose construction, the adjoint-map image of Y for
the map construction) and denom is the squared top Schmidt coefficient of the
free vector, times the map constant g in the map case.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import DegenerateDenominator, DimensionMismatch
from .linalg import as_cmatrix, dagger, partial_transpose, real_expectation
from .maps import LinearMap, adjoint_map, extend_apply_raw, map_norm_g
from .states import BipartiteDims, DensityMatrix, PureState, as_dims, schmidt_weight


@dataclass(frozen=True)
class LinearWitness:
    W: np.ndarray
    dims: BipartiteDims

    def __post_init__(self):
        W = as_cmatrix(self.W)
        object.__setattr__(self, "W", W)
        dims = as_dims(self.dims)
        object.__setattr__(self, "dims", dims)
        if W.shape[0] != dims.total:
            raise DimensionMismatch(f"witness dim {W.shape[0]} != dA*dB = {dims.total}")
        if float(np.abs(W - dagger(W)).max()) > TOL.hermiticity:
            raise ValueError("witness operator must be Hermitian")


@dataclass(frozen=True)
class NonlinearWitness:
    W: np.ndarray
    H: np.ndarray
    A: np.ndarray
    denom: float
    dims: BipartiteDims

    def __post_init__(self):
        dims = as_dims(self.dims)
        object.__setattr__(self, "dims", dims)
        for name in ("W", "H", "A"):
            M = as_cmatrix(getattr(self, name))
            object.__setattr__(self, name, M)
            if M.shape[0] != dims.total:
                raise DimensionMismatch(f"{name} dim {M.shape[0]} != dA*dB = {dims.total}")
            if float(np.abs(M - dagger(M)).max()) > TOL.hermiticity:
                raise ValueError(f"{name} must be Hermitian")
        if self.denom <= 0:
            raise DegenerateDenominator(f"denominator {self.denom} must be positive")

    def linear(self) -> LinearWitness:
        return LinearWitness(self.W, self.dims)

    def generator(self) -> np.ndarray:
        """H + iA, the operator whose split produced this witness."""
        return self.H + 1j * self.A


def split_herm(Xtb: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Split an operator into Hermitian H and A with Xtb = H + iA exactly."""
    Xtb = as_cmatrix(Xtb)
    H = (Xtb + dagger(Xtb)) / 2
    A = (Xtb - dagger(Xtb)) / 2j
    return H, A


def witness_from_eigvec(phi: PureState, dims=None) -> LinearWitness:
    """Partial transpose of the projector onto phi.

    When phi is an eigenvector of rho^T_B with negative eigenvalue, the
    resulting operator is a witness detecting rho; its expectation on rho is
    exactly that eigenvalue.
    """
    d = _resolve_dims(phi, dims)
    W = partial_transpose(phi.projector(), d, subsystem="B")
    return LinearWitness(W, d)


def map_witness(M: LinearMap, xi: PureState, dims=None) -> LinearWitness:
    """Adjoint-map image of the projector onto xi: W = (I (x) M)^+ |xi><xi|."""
    d = _resolve_dims(xi, dims)
    W = extend_apply_raw(adjoint_map(M), xi.projector(), d)
    return LinearWitness(W, d)


def build_new(phi: PureState, psi: PureState, dims=None) -> NonlinearWitness:
    """Nonlinear witness from the partial-transpose construction.

    W comes from phi; H + iA = (|phi><psi|)^T_B; the denominator is the
    squared largest Schmidt coefficient of psi.
    """
    d = _resolve_dims(phi, dims)
    if psi.dim != d.total:
        raise DimensionMismatch("free vector has wrong dimension")
    W = witness_from_eigvec(phi, d).W
    X = np.outer(phi.vec, psi.vec.conj())
    H, A = split_herm(partial_transpose(X, d, subsystem="B"))
    s = schmidt_weight(psi, d)
    if s < TOL.denom_cutoff:
        raise DegenerateDenominator(f"Schmidt weight {s} too small")
    return NonlinearWitness(W, H, A, s, d)


def build_map_new(M: LinearMap, xi: PureState, zeta: PureState, dims=None) -> NonlinearWitness:
    """Nonlinear witness from a positive map.

    W comes from the adjoint-map image of |xi><xi|; H + iA is the adjoint-map
    image of |xi><zeta|; the denominator is the squared largest Schmidt
    coefficient of zeta times g = max_sigma Tr[M(sigma)].
    """
    d = _resolve_dims(xi, dims)
    if zeta.dim != d.total:
        raise DimensionMismatch("free vector has wrong dimension")
    adj = adjoint_map(M)
    W = extend_apply_raw(adj, xi.projector(), d)
    Y = np.outer(xi.vec, zeta.vec.conj())
    H, A = split_herm(extend_apply_raw(adj, Y, d))
    s = schmidt_weight(zeta, d) * map_norm_g(M)
    if s < TOL.denom_cutoff:
        raise DegenerateDenominator(f"denominator {s} too small")
    return NonlinearWitness(W, H, A, s, d)


def eval_linear(w: LinearWitness, rho: DensityMatrix) -> float:
    """Tr[W rho]; negative values certify entanglement."""
    if rho.dim != w.W.shape[0]:
        raise DimensionMismatch(f"state dim {rho.dim} != witness dim {w.W.shape[0]}")
    return real_expectation(w.W, rho.mat)


def eval_nonlinear(F: NonlinearWitness, rho: DensityMatrix) -> float:
    """<W> - (<H>^2 + <A>^2)/denom; never exceeds the linear value."""
    if rho.dim != F.W.shape[0]:
        raise DimensionMismatch(f"state dim {rho.dim} != witness dim {F.W.shape[0]}")
    w = real_expectation(F.W, rho.mat)
    h = real_expectation(F.H, rho.mat)
    a = real_expectation(F.A, rho.mat)
    return w - (h * h + a * a) / F.denom


def _resolve_dims(state: PureState, dims) -> BipartiteDims:
    if dims is not None:
        d = as_dims(dims)
        if d.total != state.dim:
            raise DimensionMismatch(f"dims {tuple(d)} incompatible with state dim {state.dim}")
        return d
    if state.dims is None:
        raise DimensionMismatch("bipartite dimensions required")
    return state.dims
