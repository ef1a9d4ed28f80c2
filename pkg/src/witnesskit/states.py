"""State constructors: maximally entangled/mixed states, the two-qubit Werner
family, the 3x3 bound-entangled family, and pure-state utilities."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .config import TOL
from .errors import DimensionMismatch, OutOfFamily
from .linalg import as_cmatrix, dagger, hermitian_eig, partial_trace


class BipartiteDims(NamedTuple):
    dA: int
    dB: int

    @property
    def total(self) -> int:
        return self.dA * self.dB


def as_dims(dims) -> BipartiteDims:
    """Coerce a (dA, dB) pair to BipartiteDims."""
    if isinstance(dims, BipartiteDims):
        return dims
    dA, dB = dims
    if dA < 1 or dB < 1:
        raise ValueError(f"local dimensions must be positive, got {dims}")
    return BipartiteDims(int(dA), int(dB))


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, PSD, trace-one matrix with optional bipartite dimensions."""

    mat: np.ndarray
    dims: BipartiteDims | None = None

    def __post_init__(self):
        mat = as_cmatrix(self.mat)
        object.__setattr__(self, "mat", mat)
        if self.dims is not None:
            dims = as_dims(self.dims)
            object.__setattr__(self, "dims", dims)
            if dims.total != mat.shape[0]:
                raise DimensionMismatch(
                    f"dims {tuple(dims)} incompatible with matrix dim {mat.shape[0]}"
                )
        dev = float(np.abs(mat - dagger(mat)).max())
        if dev > TOL.hermiticity:
            raise ValueError(f"not Hermitian: deviation {dev:.3e}")
        tr = complex(np.trace(mat))
        if abs(tr - 1.0) > TOL.trace:
            raise ValueError(f"trace {tr} is not 1")
        lo = float(np.linalg.eigvalsh(mat)[0])
        if lo < -TOL.psd:
            raise ValueError(f"not PSD: min eigenvalue {lo:.3e}")

    @property
    def dim(self) -> int:
        return self.mat.shape[0]

    @classmethod
    def _trusted(cls, mat: np.ndarray, dims: BipartiteDims | None = None) -> "DensityMatrix":
        """Skip validation for matrices that are valid by construction.

        Internal fast path for bulk randomized sampling; callers are
        responsible for Hermiticity, positivity, and unit trace.
        """
        obj = object.__new__(cls)
        object.__setattr__(obj, "mat", mat)
        object.__setattr__(obj, "dims", dims)
        return obj


@dataclass(frozen=True)
class PureState:
    """Unit-norm state vector with optional bipartite dimensions."""

    vec: np.ndarray
    dims: BipartiteDims | None = None

    def __post_init__(self):
        vec = np.asarray(self.vec, dtype=complex).reshape(-1)
        object.__setattr__(self, "vec", vec)
        if self.dims is not None:
            dims = as_dims(self.dims)
            object.__setattr__(self, "dims", dims)
            if dims.total != vec.shape[0]:
                raise DimensionMismatch(
                    f"dims {tuple(dims)} incompatible with vector dim {vec.shape[0]}"
                )
        nrm = float(np.linalg.norm(vec))
        if abs(nrm - 1.0) > TOL.unit_norm:
            raise ValueError(f"vector norm {nrm} is not 1")

    @property
    def dim(self) -> int:
        return self.vec.shape[0]

    def projector(self) -> np.ndarray:
        return np.outer(self.vec, self.vec.conj())


def max_entangled(d: int) -> PureState:
    """|Phi+> = (1/sqrt(d)) sum_i |ii> on a d x d system."""
    if d < 2:
        raise ValueError("d must be >= 2")
    v = np.zeros(d * d, dtype=complex)
    v[:: d + 1] = 1.0 / np.sqrt(d)
    return PureState(v, BipartiteDims(d, d))


def maximally_mixed(d: int) -> DensityMatrix:
    """I_d / d."""
    if d < 1:
        raise ValueError("d must be >= 1")
    return DensityMatrix(np.eye(d, dtype=complex) / d)


_PSI_MINUS = np.array([0, 1, -1, 0], dtype=complex) / np.sqrt(2)


def werner(nu: float) -> DensityMatrix:
    """Two-qubit Werner state nu |psi-><psi-| + (1-nu) I/4.

    Admissible (PSD) range is -1/3 <= nu <= 1; the state is separable up to
    nu = 1/3 and entangled above, but separability is a query on the result,
    not a constructor constraint.
    """
    nu = float(nu)
    if nu < -1 / 3 - 1e-12 or nu > 1 + 1e-12:
        raise OutOfFamily(f"Werner parameter {nu} outside [-1/3, 1]")
    mat = nu * np.outer(_PSI_MINUS, _PSI_MINUS.conj()) + (1 - nu) * np.eye(4) / 4
    return DensityMatrix(mat, BipartiteDims(2, 2))


_PSI_TILDE = np.zeros(9, dtype=complex)
_PSI_TILDE[[0, 4, 8]] = 1.0 / np.sqrt(3)


def psi_tilde() -> PureState:
    """(|00> + |11> + |22>)/sqrt(3), the maximally entangled two-qutrit state."""
    return PureState(_PSI_TILDE.copy(), BipartiteDims(3, 3))


def bound_entangled_b(a: float) -> DensityMatrix:
    """3x3 family (2/7)|psi~><psi~| + (a/7) sigma+ + ((5-a)/7) sigma-.

    sigma+ mixes |01>,|12>,|20| and sigma- mixes |10>,|21>,|02> uniformly.
    The family is PPT for 1 <= a <= 4 and is detected by the partially
    applied Choi map for a > 3, so it is bound entangled for 3 < a <= 4.
    """
    a = float(a)
    if a < -1e-12 or a > 5 + 1e-12:
        raise OutOfFamily(f"family parameter {a} outside [0, 5]")
    sig_p = np.zeros((9, 9), dtype=complex)
    sig_m = np.zeros((9, 9), dtype=complex)
    for i, j in ((0, 1), (1, 2), (2, 0)):
        sig_p[i * 3 + j, i * 3 + j] = 1 / 3
    for i, j in ((1, 0), (2, 1), (0, 2)):
        sig_m[i * 3 + j, i * 3 + j] = 1 / 3
    mat = (2 / 7) * np.outer(_PSI_TILDE, _PSI_TILDE.conj()) + (a / 7) * sig_p + ((5 - a) / 7) * sig_m
    return DensityMatrix(mat, BipartiteDims(3, 3))


def schmidt_weight(psi: PureState, dims: tuple[int, int] | None = None) -> float:
    """Square of the largest Schmidt coefficient of a bipartite pure state.

    Computed as the top eigenvalue of the reduced state on A; lies in
    [1/min(dA, dB), 1].
    """
    d = as_dims(dims) if dims is not None else psi.dims
    if d is None:
        raise DimensionMismatch("bipartite dimensions required")
    if d.total != psi.dim:
        raise DimensionMismatch(f"dims {tuple(d)} incompatible with state dim {psi.dim}")
    reduced = partial_trace(psi.projector(), d, traced="B")
    return float(hermitian_eig(reduced).eigenvalues[-1])
