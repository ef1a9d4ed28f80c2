"""Dense complex matrix kernel: Kronecker products, partial transpose/trace,
Hermitian eigendecomposition, Hilbert-Schmidt pairings, and linear solves."""

from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .config import TOL
from .errors import DimensionMismatch, NoConvergence, NotHermitian, Singular


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray   # real, ascending
    eigenvectors: np.ndarray  # orthonormal columns, eigenvectors[:, i] <-> eigenvalues[i]


def as_cmatrix(M: np.ndarray) -> np.ndarray:
    """Coerce to a square complex128 array with finite entries."""
    A = np.asarray(M, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {A.shape}")
    if not (np.all(np.isfinite(A.real)) and np.all(np.isfinite(A.imag))):
        raise ValueError("matrix contains non-finite entries")
    return A


def dagger(M: np.ndarray) -> np.ndarray:
    return M.conj().T


def is_hermitian(M: np.ndarray, tol: float | None = None) -> bool:
    tol = TOL.hermiticity if tol is None else tol
    return bool(np.abs(M - dagger(M)).max() <= tol)


def kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Kronecker product with the first factor slow, second fast."""
    return np.kron(as_cmatrix(A), as_cmatrix(B))


def _check_composite(M: np.ndarray, dA: int, dB: int) -> np.ndarray:
    A = as_cmatrix(M)
    if A.shape[0] != dA * dB:
        raise DimensionMismatch(
            f"matrix dim {A.shape[0]} does not equal dA*dB = {dA * dB}"
        )
    return A


def partial_transpose(M: np.ndarray, dims: tuple[int, int], subsystem: str = "B") -> np.ndarray:
    """Transpose one tensor factor of a bipartite operator.

    ``dims = (dA, dB)`` with composite index ``i*dB + k`` (A slow, B fast).
    """
    dA, dB = int(dims[0]), int(dims[1])
    A = _check_composite(M, dA, dB)
    T = A.reshape(dA, dB, dA, dB)
    if subsystem == "B":
        T = T.transpose(0, 3, 2, 1)
    elif subsystem == "A":
        T = T.transpose(2, 1, 0, 3)
    else:
        raise ValueError(f"subsystem must be 'A' or 'B', got {subsystem!r}")
    return np.ascontiguousarray(T.reshape(dA * dB, dA * dB))


def partial_trace(M: np.ndarray, dims: tuple[int, int], traced: str = "B") -> np.ndarray:
    """Trace out one tensor factor of a bipartite operator."""
    dA, dB = int(dims[0]), int(dims[1])
    A = _check_composite(M, dA, dB)
    T = A.reshape(dA, dB, dA, dB)
    if traced == "B":
        return np.trace(T, axis1=1, axis2=3)
    if traced == "A":
        return np.trace(T, axis1=0, axis2=2)
    raise ValueError(f"traced must be 'A' or 'B', got {traced!r}")


def hermitian_eig(M: np.ndarray) -> EigenDecomposition:
    """Full eigendecomposition of a Hermitian matrix, eigenvalues ascending."""
    A = as_cmatrix(M)
    dev = float(np.abs(A - dagger(A)).max())
    if dev > TOL.hermiticity:
        raise NotHermitian(f"max |M - M^dag| = {dev:.3e} exceeds {TOL.hermiticity:.0e}")
    try:
        vals, vecs = np.linalg.eigh(A)
    except np.linalg.LinAlgError as exc:
        raise NoConvergence(str(exc)) from exc
    return EigenDecomposition(vals, vecs)


def min_eigenvalue(M: np.ndarray) -> float:
    """Smallest eigenvalue of a Hermitian matrix."""
    return float(hermitian_eig(M).eigenvalues[0])


def hs_inner(A: np.ndarray, B: np.ndarray) -> complex:
    """Hilbert-Schmidt inner product Tr[A^dag B]."""
    A = as_cmatrix(A)
    B = as_cmatrix(B)
    if A.shape != B.shape:
        raise DimensionMismatch(f"shape mismatch {A.shape} vs {B.shape}")
    return complex(np.sum(A.conj() * B))


def solve_hermitian_system(G: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Solve G x = b for a real symmetric (Gram) matrix G.

    Raises ``Singular`` when the condition estimate exceeds the configured
    limit; the residual is checked against ``TOL.solve_residual`` relative to
    ``||b||_inf``.
    """
    G = np.asarray(G, dtype=float)
    b = np.asarray(b, dtype=float)
    if G.ndim != 2 or G.shape[0] != G.shape[1] or G.shape[0] != b.shape[0]:
        raise DimensionMismatch(f"incompatible system shapes {G.shape}, {b.shape}")
    cond = np.linalg.cond(G)
    if not np.isfinite(cond) or cond > TOL.condition_limit:
        raise Singular(f"condition estimate {cond:.3e} exceeds {TOL.condition_limit:.0e}")
    x = np.linalg.solve(G, b)
    scale = max(float(np.abs(b).max()), 1.0)
    resid = float(np.abs(G @ x - b).max())
    if resid > TOL.solve_residual * scale:
        raise Singular(f"solve residual {resid:.3e} too large")
    return x


def real_trace(M: np.ndarray) -> float:
    """Trace of a matrix that must be real; rejects large imaginary residue."""
    from .errors import ImaginaryResidue

    t = complex(np.trace(M))
    if abs(t.imag) > TOL.imag_residue:
        raise ImaginaryResidue(f"trace has imaginary part {t.imag:.3e}")
    return t.real


def real_expectation(O: np.ndarray, rho: np.ndarray) -> float:
    """Tr[O rho] for Hermitian O and a state rho, imaginary residue checked."""
    from .errors import ImaginaryResidue

    t = complex(np.sum(O.T * rho))  # Tr[O rho] without forming the product
    if abs(t.imag) > TOL.imag_residue:
        raise ImaginaryResidue(f"expectation has imaginary part {t.imag:.3e}")
    return t.real
