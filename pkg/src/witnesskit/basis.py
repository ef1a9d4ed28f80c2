"""Tomographically complete local state bases and operator decomposition.

A ``StateBasis`` for local dimension d is a set of d^2 density matrices whose
products span the Hermitian operators on the composite space.  ``decompose``
expresses a Hermitian operator O as

    O = sum_st  c_st  tau_s (x) omega_t

by solving the Gram system of Hilbert-Schmidt inner products.  The plain
(untransposed) product convention is the one that reproduces the reference
coefficient tables for both the qubit and qutrit witnesses; see README.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import DimensionMismatch, ImaginaryResidue, NotHermitian, Singular
from .linalg import as_cmatrix, dagger, solve_hermitian_system
from .states import DensityMatrix

PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)

# Gell-Mann matrices, standard order and normalization.
GELL_MANN = (
    np.array([[0, 1, 0], [1, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, -1j, 0], [1j, 0, 0], [0, 0, 0]], dtype=complex),
    np.array([[1, 0, 0], [0, -1, 0], [0, 0, 0]], dtype=complex),
    np.array([[0, 0, 1], [0, 0, 0], [1, 0, 0]], dtype=complex),
    np.array([[0, 0, -1j], [0, 0, 0], [1j, 0, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, 1], [0, 1, 0]], dtype=complex),
    np.array([[0, 0, 0], [0, 0, -1j], [0, 1j, 0]], dtype=complex),
    np.diag([1, 1, -2]).astype(complex) / np.sqrt(3),
)


@dataclass(frozen=True)
class StateBasis:
    """d^2 linearly independent density matrices on a d-dimensional space."""

    dim: int
    elements: tuple[DensityMatrix, ...]

    def __post_init__(self):
        if len(self.elements) != self.dim * self.dim:
            raise ValueError(
                f"need {self.dim ** 2} elements for dim {self.dim}, got {len(self.elements)}"
            )
        for el in self.elements:
            if el.dim != self.dim:
                raise DimensionMismatch("basis element has wrong dimension")
        cond = np.linalg.cond(self.gram())
        if not np.isfinite(cond) or cond > TOL.condition_limit:
            raise Singular(f"basis Gram condition {cond:.3e} too large")

    def stack(self) -> np.ndarray:
        """Elements as one (d^2, d, d) array."""
        return np.stack([el.mat for el in self.elements])

    def gram(self) -> np.ndarray:
        """Real Gram matrix of pairwise Hilbert-Schmidt inner products."""
        S = self.stack()
        G = np.einsum("aij,bij->ab", S.conj(), S)
        return G.real


def pauli_basis() -> StateBasis:
    """Qubit basis (I+sx)/2, (I+sy)/2, (I+sz)/2, I/2."""
    I2 = np.eye(2, dtype=complex)
    mats = [(I2 + PAULI_X) / 2, (I2 + PAULI_Y) / 2, (I2 + PAULI_Z) / 2, I2 / 2]
    return StateBasis(2, tuple(DensityMatrix(m) for m in mats))


def gellmann_basis() -> StateBasis:
    """Qutrit basis I/3, (I+L_s)/3 for s=1..7, and (I+(sqrt3/2)L_8)/3."""
    I3 = np.eye(3, dtype=complex)
    mats = [I3 / 3]
    mats += [(I3 + L) / 3 for L in GELL_MANN[:7]]
    mats += [(I3 + (np.sqrt(3) / 2) * GELL_MANN[7]) / 3]
    return StateBasis(3, tuple(DensityMatrix(m) for m in mats))


def matrix_unit_basis(d: int) -> StateBasis:
    """Generic d^2-element state basis built from matrix-unit superpositions.

    Uses |i><i| together with the +1 and +i superposition projectors for each
    pair i < j; valid for any d >= 2.
    """
    if d < 2:
        raise ValueError("d must be >= 2")
    mats = []
    for i in range(d):
        E = np.zeros((d, d), dtype=complex)
        E[i, i] = 1.0
        mats.append(E)
    for i in range(d):
        for j in range(i + 1, d):
            for amp in (1.0, 1j):
                v = np.zeros(d, dtype=complex)
                v[i] = 1.0
                v[j] = amp
                v /= np.linalg.norm(v)
                mats.append(np.outer(v, v.conj()))
    return StateBasis(d, tuple(DensityMatrix(m) for m in mats))


def standard_basis(d: int) -> StateBasis:
    """Pauli basis for qubits, Gell-Mann basis for qutrits, generic otherwise."""
    if d == 2:
        return pauli_basis()
    if d == 3:
        return gellmann_basis()
    return matrix_unit_basis(d)


def decompose(O: np.ndarray, basisA: StateBasis, basisB: StateBasis) -> np.ndarray:
    """Real coefficients c with O = sum_st c_st tau_s (x) omega_t.

    The Gram system factorizes over the two parties, so the full
    (dA^2 dB^2)-dimensional solve uses the Kronecker product of the local
    Gram matrices.
    """
    O = as_cmatrix(O)
    dA, dB = basisA.dim, basisB.dim
    if O.shape[0] != dA * dB:
        raise DimensionMismatch(f"operator dim {O.shape[0]} != {dA * dB}")
    if float(np.abs(O - dagger(O)).max()) > TOL.hermiticity:
        raise NotHermitian("operator to decompose must be Hermitian")
    SA = basisA.stack()
    SB = basisB.stack()
    Or = O.reshape(dA, dB, dA, dB)
    # b_st = Tr[(tau_s (x) omega_t)^dag O]
    b = np.einsum("sij,tkl,ikjl->st", SA.conj(), SB.conj(), Or)
    if float(np.abs(b.imag).max()) > TOL.imag_residue:
        raise ImaginaryResidue("decomposition right-hand side is not real")
    G = np.kron(basisA.gram(), basisB.gram())
    c = solve_hermitian_system(G, b.real.reshape(-1))
    return c.reshape(dA * dA, dB * dB)


def reconstruct(c: np.ndarray, basisA: StateBasis, basisB: StateBasis) -> np.ndarray:
    """Inverse of ``decompose``: sum_st c_st tau_s (x) omega_t."""
    c = np.asarray(c, dtype=float)
    dA, dB = basisA.dim, basisB.dim
    if c.shape != (dA * dA, dB * dB):
        raise DimensionMismatch(f"coefficient shape {c.shape} != ({dA**2}, {dB**2})")
    SA = basisA.stack()
    SB = basisB.stack()
    out = np.einsum("st,sij,tkl->ikjl", c, SA, SB)
    return np.ascontiguousarray(out.reshape(dA * dB, dA * dB))
