"""Measurement-device-independent witness evaluation.

The scenario: Alice holds input states {tau_s} plus the maximally mixed state,
Bob holds {omega_t} plus his maximally mixed state, and they share rho_AB.
Each party performs one dichotomic POVM jointly on (input, share).  Subsystem
order is fixed as (A_in, A_share, B_share, B_in), so the global state is the
literal product tau_s (x) rho_AB (x) omega_t; Alice's effect acts on the first
two factors and Bob's on the last two.

From the table of both-click probabilities P(1,1|tau_s, omega_t) and the
maximally-mixed-input probability pmm, the witness functionals are

    I(P) = sum_st alpha_st P(1,1|tau_s, omega_t)
    N(P) = I(P) - [ (sum beta P)^2 + (sum gamma P)^2 ] / (denom dA dB pmm)

with (alpha, beta, gamma) the basis coefficients of (W, H, A).  N is
nonnegative on separable shares for arbitrary effects, and with
maximally-entangled projector effects reduces to F(rho)/(dA dB).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .basis import StateBasis, decompose
from .config import TOL
from .errors import DegenerateDenominator, DimensionMismatch, EffectViolation
from .linalg import as_cmatrix, dagger
from .states import BipartiteDims, DensityMatrix, as_dims, max_entangled
from .witness import NonlinearWitness


@dataclass(frozen=True)
class PovmEffect:
    """One outcome of a dichotomic POVM on a (input, share) pair: 0 <= E <= I."""

    mat: np.ndarray
    d: int  # local dimension; the effect acts on a d*d space

    def __post_init__(self):
        mat = as_cmatrix(self.mat)
        object.__setattr__(self, "mat", mat)
        if mat.shape[0] != self.d * self.d:
            raise DimensionMismatch(f"effect dim {mat.shape[0]} != d^2 = {self.d ** 2}")
        validate_effect(mat)

    def complement(self) -> "PovmEffect":
        return PovmEffect(np.eye(self.mat.shape[0]) - self.mat, self.d)


def validate_effect(mat: np.ndarray) -> None:
    """Raise EffectViolation unless mat is Hermitian with spectrum in [0, 1]."""
    if float(np.abs(mat - dagger(mat)).max()) > TOL.hermiticity:
        raise EffectViolation("effect is not Hermitian")
    vals = np.linalg.eigvalsh(mat)
    if vals[0] < -TOL.psd or vals[-1] > 1 + TOL.psd:
        raise EffectViolation(
            f"effect spectrum [{vals[0]:.3e}, {vals[-1]:.3e}] outside [0, 1]"
        )


def mes_effect(d: int) -> PovmEffect:
    """Rank-one projector onto the maximally entangled state of a d x d pair."""
    return PovmEffect(max_entangled(d).projector(), d)


@dataclass(frozen=True)
class ProbTable:
    """P(1,1|tau_s, omega_t) for all basis pairs plus P(1,1|m_A, m_B)."""

    p: np.ndarray
    pmm: float
    dims: BipartiteDims

    def __post_init__(self):
        p = np.asarray(self.p, dtype=float)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "dims", as_dims(self.dims))
        lo, hi = float(p.min()), float(p.max())
        if lo < -1e-12 or hi > 1 + 1e-12 or self.pmm < -1e-12 or self.pmm > 1 + 1e-12:
            raise ValueError(f"probabilities outside [0,1]: range [{lo}, {hi}], pmm {self.pmm}")

    def clamped(self) -> np.ndarray:
        """Copy of the table clipped to [0, 1]; for reporting only."""
        return np.clip(self.p, 0.0, 1.0)


@dataclass(frozen=True)
class MdiWitness:
    """Coefficient matrices of (W, H, A) over declared local state bases."""

    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    basisA: StateBasis
    basisB: StateBasis
    denom: float
    dims: BipartiteDims

    def __post_init__(self):
        dims = as_dims(self.dims)
        object.__setattr__(self, "dims", dims)
        shape = (self.basisA.dim ** 2, self.basisB.dim ** 2)
        for name in ("alpha", "beta", "gamma"):
            c = np.asarray(getattr(self, name), dtype=float)
            object.__setattr__(self, name, c)
            if c.shape != shape:
                raise DimensionMismatch(f"{name} shape {c.shape} != {shape}")
        if (self.basisA.dim, self.basisB.dim) != (dims.dA, dims.dB):
            raise DimensionMismatch("basis dimensions do not match witness dimensions")
        if self.denom <= 0:
            raise DegenerateDenominator(f"denominator {self.denom} must be positive")


def build_mdi_witness(F: NonlinearWitness, basisA: StateBasis, basisB: StateBasis) -> MdiWitness:
    """Decompose the three witness operators over the given local bases."""
    if (basisA.dim, basisB.dim) != (F.dims.dA, F.dims.dB):
        raise DimensionMismatch("basis dimensions do not match witness dimensions")
    alpha = decompose(F.W, basisA, basisB)
    beta = decompose(F.H, basisA, basisB)
    gamma = decompose(F.A, basisA, basisB)
    return MdiWitness(alpha, beta, gamma, basisA, basisB, F.denom, F.dims)


def _effective_inputs(A1: PovmEffect, B1: PovmEffect, basisA: StateBasis, basisB: StateBasis):
    """Share-side operators obtained by tracing each effect against its input.

    EA[s] = Tr_in[A1 (tau_s (x) I)] and EB[t] = Tr_in[B1 (I (x) omega_t)],
    with Alice's effect ordered (input, share) and Bob's (share, input).
    """
    dA, dB = basisA.dim, basisB.dim
    A1r = A1.mat.reshape(dA, dA, dA, dA)
    B1r = B1.mat.reshape(dB, dB, dB, dB)
    TA = np.vstack([basisA.stack(), np.eye(dA)[None] / dA])
    TB = np.vstack([basisB.stack(), np.eye(dB)[None] / dB])
    EA = np.einsum("ikjl,sji->skl", A1r, TA)
    EB = np.einsum("lmkn,tnm->tlk", B1r, TB)
    return EA, EB


def prob_table(rho: DensityMatrix, w: MdiWitness, A1: PovmEffect, B1: PovmEffect) -> ProbTable:
    """Both-click probabilities for every input pair, plus pmm.

    Entry (s, t) is Tr[(A1 (x) B1)(tau_s (x) rho (x) omega_t)]; pmm replaces
    the inputs by the maximally mixed states.  Values are kept unclamped; the
    evaluation formulas must see the raw arithmetic.
    """
    dims = w.dims
    if rho.dims is not None and tuple(rho.dims) != tuple(dims):
        raise DimensionMismatch(f"state dims {tuple(rho.dims)} != witness dims {tuple(dims)}")
    if rho.dim != dims.total:
        raise DimensionMismatch(f"state dim {rho.dim} != dA*dB = {dims.total}")
    if A1.d != dims.dA or B1.d != dims.dB:
        raise DimensionMismatch("effect local dimensions do not match the witness")
    EA, EB = _effective_inputs(A1, B1, w.basisA, w.basisB)
    rr = rho.mat.reshape(dims.dA, dims.dB, dims.dA, dims.dB)
    # P[s,t] = sum EA[s,a,b] EB[t,c,d] rho[(b,d),(a,c)]
    table = np.einsum("sab,tcd,bdac->st", EA, EB, rr)
    if float(np.abs(table.imag).max()) > TOL.imag_residue:
        raise EffectViolation("probability table has imaginary residue")
    full = table.real
    nA = w.basisA.dim ** 2
    nB = w.basisB.dim ** 2
    return ProbTable(full[:nA, :nB], float(full[nA, nB]), dims)


def eval_mdi_linear(w: MdiWitness, P: ProbTable) -> float:
    """I(P) = sum_st alpha_st P(1,1|tau_s, omega_t)."""
    _check_table(w, P)
    return float(np.sum(w.alpha * P.p))


def eval_mdi_new(w: MdiWitness, P: ProbTable) -> float:
    """N(P), the nonlinear correction of I(P).

    Raises DegenerateDenominator when pmm falls below the configured cutoff;
    the caller may fall back to the linear functional in that case.
    """
    _check_table(w, P)
    if P.pmm <= TOL.pmm_cutoff:
        raise DegenerateDenominator(f"pmm = {P.pmm:.3e} below cutoff")
    a = float(np.sum(w.alpha * P.p))
    b = float(np.sum(w.beta * P.p))
    g = float(np.sum(w.gamma * P.p))
    return a - (b * b + g * g) / (w.denom * w.dims.dA * w.dims.dB * P.pmm)


def _check_table(w: MdiWitness, P: ProbTable) -> None:
    if P.p.shape != w.alpha.shape:
        raise DimensionMismatch(f"table shape {P.p.shape} != {w.alpha.shape}")
