"""Randomized generators and executable forms of the separability argument.

The device-independence claim is exercised statistically: sample separable
shares and arbitrary valid effects, and check that the probability-level
witness never goes negative.  The underlying algebraic identity

    N(P_sigma) = K * F(Q)

is also checked directly: Q is the (separable) filter state assembled from
effective POVMs and K its normalization, so a nonnegative N on separable
inputs follows from F being a valid nonlinear witness.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .config import TOL
from .errors import DimensionMismatch, ZeroFilter
from .linalg import kron
from .mdi import MdiWitness, PovmEffect, eval_mdi_new, prob_table
from .states import BipartiteDims, DensityMatrix, as_dims
from .witness import NonlinearWitness, eval_nonlinear


@dataclass(frozen=True)
class SeparableDecomposition:
    """Explicit product decomposition sum_i p_i sigma_i^A (x) sigma_i^B."""

    weights: np.ndarray
    partsA: tuple[DensityMatrix, ...]
    partsB: tuple[DensityMatrix, ...]

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=float)
        object.__setattr__(self, "weights", w)
        if len(self.partsA) != len(self.partsB) or len(self.partsA) != w.shape[0]:
            raise DimensionMismatch("weights and part lists must have equal length")
        if w.min() < 0 or abs(w.sum() - 1.0) > 1e-12:
            raise ValueError("weights must be a probability vector")

    def state(self, dims=None) -> DensityMatrix:
        dims = as_dims(dims) if dims is not None else BipartiteDims(
            self.partsA[0].dim, self.partsB[0].dim
        )
        SA = np.stack([a.mat for a in self.partsA])
        SB = np.stack([b.mat for b in self.partsB])
        mat = np.einsum("i,iab,icd->acbd", self.weights, SA, SB)
        return DensityMatrix._trusted(
            np.ascontiguousarray(mat.reshape(dims.total, dims.total)), dims
        )


@dataclass(frozen=True)
class FilterResult:
    Q: DensityMatrix | None
    K: float


def _rng(seed) -> np.random.Generator:
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_density(d: int, seed) -> DensityMatrix:
    """Ginibre-induced random state G G^dag / Tr[G G^dag]; deterministic per seed."""
    rng = _rng(seed)
    G = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    mat = G @ G.conj().T
    return DensityMatrix(mat / np.trace(mat).real)


def random_pure(d: int, seed) -> np.ndarray:
    """Haar-equivalent random unit vector (normalized complex Gaussian)."""
    rng = _rng(seed)
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def _ginibre_batch(n: int, d: int, rng: np.random.Generator) -> np.ndarray:
    G = rng.standard_normal((n, d, d)) + 1j * rng.standard_normal((n, d, d))
    rho = G @ G.conj().transpose(0, 2, 1)
    tr = np.einsum("nii->n", rho).real
    return rho / tr[:, None, None]


def random_separable(dims, k: int, seed) -> tuple[DensityMatrix, SeparableDecomposition]:
    """Mixture of k random product states with Dirichlet-uniform weights."""
    dims = as_dims(dims)
    if k < 1:
        raise ValueError("k must be >= 1")
    rng = _rng(seed)
    weights = rng.dirichlet(np.ones(k))
    partsA = tuple(DensityMatrix._trusted(m) for m in _ginibre_batch(k, dims.dA, rng))
    partsB = tuple(DensityMatrix._trusted(m) for m in _ginibre_batch(k, dims.dB, rng))
    dec = SeparableDecomposition(weights, partsA, partsB)
    return dec.state(dims), dec


def random_effect(d: int, seed) -> PovmEffect:
    """Random valid effect: a Ginibre PSD matrix rescaled into [0, I]."""
    rng = _rng(seed)
    dd = d * d
    G = rng.standard_normal((dd, dd)) + 1j * rng.standard_normal((dd, dd))
    P = G @ G.conj().T
    top = float(np.linalg.eigvalsh(P)[-1])
    u = rng.uniform(1.0, 2.0)
    return PovmEffect(P / (top * u), d)


def effective_povms(
    A1: PovmEffect, B1: PovmEffect, dec: SeparableDecomposition
) -> list[tuple[np.ndarray, np.ndarray]]:
    """Per-product-term effective POVMs on the input spaces.

    A1^i = (Tr_share[A1 (I (x) sigma_i^A)])^T and
    B1^i = (Tr_share[B1 (sigma_i^B (x) I)])^T; each is PSD.
    """
    dA, dB = A1.d, B1.d
    if dec.partsA[0].dim != dA or dec.partsB[0].dim != dB:
        raise DimensionMismatch("decomposition parts do not match effect dimensions")
    A1r = A1.mat.reshape(dA, dA, dA, dA)
    B1r = B1.mat.reshape(dB, dB, dB, dB)
    out = []
    for sa, sb in zip(dec.partsA, dec.partsB):
        A1i = np.einsum("ikjl,lk->ij", A1r, sa.mat).T
        B1i = np.einsum("lmkn,kl->mn", B1r, sb.mat).T
        out.append((A1i, B1i))
    return out


def filter_state(effs, weights) -> FilterResult:
    """Normalized filter operator Q = sum_i p_i A1^i (x) B1^i / K.

    K is the trace of the unnormalized sum; when it vanishes the filter state
    is undefined and ZeroFilter is raised.
    """
    weights = np.asarray(weights, dtype=float)
    SA = np.stack([a for a, _ in effs])
    SB = np.stack([b for _, b in effs])
    dA, dB = SA.shape[1], SB.shape[1]
    acc = np.einsum("i,iab,icd->acbd", weights, SA, SB).reshape(dA * dB, dA * dB)
    K = float(np.trace(acc).real)
    if K <= TOL.filter_cutoff:
        raise ZeroFilter(f"filter constant K = {K:.3e}")
    Q = DensityMatrix(acc / K, BipartiteDims(dA, dB))
    return FilterResult(Q, K)


def check_filtering_identity(
    F: NonlinearWitness,
    w: MdiWitness,
    dec: SeparableDecomposition,
    A1: PovmEffect,
    B1: PovmEffect,
) -> tuple[float, float]:
    """Both sides of N(P_sigma) = K F(Q) for a separable share.

    The left side evaluates the probability-level functional on the true
    table; the right side assembles the filter state independently.  Returns
    (lhs, rhs); agreement to TOL.identity_residual is the caller's assertion.
    """
    effs = effective_povms(A1, B1, dec)
    filt = filter_state(effs, dec.weights)
    rhs = filt.K * eval_nonlinear(F, filt.Q)
    sigma = dec.state(w.dims)
    P = prob_table(sigma, w, A1, B1)
    lhs = eval_mdi_new(w, P)
    return lhs, rhs


def run_verification(
    F: NonlinearWitness,
    w: MdiWitness,
    trials: int,
    seed: int,
    mixture_terms: int | None = None,
) -> dict:
    """Randomized device-independence suite for one witness.

    Each trial draws a separable share and a pair of arbitrary valid effects,
    then requires N >= -witness_slack and checks the filtering identity.
    Returns a report dict with trials, failures, worst_value, runtime_ms.
    """
    dims = w.dims
    k = mixture_terms if mixture_terms is not None else 2 * dims.total
    rng = np.random.default_rng(seed)
    failures = 0
    worst = np.inf
    worst_resid = 0.0
    t0 = time.perf_counter()
    for _ in range(trials):
        _, dec = random_separable(dims, k, rng)
        A1 = random_effect(dims.dA, rng)
        B1 = random_effect(dims.dB, rng)
        try:
            lhs, rhs = check_filtering_identity(F, w, dec, A1, B1)
        except ZeroFilter:
            continue
        worst = min(worst, lhs)
        resid = abs(lhs - rhs)
        worst_resid = max(worst_resid, resid)
        if lhs < -TOL.witness_slack or resid > TOL.identity_residual:
            failures += 1
    runtime_ms = (time.perf_counter() - t0) * 1e3
    return {
        "trials": trials,
        "failures": failures,
        "worst_value": None if np.isinf(worst) else worst,
        "max_identity_residual": worst_resid,
        "runtime_ms": runtime_ms,
    }
