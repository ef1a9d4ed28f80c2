import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def random_hermitian(rng, d):
    G = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (G + G.conj().T) / 2


def swap_matrix(d: int) -> np.ndarray:
    """SWAP operator on a d x d bipartite space, built entry by entry."""
    S = np.zeros((d * d, d * d), dtype=complex)
    for i in range(d):
        for j in range(d):
            S[j * d + i, i * d + j] = 1.0
    return S


def ptranspose_loops(M: np.ndarray, dA: int, dB: int) -> np.ndarray:
    """Independent partial-transpose-on-B oracle via explicit index loops."""
    out = np.zeros_like(np.asarray(M, dtype=complex))
    for i in range(dA):
        for k in range(dB):
            for j in range(dA):
                for l in range(dB):
                    out[i * dB + k, j * dB + l] = M[i * dB + l, j * dB + k]
    return out


def ptrace_loops(M: np.ndarray, dA: int, dB: int, traced: str) -> np.ndarray:
    """Independent partial-trace oracle via explicit index contraction."""
    M = np.asarray(M, dtype=complex)
    if traced == "B":
        out = np.zeros((dA, dA), dtype=complex)
        for i in range(dA):
            for j in range(dA):
                out[i, j] = sum(M[i * dB + k, j * dB + k] for k in range(dB))
        return out
    out = np.zeros((dB, dB), dtype=complex)
    for k in range(dB):
        for l in range(dB):
            out[k, l] = sum(M[i * dB + k, i * dB + l] for i in range(dA))
    return out
