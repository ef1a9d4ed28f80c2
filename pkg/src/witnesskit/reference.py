"""Reference coefficient tables for the two standard witnesses.

These are the published tables for the qubit (Pauli-basis) and qutrit
(Gell-Mann-basis) constructions; the ``coeffs`` CLI command checks the
decomposition pipeline against them and exits nonzero on any deviation.
"""

from __future__ import annotations

import numpy as np

_R3 = np.sqrt(3.0)

# Qubit witness over the Pauli state basis.
ALPHA_QUBIT = np.array(
    [
        [1, 0, 0, -1],
        [0, 1, 0, -1],
        [0, 0, 1, -1],
        [-1, -1, -1, 4],
    ],
    dtype=float,
)

BETA_QUBIT = np.array(
    [
        [0, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, 1, -2],
    ],
    dtype=float,
)

GAMMA_QUBIT = np.array(
    [
        [0, 1, 0, -1],
        [-1, 0, 0, 1],
        [0, 0, 0, 0],
        [1, -1, 0, 0],
    ],
    dtype=float,
)

# Qutrit map witness over the Gell-Mann state basis.
LAMBDA_QUTRIT = np.array(
    [
        [15 / 4, 3 / 2, -3 / 2, -9 / 4, 3 / 2, -3 / 2, 3 / 2, -3 / 2, 1 / 2],
        [3 / 2, -3 / 2, 0, 0, 0, 0, 0, 0, 0],
        [-3 / 2, 0, 3 / 2, 0, 0, 0, 0, 0, 0],
        [3 / 4, 0, 0, 3 / 4, 0, 0, 0, 0, -3 / 2],
        [3 / 2, 0, 0, 0, -3 / 2, 0, 0, 0, 0],
        [-3 / 2, 0, 0, 0, 0, 3 / 2, 0, 0, 0],
        [3 / 2, 0, 0, 0, 0, 0, -3 / 2, 0, 0],
        [-3 / 2, 0, 0, 0, 0, 0, 0, 3 / 2, 0],
        [-5 / 2, 0, 0, 3 / 2, 0, 0, 0, 0, 1],
    ],
    dtype=float,
)

MU_QUTRIT = (_R3 / 8) * np.array(
    [
        [-3, 3, -3, 0, 6, -6, -6, -3, -4],
        [6, 0, 0, 3, -3, 0, 0, 0, 2],
        [-3, 0, 0, 0, 0, 3, 0, 0, 0],
        [-3, 0, 0, 0, 0, 0, 3, 0, 0],
        [6, -3, 0, 0, 0, 0, -3, 0, 0],
        [-6, 0, 3, 0, 0, 0, 0, 3, 0],
        [12, 0, 0, -3, -3, 0, 0, 0, 2],
        [-3, 0, 0, 0, 0, 3, 0, 0, 0],
        [2, -4, 0, 0, 0, 0, 2, 0, 0],
    ],
    dtype=float,
)

NU_QUTRIT = (_R3 / 8) * np.array(
    [
        [-3, 3, 9, -6, 0, 0, -3, 0, 0],
        [3, 0, 0, 0, 0, -3, 0, 0, 0],
        [6, 0, 0, 3, -3, 0, 0, 0, -6],
        [3, 0, -6, 0, 0, 0, 0, 3, 0],
        [0, 0, -3, 0, 0, 0, 0, 3, 0],
        [0, -3, 0, 0, 0, 0, 3, 0, 0],
        [-3, 0, 0, 0, 0, 3, 0, 0, 0],
        [-12, 0, 0, 3, 3, 0, 0, 0, 6],
        [6, 0, 0, 0, 0, 0, 0, -6, 0],
    ],
    dtype=float,
)
