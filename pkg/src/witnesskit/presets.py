"""The two standard witness constructions used throughout the package.

Qubit case: the witness detecting entangled Werner states, built from
|phi+> with free vector |phi->.  Qutrit case: the witness detecting the
PPT bound-entangled family, built from the Choi map and the maximally
entangled two-qutrit state with the standard free vector
(|01> + |10> + |12> + |21>)/2.  Both free vectors are arbitrary choices and
can be overridden.
"""

from __future__ import annotations

import numpy as np

from .basis import StateBasis, gellmann_basis, pauli_basis
from .maps import choi_m1
from .mdi import MdiWitness, build_mdi_witness
from .states import BipartiteDims, PureState, psi_tilde
from .witness import NonlinearWitness, build_map_new, build_new


def phi_plus() -> PureState:
    """(|00> + |11>)/sqrt(2)."""
    return PureState(np.array([1, 0, 0, 1], dtype=complex) / np.sqrt(2), BipartiteDims(2, 2))


def phi_minus() -> PureState:
    """(|00> - |11>)/sqrt(2)."""
    return PureState(np.array([1, 0, 0, -1], dtype=complex) / np.sqrt(2), BipartiteDims(2, 2))


def zeta_default() -> PureState:
    """(|01> + |10> + |12> + |21>)/2, the qutrit free vector."""
    v = np.zeros(9, dtype=complex)
    v[[1, 3, 5, 7]] = 0.5
    return PureState(v, BipartiteDims(3, 3))


def qubit_witness(psi: PureState | None = None) -> NonlinearWitness:
    """Nonlinear witness for the Werner family; denom = 1/2 with the default psi."""
    return build_new(phi_plus(), psi if psi is not None else phi_minus())


def qutrit_witness(zeta: PureState | None = None) -> NonlinearWitness:
    """Nonlinear map witness for the bound-entangled family; denom = 1 by default."""
    return build_map_new(choi_m1(), psi_tilde(), zeta if zeta is not None else zeta_default())


def qubit_mdi_witness(psi: PureState | None = None) -> tuple[NonlinearWitness, MdiWitness]:
    F = qubit_witness(psi)
    b = pauli_basis()
    return F, build_mdi_witness(F, b, b)


def qutrit_mdi_witness(zeta: PureState | None = None) -> tuple[NonlinearWitness, MdiWitness]:
    F = qutrit_witness(zeta)
    b = gellmann_basis()
    return F, build_mdi_witness(F, b, b)


def basis_pair_for(dims) -> tuple[StateBasis, StateBasis]:
    from .basis import standard_basis
    from .states import as_dims

    d = as_dims(dims)
    return standard_basis(d.dA), standard_basis(d.dB)
