"""witnesskit: linear, nonlinear, and measurement-device-independent
entanglement witnesses for bipartite quantum states."""

from .basis import (
    StateBasis,
    decompose,
    gellmann_basis,
    matrix_unit_basis,
    pauli_basis,
    reconstruct,
    standard_basis,
)
from .config import TOL, Tolerances, load_tolerances
from .errors import (
    DegenerateDenominator,
    DimensionMismatch,
    EffectViolation,
    ImaginaryResidue,
    NoConvergence,
    NotHermitian,
    OutOfFamily,
    Singular,
    WitnessKitError,
    ZeroFilter,
)
from .linalg import (
    EigenDecomposition,
    hermitian_eig,
    hs_inner,
    kron,
    min_eigenvalue,
    partial_trace,
    partial_transpose,
    solve_hermitian_system,
)
from .maps import (
    LinearMap,
    adjoint_map,
    apply_map,
    choi_m1,
    extend_apply,
    identity_map,
    map_from_action,
    map_norm_g,
    transpose_map,
)
from .mdi import (
    MdiWitness,
    PovmEffect,
    ProbTable,
    build_mdi_witness,
    eval_mdi_linear,
    eval_mdi_new,
    mes_effect,
    prob_table,
)
from .presets import (
    phi_minus,
    phi_plus,
    qubit_mdi_witness,
    qubit_witness,
    qutrit_mdi_witness,
    qutrit_witness,
    zeta_default,
)
from .states import (
    BipartiteDims,
    DensityMatrix,
    PureState,
    bound_entangled_b,
    max_entangled,
    maximally_mixed,
    psi_tilde,
    schmidt_weight,
    werner,
)
from .verify import (
    FilterResult,
    SeparableDecomposition,
    check_filtering_identity,
    effective_povms,
    filter_state,
    random_density,
    random_effect,
    random_separable,
    run_verification,
)
from .witness import (
    LinearWitness,
    NonlinearWitness,
    build_map_new,
    build_new,
    eval_linear,
    eval_nonlinear,
    map_witness,
    split_herm,
    witness_from_eigvec,
)

__version__ = "0.1.0"
