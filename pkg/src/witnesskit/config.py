"""Central tolerance record.

Every numerical threshold used by the package lives here so that tests and the
CLI can reference tolerances by name.  The environment variable
``WITNESSKIT_TOL`` overrides the defaults: a bare float replaces
``witness_slack`` (the negativity slack used by the verification gates), while
a JSON object overrides any subset of fields by name, e.g.
``WITNESSKIT_TOL='{"pmm_cutoff": 1e-10}'``.
"""

from __future__ import annotations

import dataclasses
import json
import os


@dataclasses.dataclass(frozen=True)
class Tolerances:
    hermiticity: float = 1e-12        # max-norm Hermiticity check
    trace: float = 1e-12              # unit-trace check for states
    psd: float = 1e-10                # eigenvalue floor for states/effects
    unit_norm: float = 1e-12          # pure-state normalization
    eig_residual: float = 1e-10       # eigendecomposition reconstruction
    solve_residual: float = 1e-9      # relative residual for linear solves
    condition_limit: float = 1e12     # condition estimate above which solves fail
    decompose_residual: float = 1e-9  # basis-decomposition reconstruction
    imag_residue: float = 1e-10       # imaginary part allowed in real traces
    denom_cutoff: float = 1e-12       # minimal nonlinear-witness denominator
    pmm_cutoff: float = 1e-12         # minimal P(1,1|m_A,m_B) in the MDI ratio
    filter_cutoff: float = 1e-14      # minimal filter constant K
    witness_slack: float = 1e-9       # negativity slack on separable inputs
    identity_residual: float = 1e-9   # filtering-identity check


def load_tolerances(env: str | None = None) -> Tolerances:
    """Build the tolerance record, applying ``WITNESSKIT_TOL`` overrides."""
    raw = os.environ.get("WITNESSKIT_TOL") if env is None else env
    if not raw:
        return Tolerances()
    try:
        parsed = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"cannot parse WITNESSKIT_TOL: {raw!r}") from exc
    if isinstance(parsed, (int, float)):
        return Tolerances(witness_slack=float(parsed))
    if isinstance(parsed, dict):
        known = {f.name for f in dataclasses.fields(Tolerances)}
        unknown = set(parsed) - known
        if unknown:
            raise ValueError(f"unknown tolerance fields: {sorted(unknown)}")
        return Tolerances(**{k: float(v) for k, v in parsed.items()})
    raise ValueError("WITNESSKIT_TOL must be a number or a JSON object")


TOL = load_tolerances()
