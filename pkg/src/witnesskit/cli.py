"""Command-line front end.

Subcommands:
  scan       sweep a state family and tabulate all witness values
  coeffs     reproduce the reference coefficient tables as CSV
  mdi-eval   evaluate I(P), N(P) for a state/witness/effect combination
  verify     randomized device-independence property run
  decompose  coefficients of an arbitrary Hermitian operator file

Exit codes: 0 success; 2 parse/validation error; 3 degenerate denominator;
10 entanglement certified (mdi-eval with N < 0); 1 verification failures or
coefficient mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import reference
from .basis import decompose as basis_decompose
from .basis import standard_basis
from .config import TOL
from .errors import DegenerateDenominator, WitnessKitError
from .linalg import min_eigenvalue, partial_transpose
from .mdi import MdiWitness, PovmEffect, build_mdi_witness, eval_mdi_linear, eval_mdi_new, mes_effect, prob_table
from .presets import qubit_mdi_witness, qutrit_mdi_witness
from .serialize import (
    coeffs_to_csv,
    format_float,
    matrix_from_json,
    witness_from_json,
)
from .states import DensityMatrix, PureState, as_dims, bound_entangled_b, werner
from .verify import run_verification
from .witness import NonlinearWitness, eval_linear, eval_nonlinear

SCAN_COLUMNS = ("linear", "nonlinear", "mdi_linear", "mdi_nonlinear", "ppt_min_eig")


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_free_vector(path: str | None, dims) -> PureState | None:
    if path is None:
        return None
    obj = _load_json(path)
    re = np.asarray(obj.get("re", []), dtype=float)
    im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    return PureState(re + 1j * im, as_dims(dims))


def _case_witness(case: str, free_vector: str | None = None) -> tuple[NonlinearWitness, MdiWitness]:
    if case == "werner":
        psi = _load_free_vector(free_vector, (2, 2))
        return qubit_mdi_witness(psi)
    if case == "bound":
        zeta = _load_free_vector(free_vector, (3, 3))
        return qutrit_mdi_witness(zeta)
    raise ValueError(f"unknown case {case!r}")


def _round17(obj):
    """Normalize floats through 17-significant-digit formatting (value exact)."""
    if isinstance(obj, float):
        return float(format_float(obj))
    if isinstance(obj, dict):
        return {k: _round17(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_round17(v) for v in obj]
    return obj


def _emit_json(obj, stream=None) -> None:
    json.dump(_round17(obj), stream or sys.stdout, indent=2)
    (stream or sys.stdout).write("\n")


# ---------------------------------------------------------------- scan


def cmd_scan(args) -> int:
    family = args.family
    lo, hi, steps = args.start, args.stop, args.steps
    if steps < 2:
        raise ValueError("steps must be >= 2")
    if not lo < hi:
        raise ValueError("--from must be strictly less than --to")
    F, w = _case_witness(family, args.free_vector)
    make_state = werner if family == "werner" else bound_entangled_b
    dims = F.dims
    A1 = mes_effect(dims.dA)
    B1 = mes_effect(dims.dB)
    grid = np.linspace(lo, hi, steps)
    rows = []
    for x in grid:
        rho = make_state(float(x))
        P = prob_table(rho, w, A1, B1)
        rows.append(
            {
                "linear": eval_linear(F.linear(), rho),
                "nonlinear": eval_nonlinear(F, rho),
                "mdi_linear": eval_mdi_linear(w, P),
                "mdi_nonlinear": eval_mdi_new(w, P),
                "ppt_min_eig": min_eigenvalue(partial_transpose(rho.mat, dims, "B")),
            }
        )
    param = "nu" if family == "werner" else "a"
    report = {
        "family": family,
        "parameter": param,
        "grid": [float(x) for x in grid],
        "rows": rows,
    }
    prefix = Path(args.out) if args.out else Path(f"scan_{family}")
    csv_lines = [",".join((param,) + SCAN_COLUMNS)]
    for x, row in zip(grid, rows):
        csv_lines.append(
            ",".join([format_float(x)] + [format_float(row[c]) for c in SCAN_COLUMNS])
        )
    prefix.with_suffix(".csv").write_text("\n".join(csv_lines) + "\n", encoding="utf-8")
    with open(prefix.with_suffix(".json"), "w", encoding="utf-8") as fh:
        _emit_json(report, fh)
    _emit_json(report)
    return 0


# ---------------------------------------------------------------- coeffs

_TARGETS = {
    "werner": (
        ("alpha", "beta", "gamma"),
        (reference.ALPHA_QUBIT, reference.BETA_QUBIT, reference.GAMMA_QUBIT),
    ),
    "bound": (
        ("lambda", "mu", "nu"),
        (reference.LAMBDA_QUTRIT, reference.MU_QUTRIT, reference.NU_QUTRIT),
    ),
}


def cmd_coeffs(args) -> int:
    names, targets = _TARGETS[args.case]
    _, w = _case_witness(args.case)
    computed = (w.alpha, w.beta, w.gamma)
    outdir = Path(args.out) if args.out else Path(".")
    outdir.mkdir(parents=True, exist_ok=True)
    worst = 0.0
    for name, got, want in zip(names, computed, targets):
        (outdir / f"{args.case}_{name}.csv").write_text(coeffs_to_csv(got), encoding="utf-8")
        worst = max(worst, float(np.abs(got - want).max()))
    print(f"max deviation from reference tables: {format_float(worst)}")
    if worst > TOL.decompose_residual:
        print("coefficient reproduction FAILED", file=sys.stderr)
        return 1
    return 0


# ---------------------------------------------------------------- mdi-eval


def cmd_mdi_eval(args) -> int:
    F = witness_from_json(_load_json(args.witness))
    dims = F.dims
    mat = matrix_from_json(_load_json(args.state))
    rho = DensityMatrix(mat, dims)
    basisA, basisB = standard_basis(dims.dA), standard_basis(dims.dB)
    w = build_mdi_witness(F, basisA, basisB)
    A1 = (
        PovmEffect(matrix_from_json(_load_json(args.effect_a)), dims.dA)
        if args.effect_a
        else mes_effect(dims.dA)
    )
    B1 = (
        PovmEffect(matrix_from_json(_load_json(args.effect_b)), dims.dB)
        if args.effect_b
        else mes_effect(dims.dB)
    )
    P = prob_table(rho, w, A1, B1)
    I_val = eval_mdi_linear(w, P)
    N_val = eval_mdi_new(w, P)
    _emit_json(
        {
            "I": I_val,
            "N": N_val,
            "pmm": P.pmm,
            "table": P.p.tolist(),
        }
    )
    return 10 if N_val < 0 else 0


# ---------------------------------------------------------------- verify


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise ValueError("trials must be >= 1")
    cases = ("werner", "bound") if args.case == "both" else (args.case,)
    details = {}
    total_failures = 0
    total_ms = 0.0
    worst = None
    for i, case in enumerate(cases):
        F, w = _case_witness(case)
        rep = run_verification(F, w, args.trials, args.seed + i)
        details[case] = rep
        total_failures += rep["failures"]
        total_ms += rep["runtime_ms"]
        if rep["worst_value"] is not None:
            worst = rep["worst_value"] if worst is None else min(worst, rep["worst_value"])
    _emit_json(
        {
            "trials": args.trials * len(cases),
            "failures": total_failures,
            "worst_value": worst,
            "runtime_ms": total_ms,
            "cases": details,
        }
    )
    return 0 if total_failures == 0 else 1


# ---------------------------------------------------------------- decompose


def cmd_decompose(args) -> int:
    dims = as_dims(tuple(args.dims))
    O = matrix_from_json(_load_json(args.operator))
    c = basis_decompose(O, standard_basis(dims.dA), standard_basis(dims.dB))
    text = coeffs_to_csv(c)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="witnesskit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scan", help="sweep a state family")
    p.add_argument("--family", choices=("werner", "bound"), required=True)
    p.add_argument("--from", dest="start", type=float, required=True)
    p.add_argument("--to", dest="stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", help="output file prefix (writes .csv and .json)")
    p.add_argument("--free-vector", help="JSON vector overriding the default free vector")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("coeffs", help="reproduce reference coefficient tables")
    p.add_argument("--case", choices=("werner", "bound"), required=True)
    p.add_argument("--out", help="output directory for CSV files")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("mdi-eval", help="evaluate the MDI witness on files")
    p.add_argument("state", help="state matrix JSON file")
    p.add_argument("witness", help="witness bundle JSON file")
    p.add_argument("--effect-a", help="Alice effect JSON file (default: MES projector)")
    p.add_argument("--effect-b", help="Bob effect JSON file (default: MES projector)")
    p.set_defaults(func=cmd_mdi_eval)

    p = sub.add_parser("verify", help="randomized device-independence run")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--case", choices=("werner", "bound", "both"), default="both")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="decompose a Hermitian operator file")
    p.add_argument("operator", help="operator matrix JSON file")
    p.add_argument("--dims", type=int, nargs=2, required=True, metavar=("DA", "DB"))
    p.add_argument("--out", help="output CSV file")
    p.set_defaults(func=cmd_decompose)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegenerateDenominator as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (WitnessKitError, ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
