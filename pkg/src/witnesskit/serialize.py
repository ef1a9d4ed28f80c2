"""JSON/CSV serialization for matrices, states, maps, and witness bundles.

Matrix format: {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
Witness bundle: {"W": ..., "H": ..., "A": ..., "denom": ..., "dims": [dA, dB]}.
Linear map: the Choi matrix fields plus {"dimIn": ..., "dimOut": ...}.
"""

from __future__ import annotations

import csv
import io

import numpy as np

from .linalg import as_cmatrix
from .maps import LinearMap
from .states import BipartiteDims, DensityMatrix
from .witness import NonlinearWitness


def matrix_to_json(M: np.ndarray) -> dict:
    M = as_cmatrix(M)
    return {
        "dim": int(M.shape[0]),
        "re": M.real.tolist(),
        "im": M.imag.tolist(),
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    try:
        dim = int(obj["dim"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed matrix object: {exc}") from exc
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ValueError(f"matrix entries do not match declared dim {dim}")
    return as_cmatrix(re + 1j * im)


def state_to_json(rho: DensityMatrix) -> dict:
    obj = matrix_to_json(rho.mat)
    if rho.dims is not None:
        obj["dims"] = [rho.dims.dA, rho.dims.dB]
    return obj


def witness_to_json(F: NonlinearWitness) -> dict:
    return {
        "W": matrix_to_json(F.W),
        "H": matrix_to_json(F.H),
        "A": matrix_to_json(F.A),
        "denom": float(F.denom),
        "dims": [F.dims.dA, F.dims.dB],
    }


def witness_from_json(obj: dict) -> NonlinearWitness:
    try:
        W = matrix_from_json(obj["W"])
        H = matrix_from_json(obj["H"])
        A = matrix_from_json(obj["A"])
        denom = float(obj["denom"])
        dA, dB = (int(x) for x in obj["dims"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed witness bundle: {exc}") from exc
    return NonlinearWitness(W, H, A, denom, BipartiteDims(dA, dB))


def map_to_json(M: LinearMap) -> dict:
    obj = matrix_to_json(M.choi)
    obj["dimIn"] = M.dim_in
    obj["dimOut"] = M.dim_out
    return obj


def map_from_json(obj: dict) -> LinearMap:
    try:
        choi = matrix_from_json(obj)
        din = int(obj["dimIn"])
        dout = int(obj["dimOut"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed map object: {exc}") from exc
    return LinearMap(din, dout, choi)


def coeffs_to_csv(c: np.ndarray) -> str:
    """Coefficient matrix as CSV text with full-precision entries."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for row in np.asarray(c, dtype=float):
        writer.writerow([format_float(x) for x in row])
    return buf.getvalue()


def coeffs_from_csv(text: str) -> np.ndarray:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    return np.array([[float(x) for x in row] for row in rows])


def format_float(x: float) -> str:
    """17 significant digits: round-trips every double."""
    return f"{float(x):.17g}"
