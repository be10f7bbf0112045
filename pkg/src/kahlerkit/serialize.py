"""JSON wire formats for the library's value types.

Schemas:
  matrix   {"rows": r, "cols": c, "re": [...], "im": [...]}   row-major
  multivector  {"terms": [{"blade": [indices], "re": x, "im": y}, ...]}
  signature    {"diag": [1|-1|0, ...]}
  form         {"coeffs": [{"mask": [indices], "re": x, "im": y}, ...]}
  sixmap       {"matrix": <matrix>, "det": d, "form_residual": r}
  schmidt      {"terms": [{"weight": w, "left": <matrix>, "right": <matrix>}],
                "residual": r}
"""

from __future__ import annotations

import json

import numpy as np

from kahlerkit.blades import Multivector, Signature
from kahlerkit.cover_so33 import SixMap
from kahlerkit.forms import NonhomogeneousForm, mask_indices, mask_of_indices

__all__ = [
    "SchemaError",
    "matrix_to_json",
    "matrix_from_json",
    "multivector_to_json",
    "multivector_from_json",
    "signature_to_json",
    "signature_from_json",
    "form_to_json",
    "form_from_json",
    "sixmap_to_json",
    "schmidt_to_json",
    "dumps",
]


class SchemaError(ValueError):
    """Input does not match the documented JSON schema."""


def dumps(obj) -> str:
    """Deterministic JSON text: sorted keys, no whitespace drift."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), allow_nan=False)


def matrix_to_json(M) -> dict:
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2:
        raise SchemaError("matrix must be two dimensional")
    return {
        "rows": M.shape[0],
        "cols": M.shape[1],
        "re": [float(v) for v in M.real.reshape(-1)],
        "im": [float(v) for v in M.imag.reshape(-1)],
    }


def matrix_from_json(obj) -> np.ndarray:
    try:
        rows, cols = int(obj["rows"]), int(obj["cols"])
        re = np.asarray(obj["re"], dtype=float)
        im = np.asarray(obj["im"], dtype=float)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad matrix object: {exc}") from None
    if re.shape != (rows * cols,) or im.shape != (rows * cols,):
        raise SchemaError("entry count does not match rows*cols")
    return (re + 1j * im).reshape(rows, cols)


def multivector_to_json(mv: Multivector) -> dict:
    terms = []
    for mask, c in mv.items():
        terms.append(
            {
                "blade": [i for i in range(6) if mask >> i & 1],
                "re": float(c.real),
                "im": float(c.imag),
            }
        )
    return {"terms": terms}


def multivector_from_json(obj) -> Multivector:
    try:
        terms = {}
        for item in obj["terms"]:
            mask = 0
            for i in item["blade"]:
                mask |= 1 << int(i)
            terms[mask] = terms.get(mask, 0j) + complex(item["re"], item["im"])
        return Multivector(terms)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad multivector object: {exc}") from None


def signature_to_json(sig: Signature) -> dict:
    return {"diag": list(sig.diag)}


def signature_from_json(obj) -> Signature:
    try:
        return Signature(tuple(obj["diag"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad signature object: {exc}") from None


def form_to_json(form: NonhomogeneousForm) -> dict:
    coeffs = []
    for mask, c in sorted(form.mask_coeffs().items()):
        coeffs.append(
            {"mask": list(mask_indices(mask)), "re": float(c.real), "im": float(c.imag)}
        )
    return {"coeffs": coeffs}


def form_from_json(obj) -> NonhomogeneousForm:
    try:
        out = {}
        for item in obj["coeffs"]:
            mask = mask_of_indices(int(i) for i in item["mask"])
            out[mask] = out.get(mask, 0j) + complex(item["re"], item["im"])
        return NonhomogeneousForm.from_mask_coeffs(out)
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"bad form object: {exc}") from None


def sixmap_to_json(sm: SixMap) -> dict:
    return {
        "matrix": matrix_to_json(sm.matrix),
        "det": float(sm.det),
        "form_residual": float(sm.form_residual),
    }


def schmidt_to_json(terms, residual: float) -> dict:
    return {
        "terms": [
            {
                "weight": float(w),
                "left": matrix_to_json(left),
                "right": matrix_to_json(right),
            }
            for left, right, w in terms
        ],
        "residual": float(residual),
    }
