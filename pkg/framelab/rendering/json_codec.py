"""JSON forms of matrices, matroids, templates and minor certificates.

Decoders raise FormatError on anything malformed; label problems found while
building the objects surface as LabelError.
"""

import json
import logging
from pathlib import Path
from typing import Any

from framelab.errors import FormatError, PreconditionError
from framelab.linalg import GF, Mat, SubgroupGamma, Subspace
from framelab.matroid import MinorCertificate, RepresentedMatroid
from framelab.templates import FrameTemplate

logger = logging.getLogger(__name__)

MATROID_KIND = "represented-matroid"


def _require(data: Any, key: str, kind: type | tuple[type, ...], where: str) -> Any:
    if not isinstance(data, dict):
        raise FormatError(f"{where} must be a JSON object")
    if key not in data:
        raise FormatError(f"{where} is missing {key!r}")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool):
        raise FormatError(f"{where}.{key} has the wrong type")
    return value


def _labels(data: dict, key: str, where: str) -> list[str]:
    labels = _require(data, key, list, where)
    if not all(isinstance(x, str) for x in labels):
        raise FormatError(f"{where}.{key} must be a list of strings")
    return labels


def _field(p: int):
    try:
        return GF(p)
    except PreconditionError as e:
        raise FormatError(str(e)) from e


def matrix_to_dict(m: Mat) -> dict[str, Any]:
    return {"p": m.p, "rows": list(m.row_labels), "cols": list(m.col_labels), "entries": m.to_lists()}


def matrix_from_dict(data: Any, where: str = "matrix") -> Mat:
    p = _require(data, "p", int, where)
    rows = _labels(data, "rows", where)
    cols = _labels(data, "cols", where)
    entries = _require(data, "entries", list, where)
    if len(entries) != len(rows):
        raise FormatError(f"{where} has {len(entries)} entry rows for {len(rows)} row labels")
    for row in entries:
        if not isinstance(row, list) or len(row) != len(cols):
            raise FormatError(f"{where} rows must be lists of {len(cols)} integers")
        if not all(isinstance(x, int) and not isinstance(x, bool) for x in row):
            raise FormatError(f"{where} entries must be integers")
    return Mat(_field(p), rows, cols, entries)


def matroid_to_dict(m: RepresentedMatroid) -> dict[str, Any]:
    return {"kind": MATROID_KIND, **matrix_to_dict(m.rep)}


def matroid_from_dict(data: Any) -> RepresentedMatroid:
    if isinstance(data, dict) and data.get("kind", MATROID_KIND) != MATROID_KIND:
        raise FormatError(f"expected kind {MATROID_KIND!r}, got {data.get('kind')!r}")
    return RepresentedMatroid(matrix_from_dict(data, "matroid"))


def _subspace_from_dict(data: Any, field, ambient: tuple[str, ...], where: str) -> Subspace:
    basis = matrix_from_dict(data, where)
    if basis.field != field:
        raise FormatError(f"{where} is over GF({basis.p}), expected GF({field.p})")
    if set(basis.col_labels) != set(ambient):
        raise FormatError(f"{where} columns must be {list(ambient)}")
    return Subspace.span(basis.select(cols=ambient))


def template_to_dict(phi: FrameTemplate) -> dict[str, Any]:
    return {
        "p": phi.p,
        "gamma": list(phi.gamma),
        "C": list(phi.C),
        "X": list(phi.X),
        "Y0": list(phi.Y0),
        "Y1": list(phi.Y1),
        "A1": matrix_to_dict(phi.a1),
        "delta_basis": matrix_to_dict(phi.delta.basis),
        "lambda_basis": matrix_to_dict(phi.lam.basis),
    }


def template_from_dict(data: Any) -> FrameTemplate:
    p = _require(data, "p", int, "template")
    field = _field(p)
    gamma_values = _require(data, "gamma", list, "template")
    try:
        gamma = SubgroupGamma(field, tuple(int(g) for g in gamma_values))
    except (PreconditionError, TypeError, ValueError) as e:
        raise FormatError(f"template.gamma: {e}") from e
    sets = {name: tuple(_labels(data, name, "template")) for name in ("C", "X", "Y0", "Y1")}
    cy = sets["Y0"] + sets["Y1"] + sets["C"]
    a1 = matrix_from_dict(_require(data, "A1", dict, "template"), "template.A1")
    delta = _subspace_from_dict(_require(data, "delta_basis", dict, "template"), field, cy, "template.delta_basis")
    lam = _subspace_from_dict(_require(data, "lambda_basis", dict, "template"), field, sets["X"], "template.lambda_basis")
    return FrameTemplate(gamma, sets["C"], sets["X"], sets["Y0"], sets["Y1"], a1, delta, lam)


def certificate_to_dict(cert: MinorCertificate) -> dict[str, Any]:
    return {
        "contract": list(cert.contract),
        "delete": list(cert.delete),
        "map": dict(cert.map),
        "scalings": dict(cert.scalings) if cert.scalings else None,
        "mode": cert.mode,
        "notes": list(cert.notes),
    }


def certificate_from_dict(data: Any) -> MinorCertificate:
    mapping = _require(data, "map", dict, "certificate")
    scalings = data.get("scalings")
    if scalings is not None and not isinstance(scalings, dict):
        raise FormatError("certificate.scalings must be an object or null")
    mode = data.get("mode", "abstract")
    if mode not in ("abstract", "represented"):
        raise FormatError(f"certificate.mode must be abstract or represented, got {mode!r}")
    return MinorCertificate(
        contract=tuple(_labels(data, "contract", "certificate")),
        delete=tuple(_labels(data, "delete", "certificate")),
        map={str(k): str(v) for k, v in mapping.items()},
        scalings={str(k): int(v) for k, v in scalings.items()} if scalings else None,
        mode=mode,
        notes=[str(n) for n in data.get("notes", [])],
    )


def load_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise FormatError(f"{path}: invalid JSON ({e})") from e
    except OSError as e:
        raise FormatError(f"{path}: cannot read ({e.strerror})") from e


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2, sort_keys=False)
