"""JSON subalgebra documents and point-cloud export.

Subalgebra document::

    {"model": "euclid",
     "elements": [{"a": 1, "rot": [1, 0, 0], "trans": [0, 0, 0]}, ...]}

    {"model": "lorentz", "elements": [{"matrix": [25 numbers, row-major]}, ...]}

``rot`` holds the coefficients of X, Y, Z.
"""

from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .errors import ConformalError
from .euclid import ConfAlgElement, skew_from_coeffs
from .lorentz import is_lorentz_alg
from .orbits import PointCloud
from .subalgebra import Model, Subalgebra


class DocumentError(ConformalError, ValueError):
    exit_code = 1


def _numbers(value, n: int, what: str) -> np.ndarray:
    try:
        arr = np.asarray(value, dtype=float).reshape(-1)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"{what}: expected {n} numbers") from exc
    if arr.size != n or not np.all(np.isfinite(arr)):
        raise DocumentError(f"{what}: expected {n} finite numbers, got {arr.size}")
    return arr


def subalgebra_from_dict(doc: dict) -> Subalgebra:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    try:
        model = Model(str(doc.get("model", "")).lower())
    except ValueError as exc:
        raise DocumentError(f"unknown model {doc.get('model')!r}") from exc
    elements = doc.get("elements")
    if not isinstance(elements, list) or not elements:
        raise DocumentError("'elements' must be a nonempty list")
    basis = []
    for i, rec in enumerate(elements):
        if not isinstance(rec, dict):
            raise DocumentError(f"element {i} must be an object")
        if model is Model.EUCLID:
            a = float(_numbers(rec.get("a", 0.0), 1, f"element {i} a")[0])
            rot = _numbers(rec.get("rot", [0, 0, 0]), 3, f"element {i} rot")
            trans = _numbers(rec.get("trans", [0, 0, 0]), 3, f"element {i} trans")
            basis.append(ConfAlgElement(a, skew_from_coeffs(rot), trans))
        else:
            m = _numbers(rec.get("matrix"), 25, f"element {i} matrix").reshape(5, 5)
            if not is_lorentz_alg(m):
                raise DocumentError(f"element {i} is not in so(1,4)")
            basis.append(m)
    return Subalgebra(model, tuple(basis))


def subalgebra_to_dict(g: Subalgebra) -> dict:
    if g.model is Model.EUCLID:
        elements = [
            {"a": float(c[0]), "rot": [float(v) for v in c[1:4]], "trans": [float(v) for v in c[4:]]}
            for c in g.coords()
        ]
    else:
        elements = [{"matrix": [float(v) for v in m.reshape(-1)]} for m in g.basis]
    return {"model": g.model.value, "elements": elements}


def load_subalgebra(path: str | Path) -> Subalgebra:
    try:
        text = Path(path).read_text()
        doc = json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    return subalgebra_from_dict(doc)


def _fmt(v: float) -> str:
    return repr(float(v))


def cloud_columns(model: Model) -> list[str]:
    return ["x", "y", "z"] if Model(model) is Model.EUCLID else [f"n{i}" for i in range(1, 6)]


def cloud_to_csv(cloud: PointCloud) -> str:
    buf = io.StringIO()
    base = ",".join(_fmt(c) for c in cloud.base_point)
    buf.write(f"# label={cloud.group_label} model={cloud.model.value} base_point={base} seed={cloud.seed}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cloud_columns(cloud.model))
    for p in cloud.points:
        writer.writerow([_fmt(c) for c in p])
    return buf.getvalue()


def cloud_to_dict(cloud: PointCloud) -> dict:
    return {
        "label": cloud.group_label,
        "model": cloud.model.value,
        "base_point": [float(c) for c in cloud.base_point],
        "seed": cloud.seed,
        "columns": cloud_columns(cloud.model),
        "points": [[float(c) for c in p] for p in cloud.points],
        **{k: v for k, v in cloud.meta.items()},
    }


def read_cloud_csv(text: str) -> tuple[dict, np.ndarray]:
    lines = text.splitlines()
    header = {}
    for tok in lines[0].lstrip("# ").split(" "):
        k, _, v = tok.partition("=")
        header[k] = v
    rows = list(csv.reader(lines[2:]))
    return header, np.array(rows, dtype=float)


def dumps(obj) -> str:
    """Deterministic JSON: sorted keys, fixed indentation, trailing newline."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"
