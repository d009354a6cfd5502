"""JSON file formats for structures, bases, maps and elements.

All numbers are stored as two-element arrays ``[re, im]``. Tensors are
flat lists in row-major order of their matrix form:

* algebra file: ``{"dim": d, "m": [...d^3 pairs...], "u": [...d pairs...],
  "delta": [...d^3 pairs, optional...], "eps": [...d pairs, optional...],
  "dagger": bool, optional}``. The ``m`` list is ordered ``[k][i][j]``
  (output index major): entry ``k*d*d + i*d + j`` is the e_k coefficient
  of ``m(e_i (x) e_j)``. ``delta`` is ordered ``[i][j][k]`` (output pair
  major): entry ``(i*d + j)*d + k`` is the ``e_i (x) e_j`` weight of
  ``delta(e_k)``. Omitted ``delta``/``eps`` default to the adjoints of
  ``m``/``u``, and ``dagger`` then defaults to true.
* basis file: ``{"dim": d, "kind": "arbitrary|orthogonal|orthonormal",
  "vectors": [[...d pairs...], ...]}``.
* map file: ``{"rows": r, "cols": c, "entries": [...r*c pairs...]}``.
* vector file: ``{"dim": d, "vector": [...d pairs...]}``.

Writing uses Python's shortest round-tripping float representation, so a
write-read cycle is entrywise exact.
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .errors import FileFormatError
from .frobenius import BasisKind, BasisSpec, FrobeniusStructure

__all__ = [
    "algebra_doc",
    "basis_doc",
    "load_algebra",
    "dump_algebra",
    "load_basis",
    "dump_basis",
    "load_map",
    "dump_map",
    "load_vector",
    "dump_vector",
]


def _read_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise FileFormatError(
            f"{path}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from exc


def _write_json(path: str, obj: Any) -> None:
    text = json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _expect_dict(doc: Any, path: str) -> dict:
    if not isinstance(doc, dict):
        raise FileFormatError(f"{path}: top level must be a JSON object")
    return doc


def _get_int(doc: dict, field: str, path: str, minimum: int = 1) -> int:
    if field not in doc:
        raise FileFormatError(f"{path}: missing field '{field}'")
    value = doc[field]
    if not isinstance(value, int) or isinstance(value, bool) or value < minimum:
        raise FileFormatError(f"{path}: field '{field}' must be an integer >= {minimum}")
    return value


def _decode_pairs(raw: Any, count: int, path: str, field: str) -> np.ndarray:
    if not isinstance(raw, list):
        raise FileFormatError(f"{path}: field '{field}' must be a list of [re, im] pairs")
    if len(raw) != count:
        raise FileFormatError(
            f"{path}: field '{field}' expected {count} complex pairs, got {len(raw)}"
        )
    out = np.empty(count, dtype=np.complex128)
    for idx, pair in enumerate(raw):
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in pair)
        ):
            raise FileFormatError(f"{path}: field '{field}' entry {idx} is not an [re, im] pair")
        out[idx] = complex(pair[0], pair[1])
    if not np.all(np.isfinite(out)):
        raise FileFormatError(f"{path}: field '{field}' contains non-finite values")
    return out


def _encode_pairs(arr: np.ndarray) -> list:
    flat = np.asarray(arr, dtype=np.complex128).reshape(-1)
    return [[float(z.real), float(z.imag)] for z in flat]


def load_algebra(path: str) -> FrobeniusStructure:
    doc = _expect_dict(_read_json(path), path)
    d = _get_int(doc, "dim", path)
    m = _decode_pairs(doc["m"] if "m" in doc else _missing(path, "m"), d**3, path, "m").reshape(d, d * d)
    u = _decode_pairs(doc["u"] if "u" in doc else _missing(path, "u"), d, path, "u")
    has_delta = "delta" in doc and doc["delta"] is not None
    has_eps = "eps" in doc and doc["eps"] is not None
    delta = (
        _decode_pairs(doc["delta"], d**3, path, "delta").reshape(d * d, d)
        if has_delta
        else m.conj().T
    )
    eps = _decode_pairs(doc["eps"], d, path, "eps") if has_eps else u.conj()
    dagger = doc.get("dagger", not (has_delta or has_eps))
    if not isinstance(dagger, bool):
        raise FileFormatError(f"{path}: field 'dagger' must be a boolean")
    try:
        return FrobeniusStructure(dim=d, m=m, u=u, delta=delta, eps=eps, dagger=dagger)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


def _missing(path: str, field: str):
    raise FileFormatError(f"{path}: missing field '{field}'")


def algebra_doc(f: FrobeniusStructure) -> dict:
    return {
        "dim": f.dim,
        "m": _encode_pairs(f.m),
        "u": _encode_pairs(f.u),
        "delta": _encode_pairs(f.delta),
        "eps": _encode_pairs(f.eps),
        "dagger": bool(f.dagger),
    }


def dump_algebra(f: FrobeniusStructure, path: str) -> None:
    _write_json(path, algebra_doc(f))


def load_basis(path: str) -> BasisSpec:
    doc = _expect_dict(_read_json(path), path)
    d = _get_int(doc, "dim", path)
    kind_raw = doc.get("kind")
    try:
        kind = BasisKind(kind_raw)
    except ValueError:
        raise FileFormatError(
            f"{path}: field 'kind' must be one of arbitrary/orthogonal/orthonormal, got {kind_raw!r}"
        ) from None
    vectors_raw = doc.get("vectors")
    if not isinstance(vectors_raw, list) or len(vectors_raw) != d:
        raise FileFormatError(f"{path}: field 'vectors' must list exactly {d} vectors")
    rows = [_decode_pairs(v, d, path, f"vectors[{i}]") for i, v in enumerate(vectors_raw)]
    try:
        return BasisSpec(dim=d, vectors=np.array(rows), kind=kind)
    except ValueError as exc:
        raise FileFormatError(f"{path}: {exc}") from exc


def basis_doc(b: BasisSpec) -> dict:
    return {
        "dim": b.dim,
        "kind": b.kind.value,
        "vectors": [_encode_pairs(b.vectors[i]) for i in range(b.dim)],
    }


def dump_basis(b: BasisSpec, path: str) -> None:
    _write_json(path, basis_doc(b))


def load_map(path: str) -> np.ndarray:
    doc = _expect_dict(_read_json(path), path)
    rows = _get_int(doc, "rows", path)
    cols = _get_int(doc, "cols", path)
    entries = _decode_pairs(
        doc["entries"] if "entries" in doc else _missing(path, "entries"),
        rows * cols,
        path,
        "entries",
    )
    return entries.reshape(rows, cols)


def dump_map(g: np.ndarray, path: str) -> None:
    g = np.atleast_2d(np.asarray(g, dtype=np.complex128))
    _write_json(
        path,
        {"rows": g.shape[0], "cols": g.shape[1], "entries": _encode_pairs(g)},
    )


def load_vector(path: str) -> np.ndarray:
    doc = _expect_dict(_read_json(path), path)
    d = _get_int(doc, "dim", path)
    return _decode_pairs(
        doc["vector"] if "vector" in doc else _missing(path, "vector"), d, path, "vector"
    )


def dump_vector(v: np.ndarray, path: str) -> None:
    v = np.asarray(v, dtype=np.complex128).reshape(-1)
    _write_json(path, {"dim": v.shape[0], "vector": _encode_pairs(v)})
