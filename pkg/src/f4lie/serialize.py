"""Stable JSON documents for structure constants, automorphisms and subspaces.

Scalars are always written as ``"p/q"`` strings, keys are sorted, and the
coordinate order is the frozen one of :mod:`f4lie.f4`, so exporting the same
object twice gives identical bytes and reading a document back loses nothing.
"""
import json
from fractions import Fraction

import numpy as np

from . import triality as tr
from .exactlin import canonicalize
from .f4 import LieAlgebra

SCHEMA = 1

COORDINATE_ORDER = ("28 so(8) coordinates A[i, j] for the wedge basis e_i ^ e_j, i < j, "
                    "lexicographic; then 8 coordinates each of x, y, z")


class SchemaError(ValueError):
    pass


def fmt(c):
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def parse(s):
    if not isinstance(s, str):
        raise SchemaError(f"scalars must be 'p/q' strings, got {s!r}")
    return Fraction(s)


def dumps(doc):
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"


def constants_doc(alg):
    return {
        "schema": SCHEMA,
        "kind": "structure-constants",
        "algebra": alg.name,
        "dim": alg.dim,
        "coordinates": COORDINATE_ORDER,
        "constants": [{"i": i, "j": j, "k": k, "c": fmt(c)} for i, j, k, c in alg.constants()],
    }


def automorphisms_doc():
    return {
        "schema": SCHEMA,
        "kind": "automorphisms",
        "wedge_pairs": [list(p) for p in tr.WEDGE_PAIRS],
        "matrices": {name: [[fmt(c) for c in row] for row in m]
                     for name, m in tr.AUTOMORPHISMS.items()},
    }


def subspace_doc(S, name=""):
    return {
        "schema": SCHEMA,
        "kind": "subspace",
        "name": name,
        "ambient_dim": S.ambient_dim,
        "basis": [[fmt(c) for c in v] for v in S.basis],
    }


def _check(doc, kind):
    if doc.get("schema") != SCHEMA:
        raise SchemaError(f"unsupported schema {doc.get('schema')!r}")
    if doc.get("kind") != kind:
        raise SchemaError(f"expected a {kind} document, got {doc.get('kind')!r}")


def constants_from_doc(doc):
    _check(doc, "structure-constants")
    table = {}
    for entry in doc["constants"]:
        table.setdefault((entry["i"], entry["j"]), {})[entry["k"]] = parse(entry["c"])
    return LieAlgebra(doc["dim"], table, name=doc.get("algebra", ""))


def automorphisms_from_doc(doc):
    _check(doc, "automorphisms")
    return {name: np.array([[parse(c) for c in row] for row in m], dtype=object)
            for name, m in doc["matrices"].items()}


def subspace_from_doc(doc):
    _check(doc, "subspace")
    basis = [[parse(c) for c in v] for v in doc["basis"]]
    return canonicalize(basis, ambient_dim=doc["ambient_dim"])


def write(doc, path):
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(dumps(doc))
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc.strerror}") from exc


def read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{path} is not valid JSON: {exc}") from exc


def load(path):
    """Read any supported document and return the decoded object."""
    doc = read(path)
    kind = doc.get("kind")
    if kind == "structure-constants":
        return constants_from_doc(doc)
    if kind == "automorphisms":
        return automorphisms_from_doc(doc)
    if kind == "subspace":
        return subspace_from_doc(doc)
    raise SchemaError(f"{path}: unknown document kind {kind!r}")

