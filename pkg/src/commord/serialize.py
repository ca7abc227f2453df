"""JSON interchange for scalars, ring descriptors, matrices and witnesses.

Rationals travel as "p/q" strings (always with the slash, so "3/1"), residues
as {"mod": m, "val": r}, cyclotomic elements as {"order": m, "coeffs": [...]}.
Object keys are emitted in sorted order so payloads are bit-reproducible.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import DomainError
from .exact import CycloScalar, ZmodScalar
from .rings import (
    CyclotomicField,
    DenseMatrix,
    FiniteAlgebra,
    IntegersMod,
    MatrixRing,
    QQ,
    RationalField,
    Ring,
)
from .witness import CommutatorWitness


def rational_to_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def rational_from_str(text: str) -> Fraction:
    if not isinstance(text, str) or "/" not in text:
        raise DomainError(f"rationals are 'p/q' strings, got {text!r}")
    p, q = text.split("/", 1)
    return Fraction(int(p), int(q))


def ring_to_json(ring: Ring) -> dict:
    if isinstance(ring, RationalField):
        return {"kind": "rational"}
    if isinstance(ring, IntegersMod):
        return {"kind": "zmod", "mod": ring.mod}
    if isinstance(ring, CyclotomicField):
        return {"kind": "cyclotomic", "order": ring.order}
    if isinstance(ring, MatrixRing):
        return {"kind": "matrix", "size": ring.size, "inner": ring_to_json(ring.base)}
    raise DomainError(f"ring {ring!r} has no JSON descriptor")


def ring_from_json(obj) -> Ring:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise DomainError("ring descriptor must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "rational":
        return QQ
    if kind == "zmod":
        return IntegersMod(int(obj["mod"]))
    if kind == "cyclotomic":
        return CyclotomicField(int(obj["order"]))
    if kind == "matrix":
        return MatrixRing(ring_from_json(obj["inner"]), int(obj["size"]))
    raise DomainError(f"unknown ring kind {kind!r}")


def scalar_to_json(v):
    if isinstance(v, Fraction):
        return rational_to_str(v)
    if isinstance(v, ZmodScalar):
        return {"mod": v.mod, "val": v.val}
    if isinstance(v, CycloScalar):
        return {"order": v.order, "coeffs": [rational_to_str(c) for c in v.coeffs]}
    if isinstance(v, DenseMatrix):
        return matrix_to_json(v)
    raise DomainError(f"no JSON encoding for {type(v).__name__}")


def scalar_from_json(ring: Ring, obj):
    if isinstance(ring, RationalField):
        return rational_from_str(obj)
    if isinstance(ring, IntegersMod):
        if not isinstance(obj, dict) or obj.get("mod") != ring.mod:
            raise DomainError(f"expected a residue mod {ring.mod}, got {obj!r}")
        return ZmodScalar(ring.mod, int(obj["val"]))
    if isinstance(ring, CyclotomicField):
        if not isinstance(obj, dict) or obj.get("order") != ring.order:
            raise DomainError(f"expected an order-{ring.order} element, got {obj!r}")
        return CycloScalar(ring.order, [rational_from_str(c) for c in obj["coeffs"]])
    if isinstance(ring, MatrixRing):
        m = matrix_from_json(obj)
        if not ring.contains(m):
            raise DomainError("nested matrix entry does not match its ring")
        return m
    raise DomainError(f"cannot decode elements of {ring!r}")


def matrix_to_json(m: DenseMatrix) -> dict:
    return {
        "ring": ring_to_json(m.ring),
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[scalar_to_json(m.entry(i, j)) for j in range(m.cols)]
                    for i in range(m.rows)],
    }


def matrix_from_json(obj) -> DenseMatrix:
    if not isinstance(obj, dict):
        raise DomainError("matrix JSON must be an object")
    try:
        ring = ring_from_json(obj["ring"])
        rows, cols = int(obj["rows"]), int(obj["cols"])
        rows_data = obj["entries"]
    except (KeyError, TypeError) as exc:
        raise DomainError(f"malformed matrix JSON: {exc}") from exc
    if len(rows_data) != rows or any(len(r) != cols for r in rows_data):
        raise DomainError("matrix entries do not match the declared shape")
    entries = [scalar_from_json(ring, cell) for row in rows_data for cell in row]
    return DenseMatrix(ring, rows, cols, entries)


def algebra_to_json(alg: FiniteAlgebra) -> dict:
    return {
        "field": ring_to_json(alg.field),
        "dim": alg.dim,
        "labels": list(alg.labels),
        "table": [[[scalar_to_json(c) for c in cell] for cell in row]
                  for row in alg.table],
        "one": [scalar_to_json(c) for c in alg.one.coords],
    }


def algebra_from_json(obj) -> FiniteAlgebra:
    field = ring_from_json(obj["field"])
    table = [[[scalar_from_json(field, c) for c in cell] for cell in row]
             for row in obj["table"]]
    one = [scalar_from_json(field, c) for c in obj["one"]]
    labels = obj.get("labels") or [f"b{i}" for i in range(int(obj["dim"]))]
    return FiniteAlgebra(field, labels, table, one)


def witness_to_json(w: CommutatorWitness) -> dict:
    return {
        "k": w.k,
        "n": w.n,
        "A": matrix_to_json(w.A),
        "B": matrix_to_json(w.B),
        "C": matrix_to_json(w.C),
        "checks": w.checks(),
    }


def witness_from_json(obj) -> CommutatorWitness:
    if not isinstance(obj, dict):
        raise DomainError("witness JSON must be an object")
    try:
        k, n = int(obj["k"]), int(obj["n"])
        a = matrix_from_json(obj["A"])
        b = matrix_from_json(obj["B"])
        c = matrix_from_json(obj["C"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DomainError(f"malformed witness JSON: {exc}") from exc
    return CommutatorWitness(k, n, a, b, c)


def dumps(payload) -> str:
    """Canonical JSON text: sorted keys, compact separators."""
    return json.dumps(payload, sort_keys=True, separators=(", ", ": "))
