"""Canonical JSON serialization for elements, matrices and reports.

Element schema:
    {"algebra": "<ring tag>", "mode": "exact"|"float",
     "terms": [{"irrep": <label>, "row": i, "col": j,
                "re": "p/q"|number, "im": "p/q"|number}, ...]}

Matrix schema:
    {"algebra": ..., "mode": ..., "n": n, "entries": [[<element>, ...], ...]}
    (each entry is a full element object; algebra and mode must agree)

Labels are JSON integers (su2, Z, Z/m), integer arrays (product groups,
Heisenberg) or strings (finite:S3). Exact scalars serialize as fraction
strings and round-trip bit-exactly; serialization is canonical (sorted term
order, sorted keys, fixed separators), so serialize(parse(x)) == x
byte-for-byte for canonically formatted exact input.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .fusion import FusionRing, ring_from_tag
from .polalg import AlgebraElement, MatrixOverPol, PolAlgebra, algebra_for
from .scalars import EXACT, QQi, fraction_str


class SchemaError(ValueError):
    """Input does not match the published JSON schema."""


# -- labels -----------------------------------------------------------------

def label_to_json(ring: FusionRing, u):
    if isinstance(u, tuple):
        return list(u)
    return u


def label_from_json(ring: FusionRing, obj):
    if isinstance(obj, list):
        obj = tuple(obj)
    try:
        return ring.check_label(obj)
    except ValueError as exc:
        raise SchemaError(str(exc)) from None


# -- scalars ------------------------------------------------------------------

def scalar_to_json(value):
    if isinstance(value, QQi):
        return {"re": fraction_str(value.re), "im": fraction_str(value.im)}
    value = complex(value)
    return {"re": value.real, "im": value.imag}


def _scalar_from_json(term: dict, mode: str):
    re, im = term.get("re", 0), term.get("im", 0)
    if mode == EXACT:
        if not isinstance(re, str) or not isinstance(im, str):
            raise SchemaError(
                f"exact coefficients must be fraction strings, got re={re!r} im={im!r}")
        try:
            return QQi(Fraction(re), Fraction(im))
        except (ValueError, ZeroDivisionError) as exc:
            raise SchemaError(f"bad fraction string: {exc}") from None
    if isinstance(re, str) or isinstance(im, str):
        raise SchemaError("float coefficients must be JSON numbers")
    return complex(float(re), float(im))


# -- elements -----------------------------------------------------------------

def element_to_json(a: AlgebraElement) -> dict:
    terms = []
    for (label, i, j), c in a.terms():
        entry = {"irrep": label_to_json(a.algebra.ring, label), "row": i, "col": j}
        entry.update(scalar_to_json(c))
        terms.append(entry)
    return {"algebra": a.algebra.tag, "mode": a.algebra.mode, "terms": terms}


def element_from_json(obj: dict, algebra: PolAlgebra | None = None) -> AlgebraElement:
    if not isinstance(obj, dict) or "terms" not in obj:
        raise SchemaError("element object must have a 'terms' list")
    if algebra is None:
        if "algebra" not in obj:
            raise SchemaError("element object missing 'algebra' tag")
        algebra = algebra_for(str(obj["algebra"]))
    elif "algebra" in obj and ring_from_tag(str(obj["algebra"])) is not algebra.ring:
        raise SchemaError(
            f"element algebra {obj['algebra']!r} does not match {algebra.tag!r}")
    mode = obj.get("mode", algebra.mode)
    if mode != algebra.mode:
        raise SchemaError(
            f"mode {mode!r} does not match provider mode {algebra.mode!r} of {algebra.tag}")
    if not isinstance(obj["terms"], list):
        raise SchemaError("'terms' must be a list")
    coeffs = {}
    for k, term in enumerate(obj["terms"]):
        if not isinstance(term, dict) or "irrep" not in term:
            raise SchemaError(f"term #{k} is not an object with an 'irrep'")
        label = label_from_json(algebra.ring, term["irrep"])
        row = term.get("row", 1)
        col = term.get("col", 1)
        if not isinstance(row, int) or not isinstance(col, int):
            raise SchemaError(f"term #{k}: row/col must be integers")
        n = algebra.ring.dim(label)
        if not (1 <= row <= n and 1 <= col <= n):
            raise SchemaError(
                f"term #{k}: index ({row},{col}) out of range for {label!r} (size {n})")
        c = _scalar_from_json(term, algebra.mode)
        key = (label, row, col)
        prev = coeffs.get(key)
        c = c if prev is None else prev + c
        if c:
            coeffs[key] = c
        elif key in coeffs:
            del coeffs[key]
    return AlgebraElement(algebra, coeffs)


# -- matrices -------------------------------------------------------------------

def matrix_to_json(T: MatrixOverPol) -> dict:
    return {
        "algebra": T.algebra.tag,
        "mode": T.algebra.mode,
        "n": T.n,
        "entries": [[element_to_json(e) for e in row] for row in T.entries],
    }


def matrix_from_json(obj: dict, algebra: PolAlgebra | None = None) -> MatrixOverPol:
    if not isinstance(obj, dict) or "entries" not in obj:
        raise SchemaError("matrix object must have an 'entries' grid")
    if algebra is None:
        if "algebra" not in obj:
            raise SchemaError("matrix object missing 'algebra' tag")
        algebra = algebra_for(str(obj["algebra"]))
    n = obj.get("n", len(obj["entries"]))
    entries = obj["entries"]
    if not isinstance(entries, list) or len(entries) != n \
            or any(not isinstance(row, list) or len(row) != n for row in entries):
        raise SchemaError(f"'entries' must be an {n} x {n} grid")
    rows = [[element_from_json(e, algebra) for e in row] for row in entries]
    return MatrixOverPol(algebra, rows)


def parse_element(obj: dict):
    """Dispatch on the schema: 'entries' means matrix, 'terms' means element."""
    if isinstance(obj, dict) and "entries" in obj:
        return matrix_from_json(obj)
    return element_from_json(obj)


# -- canonical bytes --------------------------------------------------------------

def canonical_dumps(obj) -> str:
    """Canonical JSON: sorted keys, no spaces, trailing newline."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def dump_element(a) -> str:
    if isinstance(a, MatrixOverPol):
        return canonical_dumps(matrix_to_json(a))
    return canonical_dumps(element_to_json(a))


def load_element(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON: {exc}") from None
    return parse_element(obj)
