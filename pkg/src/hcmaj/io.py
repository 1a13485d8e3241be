"""JSON formats for matrices, operators and decision results.

Rationals are written as strings, ``"p"`` for integers and ``"p/q"`` in
lowest terms otherwise; on input plain JSON integers are accepted as well.

Matrix file::

    {"n": 3, "entries": [["1", "0", "1/2"], ...]}

Operator file, in one of two forms::

    {"n": 3, "rep": [[...9 entries...], ... 9 rows ...]}
    {"n": 3, "basis_images": [{"h": 1, "k": 2, "image": [[...], ...]}, ...]}

``rep`` uses row-major vectorization: column (h-1)*n + k holds vec(T(E_hk))
and vec(X)[(h-1)*n + k] = x_hk (1-based h, k). In ``basis_images`` any
position left out maps to the zero matrix.
"""

from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from .exact import Mat
from .operators import OperatorRep, basis_image, basis_positions, from_basis_images


class FormatError(ValueError):
    pass


def rational_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise FormatError(f"rationals must be integers or 'p/q' strings, got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError) as e:
        raise FormatError(f"bad rational {v!r}: {e}") from None


def entries_json(M: Mat) -> list[list[str]]:
    return [[rational_str(x) for x in row] for row in M.data]


def parse_entries(rows, n: int, what: str = "matrix") -> Mat:
    if not isinstance(rows, list) or len(rows) != n:
        raise FormatError(f"{what} must have {n} rows")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != n:
            raise FormatError(f"{what} rows must have {n} entries")
        out.append(tuple(parse_rational(v) for v in row))
    return Mat(tuple(out), n)


def _dimension(obj) -> int:
    if not isinstance(obj, dict):
        raise FormatError("expected a JSON object")
    n = obj.get("n")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise FormatError(f"'n' must be a positive integer, got {n!r}")
    return n


def matrix_to_json(M: Mat) -> dict:
    return {"n": M.rows, "entries": entries_json(M)}


def parse_matrix(obj) -> Mat:
    n = _dimension(obj)
    return parse_entries(obj.get("entries"), n)


def operator_to_json(T: OperatorRep, form: str = "rep") -> dict:
    if form == "rep":
        return {"n": T.n, "rep": entries_json(T.rep)}
    images = []
    for h, k in basis_positions(T.n):
        img = basis_image(T, h, k)
        if not img.is_zero():
            images.append({"h": h, "k": k, "image": entries_json(img)})
    return {"n": T.n, "basis_images": images}


def parse_operator(obj) -> OperatorRep:
    n = _dimension(obj)
    has_rep, has_images = "rep" in obj, "basis_images" in obj
    if has_rep == has_images:
        raise FormatError("operator needs exactly one of 'rep' or 'basis_images'")
    if has_rep:
        return OperatorRep(n, parse_entries(obj["rep"], n * n, "rep"))
    images = {}
    items = obj["basis_images"]
    if not isinstance(items, list):
        raise FormatError("'basis_images' must be a list")
    for item in items:
        try:
            h, k, img = item["h"], item["k"], item["image"]
        except (KeyError, TypeError):
            raise FormatError("basis image entries need 'h', 'k' and 'image'") from None
        if (h, k) not in set(basis_positions(n)):
            raise FormatError(f"basis position ({h}, {k}) outside M_{n}")
        if (h, k) in images:
            raise FormatError(f"basis position ({h}, {k}) given twice")
        images[(h, k)] = parse_entries(img, n, f"image of E_{h}{k}")
    return from_basis_images(n, images)


def load_json(path) -> object:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as e:
        raise FormatError(f"cannot read {path}: {e}") from None


def load_matrix(path) -> Mat:
    return parse_matrix(load_json(path))


def load_operator(path) -> OperatorRep:
    return parse_operator(load_json(path))


def dumps(obj) -> str:
    """Canonical JSON text: sorted keys, fixed indentation."""
    return json.dumps(obj, indent=2, sort_keys=True)


# -- results ---------------------------------------------------------------------

def certificate_json(cert) -> dict:
    return {
        "preserver": True,
        "P": list(cert.p),
        "forced": {str(j): t for j, t in cert.forced().items()},
        "touched": [sorted(U) for U in cert.profile.touched],
    }


def refutation_json(ref) -> dict:
    out = {
        "preserver": False,
        "kind": ref.kind,
        "sources": list(ref.sources),
        "targets": list(ref.targets),
        "positions": [{"source": list(s), "target": list(t)} for s, t in ref.positions],
        "counterexample": None,
    }
    if ref.counterexample is not None:
        k, B = ref.counterexample
        out["counterexample"] = {"k": k, "B": entries_json(B)}
    return out
