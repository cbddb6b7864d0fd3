"""JSON input and output for fields, codes, grids and exponent sets.

A code-pair file looks like::

    {"field": {"p": 3, "l": 2},
     "c1": {"name": "C1", "rows": [[1, 0, "a+1"], ...]},
     "c2": {"rows": [...]},
     "grid": {"m": 2},
     "M1": ["1", "x", "y"], "M2": {"m": 2, "exponents": [[0, 0], ...]}}

Entries are element codes in ``[0, q)``, negative integers (read in the prime
field), or strings in the primitive element ``a`` such as ``"-a-1"``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from relhull.cartesian import CartesianGrid, ExponentSet
from relhull.codes import LinearCode
from relhull.errors import ParseError, RangeError
from relhull.field import FieldSpec, field_new, gf

_TERM = re.compile(r"([+-]?)(\d*)(?:(a)(?:\^(\d+))?)?")


def parse_element(field: FieldSpec, value) -> int:
    """Element code of an int or an expression in the primitive element ``a``."""
    if isinstance(value, bool):
        raise ParseError(f"not a field element: {value!r}")
    if isinstance(value, int):
        return field.scalar(value)
    if not isinstance(value, str):
        raise ParseError(f"not a field element: {value!r}")
    s = value.replace(" ", "").replace("*", "")
    if not s:
        raise ParseError("empty element expression")
    a = field.primitive_element.code
    acc, pos = 0, 0
    while pos < len(s):
        mt = _TERM.match(s, pos)
        if not mt or mt.end() == pos or (pos > 0 and not mt.group(1)):
            raise ParseError(f"cannot parse element {value!r}")
        sign, coef, var, power = mt.groups()
        if not coef and not var:
            raise ParseError(f"cannot parse element {value!r}")
        c = field.scalar(int(coef) % field.p) if coef else 1
        term = int(field.power(a, int(power) if power else 1)) if var else 1
        term = int(field.mul(c, term))
        acc = int(field.sub(acc, term) if sign == "-" else field.add(acc, term))
        pos = mt.end()
    return acc


def field_from_json(obj) -> FieldSpec:
    try:
        if isinstance(obj, int):
            return gf(obj)
        if "q" in obj and "p" not in obj:
            return gf(int(obj["q"]), obj.get("modulus"))
        degree = obj.get("l", obj.get("ℓ", obj.get("degree", 1)))
        return field_new(int(obj["p"]), int(degree), obj.get("modulus"))
    except RangeError:
        raise
    except (KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed field description {obj!r}") from exc


def rows_from_json(field: FieldSpec, rows) -> np.ndarray:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("rows must be a nonempty list of lists")
    widths = {len(r) for r in rows}
    if len(widths) != 1 or 0 in widths:
        raise ParseError("rows have unequal or zero length")
    return np.array([[parse_element(field, x) for x in r] for r in rows], dtype=np.int64)


def code_from_json(obj, field: FieldSpec | None = None) -> LinearCode:
    if not isinstance(obj, dict):
        raise ParseError("a code must be a JSON object")
    if "field" in obj:
        own = field_from_json(obj["field"])
        if field is not None and own != field:
            raise ParseError("code field differs from the file field")
        field = own
    if field is None:
        raise ParseError("code has no field")
    gen = rows_from_json(field, obj.get("rows"))
    n = int(obj.get("n", gen.shape[1]))
    if n != gen.shape[1]:
        raise ParseError(f"declared n = {n} but rows have length {gen.shape[1]}")
    return LinearCode(field, n, gen, obj.get("name"))


def code_to_json(code: LinearCode) -> dict:
    return {
        "field": code.field.to_json(),
        "n": code.n,
        "rows": code.gen.tolist(),
        "name": code.name,
    }


def grid_from_json(obj, field: FieldSpec) -> CartesianGrid:
    if not isinstance(obj, dict):
        raise ParseError("grid must be a JSON object")
    if "factors" in obj:
        return CartesianGrid(field, tuple(tuple(parse_element(field, x) for x in a) for a in obj["factors"]))
    if "m" in obj:
        return CartesianGrid.full(field, int(obj["m"]))
    raise ParseError("grid needs 'factors' or 'm'")


def exponents_from_json(obj, m: int) -> ExponentSet:
    if isinstance(obj, list):
        if all(isinstance(x, str) for x in obj):
            return ExponentSet.parse(obj, m)
        return ExponentSet(m, frozenset(tuple(a) for a in obj))
    if isinstance(obj, dict) and "exponents" in obj:
        return ExponentSet(int(obj.get("m", m)), frozenset(tuple(a) for a in obj["exponents"]))
    raise ParseError("exponent set must be a list or {m, exponents}")


@dataclass
class CodePairFile:
    field: FieldSpec
    c1: LinearCode | None = None
    c2: LinearCode | None = None
    grid: CartesianGrid | None = None
    M1: ExponentSet | None = None
    M2: ExponentSet | None = None

    @classmethod
    def from_json(cls, obj) -> CodePairFile:
        if not isinstance(obj, dict) or "field" not in obj:
            raise ParseError("file must be an object with a 'field' entry")
        field = field_from_json(obj["field"])
        out = cls(field)
        for key in ("c1", "c2"):
            src = obj.get(key, obj.get(key.upper()))
            if src is not None:
                setattr(out, key, code_from_json(src, field))
        if out.c1 is None and "code" in obj:
            out.c1 = code_from_json(obj["code"], field)
        if "grid" in obj:
            out.grid = grid_from_json(obj["grid"], field)
        m = out.grid.m if out.grid else 1
        for key in ("M1", "M2"):
            if key in obj:
                setattr(out, key, exponents_from_json(obj[key], m))
        return out

    def to_json(self) -> dict:
        out: dict = {"field": self.field.to_json()}
        for key in ("c1", "c2"):
            code = getattr(self, key)
            if code is not None:
                out[key] = {"name": code.name, "n": code.n, "rows": code.gen.tolist()}
        if self.grid is not None:
            out["grid"] = {"factors": [list(a) for a in self.grid.factors]}
        for key in ("M1", "M2"):
            ms = getattr(self, key)
            if ms is not None:
                out[key] = ms.to_json()
        return out

    def require(self, *names: str) -> None:
        for name in names:
            if getattr(self, name) is None:
                raise ParseError(f"input file lacks '{name}'")


def load(path) -> CodePairFile:
    try:
        text = Path(path).read_text(encoding="utf-8")
        obj = json.loads(text)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return CodePairFile.from_json(obj)
