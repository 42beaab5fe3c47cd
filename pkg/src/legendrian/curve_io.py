"""Exact json serialisation of curves.

Coefficients are ``[re, im]`` pairs of ``"p/q"`` strings, lowest degree
first; the defining data in the provenance is stored as parseable
expression strings.
"""

from __future__ import annotations

import json

from .curves import ProjectiveCurve
from .errors import InvalidInput
from .exact import GaussianRational, Poly


_FUNCTION_KEYS = ("f", "g", "h")


def _encode_provenance(prov: dict) -> dict:
    out = {}
    for k, v in prov.items():
        if k == "data":
            out[k] = {name: str(x) for name, x in v.items()}
        elif k == "source":
            out[k] = _encode_provenance(v)
        else:
            out[k] = v
    return out


def _decode_provenance(doc: dict) -> dict:
    from .parser import parse_expression, parse_scalar

    out = {}
    for k, v in doc.items():
        if k == "data":
            out[k] = {
                name: parse_expression(x) if name in _FUNCTION_KEYS else parse_scalar(x)
                for name, x in v.items()
            }
        elif k == "source":
            out[k] = _decode_provenance(v)
        else:
            out[k] = v
    return out


def curve_to_dict(C: ProjectiveCurve) -> dict:
    return {
        "components": [[list(c.to_strings()) for c in p.coeffs] for p in C.components],
        "provenance": _encode_provenance(C.provenance),
    }


def curve_from_dict(doc: dict) -> ProjectiveCurve:
    try:
        comps = [Poly([GaussianRational.from_strings(c) for c in p]) for p in doc["components"]]
        prov = _decode_provenance(doc.get("provenance", {"kind": "raw"}))
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, InvalidInput):
            raise
        raise InvalidInput(f"malformed curve document: {exc}") from None
    C = ProjectiveCurve(comps, prov)
    if C.components != tuple(comps):
        raise InvalidInput("curve document is not in canonical form")
    return C


def dumps(C: ProjectiveCurve) -> str:
    return json.dumps(curve_to_dict(C), indent=1, ensure_ascii=False)


def loads(text: str) -> ProjectiveCurve:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"not valid json: {exc}") from None
    return curve_from_dict(doc)


def load(path) -> ProjectiveCurve:
    with open(path) as fh:
        return loads(fh.read())


def save(C: ProjectiveCurve, path) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(C) + "\n")
