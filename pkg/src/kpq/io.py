"""JSON documents for polynomials, R-elements and restriction tables."""

from __future__ import annotations

import json
from typing import Any, Mapping

from .algebra.mpoly import MPoly, VarId
from .algebra.relem import RElem
from . import __version__

FORMAT = "kpq-doc/1"
VERSION = __version__


def poly_terms(p: MPoly) -> list[dict[str, Any]]:
    """Terms in graded-lex order; coefficients as decimal strings."""
    return [
        {"coeff": str(c), "exps": {v.name: e for v, e in sorted(exps.items())}}
        for c, exps in p.items_canonical()
    ]


def poly_from_terms(terms: list[Mapping[str, Any]]) -> MPoly:
    return MPoly.from_terms(
        (int(t["coeff"]), {VarId.parse(name): int(e) for name, e in t["exps"].items()}) for t in terms
    )


def poly_document(p: MPoly, **metadata: Any) -> dict[str, Any]:
    meta = {k: str(v) for k, v in metadata.items()}
    meta["version"] = VERSION
    return {"format": FORMAT, "type": "polynomial", "metadata": meta, "text": str(p), "terms": poly_terms(p)}


def poly_from_document(doc: Mapping[str, Any]) -> MPoly:
    if doc.get("format") != FORMAT:
        raise ValueError(f"unsupported document format {doc.get('format')!r}")
    return poly_from_terms(doc["terms"])


def relem_json(v: RElem) -> dict[str, Any]:
    """Cleared numerator plus the denominator factor list."""
    return {"num": str(v.num), "den": [[str(f), e] for f, e in v.den], "text": str(v)}


def relem_from_json(d: Mapping[str, Any]) -> RElem:
    from .algebra.mpoly import parse

    den = {}
    for f, e in d["den"]:
        den[parse(f)] = int(e)
    return RElem.build(parse(d["num"]), den)


def table_document(table, **metadata: Any) -> dict[str, Any]:
    meta = {k: str(v) for k, v in metadata.items()}
    meta.update(type=str(table.type), n=str(table.n), version=VERSION)
    entries = {f"{lam}|{mu}": relem_json(table[lam, mu]) for lam in table.shapes for mu in table.shapes}
    return {"format": FORMAT, "type": "table", "metadata": meta, "entries": entries}


def dumps(doc: Mapping[str, Any]) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)
