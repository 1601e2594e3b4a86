"""Certificate JSON carrier (schema version 1), byte-stable."""

from __future__ import annotations

import json

from .assertions import Assertion
from .errors import CertificateSchemaError
from .evidence import evidence_from_json
from .graph import Graph
from .layout import layout_from_json
from .trial import Certificate

VERSION = 1


def certificate_to_dict(c: Certificate) -> dict:
    return {
        "version": VERSION,
        "graph": {"n": c.graph.n, "edges": [list(e) for e in c.graph.sorted_edges()]},
        "assertion": c.assertion.to_json(),
        "evidence": c.evidence.to_json(),
        "layout": c.layout.to_json(),
    }


def certificate_to_json(c: Certificate) -> str:
    return json.dumps(certificate_to_dict(c), sort_keys=True, indent=2) + "\n"


def certificate_from_dict(d: dict) -> Certificate:
    if not isinstance(d, dict):
        raise CertificateSchemaError("certificate document must be a JSON object")
    if d.get("version") != VERSION:
        raise CertificateSchemaError(
            f"unsupported certificate version {d.get('version')!r}"
        )
    for key in ("graph", "assertion", "evidence", "layout"):
        if key not in d:
            raise CertificateSchemaError(f"missing certificate field {key!r}")
    try:
        g = Graph.from_edges(
            d["graph"]["n"], [tuple(e) for e in d["graph"]["edges"]]
        )
        a = Assertion.from_json(d["assertion"])
        ev = evidence_from_json(d["evidence"])
        lay = layout_from_json(d["layout"])
    except CertificateSchemaError:
        raise
    except Exception as exc:
        raise CertificateSchemaError(f"malformed certificate: {exc}")
    return Certificate(g, a, ev, lay)


def certificate_from_json(text: str) -> Certificate:
    try:
        d = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CertificateSchemaError(f"invalid JSON: {exc}")
    return certificate_from_dict(d)
