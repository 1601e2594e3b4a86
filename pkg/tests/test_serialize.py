"""Certificate JSON carrier: round-trips, schema errors, byte stability."""

import json

import pytest

from graphtrials.assertions import Assertion, Kind
from graphtrials.errors import CertificateSchemaError
from graphtrials.pipeline import KIND_STYLES, build_certificate
from graphtrials.serialize import (
    certificate_from_json,
    certificate_to_dict,
    certificate_to_json,
)

from conftest import complete_graph, cycle_graph, path_graph, star_graph

CASES = [
    (cycle_graph(4), Assertion(Kind.CONNECTED), None),
    (cycle_graph(5), Assertion(Kind.HAMILTONIAN_CYCLE), "matrix"),
    (path_graph(3), Assertion(Kind.NOT_K_CONNECTED, k=2), None),
    (cycle_graph(5), Assertion(Kind.K_COLORABLE, k=3), None),
    (star_graph(4), Assertion(Kind.DOMINATING_SET, k=1), None),
    (complete_graph(4), Assertion(Kind.STACK_LEQ, k=2), None),
    (path_graph(4), Assertion(Kind.DISTANCE_EQUALS, k=3, u=0, v=3), None),
]


@pytest.mark.parametrize(
    "g,a,style", CASES, ids=[c[1].kind.value for c in CASES]
)
def test_round_trip(g, a, style):
    cert = build_certificate(g, a, style=style)
    back = certificate_from_json(certificate_to_json(cert))
    assert back.graph == cert.graph
    assert back.assertion == cert.assertion
    assert back.evidence == cert.evidence
    assert back.layout == cert.layout


def test_json_is_byte_stable():
    cert = build_certificate(cycle_graph(6), Assertion(Kind.CONNECTED))
    text1 = certificate_to_json(cert)
    cert2 = build_certificate(cycle_graph(6), Assertion(Kind.CONNECTED))
    text2 = certificate_to_json(cert2)
    assert text1 == text2
    # a round-trip re-serializes to the same bytes
    assert certificate_to_json(certificate_from_json(text1)) == text1


def test_rejects_bad_version():
    cert = build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    doc = certificate_to_dict(cert)
    doc["version"] = 99
    with pytest.raises(CertificateSchemaError):
        certificate_from_json(json.dumps(doc))


def test_rejects_missing_fields():
    cert = build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    base = certificate_to_dict(cert)
    for key in ("graph", "assertion", "evidence", "layout", "version"):
        doc = dict(base)
        del doc[key]
        with pytest.raises(CertificateSchemaError):
            certificate_from_json(json.dumps(doc))


def test_rejects_truncated_and_non_object():
    text = certificate_to_json(
        build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    )
    with pytest.raises(CertificateSchemaError):
        certificate_from_json(text[: len(text) // 2])
    with pytest.raises(CertificateSchemaError):
        certificate_from_json("[1, 2, 3]")


def test_rejects_malformed_inner_payload():
    cert = build_certificate(cycle_graph(4), Assertion(Kind.CONNECTED))
    doc = certificate_to_dict(cert)
    doc["graph"] = {"n": 4, "edges": [[0, 0]]}
    with pytest.raises(CertificateSchemaError):
        certificate_from_json(json.dumps(doc))
    doc = certificate_to_dict(cert)
    doc["evidence"] = {"tag": "no_such_evidence"}
    with pytest.raises(CertificateSchemaError):
        certificate_from_json(json.dumps(doc))
