"""Command-line front end: prove | verify | judge | metrics | render.

Exit codes: 0 success, 1 verification violations (or an unconvinced judge),
2 assertion not provable, 3 search budget exceeded, 4 schema violation,
5 judge refused an unverified certificate.
"""

from __future__ import annotations

import json
import sys

import click

from .assertions import Assertion, Kind
from .errors import (
    CertificateSchemaError,
    GraphTrialsError,
    NoEvidenceError,
    SearchBudgetExceeded,
)
from .evidence import evidence_from_json
from .graph import parse_graph
from .layout import NodeLinkLayout
from .metrics import compute_metrics, format_report, report_json
from .pipeline import build_certificate
from .serialize import certificate_from_json, certificate_to_json
from .svg import render_svg
from .trial import extract_mental_model, judge as run_judge, verify

_ALIASES = {
    "hamiltonian": Kind.HAMILTONIAN_CYCLE,
    "bipartite-free": Kind.NOT_BIPARTITE,
}


def _parse_kind(text: str) -> Kind:
    key = text.strip().lower().replace("-", "_")
    if key in _ALIASES:
        return _ALIASES[key]
    try:
        return Kind(key)
    except ValueError:
        raise click.BadParameter(
            f"unknown assertion kind {text!r}; choose from "
            + ", ".join(k.value for k in Kind)
        )


def _load_certificate(path: str):
    try:
        with open(path) as fh:
            return certificate_from_json(fh.read())
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(4)
    except CertificateSchemaError as exc:
        click.echo(f"schema violation: {exc}", err=True)
        sys.exit(4)


@click.group()
def main():
    """Visual certificates for graph assertions."""


@main.command()
@click.option("-i", "--input", "graph_path", required=True, type=click.Path(exists=True))
@click.option("-a", "--assertion", "kind_text", required=True)
@click.option("--k", type=int, default=None)
@click.option("--u", type=int, default=None)
@click.option("--v", type=int, default=None)
@click.option("--style", type=click.Choice(["nodelink", "matrix", "book"]), default=None)
@click.option("-e", "--evidence", "evidence_path", type=click.Path(exists=True), default=None)
@click.option("-o", "--output", "out_path", required=True, type=click.Path())
@click.option("--svg", "svg_path", type=click.Path(), default=None)
def prove(graph_path, kind_text, k, u, v, style, evidence_path, out_path, svg_path):
    """Compute evidence and write a self-verified visual certificate."""
    kind = _parse_kind(kind_text)
    try:
        with open(graph_path) as fh:
            g = parse_graph(fh.read())
        a = Assertion(kind, k=k, u=u, v=v)
    except (GraphTrialsError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(4)
    external = None
    if evidence_path:
        with open(evidence_path) as fh:
            external = evidence_from_json(json.load(fh))
    try:
        cert = build_certificate(g, a, style=style, evidence=external)
    except NoEvidenceError as exc:
        click.echo(f"assertion not provable on this graph: {exc}", err=True)
        sys.exit(2)
    except SearchBudgetExceeded as exc:
        click.echo(f"search budget exceeded: {exc}", err=True)
        sys.exit(3)
    violations = verify(cert)
    if violations:
        click.echo("self-verification failed: " + ", ".join(violations), err=True)
        sys.exit(1)
    verdict = run_judge(cert, extract_mental_model(cert))
    if not verdict.convinced:
        click.echo(
            "self-judging failed: " + ", ".join(verdict.reasons), err=True
        )
        sys.exit(1)
    with open(out_path, "w") as fh:
        fh.write(certificate_to_json(cert))
    if svg_path:
        with open(svg_path, "w") as fh:
            fh.write(render_svg(cert))
    click.echo(f"certificate written to {out_path}")


@main.command("verify")
@click.argument("cert_path", type=click.Path(exists=True))
def verify_cmd(cert_path):
    """Check faithfulness and evidence validity of a certificate."""
    cert = _load_certificate(cert_path)
    violations = verify(cert)
    if violations:
        for reason in violations:
            click.echo(reason)
        sys.exit(1)
    click.echo("certificate is unimpeachable and valid")


@main.command("judge")
@click.argument("cert_path", type=click.Path(exists=True))
def judge_cmd(cert_path):
    """Validate the assertion from the certificate's visual gist alone."""
    cert = _load_certificate(cert_path)
    if verify(cert):
        click.echo("refused: certificate failed verification", err=True)
        sys.exit(5)
    verdict = run_judge(cert, extract_mental_model(cert))
    click.echo(json.dumps(verdict.to_json(), sort_keys=True))
    if not verdict.convinced:
        sys.exit(1)


@main.command("metrics")
@click.argument("cert_path", type=click.Path(exists=True))
@click.option("--highlighted", is_flag=True, default=False)
def metrics_cmd(cert_path, highlighted):
    """Print the aesthetic metrics table for a node-link certificate."""
    cert = _load_certificate(cert_path)
    if not isinstance(cert.layout, NodeLinkLayout):
        click.echo(
            "metrics cover node-link drawings only; this certificate uses "
            f"a {cert.layout.style} layout",
            err=True,
        )
        sys.exit(1)
    full = compute_metrics(cert.layout, cert.graph, "full")
    high = None
    if highlighted:
        high = compute_metrics(cert.layout, cert.graph, "highlighted")
    click.echo(format_report(full, high))
    click.echo(report_json(full, high))


@main.command("render")
@click.argument("cert_path", type=click.Path(exists=True))
@click.option("-o", "--output", "out_path", required=True, type=click.Path())
def render_cmd(cert_path, out_path):
    """Render a certificate to SVG."""
    cert = _load_certificate(cert_path)
    with open(out_path, "w") as fh:
        fh.write(render_svg(cert))
    click.echo(f"svg written to {out_path}")


if __name__ == "__main__":
    main()
