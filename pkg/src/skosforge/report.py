"""Validation reports: assembly, JSON/text rendering, and scheme statistics.

JSON reports are canonical artifacts: stable field order, findings sorted
by (severity, rule, focus), tallies sorted by rule id. Two runs over the
same inputs produce byte-identical JSON; to keep that true the elapsed_ms
field is serialized as 0 unless timing is explicitly requested (the text
rendering always shows the measured time).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .inference import MaterializedGraph
from .integrity import Finding, Severity, sort_findings
from .namespaces import RDF, SKOS
from .ntriples import serialize_term, serialize_triple
from .terms import Literal
from .vocab import Profile, properties_below

TOOL_VERSION = "0.1.0"

_RED = "\x1b[31m"
_YELLOW = "\x1b[33m"
_RESET = "\x1b[0m"


@dataclass(frozen=True)
class InputDigest:
    path: str
    sha256: str
    triples: int


@dataclass
class Report:
    version: str
    inputs: list[InputDigest]
    asserted: int
    derived: int
    findings: list[Finding]
    tallies: dict[str, int]
    elapsed_ms: int


def build_report(
    inputs: list[InputDigest],
    mg: MaterializedGraph,
    findings: list[Finding],
    elapsed_ms: int,
) -> Report:
    findings = sort_findings(findings)
    tallies: dict[str, int] = {}
    for f in findings:
        tallies[f.rule_id] = tallies.get(f.rule_id, 0) + 1
    return Report(
        version=TOOL_VERSION,
        inputs=inputs,
        asserted=len(mg.asserted),
        derived=mg.derived_count,
        findings=findings,
        tallies={k: tallies[k] for k in sorted(tallies)},
        elapsed_ms=elapsed_ms,
    )


def report_to_json_dict(report: Report, include_timing: bool = False) -> dict:
    return {
        "version": report.version,
        "inputs": [
            {"path": i.path, "sha256": i.sha256, "triples": i.triples}
            for i in report.inputs
        ],
        "derived": report.derived,
        "findings": [
            {
                "rule": f.rule_id,
                "severity": f.severity.value,
                "focus": serialize_term(f.focus),
                "message": f.message,
                "evidence": [serialize_triple(t) for t in f.evidence],
            }
            for f in report.findings
        ],
        "tallies": dict(report.tallies),
        "elapsed_ms": report.elapsed_ms if include_timing else 0,
    }


def format_report(
    report: Report,
    fmt: str,
    color: bool = False,
    include_timing: bool = False,
) -> bytes:
    """Render a report as UTF-8 bytes; byte-identical for equal arguments."""
    if fmt == "json":
        payload = report_to_json_dict(report, include_timing=include_timing)
        return (json.dumps(payload, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    if fmt != "text":
        raise ValueError(f"unknown report format: {fmt!r}")

    lines = []
    errors = 0
    warnings = 0
    for f in report.findings:
        if f.severity is Severity.ERROR:
            errors += 1
            label = f"{_RED}ERROR{_RESET}" if color else "ERROR"
        else:
            warnings += 1
            label = f"{_YELLOW}WARNING{_RESET}" if color else "WARNING"
        lines.append(f"{label} {f.rule_id} {serialize_term(f.focus)}: {f.message}")
    lines.append(
        f"{errors} error(s), {warnings} warning(s); "
        f"{report.asserted} asserted + {report.derived} derived triples; "
        f"{report.elapsed_ms} ms"
    )
    return ("\n".join(lines) + "\n").encode("utf-8")


def compute_stats(mg: MaterializedGraph) -> dict:
    """Counts of concepts, schemes, collections, labels per language, and
    asserted semantic-relation triples."""
    graph = mg.graph
    concepts = {t.subject for t in graph.match(None, RDF.type, SKOS.Concept)}
    schemes = {t.subject for t in graph.match(None, RDF.type, SKOS.ConceptScheme)}
    collections = {t.subject for t in graph.match(None, RDF.type, SKOS.Collection)}

    labels_per_language: dict[str, int] = {}
    for prop in (SKOS.prefLabel, SKOS.altLabel, SKOS.hiddenLabel):
        for t in graph.match(None, prop, None):
            if isinstance(t.object, Literal):
                tag = t.object.language.lower() if t.object.language else ""
                labels_per_language[tag] = labels_per_language.get(tag, 0) + 1

    semantic_props = properties_below(SKOS.semanticRelation, Profile.REFERENCE)
    relation_triples = sum(
        1 for t in mg.asserted if t.predicate in semantic_props
    )

    return {
        "concepts": len(concepts),
        "concept_schemes": len(schemes),
        "collections": len(collections),
        "labels_per_language": {k: labels_per_language[k] for k in sorted(labels_per_language)},
        "semantic_relation_triples": relation_triples,
    }


def format_stats(stats: dict, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(stats, indent=2, ensure_ascii=False) + "\n").encode("utf-8")
    lines = [
        f"concepts:                  {stats['concepts']}",
        f"concept schemes:           {stats['concept_schemes']}",
        f"collections:               {stats['collections']}",
        f"semantic relation triples: {stats['semantic_relation_triples']}",
        "labels per language:",
    ]
    labels = stats["labels_per_language"]
    if not labels:
        lines.append("  (none)")
    for tag in sorted(labels):
        lines.append(f"  {tag or '(no tag)'}: {labels[tag]}")
    return ("\n".join(lines) + "\n").encode("utf-8")
