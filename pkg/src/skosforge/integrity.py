"""Checks for the SKOS and SKOS-XL integrity conditions.

Runs over a graph materialized under the reference profile, because the
property-disjointness conditions (S27, S46) only become visible once the
transitive and symmetric closures are present, and the class-disjointness
conditions (S9, S37, S48) are fed by inferred rdf:type triples. All
problems are reported as Findings with evidence drawn from the checked
graph; nothing raises.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .graph import Graph
from .inference import MaterializedGraph
from .namespaces import RDF, RDFS, OWL, SKOS, SKOSXL, XSD
from .ntriples import serialize_term, serialize_triple
from .terms import Iri, Literal, Term, Triple
from .vocab import INTEGRITY_CONDITION_IDS, AxiomKind, axiom_table


class Severity(enum.Enum):
    ERROR = "error"
    WARNING = "warning"


@dataclass(frozen=True)
class Finding:
    """One integrity violation or guideline warning.

    Severity is ERROR exactly when rule_id names an integrity condition;
    evidence triples are always present in the graph that was checked.
    """

    rule_id: str
    severity: Severity
    focus: Term
    evidence: tuple[Triple, ...]
    message: str


_PREFIXES = (
    ("skos:", SKOS.base),
    ("skosxl:", SKOSXL.base),
    ("rdf:", RDF.base),
    ("rdfs:", RDFS.base),
    ("owl:", OWL.base),
    ("xsd:", XSD.base),
)


def curie(term: Term) -> str:
    """Compact display form for messages: prefixed IRIs, quoted literals."""
    if isinstance(term, Iri):
        for prefix, base in _PREFIXES:
            if term.value.startswith(base):
                return prefix + term.value[len(base):]
    return serialize_term(term)


def finding_sort_key(finding: Finding) -> tuple:
    return (
        0 if finding.severity is Severity.ERROR else 1,
        finding.rule_id,
        serialize_term(finding.focus),
        tuple(serialize_triple(t) for t in finding.evidence),
    )


def sort_findings(findings: list[Finding]) -> list[Finding]:
    return sorted(findings, key=finding_sort_key)


def _error(rule_id: str, focus: Term, evidence: tuple[Triple, ...], message: str) -> Finding:
    return Finding(rule_id, Severity.ERROR, focus, evidence, message)


def _check_disjoint_classes(graph: Graph, axiom) -> list[Finding]:
    findings = []
    for left, right in axiom.disjoint_pairs():
        left_typed = {t.subject: t for t in graph.match(None, RDF.type, left)}
        for t_right in graph.match(None, RDF.type, right):
            t_left = left_typed.get(t_right.subject)
            if t_left is not None:
                node = t_right.subject
                findings.append(_error(
                    axiom.id, node, (t_left, t_right),
                    f"{curie(node)} is typed as both {curie(left)} and "
                    f"{curie(right)}, which are disjoint classes",
                ))
    return findings


def _check_disjoint_properties(graph: Graph, axiom) -> list[Finding]:
    findings = []
    for p, q in axiom.disjoint_pairs():
        violating: dict[tuple[Term, Term], tuple[Triple, Triple]] = {}
        for t_p in graph.match(None, p, None):
            for t_q in graph.match(t_p.subject, q, t_p.object):
                violating[(t_p.subject, t_p.object)] = (t_p, t_q)
        for (s, o), (t_p, t_q) in violating.items():
            # A symmetric closure can make both orientations of one pair
            # violate; report the node pair once.
            if (o, s) in violating and (o, s) != (s, o):
                if serialize_term(o) < serialize_term(s):
                    continue
            findings.append(_error(
                axiom.id, s, (t_p, t_q),
                f"{curie(s)} carries both {curie(p)} and {curie(q)} "
                f"(disjoint properties) to {curie(o)}",
            ))
    return findings


def _check_unique_pref_label(graph: Graph, axiom) -> list[Finding]:
    (prop,) = axiom.role_values("property")
    buckets: dict[tuple[Term, Optional[str]], list[Triple]] = {}
    for t in graph.match(None, prop, None):
        o = t.object
        if not isinstance(o, Literal) or not o.is_plain:
            continue
        tag = o.language.lower() if o.language else None
        buckets.setdefault((t.subject, tag), []).append(t)
    findings = []
    for (node, tag), triples in buckets.items():
        if len(triples) < 2:
            continue
        values = sorted(f'"{t.object.lexical}"' for t in triples)
        where = f"language tag '{tag}'" if tag else "no language tag"
        findings.append(_error(
            axiom.id, node, tuple(sorted(triples, key=serialize_triple)),
            f"{curie(node)} has {len(triples)} skos:prefLabel values with "
            f"{where}: {', '.join(values)} (at most one is allowed)",
        ))
    return findings


def _check_cardinality_exactly_one(graph: Graph, axiom) -> list[Finding]:
    (cls,) = axiom.role_values("class")
    (prop,) = axiom.role_values("property")
    findings = []
    for type_triple in graph.match(None, RDF.type, cls):
        node = type_triple.subject
        forms = sorted(graph.match(node, prop, None), key=serialize_triple)
        if len(forms) == 1:
            continue
        if forms:
            message = (
                f"{curie(node)} is a {curie(cls)} with {len(forms)} distinct "
                f"{curie(prop)} values; exactly 1 is required"
            )
        else:
            message = (
                f"{curie(node)} is a {curie(cls)} with no {curie(prop)} value; "
                f"exactly 1 is required"
            )
        findings.append(_error(axiom.id, node, (type_triple, *forms), message))
    return findings


def check_integrity(mg: MaterializedGraph) -> list[Finding]:
    """Check every integrity condition and return one Finding per violating
    instance, ordered by rule id then focus term."""
    graph = mg.graph
    findings: list[Finding] = []
    for axiom in axiom_table():
        if not axiom.is_integrity_condition:
            continue
        if axiom.kind is AxiomKind.DISJOINT_CLASSES:
            findings.extend(_check_disjoint_classes(graph, axiom))
        elif axiom.kind is AxiomKind.DISJOINT_PROPERTIES:
            findings.extend(_check_disjoint_properties(graph, axiom))
        elif axiom.kind is AxiomKind.UNIQUE_PREF_LABEL_PER_LANGUAGE:
            findings.extend(_check_unique_pref_label(graph, axiom))
        elif axiom.kind is AxiomKind.CARDINALITY_EXACTLY_ONE:
            findings.extend(_check_cardinality_exactly_one(graph, axiom))
    assert all(f.rule_id in INTEGRITY_CONDITION_IDS for f in findings)
    return sort_findings(findings)
