"""Advisory checks for SKOS usage conventions.

These rules cover structural features that are almost always errors in a
conventional thesaurus (hierarchy cycles, reflexive links), the documented
usage conventions for mapping properties, labels, notations, and
collections, and the range/functionality axioms that assert nothing
inferable and so are operationalized as checks (S12/S51, S32, S35).

Violations are warnings, never errors: none of these conditions makes data
formally inconsistent with the data model, and every rule can be switched
off individually.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .graph import RdfListError, read_rdf_list
from .inference import MaterializedGraph
from .integrity import Finding, Severity, curie, sort_findings
from .namespaces import RDF, SKOS, SKOSXL
from .ntriples import serialize_triple
from .terms import Literal, Term, Triple
from .vocab import Profile, properties_below


@dataclass(frozen=True)
class GuidelineRule:
    id: str
    description: str
    enabled: bool = True


DEFAULT_RULES: tuple[GuidelineRule, ...] = (
    GuidelineRule("G-HIER-CYCLE",
                  "concept lies on a cycle in the broader hierarchy"),
    GuidelineRule("G-REFLEXIVE",
                  "concept asserted broader than or related to itself"),
    GuidelineRule("G-SAME-SCHEME-MATCH",
                  "mapping property used between concepts of one scheme"),
    GuidelineRule("G-MISSING-PREFLABEL",
                  "concept has no skos:prefLabel in any language"),
    GuidelineRule("G-TOP-WITH-BROADER",
                  "top concept of a scheme has a broader concept in the same scheme"),
    GuidelineRule("G-ORPHAN",
                  "concept has no semantic relation and is no top concept"),
    GuidelineRule("G-PLAIN-LITERAL",
                  "label or literal-form value is not a plain literal (S12/S51)"),
    GuidelineRule("G-NOTATION-UNTYPED",
                  "skos:notation value is a plain literal instead of a typed one"),
    GuidelineRule("G-MEMBERLIST-MULTI",
                  "resource has several skos:memberList values (S35)"),
    GuidelineRule("G-UNION-RANGE",
                  "skos:member value is neither a concept nor a collection (S32)"),
    GuidelineRule("G-MALFORMED-LIST",
                  "skos:memberList value is not a well-formed rdf:List"),
)

KNOWN_RULE_IDS: frozenset[str] = frozenset(r.id for r in DEFAULT_RULES)

_LABEL_VALUE_PROPS = (SKOS.prefLabel, SKOS.altLabel, SKOS.hiddenLabel, SKOSXL.literalForm)


def default_rules(
    enable: Iterable[str] = (), disable: Iterable[str] = ()
) -> tuple[GuidelineRule, ...]:
    """The default rule set with the given ids force-enabled/disabled."""
    enable = set(enable)
    disable = set(disable)
    unknown = (enable | disable) - KNOWN_RULE_IDS
    if unknown:
        raise ValueError(f"unknown guideline rule id(s): {', '.join(sorted(unknown))}")
    rules = []
    for rule in DEFAULT_RULES:
        enabled = rule.enabled
        if rule.id in enable:
            enabled = True
        if rule.id in disable:
            enabled = False
        rules.append(GuidelineRule(rule.id, rule.description, enabled))
    return tuple(rules)


def _warn(rule_id: str, focus: Term, evidence: tuple[Triple, ...], message: str) -> Finding:
    return Finding(rule_id, Severity.WARNING, focus, evidence, message)


def _hier_cycle(mg: MaterializedGraph) -> list[Finding]:
    findings = []
    for t in mg.graph.match(None, SKOS.broaderTransitive, None):
        if t.subject == t.object:
            findings.append(_warn(
                "G-HIER-CYCLE", t.subject, (t,),
                f"{curie(t.subject)} lies on a cycle in the broader hierarchy",
            ))
    return findings


def _reflexive(mg: MaterializedGraph) -> list[Finding]:
    findings = []
    for prop in (SKOS.broader, SKOS.related):
        for t in mg.asserted.match(None, prop, None):
            if t.subject == t.object:
                findings.append(_warn(
                    "G-REFLEXIVE", t.subject, (t,),
                    f"{curie(t.subject)} is {curie(prop)} itself",
                ))
    return findings


def _same_scheme_match(mg: MaterializedGraph) -> list[Finding]:
    mapping_props = properties_below(SKOS.mappingRelation, Profile.REFERENCE)
    graph = mg.graph
    findings = []
    for t in mg.asserted:
        if t.predicate not in mapping_props or isinstance(t.object, Literal):
            continue
        schemes_s = set(graph.objects(t.subject, SKOS.inScheme))
        schemes_o = set(graph.objects(t.object, SKOS.inScheme))
        common = schemes_s & schemes_o
        if not common:
            continue
        scheme = min(common, key=lambda s: serialize_triple(Triple(t.subject, SKOS.inScheme, s)))
        findings.append(_warn(
            "G-SAME-SCHEME-MATCH", t.subject,
            (t, Triple(t.subject, SKOS.inScheme, scheme), Triple(t.object, SKOS.inScheme, scheme)),
            f"{curie(t.predicate)} links {curie(t.subject)} and {curie(t.object)}, "
            f"which both belong to scheme {curie(scheme)}; mapping properties are "
            f"conventionally used between concepts of different schemes",
        ))
    return findings


def _missing_preflabel(mg: MaterializedGraph) -> list[Finding]:
    findings = []
    for type_triple in mg.graph.match(None, RDF.type, SKOS.Concept):
        node = type_triple.subject
        if next(mg.graph.match(node, SKOS.prefLabel, None), None) is None:
            findings.append(_warn(
                "G-MISSING-PREFLABEL", node, (type_triple,),
                f"{curie(node)} has no skos:prefLabel in any language",
            ))
    return findings


def _top_with_broader(mg: MaterializedGraph) -> list[Finding]:
    graph = mg.graph
    findings = []
    for t_top in graph.match(None, SKOS.topConceptOf, None):
        concept, scheme = t_top.subject, t_top.object
        for t_broader in graph.match(concept, SKOS.broader, None):
            parent = t_broader.object
            if isinstance(parent, Literal):
                continue
            in_scheme = Triple(parent, SKOS.inScheme, scheme)
            if in_scheme in graph:
                findings.append(_warn(
                    "G-TOP-WITH-BROADER", concept, (t_top, t_broader, in_scheme),
                    f"{curie(concept)} is a top concept of {curie(scheme)} but has "
                    f"broader concept {curie(parent)} in the same scheme",
                ))
    return findings


def _orphan(mg: MaterializedGraph) -> list[Finding]:
    graph = mg.graph
    findings = []
    for type_triple in graph.match(None, RDF.type, SKOS.Concept):
        node = type_triple.subject
        if next(graph.match(node, SKOS.topConceptOf, None), None) is not None:
            continue
        if any(t.object != node for t in graph.match(node, SKOS.semanticRelation, None)):
            continue
        if any(t.subject != node for t in graph.match(None, SKOS.semanticRelation, node)):
            continue
        findings.append(_warn(
            "G-ORPHAN", node, (type_triple,),
            f"{curie(node)} has no semantic relation to any other concept "
            f"and is not a top concept of any scheme",
        ))
    return findings


def _plain_literal(mg: MaterializedGraph) -> list[Finding]:
    findings = []
    for prop in _LABEL_VALUE_PROPS:
        for t in mg.asserted.match(None, prop, None):
            o = t.object
            if not isinstance(o, Literal):
                findings.append(_warn(
                    "G-PLAIN-LITERAL", t.subject, (t,),
                    f"{curie(prop)} value of {curie(t.subject)} is {curie(o)}, "
                    f"not a plain literal",
                ))
            elif o.datatype is not None:
                findings.append(_warn(
                    "G-PLAIN-LITERAL", t.subject, (t,),
                    f'{curie(prop)} value "{o.lexical}" of {curie(t.subject)} carries '
                    f"datatype {curie(o.datatype)}; a plain literal is required",
                ))
    return findings


def _notation_untyped(mg: MaterializedGraph) -> list[Finding]:
    findings = []
    for t in mg.asserted.match(None, SKOS.notation, None):
        o = t.object
        if isinstance(o, Literal) and o.datatype is None:
            findings.append(_warn(
                "G-NOTATION-UNTYPED", t.subject, (t,),
                f'skos:notation "{o.lexical}" of {curie(t.subject)} is a plain literal; '
                f"notations are conventionally typed literals with a user-defined datatype",
            ))
    return findings


def _memberlist_multi(mg: MaterializedGraph) -> list[Finding]:
    by_subject: dict[Term, list[Triple]] = {}
    for t in mg.asserted.match(None, SKOS.memberList, None):
        by_subject.setdefault(t.subject, []).append(t)
    findings = []
    for node, triples in by_subject.items():
        if len(triples) < 2:
            continue
        findings.append(_warn(
            "G-MEMBERLIST-MULTI", node, tuple(sorted(triples, key=serialize_triple)),
            f"{curie(node)} has {len(triples)} skos:memberList values; "
            f"skos:memberList is functional, so one is the maximum",
        ))
    return findings


def _union_range(mg: MaterializedGraph) -> list[Finding]:
    graph = mg.graph
    by_object: dict[Term, list[Triple]] = {}
    for t in graph.match(None, SKOS.member, None):
        o = t.object
        if isinstance(o, Literal):
            by_object.setdefault(o, []).append(t)
            continue
        types = set(graph.objects(o, RDF.type))
        if SKOS.Concept not in types and SKOS.Collection not in types:
            by_object.setdefault(o, []).append(t)
    findings = []
    for obj, triples in by_object.items():
        findings.append(_warn(
            "G-UNION-RANGE", obj, tuple(sorted(triples, key=serialize_triple)),
            f"skos:member value {curie(obj)} is typed as neither skos:Concept "
            f"nor skos:Collection and neither type is inferable",
        ))
    return findings


def _malformed_list(mg: MaterializedGraph) -> list[Finding]:
    findings = []
    for t in mg.asserted.match(None, SKOS.memberList, None):
        try:
            read_rdf_list(mg.graph, t.object)
        except RdfListError as exc:
            findings.append(_warn(
                "G-MALFORMED-LIST", t.subject, (t,),
                f"skos:memberList of {curie(t.subject)} is not a well-formed "
                f"rdf:List: {exc}",
            ))
    return findings


_CHECKERS: dict[str, Callable[[MaterializedGraph], list[Finding]]] = {
    "G-HIER-CYCLE": _hier_cycle,
    "G-REFLEXIVE": _reflexive,
    "G-SAME-SCHEME-MATCH": _same_scheme_match,
    "G-MISSING-PREFLABEL": _missing_preflabel,
    "G-TOP-WITH-BROADER": _top_with_broader,
    "G-ORPHAN": _orphan,
    "G-PLAIN-LITERAL": _plain_literal,
    "G-NOTATION-UNTYPED": _notation_untyped,
    "G-MEMBERLIST-MULTI": _memberlist_multi,
    "G-UNION-RANGE": _union_range,
    "G-MALFORMED-LIST": _malformed_list,
}


def check_guidelines(
    mg: MaterializedGraph,
    rules: Optional[Iterable[GuidelineRule]] = None,
) -> list[Finding]:
    """Run every enabled guideline rule; all resulting Findings are warnings."""
    if rules is None:
        rules = DEFAULT_RULES
    findings: list[Finding] = []
    for rule in rules:
        if rule.enabled:
            findings.extend(_CHECKERS[rule.id](mg))
    return sort_findings(findings)
