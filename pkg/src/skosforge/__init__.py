"""skosforge: parse SKOS vocabularies, materialize the definition axioms,
and check the integrity conditions and usage guidelines."""

from .graph import (
    AmbiguousListError,
    CyclicListError,
    Graph,
    MalformedListError,
    RdfListError,
    read_rdf_list,
)
from .guidelines import DEFAULT_RULES, GuidelineRule, check_guidelines
from .inference import (
    InferenceTrace,
    MaterializedGraph,
    TraceEntry,
    broader_closure,
    dumb_down_xl,
    materialize,
)
from .integrity import Finding, Severity, check_integrity
from .namespaces import OWL, RDF, RDFS, SKOS, SKOSXL, XSD, Namespace
from .ntriples import (
    ParseError,
    ParseIssue,
    parse_ntriples,
    serialize_ntriples,
    serialize_term,
    serialize_triple,
)
from .report import Report, build_report, compute_stats, format_report
from .terms import BlankNode, Iri, Literal, Term, Triple
from .vocab import (
    Axiom,
    AxiomKind,
    INTEGRITY_CONDITION_IDS,
    Profile,
    axiom_by_id,
    axiom_table,
    axioms_for,
    catalog_as_dicts,
    properties_below,
    sub_property_closure,
)

__version__ = "0.1.0"
