"""The SKOS and SKOS-XL axiom catalog (S1-S62) as queryable data.

Axioms are data, not code: the inference and integrity engines interpret
this catalog, which makes its coverage auditable by counting. Each axiom
records its presence in the published formalization profiles: the normative
RDF schema and the non-normative OWL 1 DL prune (the prune exists for
S1-S46 only; no SKOS-XL prune was ever published, so every XL axiom has
``in_owl_dl_prune = False``).

Argument roles, by kind:

=========================  ==================================================
InstanceOfMetaclass        ``instance`` (1+), ``metaclass``
SubPropertyOf              alternating ``sub``/``super`` pairs
SubClassOf                 ``sub``, ``super``
Domain                     ``property``, ``class``
Range                      ``property`` (1+), ``class`` (0+; two classes
                           means a union range, none means plain literals)
PlainLiteralRange          ``property`` (1+)
InverseOf                  ``first``, ``second``
Symmetric / Transitive /   ``property`` (1+)
Functional
DisjointClasses            ``class`` then ``disjointWith`` (1+): the class
                           is disjoint with each of the others
DisjointProperties         either ``property`` (2+) for pairwise-disjoint
                           sets, or ``property`` + ``disjointWith`` (1+)
PropertyChain              ``chainFirst``, ``chainSecond``, ``super``
CardinalityExactlyOne      ``class``, ``property``
ListMemberRule             ``listProperty``, ``memberProperty``
UniquePrefLabelPerLanguage ``property``
=========================  ==================================================
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .namespaces import OWL, RDF, RDFS, SKOS, SKOSXL
from .terms import Iri


class AxiomKind(enum.Enum):
    SUB_PROPERTY_OF = "SubPropertyOf"
    SUB_CLASS_OF = "SubClassOf"
    DOMAIN = "Domain"
    RANGE = "Range"
    INVERSE_OF = "InverseOf"
    SYMMETRIC = "Symmetric"
    TRANSITIVE = "Transitive"
    FUNCTIONAL = "Functional"
    DISJOINT_CLASSES = "DisjointClasses"
    DISJOINT_PROPERTIES = "DisjointProperties"
    PROPERTY_CHAIN = "PropertyChain"
    CARDINALITY_EXACTLY_ONE = "CardinalityExactlyOne"
    LIST_MEMBER_RULE = "ListMemberRule"
    UNIQUE_PREF_LABEL_PER_LANGUAGE = "UniquePrefLabelPerLanguage"
    PLAIN_LITERAL_RANGE = "PlainLiteralRange"
    INSTANCE_OF_METACLASS = "InstanceOfMetaclass"


class Profile(enum.Enum):
    """Selectable axiom subsets mirroring the published formalizations."""

    REFERENCE = "reference"
    RDF_SCHEMA = "rdf-schema"
    OWL_DL_PRUNE = "owl-dl-prune"


@dataclass(frozen=True)
class Axiom:
    id: str
    kind: AxiomKind
    arguments: tuple[tuple[str, Iri], ...]
    in_rdf_schema: bool
    in_owl_dl_prune: bool
    is_integrity_condition: bool = False

    def role_values(self, role: str) -> tuple[Iri, ...]:
        return tuple(iri for r, iri in self.arguments if r == role)

    def sub_super_pairs(self) -> tuple[tuple[Iri, Iri], ...]:
        subs = self.role_values("sub")
        supers = self.role_values("super")
        return tuple(zip(subs, supers))

    def disjoint_pairs(self) -> tuple[tuple[Iri, Iri], ...]:
        """Expand a disjointness axiom into the concrete pairs it asserts."""
        directed = self.role_values("disjointWith")
        if directed:
            (left,) = self.role_values("class") or self.role_values("property")
            return tuple((left, right) for right in directed)
        return tuple(combinations(self.role_values("property"), 2))


def _args(*pairs: tuple[str, Iri]) -> tuple[tuple[str, Iri], ...]:
    return tuple(pairs)


def _instances(metaclass: Iri, *iris: Iri) -> tuple[tuple[str, Iri], ...]:
    return _args(*[("instance", i) for i in iris], ("metaclass", metaclass))


def _subprops(*pairs: tuple[Iri, Iri]) -> tuple[tuple[str, Iri], ...]:
    flat: list[tuple[str, Iri]] = []
    for sub, sup in pairs:
        flat.append(("sub", sub))
        flat.append(("super", sup))
    return tuple(flat)


def _build_catalog() -> tuple[Axiom, ...]:
    A = Axiom
    K = AxiomKind
    rows = [
        # --- Class and property definition axioms --------------------------
        A("S1", K.INSTANCE_OF_METACLASS, _instances(OWL.Class, SKOS.Concept), True, True),
        A("S2", K.INSTANCE_OF_METACLASS, _instances(OWL.Class, SKOS.ConceptScheme), True, True),
        A("S3", K.INSTANCE_OF_METACLASS,
          _instances(OWL.ObjectProperty, SKOS.inScheme, SKOS.hasTopConcept, SKOS.topConceptOf),
          True, True),
        A("S4", K.RANGE, _args(("property", SKOS.inScheme), ("class", SKOS.ConceptScheme)),
          True, True),
        A("S5", K.DOMAIN, _args(("property", SKOS.hasTopConcept), ("class", SKOS.ConceptScheme)),
          True, True),
        A("S6", K.RANGE, _args(("property", SKOS.hasTopConcept), ("class", SKOS.Concept)),
          True, True),
        A("S7", K.SUB_PROPERTY_OF, _subprops((SKOS.topConceptOf, SKOS.inScheme)), True, True),
        A("S8", K.INVERSE_OF, _args(("first", SKOS.topConceptOf), ("second", SKOS.hasTopConcept)),
          True, True),
        A("S9", K.DISJOINT_CLASSES,
          _args(("class", SKOS.ConceptScheme), ("disjointWith", SKOS.Concept)),
          True, True, is_integrity_condition=True),
        A("S10", K.INSTANCE_OF_METACLASS,
          _instances(OWL.AnnotationProperty, SKOS.prefLabel, SKOS.altLabel, SKOS.hiddenLabel),
          True, True),
        A("S11", K.SUB_PROPERTY_OF,
          _subprops((SKOS.prefLabel, RDFS.label), (SKOS.altLabel, RDFS.label),
                    (SKOS.hiddenLabel, RDFS.label)),
          True, False),
        A("S12", K.PLAIN_LITERAL_RANGE,
          _args(("property", SKOS.prefLabel), ("property", SKOS.altLabel),
                ("property", SKOS.hiddenLabel)),
          False, False),
        A("S13", K.DISJOINT_PROPERTIES,
          _args(("property", SKOS.prefLabel), ("property", SKOS.altLabel),
                ("property", SKOS.hiddenLabel)),
          False, False, is_integrity_condition=True),
        A("S14", K.UNIQUE_PREF_LABEL_PER_LANGUAGE, _args(("property", SKOS.prefLabel)),
          False, False, is_integrity_condition=True),
        A("S15", K.INSTANCE_OF_METACLASS, _instances(OWL.DatatypeProperty, SKOS.notation),
          True, True),
        A("S16", K.INSTANCE_OF_METACLASS,
          _instances(OWL.AnnotationProperty, SKOS.note, SKOS.changeNote, SKOS.definition,
                     SKOS.editorialNote, SKOS.example, SKOS.historyNote, SKOS.scopeNote),
          True, True),
        A("S17", K.SUB_PROPERTY_OF,
          _subprops((SKOS.changeNote, SKOS.note), (SKOS.definition, SKOS.note),
                    (SKOS.editorialNote, SKOS.note), (SKOS.example, SKOS.note),
                    (SKOS.historyNote, SKOS.note), (SKOS.scopeNote, SKOS.note)),
          True, False),
        A("S18", K.INSTANCE_OF_METACLASS,
          _instances(OWL.ObjectProperty, SKOS.semanticRelation, SKOS.broader, SKOS.narrower,
                     SKOS.related, SKOS.broaderTransitive, SKOS.narrowerTransitive),
          True, True),
        A("S19", K.DOMAIN, _args(("property", SKOS.semanticRelation), ("class", SKOS.Concept)),
          True, True),
        A("S20", K.RANGE, _args(("property", SKOS.semanticRelation), ("class", SKOS.Concept)),
          True, True),
        A("S21", K.SUB_PROPERTY_OF,
          _subprops((SKOS.broaderTransitive, SKOS.semanticRelation),
                    (SKOS.narrowerTransitive, SKOS.semanticRelation),
                    (SKOS.related, SKOS.semanticRelation)),
          True, True),
        A("S22", K.SUB_PROPERTY_OF,
          _subprops((SKOS.broader, SKOS.broaderTransitive),
                    (SKOS.narrower, SKOS.narrowerTransitive)),
          True, True),
        A("S23", K.SYMMETRIC, _args(("property", SKOS.related)), True, True),
        A("S24", K.TRANSITIVE,
          _args(("property", SKOS.broaderTransitive), ("property", SKOS.narrowerTransitive)),
          True, True),
        A("S25", K.INVERSE_OF, _args(("first", SKOS.narrower), ("second", SKOS.broader)),
          True, True),
        A("S26", K.INVERSE_OF,
          _args(("first", SKOS.narrowerTransitive), ("second", SKOS.broaderTransitive)),
          True, True),
        A("S27", K.DISJOINT_PROPERTIES,
          _args(("property", SKOS.related), ("disjointWith", SKOS.broaderTransitive)),
          False, False, is_integrity_condition=True),
        A("S28", K.INSTANCE_OF_METACLASS,
          _instances(OWL.Class, SKOS.Collection, SKOS.OrderedCollection), True, True),
        A("S29", K.SUB_CLASS_OF,
          _args(("sub", SKOS.OrderedCollection), ("super", SKOS.Collection)), True, True),
        A("S30", K.INSTANCE_OF_METACLASS,
          _instances(OWL.ObjectProperty, SKOS.member, SKOS.memberList), True, True),
        A("S31", K.DOMAIN, _args(("property", SKOS.member), ("class", SKOS.Collection)),
          True, True),
        A("S32", K.RANGE,
          _args(("property", SKOS.member), ("class", SKOS.Concept), ("class", SKOS.Collection)),
          True, True),
        A("S33", K.DOMAIN, _args(("property", SKOS.memberList), ("class", SKOS.OrderedCollection)),
          True, True),
        A("S34", K.RANGE, _args(("property", SKOS.memberList), ("class", RDF.List)),
          True, False),
        A("S35", K.FUNCTIONAL, _args(("property", SKOS.memberList)), True, True),
        A("S36", K.LIST_MEMBER_RULE,
          _args(("listProperty", SKOS.memberList), ("memberProperty", SKOS.member)),
          False, False),
        A("S37", K.DISJOINT_CLASSES,
          _args(("class", SKOS.Collection), ("disjointWith", SKOS.Concept),
                ("disjointWith", SKOS.ConceptScheme)),
          True, True, is_integrity_condition=True),
        A("S38", K.INSTANCE_OF_METACLASS,
          _instances(OWL.ObjectProperty, SKOS.mappingRelation, SKOS.closeMatch, SKOS.exactMatch,
                     SKOS.broadMatch, SKOS.narrowMatch, SKOS.relatedMatch),
          True, True),
        A("S39", K.SUB_PROPERTY_OF, _subprops((SKOS.mappingRelation, SKOS.semanticRelation)),
          True, True),
        A("S40", K.SUB_PROPERTY_OF,
          _subprops((SKOS.closeMatch, SKOS.mappingRelation),
                    (SKOS.broadMatch, SKOS.mappingRelation),
                    (SKOS.narrowMatch, SKOS.mappingRelation),
                    (SKOS.relatedMatch, SKOS.mappingRelation)),
          True, True),
        A("S41", K.SUB_PROPERTY_OF,
          _subprops((SKOS.broadMatch, SKOS.broader), (SKOS.narrowMatch, SKOS.narrower),
                    (SKOS.relatedMatch, SKOS.related)),
          True, True),
        A("S42", K.SUB_PROPERTY_OF, _subprops((SKOS.exactMatch, SKOS.closeMatch)), True, True),
        A("S43", K.INVERSE_OF, _args(("first", SKOS.narrowMatch), ("second", SKOS.broadMatch)),
          True, True),
        A("S44", K.SYMMETRIC,
          _args(("property", SKOS.relatedMatch), ("property", SKOS.closeMatch),
                ("property", SKOS.exactMatch)),
          True, True),
        A("S45", K.TRANSITIVE, _args(("property", SKOS.exactMatch)), True, True),
        A("S46", K.DISJOINT_PROPERTIES,
          _args(("property", SKOS.exactMatch), ("disjointWith", SKOS.broadMatch),
                ("disjointWith", SKOS.relatedMatch)),
          False, False, is_integrity_condition=True),
        # --- SKOS-XL axioms (no OWL 1 DL prune of SKOS-XL exists) ----------
        A("S47", K.INSTANCE_OF_METACLASS, _instances(OWL.Class, SKOSXL.Label), True, False),
        A("S48", K.DISJOINT_CLASSES,
          _args(("class", SKOSXL.Label), ("disjointWith", SKOS.Concept),
                ("disjointWith", SKOS.ConceptScheme), ("disjointWith", SKOS.Collection)),
          True, False, is_integrity_condition=True),
        A("S49", K.INSTANCE_OF_METACLASS, _instances(OWL.DatatypeProperty, SKOSXL.literalForm),
          True, False),
        A("S50", K.DOMAIN, _args(("property", SKOSXL.literalForm), ("class", SKOSXL.Label)),
          True, False),
        A("S51", K.PLAIN_LITERAL_RANGE, _args(("property", SKOSXL.literalForm)), True, False),
        A("S52", K.CARDINALITY_EXACTLY_ONE,
          _args(("class", SKOSXL.Label), ("property", SKOSXL.literalForm)),
          True, False, is_integrity_condition=True),
        A("S53", K.INSTANCE_OF_METACLASS,
          _instances(OWL.ObjectProperty, SKOSXL.prefLabel, SKOSXL.altLabel, SKOSXL.hiddenLabel),
          True, False),
        A("S54", K.RANGE,
          _args(("property", SKOSXL.prefLabel), ("property", SKOSXL.altLabel),
                ("property", SKOSXL.hiddenLabel), ("class", SKOSXL.Label)),
          True, False),
        A("S55", K.PROPERTY_CHAIN,
          _args(("chainFirst", SKOSXL.prefLabel), ("chainSecond", SKOSXL.literalForm),
                ("super", SKOS.prefLabel)),
          False, False),
        A("S56", K.PROPERTY_CHAIN,
          _args(("chainFirst", SKOSXL.altLabel), ("chainSecond", SKOSXL.literalForm),
                ("super", SKOS.altLabel)),
          False, False),
        A("S57", K.PROPERTY_CHAIN,
          _args(("chainFirst", SKOSXL.hiddenLabel), ("chainSecond", SKOSXL.literalForm),
                ("super", SKOS.hiddenLabel)),
          False, False),
        A("S58", K.DISJOINT_PROPERTIES,
          _args(("property", SKOSXL.prefLabel), ("property", SKOSXL.altLabel),
                ("property", SKOSXL.hiddenLabel)),
          True, False, is_integrity_condition=True),
        A("S59", K.INSTANCE_OF_METACLASS, _instances(OWL.ObjectProperty, SKOSXL.labelRelation),
          True, False),
        A("S60", K.DOMAIN, _args(("property", SKOSXL.labelRelation), ("class", SKOSXL.Label)),
          True, False),
        A("S61", K.RANGE, _args(("property", SKOSXL.labelRelation), ("class", SKOSXL.Label)),
          True, False),
        A("S62", K.SYMMETRIC, _args(("property", SKOSXL.labelRelation)), True, False),
    ]
    rows.sort(key=lambda a: int(a.id[1:]))
    return tuple(rows)


_CATALOG: tuple[Axiom, ...] = _build_catalog()
_BY_ID: dict[str, Axiom] = {a.id: a for a in _CATALOG}

# Table 2 / the XL integrity rows, i.e. the rules whose violation makes data
# inconsistent with the data model (everything else is advisory).
INTEGRITY_CONDITION_IDS: frozenset[str] = frozenset(
    a.id for a in _CATALOG if a.is_integrity_condition
)


def axiom_table() -> tuple[Axiom, ...]:
    """All 62 axioms in id order."""
    return _CATALOG


def axiom_by_id(axiom_id: str) -> Axiom:
    return _BY_ID[axiom_id]


def axioms_for(profile: Profile) -> tuple[Axiom, ...]:
    """The axiom subset present in the given formalization profile."""
    if profile is Profile.REFERENCE:
        return _CATALOG
    if profile is Profile.RDF_SCHEMA:
        return tuple(a for a in _CATALOG if a.in_rdf_schema)
    return tuple(a for a in _CATALOG if a.in_owl_dl_prune)


def sub_property_closure(profile: Profile = Profile.REFERENCE) -> dict[Iri, frozenset[Iri]]:
    """Map each property to its strict super-properties (transitive closure)."""
    direct: dict[Iri, set[Iri]] = {}
    for axiom in axioms_for(profile):
        if axiom.kind is AxiomKind.SUB_PROPERTY_OF:
            for sub, sup in axiom.sub_super_pairs():
                direct.setdefault(sub, set()).add(sup)
    closure: dict[Iri, frozenset[Iri]] = {}

    def supers_of(prop: Iri, pending: set[Iri]) -> frozenset[Iri]:
        if prop in closure:
            return closure[prop]
        result: set[Iri] = set()
        for sup in direct.get(prop, ()):
            result.add(sup)
            if sup not in pending:
                result |= supers_of(sup, pending | {prop})
        closure[prop] = frozenset(result)
        return closure[prop]

    for prop in list(direct):
        supers_of(prop, set())
    return closure


def properties_below(prop: Iri, profile: Profile = Profile.REFERENCE) -> frozenset[Iri]:
    """``prop`` plus every property whose super-property closure contains it."""
    closure = sub_property_closure(profile)
    return frozenset({prop} | {p for p, supers in closure.items() if prop in supers})


def catalog_as_dicts() -> list[dict]:
    """The catalog in the JSON shape used by the CLI ``axioms`` subcommand."""
    return [
        {
            "id": a.id,
            "kind": a.kind.value,
            "arguments": [{"role": role, "iri": iri.value} for role, iri in a.arguments],
            "in_rdf_schema": a.in_rdf_schema,
            "in_owl_dl_prune": a.in_owl_dl_prune,
            "is_integrity_condition": a.is_integrity_condition,
        }
        for a in axiom_table()
    ]
