"""Forward-chaining materialization of the definition axioms.

The engine is semi-naive: every triple is processed exactly once, firing
only the rules it can newly satisfy, with join partners looked up in the
graph built so far. Every rule derives triples whose terms already occur in
the graph, so the closure is bounded and materialization terminates on all
inputs.

Each derived triple records the axiom and premise triples of the first
derivation found; one witness suffices for explanation output.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .graph import Graph
from .namespaces import RDF, SKOS
from .terms import Iri, Literal, Term, Triple
from .vocab import Axiom, AxiomKind, Profile, axiom_table, axioms_for


@dataclass(frozen=True)
class TraceEntry:
    axiom_id: str
    premises: tuple[Triple, ...]


InferenceTrace = dict[Triple, TraceEntry]


@dataclass
class MaterializedGraph:
    """An input graph closed under the definition axioms of one profile."""

    graph: Graph
    asserted: Graph
    trace: InferenceTrace
    profile: Profile
    derived_count: int = field(init=False)

    def __post_init__(self) -> None:
        self.derived_count = len(self.trace)


class _RuleSet:
    """Per-predicate dispatch tables compiled from an axiom list."""

    def __init__(self, axioms: Iterable[Axiom]):
        self.sub_supers: dict[Iri, list[tuple[Iri, str]]] = {}
        self.subclasses: dict[Iri, list[tuple[Iri, str]]] = {}
        self.domains: dict[Iri, list[tuple[Iri, str]]] = {}
        self.ranges: dict[Iri, list[tuple[Iri, str]]] = {}
        self.inverses: dict[Iri, list[tuple[Iri, str]]] = {}
        self.symmetric: dict[Iri, str] = {}
        self.transitive: dict[Iri, str] = {}
        self.chains_by_first: dict[Iri, list[tuple[Iri, Iri, str]]] = {}
        self.chains_by_second: dict[Iri, list[tuple[Iri, Iri, str]]] = {}
        self.list_rules: dict[Iri, tuple[Iri, str]] = {}

        for axiom in axioms:
            kind = axiom.kind
            if kind is AxiomKind.SUB_PROPERTY_OF:
                for sub, sup in axiom.sub_super_pairs():
                    self.sub_supers.setdefault(sub, []).append((sup, axiom.id))
            elif kind is AxiomKind.SUB_CLASS_OF:
                (sub,) = axiom.role_values("sub")
                (sup,) = axiom.role_values("super")
                self.subclasses.setdefault(sub, []).append((sup, axiom.id))
            elif kind is AxiomKind.DOMAIN:
                (cls,) = axiom.role_values("class")
                for prop in axiom.role_values("property"):
                    self.domains.setdefault(prop, []).append((cls, axiom.id))
            elif kind is AxiomKind.RANGE:
                classes = axiom.role_values("class")
                if len(classes) != 1:
                    # Union ranges (S32) assert a disjunction; deriving either
                    # disjunct as a fact would be unsound, so nothing fires.
                    continue
                for prop in axiom.role_values("property"):
                    self.ranges.setdefault(prop, []).append((classes[0], axiom.id))
            elif kind is AxiomKind.INVERSE_OF:
                (first,) = axiom.role_values("first")
                (second,) = axiom.role_values("second")
                self.inverses.setdefault(first, []).append((second, axiom.id))
                self.inverses.setdefault(second, []).append((first, axiom.id))
            elif kind is AxiomKind.SYMMETRIC:
                for prop in axiom.role_values("property"):
                    self.symmetric[prop] = axiom.id
            elif kind is AxiomKind.TRANSITIVE:
                for prop in axiom.role_values("property"):
                    self.transitive[prop] = axiom.id
            elif kind is AxiomKind.PROPERTY_CHAIN:
                (first,) = axiom.role_values("chainFirst")
                (second,) = axiom.role_values("chainSecond")
                (target,) = axiom.role_values("super")
                self.chains_by_first.setdefault(first, []).append((second, target, axiom.id))
                self.chains_by_second.setdefault(second, []).append((first, target, axiom.id))
            elif kind is AxiomKind.LIST_MEMBER_RULE:
                (list_prop,) = axiom.role_values("listProperty")
                (member_prop,) = axiom.role_values("memberProperty")
                self.list_rules[list_prop] = (member_prop, axiom.id)
            # Metaclass declarations, plain-literal ranges, functionality,
            # disjointness, cardinality, and label uniqueness drive no
            # inference; they are checked, not applied.


def _walk_list(graph: Graph, head: Term) -> Optional[list[tuple[Term, Triple]]]:
    """Yield (item, rdf:first triple) pairs, or None if the list is broken."""
    nil = RDF.nil
    out: list[tuple[Term, Triple]] = []
    seen: set[Term] = set()
    node = head
    while node != nil:
        if node in seen or isinstance(node, Literal):
            return None
        seen.add(node)
        firsts = list(graph.match(node, RDF.first, None))
        rests = list(graph.match(node, RDF.rest, None))
        if len(firsts) != 1 or len(rests) != 1:
            return None
        out.append((firsts[0].object, firsts[0]))
        node = rests[0].object
    return out


def materialize(graph: Graph, profile: Profile = Profile.REFERENCE) -> MaterializedGraph:
    """Close ``graph`` under every definition-axiom rule in ``profile``.

    Malformed or cyclic rdf:Lists under skos:memberList do not abort the
    run: the list-member rule simply does not fire for that list (the
    guideline layer reports the breakage).
    """
    rules = _RuleSet(axioms_for(profile))
    return _run(graph, rules, profile)


def _run(graph: Graph, rules: _RuleSet, profile: Profile) -> MaterializedGraph:
    result = Graph(graph)
    trace: InferenceTrace = {}
    queue: deque[Triple] = deque(result)

    rdf_type = RDF.type
    sub_supers = rules.sub_supers
    subclasses = rules.subclasses
    domains = rules.domains
    ranges = rules.ranges
    inverses = rules.inverses
    symmetric = rules.symmetric
    transitive = rules.transitive
    chains_by_first = rules.chains_by_first
    chains_by_second = rules.chains_by_second
    list_rules = rules.list_rules
    contains = result.__contains__
    add = result.add
    push = queue.append
    match = result.match

    def derive(s: Term, p: Iri, o: Term, axiom_id: str, premises: tuple[Triple, ...]) -> None:
        t = Triple(s, p, o)
        if not contains(t):
            add(t)
            trace[t] = TraceEntry(axiom_id, premises)
            push(t)

    while queue:
        t = queue.popleft()
        s = t.subject
        p = t.predicate
        o = t.object
        o_is_node = not isinstance(o, Literal)

        for sup, ax in sub_supers.get(p, ()):
            derive(s, sup, o, ax, (t,))
        for cls, ax in domains.get(p, ()):
            derive(s, rdf_type, cls, ax, (t,))
        if o_is_node:
            for cls, ax in ranges.get(p, ()):
                derive(o, rdf_type, cls, ax, (t,))
            for inv, ax in inverses.get(p, ()):
                derive(o, inv, s, ax, (t,))
            ax = symmetric.get(p)
            if ax is not None:
                derive(o, p, s, ax, (t,))
            ax = transitive.get(p)
            if ax is not None:
                for right in list(match(o, p, None)):
                    derive(s, p, right.object, ax, (t, right))
                for left in list(match(None, p, s)):
                    derive(left.subject, p, o, ax, (left, t))
            for second, target, ax in chains_by_first.get(p, ()):
                for link in list(match(o, second, None)):
                    derive(s, target, link.object, ax, (t, link))
        if p == rdf_type:
            for sup, ax in subclasses.get(o, ()):
                derive(s, rdf_type, sup, ax, (t,))
        for first, target, ax in chains_by_second.get(p, ()):
            for link in list(match(None, first, s)):
                derive(link.subject, target, o, ax, (link, t))
        rule = list_rules.get(p)
        if rule is not None and o_is_node:
            member_prop, ax = rule
            items = _walk_list(result, o)
            if items is not None:
                for item, first_triple in items:
                    derive(s, member_prop, item, ax, (t, first_triple))

    return MaterializedGraph(graph=result, asserted=graph, trace=trace, profile=profile)


def dumb_down_xl(graph: Graph) -> Graph:
    """Return ``graph`` plus the plain-SKOS label triples licensed by the
    SKOS-XL literal-form property chains (S55-S57), and nothing else."""
    chains = [a for a in axiom_table() if a.kind is AxiomKind.PROPERTY_CHAIN]
    return _run(graph, _RuleSet(chains), Profile.REFERENCE).graph


def broader_closure(mg: MaterializedGraph, concept: Term) -> set[Term]:
    """Every concept reachable upward from ``concept`` through the
    materialized transitive broader hierarchy. The concept itself appears
    only when a cycle makes it self-reachable; unknown concepts yield the
    empty set."""
    return {t.object for t in mg.graph.match(concept, SKOS.broaderTransitive, None)}
