"""Triple set with pattern-matching indexes and rdf:List traversal.

A Graph is a set of triples (duplicate inserts are no-ops) indexed by
subject, predicate, object, (subject, predicate), and (predicate, object).
Construction is single-writer; once loaded, a graph is treated as immutable
and is safe for any number of concurrent readers.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .namespaces import RDF
from .terms import Iri, Term, Triple


class RdfListError(Exception):
    """Base for problems encountered while walking an rdf:List."""

    def __init__(self, node: Term, message: str):
        self.node = node
        super().__init__(message)


class MalformedListError(RdfListError):
    """A list node is missing rdf:first or rdf:rest."""

    def __init__(self, node: Term):
        super().__init__(node, f"list node {node!r} lacks rdf:first or rdf:rest")


class CyclicListError(RdfListError):
    """A list node was revisited during traversal."""

    def __init__(self, node: Term):
        super().__init__(node, f"rdf:List cycles back to {node!r}")


class AmbiguousListError(RdfListError):
    """A list node carries more than one rdf:first or rdf:rest value."""

    def __init__(self, node: Term):
        super().__init__(node, f"list node {node!r} has multiple rdf:first/rdf:rest values")


_EMPTY: tuple = ()


class Graph:
    def __init__(self, triples: Iterable[Triple] = ()):
        self._triples: set[Triple] = set()
        # Index buckets are lists: the triple set above already deduplicates,
        # so appends stay unique and skip re-hashing the triple per index.
        self._by_s: dict[Term, list[Triple]] = {}
        self._by_p: dict[Iri, list[Triple]] = {}
        self._by_o: dict[Term, list[Triple]] = {}
        self._by_sp: dict[tuple[Term, Iri], list[Triple]] = {}
        self._by_po: dict[tuple[Iri, Term], list[Triple]] = {}
        for t in triples:
            self.add(t)

    def add(self, t: Triple) -> bool:
        """Insert a triple; return False if it was already present."""
        triples = self._triples
        if t in triples:
            return False
        triples.add(t)
        s, p, o = t.subject, t.predicate, t.object
        self._by_s.setdefault(s, []).append(t)
        self._by_p.setdefault(p, []).append(t)
        self._by_o.setdefault(o, []).append(t)
        self._by_sp.setdefault((s, p), []).append(t)
        self._by_po.setdefault((p, o), []).append(t)
        return True

    def update(self, triples: Iterable[Triple]) -> None:
        for t in triples:
            self.add(t)

    def __contains__(self, t: Triple) -> bool:
        return t in self._triples

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._triples == other._triples

    def __repr__(self) -> str:
        return f"<Graph size={len(self._triples)}>"

    def copy(self) -> "Graph":
        return Graph(self._triples)

    def match(
        self,
        s: Optional[Term] = None,
        p: Optional[Iri] = None,
        o: Optional[Term] = None,
    ) -> Iterator[Triple]:
        """Yield every triple agreeing with each bound position (unordered)."""
        if s is not None and p is not None:
            candidates = self._by_sp.get((s, p), _EMPTY)
            if o is None:
                yield from candidates
            else:
                for t in candidates:
                    if t.object == o:
                        yield t
        elif p is not None and o is not None:
            yield from self._by_po.get((p, o), _EMPTY)
        elif s is not None and o is not None:
            for t in self._by_s.get(s, _EMPTY):
                if t.object == o:
                    yield t
        elif s is not None:
            yield from self._by_s.get(s, _EMPTY)
        elif p is not None:
            yield from self._by_p.get(p, _EMPTY)
        elif o is not None:
            yield from self._by_o.get(o, _EMPTY)
        else:
            yield from self._triples

    # Convenience projections over match(), mirroring common query shapes.

    def subjects(self, p: Optional[Iri] = None, o: Optional[Term] = None) -> Iterator[Term]:
        for t in self.match(None, p, o):
            yield t.subject

    def objects(self, s: Optional[Term] = None, p: Optional[Iri] = None) -> Iterator[Term]:
        for t in self.match(s, p, None):
            yield t.object

    def predicates(self) -> Iterator[Iri]:
        return iter(self._by_p.keys())


def read_rdf_list(graph: Graph, head: Term) -> list[Term]:
    """Return the items of the rdf:List starting at ``head``, in order.

    rdf:nil yields []. Raises MalformedListError for a node without exactly
    the rdf:first/rdf:rest pair, AmbiguousListError when a node carries
    several, and CyclicListError when traversal revisits a node; cycle
    detection guarantees termination on every input.
    """
    nil = RDF.nil
    first = RDF.first
    rest = RDF.rest
    items: list[Term] = []
    seen: set[Term] = set()
    node = head
    while node != nil:
        if node in seen:
            raise CyclicListError(node)
        seen.add(node)
        firsts = [t.object for t in graph.match(node, first, None)]
        rests = [t.object for t in graph.match(node, rest, None)]
        if len(firsts) > 1 or len(rests) > 1:
            raise AmbiguousListError(node)
        if not firsts or not rests:
            raise MalformedListError(node)
        items.append(firsts[0])
        node = rests[0]
    return items
