"""IRI namespaces for the vocabularies the toolkit knows about."""

from __future__ import annotations

from .terms import Iri


class Namespace:
    """Attribute-style IRI factory: ``SKOS.broader`` is the broader IRI."""

    def __init__(self, base: str):
        self._base = base
        self._cache: dict[str, Iri] = {}

    @property
    def base(self) -> str:
        return self._base

    def term(self, local: str) -> Iri:
        iri = self._cache.get(local)
        if iri is None:
            iri = self._cache[local] = Iri(self._base + local)
        return iri

    def __getattr__(self, local: str) -> Iri:
        if local.startswith("_"):
            raise AttributeError(local)
        return self.term(local)

    def __contains__(self, iri: Iri) -> bool:
        return isinstance(iri, Iri) and iri.value.startswith(self._base)


SKOS = Namespace("http://www.w3.org/2004/02/skos/core#")
SKOSXL = Namespace("http://www.w3.org/2008/05/skos-xl#")
RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
OWL = Namespace("http://www.w3.org/2002/07/owl#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
