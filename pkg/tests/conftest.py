"""Shared hypothesis strategies for RDF terms, triples, and graphs."""

from __future__ import annotations

import hypothesis.strategies as st
from hypothesis import settings

from skosforge import BlankNode, Graph, Iri, Literal, Triple, XSD

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_iri_alphabet = st.characters(
    min_codepoint=0x21,
    blacklist_characters='<>"{}|^`\\',
    blacklist_categories=("Cs", "Cc"),
)


@st.composite
def iris(draw):
    scheme = draw(st.sampled_from(["http", "https", "urn", "ex"]))
    body = draw(st.text(alphabet=_iri_alphabet, min_size=1, max_size=30))
    return Iri(f"{scheme}:{body}")


@st.composite
def bnodes(draw):
    label = draw(st.from_regex(r"\A[A-Za-z0-9_]{1,12}\Z"))
    return BlankNode(label)


language_tags = st.from_regex(r"\A[a-zA-Z]{1,8}(-[a-zA-Z0-9]{1,8}){0,2}\Z")


@st.composite
def literals(draw):
    lexical = draw(st.text(max_size=40))
    shape = draw(st.integers(0, 3))
    if shape == 0:
        return Literal(lexical)
    if shape == 1:
        return Literal(lexical, language=draw(language_tags))
    if shape == 2:
        return Literal(lexical, datatype=XSD.string)
    return Literal(lexical, datatype=draw(iris()))


def subjects():
    return st.one_of(iris(), bnodes())


def terms():
    return st.one_of(iris(), bnodes(), literals())


@st.composite
def triples(draw):
    return Triple(draw(subjects()), draw(iris()), draw(terms()))


@st.composite
def graphs(draw, max_size: int = 30):
    return Graph(draw(st.lists(triples(), max_size=max_size)))
