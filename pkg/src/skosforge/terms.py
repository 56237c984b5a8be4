"""RDF term and triple model.

Terms are immutable values: IRIs, blank nodes, and literals. Equality is
syntactic (exact codepoints for IRIs and lexical forms), with one exception:
literal language tags compare case-insensitively, as BCP47 requires. Hashes
are cached because the inference engine keeps millions of term-keyed set
entries.
"""

from __future__ import annotations

import re
from typing import Optional, Union

# Absolute IRI: a scheme followed by anything the N-Triples IRIREF
# production allows (no whitespace/controls, none of <>"{}|^`\).
_SCHEME_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:")
_IRI_BAD_CHARS = re.compile(r'[\x00-\x20\x7f<>"{}|^`\\]')
_BNODE_LABEL_RE = re.compile(r"^[A-Za-z0-9_]+$")
_LANG_TAG_RE = re.compile(r"^[A-Za-z]+(-[A-Za-z0-9]+)*$")


class Iri:
    """An absolute IRI, compared by exact codepoint equality."""

    __slots__ = ("value", "_hash")

    def __init__(self, value: str):
        if not value:
            raise ValueError("IRI must be non-empty")
        if _IRI_BAD_CHARS.search(value):
            raise ValueError(f"IRI contains forbidden character: {value!r}")
        if not _SCHEME_RE.match(value):
            raise ValueError(f"IRI is not absolute (no scheme): {value!r}")
        self.value = value
        self._hash = hash(("iri", value))

    def __eq__(self, other: object) -> bool:
        return self is other or (type(other) is Iri and self.value == other.value)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Iri({self.value!r})"


class BlankNode:
    """A blank node, identified by a label local to one graph."""

    __slots__ = ("label", "_hash")

    def __init__(self, label: str):
        if not _BNODE_LABEL_RE.match(label):
            raise ValueError(f"blank node label must match [A-Za-z0-9_]+: {label!r}")
        self.label = label
        self._hash = hash(("bnode", label))

    def __eq__(self, other: object) -> bool:
        return self is other or (type(other) is BlankNode and self.label == other.label)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"BlankNode({self.label!r})"


class Literal:
    """An RDF literal: lexical form plus optional language tag or datatype.

    Language and datatype are mutually exclusive. A literal with neither, or
    with only a language tag, is a plain literal. The tag is stored as
    written but ignored-case for equality, so ``"x"@en`` and ``"x"@EN`` are
    the same term.
    """

    __slots__ = ("lexical", "language", "datatype", "_hash")

    def __init__(
        self,
        lexical: str,
        language: Optional[str] = None,
        datatype: Optional[Iri] = None,
    ):
        if language is not None and datatype is not None:
            raise ValueError("a literal cannot carry both a language tag and a datatype")
        if language is not None and not _LANG_TAG_RE.match(language):
            raise ValueError(f"malformed language tag: {language!r}")
        if datatype is not None and type(datatype) is not Iri:
            raise TypeError("datatype must be an Iri")
        self.lexical = lexical
        self.language = language
        self.datatype = datatype
        self._hash = hash(
            ("lit", lexical, language.lower() if language else None, datatype)
        )

    @property
    def is_plain(self) -> bool:
        return self.datatype is None

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if type(other) is not Literal:
            return False
        if self.lexical != other.lexical:
            return False
        if (self.language is None) != (other.language is None):
            return False
        if self.language is not None and self.language.lower() != other.language.lower():
            return False
        return self.datatype == other.datatype

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if self.language is not None:
            return f"Literal({self.lexical!r}, language={self.language!r})"
        if self.datatype is not None:
            return f"Literal({self.lexical!r}, datatype={self.datatype!r})"
        return f"Literal({self.lexical!r})"


Term = Union[Iri, BlankNode, Literal]


class Triple:
    """A single RDF statement. Literals may not appear in subject position."""

    __slots__ = ("subject", "predicate", "object", "_hash")

    def __init__(self, subject: Term, predicate: Iri, object: Term):
        if type(subject) is Literal:
            raise ValueError("literal in subject position")
        if type(subject) not in (Iri, BlankNode):
            raise TypeError("subject must be an Iri or BlankNode")
        if type(predicate) is not Iri:
            raise TypeError("predicate must be an Iri")
        if type(object) not in (Iri, BlankNode, Literal):
            raise TypeError("object must be an Iri, BlankNode, or Literal")
        self.subject = subject
        self.predicate = predicate
        self.object = object
        self._hash = hash((subject, predicate, object))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            type(other) is Triple
            and self._hash == other._hash
            and self.subject == other.subject
            and self.predicate == other.predicate
            and self.object == other.object
        )

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self):
        return iter((self.subject, self.predicate, self.object))

    def __repr__(self) -> str:
        return f"Triple({self.subject!r}, {self.predicate!r}, {self.object!r})"
