"""N-Triples parsing and canonical serialization.

Parsing follows the W3C N-Triples grammar: one triple per line, terms in
``<iri>``, ``_:label``, ``"lexical"``, ``"lexical"@tag``, or
``"lexical"^^<iri>`` form, a terminal dot, UTF-8 input, and
``\\uXXXX``/``\\UXXXXXXXX`` escapes. Parsing is all-or-nothing per
document: every ill-formed line is reported with its line and column and no
partial graph is returned.

Serialization is canonical: one triple per line, lines sorted by the
(subject, predicate, object) serialized forms, language tags lowercased,
and only ``"``, ``\\``, LF, and CR escaped in literals. Equal graphs
serialize to identical bytes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import re

from .graph import Graph
from .terms import BlankNode, Iri, Literal, Term, Triple

_IRI_BODY = r'(?:[^\x00-\x20<>"{}|^`\\]|\\u[0-9A-Fa-f]{4}|\\U[0-9A-Fa-f]{8})*'
_LINE_RE = re.compile(
    r"^[ \t]*"
    r"(?:<(?P<s_iri>" + _IRI_BODY + r")>|_:(?P<s_bn>[A-Za-z0-9_]+))"
    r"[ \t]+<(?P<p_iri>" + _IRI_BODY + r")>"
    r"[ \t]+(?:"
    r"<(?P<o_iri>" + _IRI_BODY + r")>"
    r"|_:(?P<o_bn>[A-Za-z0-9_]+)"
    r'|"(?P<o_lit>(?:[^"\\\n\r]|\\.)*)"'
    r"(?:@(?P<o_lang>[A-Za-z]+(?:-[A-Za-z0-9]+)*)|\^\^<(?P<o_dt>" + _IRI_BODY + r")>)?"
    r")"
    r"[ \t]*\.[ \t]*(?:#.*)?$"
)
_BLANK_RE = re.compile(r"^[ \t]*(?:#.*)?$")

_ECHARS = {
    "t": "\t",
    "b": "\b",
    "n": "\n",
    "r": "\r",
    "f": "\f",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


@dataclass(frozen=True)
class ParseIssue:
    line: int
    column: int
    message: str

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}: {self.message}"


class ParseError(Exception):
    """Raised when a document contains one or more ill-formed lines."""

    def __init__(self, issues: list[ParseIssue]):
        self.issues = issues
        head = "; ".join(str(i) for i in issues[:3])
        more = f" (+{len(issues) - 3} more)" if len(issues) > 3 else ""
        super().__init__(f"{len(issues)} parse error(s): {head}{more}")


class _LineError(Exception):
    def __init__(self, column: int, message: str):
        self.column = column
        self.message = message


def _unescape(raw: str, col: int) -> str:
    """Decode ECHAR and \\u/\\U escapes; ``col`` is the 1-based column of ``raw``."""
    if "\\" not in raw:
        return raw
    out: list[str] = []
    i = 0
    n = len(raw)
    while i < n:
        c = raw[i]
        if c != "\\":
            out.append(c)
            i += 1
            continue
        if i + 1 >= n:
            raise _LineError(col + i, "truncated escape sequence")
        e = raw[i + 1]
        if e in _ECHARS:
            out.append(_ECHARS[e])
            i += 2
        elif e == "u" or e == "U":
            width = 4 if e == "u" else 8
            digits = raw[i + 2 : i + 2 + width]
            if len(digits) < width or not all(d in "0123456789abcdefABCDEF" for d in digits):
                raise _LineError(col + i, f"bad \\{e} escape (expected {width} hex digits)")
            cp = int(digits, 16)
            if 0xD800 <= cp <= 0xDFFF or cp > 0x10FFFF:
                raise _LineError(col + i, f"\\{e} escape denotes an invalid codepoint U+{cp:04X}")
            out.append(chr(cp))
            i += 2 + width
        else:
            raise _LineError(col + i, f"bad escape \\{e}")
    return "".join(out)


class _TermCache:
    """Per-document interning of IRIs and blank nodes keyed on raw source text."""

    def __init__(self) -> None:
        self.iris: dict[str, Iri] = {}
        self.bnodes: dict[str, BlankNode] = {}

    def iri(self, raw: str, col: int) -> Iri:
        iri = self.iris.get(raw)
        if iri is None:
            value = _unescape(raw, col)
            try:
                iri = Iri(value)
            except ValueError as exc:
                raise _LineError(col, f"malformed IRI: {exc}") from None
            self.iris[raw] = iri
        return iri

    def bnode(self, label: str) -> BlankNode:
        node = self.bnodes.get(label)
        if node is None:
            node = self.bnodes[label] = BlankNode(label)
        return node


def _diagnose(line: str) -> _LineError:
    """Scan an ill-formed line to locate the first problem precisely."""
    i = 0
    n = len(line)

    def skip_ws() -> None:
        nonlocal i
        while i < n and line[i] in " \t":
            i += 1

    def scan_term(want: str) -> None:
        nonlocal i
        if i >= n:
            raise _LineError(i + 1, f"expected {want}, found end of line")
        c = line[i]
        if c == "<":
            end = line.find(">", i + 1)
            if end < 0:
                raise _LineError(i + 1, "malformed IRI (missing '>')")
            body = line[i + 1 : end]
            if re.search(r'[\x00-\x20<"{}|^`]', body):
                raise _LineError(i + 1, "malformed IRI (forbidden character)")
            _unescape(body, i + 2)
            i = end + 1
        elif c == "_" and line[i : i + 2] == "_:":
            m = re.match(r"_:[A-Za-z0-9_]+", line[i:])
            if not m:
                raise _LineError(i + 1, "malformed blank node label")
            i += m.end()
        elif c == '"':
            if "literal" not in want:
                raise _LineError(i + 1, f"expected {want}, found literal")
            j = i + 1
            while j < n:
                if line[j] == "\\":
                    j += 2
                    continue
                if line[j] == '"':
                    break
                j += 1
            if j >= n:
                raise _LineError(i + 1, "unterminated literal")
            _unescape(line[i + 1 : j], i + 2)
            i = j + 1
            if i < n and line[i] == "@":
                m = re.match(r"@[A-Za-z]+(-[A-Za-z0-9]+)*", line[i:])
                if not m:
                    raise _LineError(i + 1, "malformed language tag")
                i += m.end()
            elif line[i : i + 2] == "^^":
                i += 2
                if i >= n or line[i] != "<":
                    raise _LineError(i + 1, "expected datatype IRI after '^^'")
                scan_term("datatype IRI")
        else:
            raise _LineError(i + 1, f"expected {want}")

    try:
        skip_ws()
        scan_term("IRI or blank node subject")
        skip_ws()
        if i >= n or line[i] != "<":
            raise _LineError(i + 1, "expected IRI predicate")
        scan_term("IRI predicate")
        skip_ws()
        scan_term("IRI, blank node, or literal object")
        skip_ws()
        if i >= n or line[i] != ".":
            raise _LineError(i + 1, "missing terminal '.'")
        i += 1
        skip_ws()
        if i < n and line[i] != "#":
            raise _LineError(i + 1, "unexpected content after terminal '.'")
    except _LineError as exc:
        return exc
    return _LineError(1, "ill-formed triple line")


def parse_ntriples(data: Union[bytes, str]) -> Graph:
    """Parse an N-Triples document into a Graph.

    Raises ParseError carrying every ill-formed line; no graph is produced
    if any line fails. Duplicate triples collapse (set semantics).
    """
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = data.count(b"\n", 0, exc.start) + 1
            raise ParseError([ParseIssue(line, 1, f"invalid UTF-8: {exc.reason}")]) from None
    else:
        text = data

    graph = Graph()
    issues: list[ParseIssue] = []
    cache = _TermCache()
    match_line = _LINE_RE.match
    blank_line = _BLANK_RE.match

    for line_no, line in enumerate(text.split("\n"), start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if not line or blank_line(line):
            continue
        m = match_line(line)
        if m is None:
            err = _diagnose(line)
            issues.append(ParseIssue(line_no, err.column, err.message))
            continue
        try:
            g = m.group
            if g("s_iri") is not None:
                subject: Term = cache.iri(g("s_iri"), m.start("s_iri") + 1)
            else:
                subject = cache.bnode(g("s_bn"))
            predicate = cache.iri(g("p_iri"), m.start("p_iri") + 1)
            if g("o_iri") is not None:
                obj: Term = cache.iri(g("o_iri"), m.start("o_iri") + 1)
            elif g("o_bn") is not None:
                obj = cache.bnode(g("o_bn"))
            else:
                lexical = _unescape(g("o_lit"), m.start("o_lit") + 1)
                lang = g("o_lang")
                dt_raw = g("o_dt")
                dt = cache.iri(dt_raw, m.start("o_dt") + 1) if dt_raw is not None else None
                obj = Literal(lexical, language=lang, datatype=dt)
        except _LineError as exc:
            issues.append(ParseIssue(line_no, exc.column, exc.message))
            continue
        graph.add(Triple(subject, predicate, obj))

    if issues:
        raise ParseError(issues)
    return graph


def _escape_literal(lexical: str) -> str:
    return (
        lexical.replace("\\", "\\\\")
        .replace('"', '\\"')
        .replace("\n", "\\n")
        .replace("\r", "\\r")
    )


def serialize_term(term: Term) -> str:
    """Render one term in N-Triples form (language tags lowercased)."""
    t = type(term)
    if t is Iri:
        return f"<{term.value}>"
    if t is BlankNode:
        return f"_:{term.label}"
    if t is Literal:
        body = f'"{_escape_literal(term.lexical)}"'
        if term.language is not None:
            return f"{body}@{term.language.lower()}"
        if term.datatype is not None:
            return f"{body}^^<{term.datatype.value}>"
        return body
    raise TypeError(f"not an RDF term: {term!r}")


def serialize_triple(t: Triple) -> str:
    return (
        f"{serialize_term(t.subject)} {serialize_term(t.predicate)} "
        f"{serialize_term(t.object)} ."
    )


def serialize_ntriples(graph: Graph) -> bytes:
    """Serialize a graph to canonical N-Triples bytes."""
    keyed = sorted(
        (serialize_term(t.subject), serialize_term(t.predicate), serialize_term(t.object))
        for t in graph
    )
    return "".join(f"{s} {p} {o} .\n" for s, p, o in keyed).encode("utf-8")
