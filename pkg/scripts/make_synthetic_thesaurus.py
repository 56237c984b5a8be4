#!/usr/bin/env python3
"""Generate a synthetic tree-shaped thesaurus as N-Triples.

Produces a scalable benchmark vocabulary: N concepts in a 10-ary
skos:broader tree under one concept scheme, three labels per concept
(one prefLabel, two altLabels), plus inScheme, a typed notation, two
documentation notes, and one skos:related link per non-root concept chosen
so it never runs along the hierarchy (keeping the data S27-clean). With the
default 10,000 concepts the output is exactly 100,000 triples:
1 + N * 9 + (N - 1).

Usage: make_synthetic_thesaurus.py [--concepts N] [--out FILE] [--seed S]
"""

from __future__ import annotations

import argparse
import random
import sys

EX = "http://example.org/thesaurus/"
SKOS = "http://www.w3.org/2004/02/skos/core#"
RDF = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"

BRANCHING = 10


def _is_lineal(a: int, b: int) -> bool:
    """True when one concept index is an ancestor of the other in the tree."""
    for x, y in ((a, b), (b, a)):
        node = x
        while node > 0:
            node = (node - 1) // BRANCHING
            if node == y:
                return True
    return False


def generate(concepts: int = 10_000, seed: int = 2009) -> list[str]:
    rng = random.Random(seed)
    scheme = f"<{EX}scheme>"

    def c(i: int) -> str:
        return f"<{EX}concept/{i}>"

    lines = [f"{scheme} <{RDF}type> <{SKOS}ConceptScheme> ."]
    for i in range(concepts):
        node = c(i)
        lines.append(f"{node} <{RDF}type> <{SKOS}Concept> .")
        lines.append(f'{node} <{SKOS}prefLabel> "concept number {i}"@en .')
        lines.append(f'{node} <{SKOS}altLabel> "c-{i} variant a"@en .')
        lines.append(f'{node} <{SKOS}altLabel> "variante c-{i}"@fr .')
        lines.append(f"{node} <{SKOS}inScheme> {scheme} .")
        lines.append(f'{node} <{SKOS}notation> "N{i:06d}"^^<{EX}notationType> .')
        lines.append(f'{node} <{SKOS}scopeNote> "synthetic concept {i} for benchmarking"@en .')
        lines.append(f'{node} <{SKOS}definition> "placeholder definition {i}"@en .')
        if i == 0:
            lines.append(f"{node} <{SKOS}topConceptOf> {scheme} .")
        else:
            lines.append(f"{node} <{SKOS}broader> {c((i - 1) // BRANCHING)} .")
            while True:
                peer = rng.randrange(concepts)
                if peer != i and not _is_lineal(i, peer):
                    break
            lines.append(f"{node} <{SKOS}related> {c(peer)} .")
    return lines


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--concepts", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=2009)
    ap.add_argument("--out", default="-")
    ns = ap.parse_args(argv)
    lines = generate(ns.concepts, ns.seed)
    text = "\n".join(lines) + "\n"
    if ns.out == "-":
        sys.stdout.write(text)
    else:
        with open(ns.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {len(lines)} triples to {ns.out}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
