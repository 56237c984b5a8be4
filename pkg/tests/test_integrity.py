import pytest

from skosforge import (
    Graph,
    INTEGRITY_CONDITION_IDS,
    Iri,
    RDF,
    SKOS,
    SKOSXL,
    Severity,
    check_integrity,
    materialize,
    parse_ntriples,
    serialize_term,
)

from fixtures_integrity import INTEGRITY_CASES

EX = "http://example.org/"


def iri(local):
    return Iri(EX + local)


def check(text):
    return check_integrity(materialize(parse_ntriples(text)))


@pytest.mark.parametrize("case", INTEGRITY_CASES, ids=lambda c: c.rule_id)
def test_violating_fixture_is_detected(case):
    findings = check(case.violating)
    assert sorted(f.rule_id for f in findings) == sorted(case.expected_rules)
    target = [f for f in findings if f.rule_id == case.rule_id]
    assert all(f.severity is Severity.ERROR for f in findings)
    assert any(serialize_term(f.focus) == case.expected_focus for f in target)


@pytest.mark.parametrize("case", INTEGRITY_CASES, ids=lambda c: c.rule_id)
def test_near_miss_fixture_is_clean(case):
    assert check(case.near_miss) == []


@pytest.mark.parametrize("case", INTEGRITY_CASES, ids=lambda c: c.rule_id)
def test_evidence_is_present_and_replays(case):
    findings = check(case.violating)
    mg = materialize(parse_ntriples(case.violating))
    for finding in findings:
        assert finding.evidence
        assert all(t in mg.graph for t in finding.evidence)
        # replaying just the evidence re-establishes the violation
        replay = check_integrity(materialize(Graph(finding.evidence)))
        assert finding.rule_id in {f.rule_id for f in replay}


def test_empty_graph_has_no_findings():
    assert check("") == []


def test_checks_are_deterministic():
    text = "".join(case.violating for case in INTEGRITY_CASES)
    first = check(text)
    second = check(text)
    assert first == second


def test_duplicate_pref_label_triples_do_not_violate_s14():
    text = (
        f'<{EX}x> <{SKOS.base}prefLabel> "animals"@en .\n'
        f'<{EX}x> <{SKOS.base}prefLabel> "animals"@EN .\n'  # same term, tag case aside
    )
    assert check(text) == []


def test_s14_collapses_each_language_clash_into_one_finding():
    text = (
        f'<{EX}x> <{SKOS.base}prefLabel> "a"@en .\n'
        f'<{EX}x> <{SKOS.base}prefLabel> "b"@en .\n'
        f'<{EX}x> <{SKOS.base}prefLabel> "c"@en .\n'
    )
    findings = check(text)
    assert len(findings) == 1
    assert len(findings[0].evidence) == 3


def test_s14_treats_tagless_literals_as_one_bucket():
    text = (
        f'<{EX}x> <{SKOS.base}prefLabel> "a" .\n'
        f'<{EX}x> <{SKOS.base}prefLabel> "b" .\n'
    )
    assert [f.rule_id for f in check(text)] == ["S14"]


def test_s13_catches_clash_introduced_by_dumb_down():
    text = (
        f'<{EX}c> <{SKOS.base}prefLabel> "FAO"@en .\n'
        f"<{EX}c> <{SKOSXL.base}altLabel> <{EX}lbl> .\n"
        f'<{EX}lbl> <{SKOSXL.base}literalForm> "FAO"@en .\n'
    )
    assert "S13" in {f.rule_id for f in check(text)}


def test_s46_detected_against_assertion_direction():
    # narrowMatch(y,x) entails broadMatch(x,y); exactMatch is symmetric,
    # so the disjointness shows regardless of which direction was written
    text = (
        f"<{EX}y> <{SKOS.base}narrowMatch> <{EX}x> .\n"
        f"<{EX}x> <{SKOS.base}exactMatch> <{EX}y> .\n"
    )
    assert "S46" in {f.rule_id for f in check(text)}


def test_s52_zero_forms_on_inferred_label():
    # the object of skosxl:prefLabel is typed as a Label by the range axiom,
    # and then lacks its mandatory literal form
    text = f"<{EX}c> <{SKOSXL.base}prefLabel> <{EX}lbl> .\n"
    findings = check(text)
    assert [f.rule_id for f in findings] == ["S52"]
    assert serialize_term(findings[0].focus) == f"<{EX}lbl>"


def test_collection_in_broader_hierarchy_is_inconsistent():
    # semantic relations type both ends as Concept, so a Collection used in
    # a broader link collides with the S37 disjointness
    text = (
        f"<{EX}coll> <{RDF.base}type> <{SKOS.base}Collection> .\n"
        f"<{EX}coll> <{SKOS.base}broader> <{EX}c> .\n"
    )
    findings = check(text)
    assert "S37" in {f.rule_id for f in findings}


def test_symmetric_closure_reports_pair_once():
    text = (
        f"<{EX}x> <{SKOS.base}exactMatch> <{EX}y> .\n"
        f"<{EX}x> <{SKOS.base}relatedMatch> <{EX}y> .\n"
    )
    findings = [f for f in check(text) if f.rule_id == "S46"]
    assert len(findings) == 1


def test_error_severity_exactly_for_integrity_rules():
    text = "".join(case.violating for case in INTEGRITY_CASES)
    for finding in check(text):
        assert finding.severity is Severity.ERROR
        assert finding.rule_id in INTEGRITY_CONDITION_IDS


def test_findings_sorted_by_rule_then_focus():
    text = (
        f"<{EX}b> <{RDF.base}type> <{SKOS.base}Concept> .\n"
        f"<{EX}b> <{RDF.base}type> <{SKOS.base}ConceptScheme> .\n"
        f"<{EX}a> <{RDF.base}type> <{SKOS.base}Concept> .\n"
        f"<{EX}a> <{RDF.base}type> <{SKOS.base}ConceptScheme> .\n"
        f'<{EX}a> <{SKOS.base}prefLabel> "x"@en .\n'
        f'<{EX}a> <{SKOS.base}prefLabel> "y"@en .\n'
    )
    findings = check(text)
    keys = [(f.rule_id, serialize_term(f.focus)) for f in findings]
    assert keys == sorted(keys)
