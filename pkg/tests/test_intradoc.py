"""Layer 3: evidence alignment, coherence, overclaims, verdicts, scoring."""

from __future__ import annotations

import random

import pytest

from claimcheck.intradoc import (ClaimVerdict, EvidenceLink,
                                 OverclaimAnnotation, assess_coherence,
                                 consistency_score, derive_claim_verdict)
from claimcheck.knowledge import ClaimTriple
from claimcheck.corpus import ingest_document

from conftest import StubProvider, make_router
from test_corpus import manifest_bytes


def make_claim(cid="clm-t") -> ClaimTriple:
    return ClaimTriple(claim_id=cid, subject="ent-x", predicate="does",
                       object="thing", object_is_entity=False, doc_id="d",
                       section_id="s", passage_ids=["pas-1"],
                       subject_name="X", object_name="thing")


def link(cid, evidence, label):
    return EvidenceLink(claim_id=cid, evidence_id=evidence, nli_label=label)


def annotation(cid, issue="projection-as-result"):
    return OverclaimAnnotation(claim_id=cid, issue=issue, severity="severe",
                               claim_text="c", evidence_text="e")


# --- verdict rule -----------------------------------------------------------

def test_verdict_supports():
    claim = make_claim()
    verdict = derive_claim_verdict(
        claim, [link("clm-t", "p1", "supports"),
                link("clm-t", "p2", "supports")], [])
    assert verdict.verdict == "supports"


def test_verdict_partial():
    claim = make_claim()
    verdict = derive_claim_verdict(
        claim, [link("clm-t", "p1", "supports"),
                link("clm-t", "p2", "contradicts")], [])
    assert verdict.verdict == "partial"


def test_verdict_contradicted_and_neutral():
    claim = make_claim()
    assert derive_claim_verdict(
        claim, [link("clm-t", "p1", "contradicts")], []).verdict == "contradicted"
    assert derive_claim_verdict(
        claim, [link("clm-t", "p1", "neutral")], []).verdict == "neutral"
    assert derive_claim_verdict(claim, [], []).verdict == "neutral"


def test_verdict_overclaim_dominates_any_links():
    rng = random.Random(31)
    claim = make_claim()
    for _ in range(200):
        links = [link("clm-t", f"p{i}",
                      rng.choice(["supports", "contradicts", "neutral"]))
                 for i in range(rng.randint(0, 6))]
        verdict = derive_claim_verdict(claim, links, [annotation("clm-t")])
        assert verdict.verdict == "overclaim"


def test_verdict_ignores_other_claims_evidence():
    claim = make_claim()
    verdict = derive_claim_verdict(
        claim, [link("clm-other", "p1", "contradicts"),
                link("clm-t", "p2", "supports")], [annotation("clm-other")])
    assert verdict.verdict == "supports"


def test_verdict_pure_function_fuzz():
    rng = random.Random(88)
    for _ in range(200):
        claim = make_claim()
        links = [link("clm-t", f"p{i}",
                      rng.choice(["supports", "contradicts", "neutral"]))
                 for i in range(rng.randint(0, 5))]
        annotations = [annotation("clm-t")] if rng.random() < 0.3 else []
        first = derive_claim_verdict(claim, links, annotations)
        second = derive_claim_verdict(claim, list(links), list(annotations))
        assert first == second
        assert first.verdict in ("supports", "partial", "overclaim",
                                 "neutral", "contradicted")


# --- consistency -------------------------------------------------------------

def verdicts_of(kinds):
    return [ClaimVerdict(claim_id=f"clm-{i}", verdict=v)
            for i, v in enumerate(kinds)]


def test_consistency_target_paper_fraction():
    kinds = (["supports"] * 6 + ["partial"] * 8 + ["overclaim"] * 3
             + ["neutral"] * 3)
    report = consistency_score("doc-x", verdicts_of(kinds))
    assert report.consistency_score == pytest.approx(0.30)
    assert report.counts["supports"] == 6
    assert report.counts["partial"] == 8
    assert report.counts["overclaim"] == 3
    assert report.counts["neutral"] == 3


def test_consistency_bounds():
    assert consistency_score(
        "d", verdicts_of(["supports"] * 4)).consistency_score == 1.0
    assert consistency_score(
        "d", verdicts_of(["neutral"] * 4)).consistency_score == 0.0


def test_consistency_zero_claims_marked():
    report = consistency_score("d", [])
    assert report.consistency_score == 0.0
    assert report.empty_document is True


def test_consistency_counts_sum_fuzz():
    rng = random.Random(7)
    options = ["supports", "partial", "overclaim", "neutral", "contradicted"]
    for _ in range(200):
        kinds = [rng.choice(options) for _ in range(rng.randint(0, 12))]
        report = consistency_score("d", verdicts_of(kinds))
        assert sum(report.counts.values()) == len(kinds)
        assert 0.0 <= report.consistency_score <= 1.0
        if kinds:
            assert (report.consistency_score == 1.0) == \
                all(k == "supports" for k in kinds)


# --- coherence preconditions ----------------------------------------------------

def test_coherence_without_methods_section():
    doc = ingest_document(manifest_bytes(sections=[
        {"heading": "Body", "passages": ["Just text."]}]), "json-manifest")
    router = make_router(StubProvider(
        lambda t, tag, i: pytest.fail("provider must not be called")))
    flags = assess_coherence(doc, [], router)
    assert len(flags) == 1
    assert flags[0].dimension == "reproducibility"


def test_coherence_one_flag_per_dimension():
    doc = ingest_document(manifest_bytes(sections=[
        {"heading": "Methods", "passages": ["How."]},
        {"heading": "Results", "passages": ["What."]}]), "json-manifest")
    router = make_router(StubProvider(lambda t, tag, i: {"flags": [
        {"dimension": "baseline-fairness", "severity": "minor", "note": "a"},
        {"dimension": "baseline-fairness", "severity": "severe", "note": "b"},
    ]}))
    flags = assess_coherence(doc, [], router)
    assert len(flags) == 1
    assert flags[0].severity == "severe"


# --- golden-run spot checks --------------------------------------------------------

def test_golden_target_links_include_asset_evidence(golden, golden_claims):
    claim = golden_claims["s1-target:BF-DCQO|requires"]
    s1 = golden.doc_by_slug("s1-target")
    asset_ids = {a.asset_id for a in s1.assets}
    links = [l for l in golden.links if l.claim_id == claim.claim_id]
    asset_links = [l for l in links if l.evidence_id in asset_ids]
    assert asset_links and asset_links[0].nli_label == "supports"


def test_golden_executed_on_supported_by_hardware_passage(golden,
                                                          golden_claims):
    claim = golden_claims["s1-target:BF-DCQO|executed-on"]
    s1 = golden.doc_by_slug("s1-target")
    links = [l for l in golden.links if l.claim_id == claim.claim_id]
    supporting = [l for l in links if l.nli_label == "supports"]
    assert supporting
    texts = [s1.passage_text(l.evidence_id) or "" for l in supporting]
    assert any("ibm_marrakesh" in t for t in texts)
    # own-source evidence is permitted but flagged
    self_links = [l for l in links if l.self_evidence]
    assert self_links


def test_golden_one_link_per_claim_passage(golden):
    seen = set()
    for l in golden.links:
        key = (l.claim_id, l.evidence_id)
        assert key not in seen
        seen.add(key)


def test_golden_overclaim_annotations_cite_both_sides(golden, golden_claims):
    projected = golden_claims["s1-target:BF-DCQO|projected-to-achieve"]
    annotations = [a for a in golden.overclaims
                   if a.claim_id == projected.claim_id]
    assert len(annotations) == 1
    assert annotations[0].issue == "projection-as-result"
    assert annotations[0].severity == "severe"
    assert "we expect" in annotations[0].evidence_text
    assert annotations[0].claim_text


def test_golden_coherence_flags(golden):
    s1 = golden.doc_by_slug("s1-target")
    flags = {f.dimension: f for f in golden.coherence
             if f.doc_id == s1.doc_id}
    assert flags["baseline-fairness"].severity in ("moderate", "severe")
    assert "reproducibility" in flags
