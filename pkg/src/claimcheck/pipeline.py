"""End-to-end orchestration of the six verification layers.

A run directory is fully deterministic: the run id derives from the query,
corpus hash, and config hash; every store file is written in sorted order at
a layer boundary; and the provider transcript is flushed per layer. Killing
a run at any layer boundary and resuming reproduces the uninterrupted run
byte-for-byte.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from . import assess as assess_mod
from . import crosssource as cross
from . import intradoc as intra
from . import signals as sig
from .config import PipelineConfig
from .corpus.embedding import EmbeddingStore, chunk_and_embed, embed_query
from .corpus.ingest import ingest_document
from .corpus.model import DocumentMetadata, EmbeddingRecord, SourceDocument
from .corpus.scoring import score_source
from .corpus.visuals import describe_visual_asset
from .errors import (BudgetExceeded, CitedDocMissing, ClaimcheckError,
                     ConfigDrift, CorruptManifest, EmptyCorpus)
from .ids import content_hash, hash_bytes, make_id
from .jsonl import read_all, read_json, write_json, write_records
from .knowledge.extraction import (EntityRegistry, classify_provenance,
                                   extract_claims, extract_entities)
from .knowledge.graph import Edge, KnowledgeGraph, build_graph, relation_edge
from .knowledge.model import ClaimTriple, Entity
from .provider import (InferenceRouter, LiveProvider, ReplayProvider,
                       ScriptedProvider, Transcript)
from .report import machine_report, narrative_report

logger = logging.getLogger(__name__)

LAYERS = ("layer1", "layer2", "layer3", "layer4", "layer5", "layer6")

_EVENT_PREDICATES = {
    "launched": "product-launch",
    "acquired": "acquisition",
    "raised-funding": "funding",
    "partnered-with": "partnership",
    "reframed-position": "reframing",
}
_FINANCIAL_PREDICATES = {
    "raised-funding": "funding-round",
    "acquired": "acquisition",
    "spent-on": "expenditure",
    "earned-revenue": "revenue",
}


@dataclass
class RelationSet:
    """Structured relation records loaded from the corpus directory."""

    rows: list[dict[str, Any]] = field(default_factory=list)

    def triples(self) -> list[tuple[str, str, str]]:
        return [(r["subject"], r["relation"], r["object"]) for r in self.rows]

    def entity_rows(self) -> list[dict[str, Any]]:
        return [r for r in self.rows
                if not r["subject"].startswith("doc:")
                and not r["object"].startswith("doc:")]

    def citation_rows(self) -> list[dict[str, Any]]:
        return [r for r in self.rows if r["relation"] == "cites"]


def load_corpus_dir(corpus_dir: Path) -> tuple[list[tuple[str, bytes, str,
                                                          DocumentMetadata | None]],
                                               RelationSet]:
    """Collect (name, raw, format, hints) for every document file plus the
    relation records. Deterministic: files sorted by name."""
    documents = []
    relations = RelationSet()
    format_map = {".txt": "plain", ".html": "html", ".json": "json-manifest"}
    for path in sorted(corpus_dir.iterdir()):
        if not path.is_file() or path.name.endswith(".meta.json"):
            continue
        fmt = format_map.get(path.suffix)
        if fmt is None:
            continue
        raw = path.read_bytes()
        if fmt == "json-manifest":
            data = read_json(path)
            if data.get("manifest_kind") == "relations":
                for row in data.get("records", []):
                    if row not in relations.rows:
                        relations.rows.append(row)
                continue
        hints = None
        sidecar = path.with_name(path.stem + ".meta.json")
        if sidecar.exists():
            hints = DocumentMetadata.from_record(read_json(sidecar))
        documents.append((path.name, raw, fmt, hints))
    return documents, relations


def corpus_fingerprint(corpus_dir: Path) -> str:
    parts = []
    for path in sorted(corpus_dir.iterdir()):
        if path.is_file():
            parts.append([path.name, hash_bytes(path.read_bytes())])
    return content_hash(parts)


@dataclass
class ProviderSpec:
    mode: str                      # replay | scripted | live
    fixtures: str | None = None    # replay transcript path (file or dir)
    playbook: str | None = None    # scripted playbook path
    backend: str | None = None     # live backend "module:function"

    def to_record(self) -> dict[str, Any]:
        return {"mode": self.mode, "fixtures": self.fixtures,
                "playbook": self.playbook, "backend": self.backend}

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "ProviderSpec":
        return cls(**data)


def build_router(spec: ProviderSpec, cfg: PipelineConfig,
                 transcript: Transcript) -> InferenceRouter:
    if spec.mode == "replay":
        if not spec.fixtures:
            raise ClaimcheckError("replay provider needs --fixtures")
        backend = ReplayProvider.from_path(Path(spec.fixtures))
    elif spec.mode == "scripted":
        if not spec.playbook:
            raise ClaimcheckError("scripted provider needs --playbook")
        backend = ScriptedProvider.from_path(Path(spec.playbook))
    elif spec.mode == "live":
        if not spec.backend:
            raise ClaimcheckError(
                "live provider needs --backend module:function")
        backend = LiveProvider.from_spec(spec.backend)
    else:
        raise ClaimcheckError(f"unknown provider mode {spec.mode!r}")
    backoff = 0.0 if getattr(backend, "deterministic", False) \
        else cfg.provider.backoff_base
    return InferenceRouter(
        backends={"*": backend}, routing=cfg.provider.routing,
        default_tag=cfg.provider.default_tag, retries=cfg.provider.retries,
        backoff_base=backoff, backoff_factor=cfg.provider.backoff_factor,
        transcript=transcript)


class Run:
    """One verification run rooted at a run directory."""

    def __init__(self, run_dir: Path, corpus_dir: Path, query: str,
                 cfg: PipelineConfig, provider_spec: ProviderSpec,
                 target_doc: str | None = None):
        self.run_dir = Path(run_dir)
        self.corpus_dir = Path(corpus_dir)
        self.query = query
        self.cfg = cfg
        self.provider_spec = provider_spec
        self.target_doc = target_doc
        self.transcript = Transcript()
        self.router = build_router(provider_spec, cfg, self.transcript)

        self.documents: dict[str, SourceDocument] = {}
        self.relations = RelationSet()
        self.store = EmbeddingStore(cfg.corpus.embedding_dim,
                                    cfg.corpus.embedding_model_tag)
        self.registry = EntityRegistry(cfg.knowledge)
        self.claims: dict[str, ClaimTriple] = {}
        self.doc_claims: dict[str, list[str]] = {}
        self.doc_entities: dict[str, list[str]] = {}
        self.links: list[intra.EvidenceLink] = []
        self.coherence: list[intra.CoherenceFlag] = []
        self.overclaims: list[intra.OverclaimAnnotation] = []
        self.verdicts: dict[str, intra.ClaimVerdict] = {}
        self.consistency: dict[str, intra.ConsistencyReport] = {}
        self.alignments: list[cross.ClaimAlignment] = []
        self.agreements: list[cross.AgreementRecord] = []
        self.ratings: dict[tuple[str, str], cross.IndependenceRating] = {}
        self.consensus: dict[str, cross.ConsensusScore] = {}
        self.fidelity: list[cross.CitationFidelityFinding] = []
        self.rubrics: list[cross.RubricAssessment] = []
        self.financial: dict[str, sig.FinancialProfile] = {}
        self.coi_flags: list[sig.COIFlag] = []
        self.conflict_webs: list[sig.EntityConflictWeb] = []
        self.supply_chains: list[sig.SupplyChainDependency] = []
        self.timeline: list[sig.StrategicEvent] = []
        self.correlations: list[dict[str, Any]] = []
        self.signal_profiles: list[sig.SignalProfile] = []
        self.profiles: list[assess_mod.EvidenceProfile] = []
        self.matrix: list[assess_mod.HypothesisRow] = []
        self.maturity: assess_mod.MaturityAssessment | None = None
        self.alphas: list[assess_mod.AlphaSignal] = []

        self.seeds: list[str] = []
        self.docs_processed: list[str] = []
        self.queue: list[str] = []
        self.gaps: list[str] = []
        self.citation_gaps: list[str] = []
        self.layers_done: dict[str, bool] = {layer: False for layer in LAYERS}

        self.corpus_hash = corpus_fingerprint(self.corpus_dir)
        self.run_id = make_id("run", query, self.corpus_hash,
                              cfg.snapshot_hash())

    # --- paths and manifest -------------------------------------------------

    @property
    def store_dir(self) -> Path:
        return self.run_dir / "store"

    @property
    def manifest_path(self) -> Path:
        return self.run_dir / "manifest.json"

    def slug_of(self, doc_id: str) -> str:
        doc = self.documents.get(doc_id)
        return doc.slug if doc else doc_id

    def doc_by_slug(self, slug: str) -> SourceDocument | None:
        for doc in self.documents.values():
            if doc.slug == slug:
                return doc
        return self.documents.get(slug)

    def write_manifest(self) -> None:
        write_json(self.manifest_path, {
            "schema": "run-manifest@1",
            "run_id": self.run_id,
            "query": self.query,
            "target_doc": self.target_doc,
            "corpus_dir": str(self.corpus_dir),
            "corpus_hash": self.corpus_hash,
            "config_hash": self.cfg.snapshot_hash(),
            "config": self.cfg.to_dict(),
            "provider": self.provider_spec.to_record(),
            "layers": self.layers_done,
            "seeds": sorted(self.seeds),
            "docs_processed": sorted(self.docs_processed),
            "queue": sorted(self.queue),
            "gaps": sorted(self.gaps),
            "citation_gaps": sorted(self.citation_gaps),
        })

    def _flush_layer(self, layer: str) -> None:
        self.layers_done[layer] = True
        batch = self.transcript.drain()
        write_records(self.run_dir / "transcript" / f"{layer}.jsonl", batch)
        self.write_manifest()

    # --- layer 1: corpus ------------------------------------------------------

    def layer1(self) -> None:
        files, self.relations = load_corpus_dir(self.corpus_dir)
        if not files:
            raise EmptyCorpus(f"no documents in {self.corpus_dir}")
        for _, raw, fmt, hints in files:
            doc = ingest_document(raw, fmt, hints)
            self.documents[doc.doc_id] = doc
        triples = self.relations.triples()
        for doc_id in sorted(self.documents):
            doc = self.documents[doc_id]
            doc.assets = [
                describe_visual_asset(asset, doc.slug, self.router)
                if asset.caption.strip() else asset
                for asset in sorted(doc.assets, key=lambda a: a.asset_id)]
            doc.quality = score_source(doc, self.documents.values(),
                                       relations=triples, cfg=self.cfg.corpus)
            chunk_and_embed(doc, self.router, self.store,
                            self.cfg.max_parallelism)
        self._persist_layer1()
        self._flush_layer("layer1")

    def _persist_layer1(self) -> None:
        write_records(self.store_dir / "documents.jsonl",
                      [self.documents[d].to_record()
                       for d in sorted(self.documents)])
        write_records(self.store_dir / "sections.jsonl",
                      [{"doc_id": d, "section_id": s.section_id,
                        "heading": s.heading, "level": s.level,
                        "passages": [[pid, text] for pid, text in s.passages]}
                       for d in sorted(self.documents)
                       for s in self.documents[d].body])
        write_records(self.store_dir / "assets.jsonl",
                      [{"doc_id": d, "asset_id": a.asset_id, "kind": a.kind,
                        "caption": a.caption, "inline_refs": a.inline_refs,
                        "description": a.description,
                        "extracted_trends": a.extracted_trends}
                       for d in sorted(self.documents)
                       for a in self.documents[d].assets])
        write_records(self.store_dir / "embeddings.jsonl",
                      [r.to_record() for r in self.store.records()])
        write_records(self.store_dir / "relations.jsonl",
                      sorted(self.relations.rows,
                             key=lambda r: content_hash(r)))

    # --- relation-derived structures -----------------------------------------

    def _register_relation_entities(self) -> None:
        for row in self.relations.entity_rows():
            self.registry.register(row["subject"],
                                   row.get("subject_kind", "other"))
            if row.get("object_kind"):
                self.registry.register(row["object"], row["object_kind"])

    def relation_edges(self) -> list[Edge]:
        edges: dict[str, Edge] = {}
        for row in self.relations.entity_rows():
            subject = self.registry.get(row["subject"])
            if subject is None:
                continue
            obj = self.registry.get(row["object"]) \
                if row.get("object_kind") else None
            edge = relation_edge(
                subject.entity_id, row["relation"],
                obj.entity_id if obj else row["object"],
                object_is_entity=obj is not None,
                source=row.get("source", "relations"))
            edges[edge.edge_id] = edge
        return [edges[k] for k in sorted(edges)]

    def citation_edges(self) -> set[tuple[str, str]]:
        edges: set[tuple[str, str]] = set()
        for row in self.relations.citation_rows():
            a = self.doc_by_slug(row["subject"].removeprefix("doc:"))
            b = self.doc_by_slug(row["object"].removeprefix("doc:"))
            if a and b:
                edges.add((a.doc_id, b.doc_id))
        return edges

    def graph(self) -> KnowledgeGraph:
        claims = [self.claims[c] for c in sorted(self.claims)]
        return build_graph(self.registry.entities(), claims,
                           self.relation_edges())

    def doc_orgs(self, doc_id: str) -> set[str]:
        """Organization entity ids affiliated with the document's authors."""
        doc = self.documents[doc_id]
        orgs: set[str] = set()
        for entity in self.registry.entities():
            if entity.kind != "organization":
                continue
            for _, affiliation in doc.metadata.authors:
                if entity.name.lower() in affiliation.lower():
                    orgs.add(entity.entity_id)
        return orgs

    def corpus_view(self) -> cross.CorpusView:
        competitor_pairs: set[frozenset[str]] = set()
        for row in self.relations.entity_rows():
            if row["relation"] == "competes-with":
                a = self.registry.get(row["subject"])
                b = self.registry.get(row["object"])
                if a and b:
                    competitor_pairs.add(frozenset((a.entity_id, b.entity_id)))
        return cross.CorpusView(
            metadata={d: self.documents[d].metadata for d in self.documents},
            citations=self.citation_edges(),
            competitor_pairs=competitor_pairs,
            doc_orgs={d: self.doc_orgs(d) for d in self.documents})

    # --- layers 2 and 3 (shared by seeds and discovered docs) -----------------

    def _select_seeds(self) -> list[str]:
        if self.target_doc:
            doc = self.doc_by_slug(self.target_doc)
            if doc is None:
                raise EmptyCorpus(
                    f"target doc {self.target_doc!r} not in corpus")
            return [doc.doc_id]
        query_vec = embed_query(self.router, self.query, self.store.dim,
                                self.store.model_tag)
        ranked: list[tuple[float, str]] = []
        for doc_id in sorted(self.documents):
            doc = self.documents[doc_id]
            owners = {pid for pid, _ in
                      (doc.body[0].passages if doc.body else [])}
            if not owners:
                continue
            hits = self.store.search(query_vec, k=1, owner_filter=owners)
            if hits and hits[0][1] > 0.0:
                ranked.append((-hits[0][1], doc_id))
        ranked.sort()
        seeds = [doc_id for _, doc_id in ranked[:self.cfg.relevance_top_n]]
        if not seeds:
            raise EmptyCorpus("no document is relevant to the query")
        return seeds

    def _extract_doc(self, doc_id: str) -> None:
        doc = self.documents[doc_id]
        entities = extract_entities(doc, self.router, self.registry)
        self.doc_entities[doc_id] = [e.entity_id for e in entities]
        claims = extract_claims(doc, entities, self.router, self.registry,
                                self.cfg.knowledge)
        self.doc_claims[doc_id] = [c.claim_id for c in
                                   sorted(claims, key=lambda c: c.claim_id)]
        for claim in sorted(claims, key=lambda c: c.claim_id):
            evidence = " ".join(
                doc.passage_text(pid) or "" for pid in claim.passage_ids)
            classify_provenance(claim, evidence, self.router, doc.slug)
            self.claims[claim.claim_id] = claim

    def _verify_doc(self, doc_id: str) -> None:
        doc = self.documents[doc_id]
        claims = [self.claims[c] for c in self.doc_claims.get(doc_id, [])]
        doc_links: list[intra.EvidenceLink] = []
        for claim in claims:
            doc_links.extend(intra.align_claim_evidence(
                claim, doc, self.store, self.router, self.cfg.intradoc,
                self.cfg.max_parallelism))
        flags = intra.assess_coherence(doc, claims, self.router)
        annotations = intra.detect_overclaims(doc, claims, self.router)
        verdicts = [intra.derive_claim_verdict(claim, doc_links, annotations)
                    for claim in claims]
        report = intra.consistency_score(doc_id, verdicts)
        self.links.extend(doc_links)
        self.coherence.extend(flags)
        self.overclaims.extend(annotations)
        for verdict in verdicts:
            self.verdicts[verdict.claim_id] = verdict
        self.consistency[doc_id] = report

    def layer2(self) -> None:
        self._register_relation_entities()
        self.seeds = self._select_seeds()
        for doc_id in sorted(self.seeds):
            self._extract_doc(doc_id)
            self.docs_processed.append(doc_id)
        self._persist_knowledge()
        self._flush_layer("layer2")

    def layer3(self) -> None:
        for doc_id in sorted(self.seeds):
            self._verify_doc(doc_id)
        self._persist_intradoc()
        self._flush_layer("layer3")

    def _persist_knowledge(self) -> None:
        write_records(self.store_dir / "entities.jsonl",
                      [e.to_record() for e in self.registry.entities()])
        write_records(self.store_dir / "claims.jsonl",
                      [self.claims[c].to_record() for c in sorted(self.claims)])
        write_json(self.store_dir / "doc_claims.json",
                   {d: self.doc_claims[d] for d in sorted(self.doc_claims)})
        write_json(self.store_dir / "doc_entities.json",
                   {d: self.doc_entities[d] for d in sorted(self.doc_entities)})

    def _persist_intradoc(self) -> None:
        write_records(self.store_dir / "evidence_links.jsonl",
                      [l.to_record() for l in
                       sorted(self.links,
                              key=lambda l: (l.claim_id, l.evidence_id))])
        write_records(self.store_dir / "coherence_flags.jsonl",
                      [f.to_record() for f in
                       sorted(self.coherence,
                              key=lambda f: (f.doc_id, f.dimension))])
        write_records(self.store_dir / "overclaims.jsonl",
                      [a.to_record() for a in
                       sorted(self.overclaims,
                              key=lambda a: (a.claim_id, a.issue))])
        write_records(self.store_dir / "verdicts.jsonl",
                      [self.verdicts[c].to_record()
                       for c in sorted(self.verdicts)])
        write_records(self.store_dir / "consistency.jsonl",
                      [self.consistency[d].to_record()
                       for d in sorted(self.consistency)])

    # --- layer 4: cross-source -------------------------------------------------

    def _process_queue(self) -> None:
        budget = self.cfg.document_budget
        while self.queue:
            doc_id = self.queue.pop(0)
            if doc_id in self.docs_processed:
                continue
            if len(self.docs_processed) >= budget:
                self.gaps.append(doc_id)
                continue
            self._extract_doc(doc_id)
            self._verify_doc(doc_id)
            self.docs_processed.append(doc_id)

    def layer4(self) -> None:
        owner_to_doc: dict[str, str] = {}
        for doc_id in sorted(self.documents):
            doc = self.documents[doc_id]
            for pid, _ in doc.passages():
                owner_to_doc[pid] = doc_id
            for asset in doc.assets:
                owner_to_doc[asset.asset_id] = doc_id
        citations = self.citation_edges()
        graph = self.graph()

        focus_claims = [self.claims[c] for d in sorted(self.seeds)
                        for c in self.doc_claims.get(d, [])]
        discovered: set[str] = set()
        for claim in focus_claims:
            discovered.update(cross.discover_related(
                claim, graph, self.store, self.router, citations,
                self.documents, owner_to_doc, self.cfg.crosssource))
        self.queue = sorted(d for d in discovered
                            if d not in self.docs_processed)
        self._process_queue()

        if self.gaps:
            self._persist_knowledge()
            self._persist_intradoc()
            self._persist_crosssource()
            self.write_manifest()
            raise BudgetExceeded(
                f"document budget {self.cfg.document_budget} exceeded; "
                f"{len(self.gaps)} documents left unprocessed",
                queued=sorted(self.gaps))

        self._compare_claims(focus_claims)
        self._evaluate_rubrics()
        self._persist_knowledge()
        self._persist_intradoc()
        self._persist_crosssource()
        self._flush_layer("layer4")

    def _rating_for(self, a: str, b: str,
                    view: cross.CorpusView) -> cross.IndependenceRating:
        key = tuple(sorted((a, b)))
        if key not in self.ratings:
            self.ratings[key] = cross.assess_independence(
                key[0], key[1], view, self.cfg.crosssource)
        return self.ratings[key]

    def _own_rating(self, doc_id: str) -> cross.IndependenceRating:
        """The claim's own source: low independence when commercially
        interested (Layer-1 bias flag), high otherwise."""
        key = (doc_id, doc_id)
        if key not in self.ratings:
            doc = self.documents[doc_id]
            coi = bool(doc.quality and
                       "commercial-affiliation" in doc.quality.bias_flags)
            rating = "low" if coi else "high"
            weight = (self.cfg.crosssource.weight_low if coi
                      else self.cfg.crosssource.weight_high)
            self.ratings[key] = cross.IndependenceRating(
                pair=key, rating=rating, author_jaccard=1.0,
                shared_affiliation=True, citation_distance=0,
                competitor_stake=False, weight=weight,
                caveat="own source" + (", commercially interested" if coi
                                       else ""))
        return self.ratings[key]

    def _candidate_counters(self, claim: ClaimTriple,
                            doc_id: str) -> list[ClaimTriple]:
        anchors = {claim.subject}
        if claim.object_is_entity:
            anchors.add(claim.object)
        out = []
        for counter_id in self.doc_claims.get(doc_id, []):
            counter = self.claims[counter_id]
            endpoints = {counter.subject}
            if counter.object_is_entity:
                endpoints.add(counter.object)
            if anchors & endpoints:
                out.append(counter)
        return out

    def _align_pair(self, a: ClaimTriple, b: ClaimTriple) -> cross.ClaimAlignment:
        for alignment in self.alignments:
            if {alignment.claim_a, alignment.claim_b} == {a.claim_id, b.claim_id}:
                return alignment
        alignment = cross.align_claims(a, b, self.router,
                                       self.slug_of(a.doc_id),
                                       self.slug_of(b.doc_id))
        self.alignments.append(alignment)
        return alignment

    def _fidelity_of(self, citing: ClaimTriple) -> cross.CitationFidelityFinding | None:
        """Citation-fidelity check for a provenance-4 claim, if its cited doc
        is in the corpus; missing docs are recorded as discovery gaps."""
        if citing.provenance is None or citing.provenance.level != 4 \
                or not citing.cited_refs:
            return None
        for finding in self.fidelity:
            if finding.citing_claim == citing.claim_id:
                return finding
        cited_slug = citing.cited_refs[0].removeprefix("doc:")
        cited = self.doc_by_slug(cited_slug)
        try:
            if cited is None:
                raise CitedDocMissing(
                    f"claim {citing.claim_id} cites {cited_slug!r} which is "
                    f"not in the corpus")
            finding = cross.check_citation_fidelity(
                citing, [self.claims[c]
                         for c in self.doc_claims.get(cited.doc_id, [])],
                self.router, self.slug_of(citing.doc_id), cited.slug)
        except CitedDocMissing:
            self.citation_gaps.append(f"{citing.claim_id} -> {cited_slug}")
            return None
        self.fidelity.append(finding)
        return finding

    def _compare_claims(self, focus_claims: list[ClaimTriple]) -> None:
        view = self.corpus_view()
        # Every (seed, processed-doc) pair gets a rating up front; the
        # deliverable includes ratings even for pairs that never produce an
        # agreement record.
        for seed in sorted(self.seeds):
            self._own_rating(seed)
            for doc_id in sorted(self.docs_processed):
                if doc_id != seed:
                    self._rating_for(seed, doc_id, view)
        cluster: dict[str, ClaimTriple] = {
            c.claim_id: c for c in focus_claims}
        matched_pairs: list[tuple[ClaimTriple, ClaimTriple,
                                  cross.ClaimAlignment]] = []

        for claim in sorted(focus_claims, key=lambda c: c.claim_id):
            self._fidelity_of(claim)
            for doc_id in sorted(self.docs_processed):
                if doc_id == claim.doc_id:
                    continue
                for counter in self._candidate_counters(claim, doc_id):
                    alignment = self._align_pair(claim, counter)
                    if alignment.relation == "matched":
                        matched_pairs.append((claim, counter, alignment))
                        cluster[counter.claim_id] = counter

        # Matched counter-claims get their own consensus so Layer 6 can
        # hypothesize over both sides of a contested proposition.
        for counter_id in sorted(set(cluster) -
                                 {c.claim_id for c in focus_claims}):
            counter = cluster[counter_id]
            for doc_id in sorted(self.docs_processed):
                if doc_id == counter.doc_id:
                    continue
                for other in self._candidate_counters(counter, doc_id):
                    alignment = self._align_pair(counter, other)
                    if alignment.relation == "matched":
                        matched_pairs.append((counter, other, alignment))

        records: dict[tuple[str, str], cross.AgreementRecord] = {}
        for claim, counter, alignment in matched_pairs:
            if claim.claim_id not in cluster:
                continue
            label = ("corroborates" if alignment.stance == "agrees"
                     else "contradicts")
            fidelity = None
            if counter.provenance and counter.provenance.level == 4 \
                    and any(self.slug_of(claim.doc_id) ==
                            ref.removeprefix("doc:")
                            for ref in counter.cited_refs):
                fidelity = self._fidelity_of(counter)
                if fidelity is not None and not fidelity.faithful:
                    label = "misrepresents"
            root = None
            if label == "contradicts":
                root = cross.analyze_contradiction(
                    claim, counter, self.router, self.slug_of(claim.doc_id),
                    self.slug_of(counter.doc_id))
            key = (claim.claim_id, counter.doc_id)
            existing = records.get(key)
            if existing is None or _record_precedence(label) > \
                    _record_precedence(existing.label):
                records[key] = cross.AgreementRecord(
                    claim_id=claim.claim_id, counter_doc=counter.doc_id,
                    label=label, counter_claim=counter.claim_id,
                    root_cause=root, fidelity=fidelity)

        self.agreements = [records[k] for k in sorted(records)]
        consistency = {d: r.consistency_score
                       for d, r in self.consistency.items()}
        for claim_id in sorted(cluster):
            claim = cluster[claim_id]
            claim_records = [r for r in self.agreements
                             if r.claim_id == claim_id]
            claim_records.append(cross.AgreementRecord(
                claim_id=claim_id, counter_doc=claim.doc_id,
                label="corroborates", counter_claim=claim_id))
            ratings = {claim.doc_id: self._own_rating(claim.doc_id)}
            for record in claim_records:
                if record.counter_doc != claim.doc_id:
                    ratings[record.counter_doc] = self._rating_for(
                        claim.doc_id, record.counter_doc, view)
            self.consensus[claim_id] = cross.compute_consensus(
                claim, claim_records, ratings, consistency)

    def _evaluate_rubrics(self) -> None:
        rubric_docs = [self.documents[d] for d in sorted(self.documents)
                       if self.documents[d].source_type == "evaluation-framework"
                       and d in self.docs_processed]
        if not rubric_docs:
            return
        slugs = {d: self.slug_of(d) for d in self.documents}
        contested = sorted({
            r.claim_id for r in self.agreements if r.label == "contradicts"})
        for claim_id in contested:
            claim = self.claims[claim_id]
            if claim.doc_id not in self.seeds:
                continue
            members = [claim] + [self.claims[r.counter_claim]
                                 for r in self.agreements
                                 if r.claim_id == claim_id and r.counter_claim]
            for rubric_doc in rubric_docs:
                self.rubrics.append(cross.evaluate_rubric(
                    members, rubric_doc, self.router, slugs))

    def _persist_crosssource(self) -> None:
        write_records(self.store_dir / "alignments.jsonl",
                      [a.to_record() for a in
                       sorted(self.alignments,
                              key=lambda a: (a.claim_a, a.claim_b))])
        write_records(self.store_dir / "agreements.jsonl",
                      [r.to_record() for r in
                       sorted(self.agreements,
                              key=lambda r: (r.claim_id, r.counter_doc))])
        write_records(self.store_dir / "independence.jsonl",
                      [self.ratings[k].to_record()
                       for k in sorted(self.ratings)])
        write_records(self.store_dir / "consensus.jsonl",
                      [self.consensus[c].to_record()
                       for c in sorted(self.consensus)])
        write_records(self.store_dir / "fidelity.jsonl",
                      [f.to_record() for f in
                       sorted(self.fidelity,
                              key=lambda f: (f.citing_claim, f.cited_doc))])
        write_records(self.store_dir / "rubrics.jsonl",
                      [r.to_record() for r in
                       sorted(self.rubrics,
                              key=lambda r: (r.claim_id, r.rubric_source))])

    # --- layer 5: signals --------------------------------------------------------

    def _financial_events(self) -> dict[str, list[sig.FinancialEvent]]:
        events: dict[str, list[sig.FinancialEvent]] = {}
        for row in self.relations.rows:
            kind = _FINANCIAL_PREDICATES.get(row["relation"])
            if kind is None or "date" not in row:
                continue
            entity = self.registry.get(row["subject"])
            if entity is None:
                continue
            amount = row.get("amount") or {}
            events.setdefault(entity.entity_id, []).append(sig.FinancialEvent(
                entity_id=entity.entity_id, date=row["date"], kind=kind,
                description=row.get("description", row["object"]),
                amount=amount.get("value"), currency=amount.get("currency"),
                source=row.get("source", "relations")))
        return events

    def _strategic_events(self, graph: KnowledgeGraph) -> list[sig.StrategicEvent]:
        events: list[sig.StrategicEvent] = []
        for doc_id in sorted(self.docs_processed):
            doc = self.documents[doc_id]
            if not doc.metadata.publication_date:
                continue
            kind = "rebuttal" if doc.source_type == "rebuttal" else "publication"
            parties = set(self.doc_orgs(doc_id))
            for claim_id in self.doc_claims.get(doc_id, []):
                claim = self.claims[claim_id]
                subject = graph.nodes.get(claim.subject)
                if subject is not None and subject.kind == "algorithm":
                    parties.add(subject.entity_id)
            events.append(sig.StrategicEvent(
                date=doc.metadata.publication_date, kind=kind,
                parties=sorted(parties), source=doc_id,
                note=doc.title))
        for row in self.relations.rows:
            kind = _EVENT_PREDICATES.get(row["relation"])
            if kind is None or "date" not in row:
                continue
            parties = []
            for name in (row["subject"], row["object"]):
                entity = self.registry.get(name)
                if entity is not None:
                    parties.append(entity.entity_id)
            events.append(sig.StrategicEvent(
                date=row["date"], kind=kind, parties=sorted(set(parties)),
                source=row.get("source", "relations"),
                note=row.get("description", row["relation"])))
        return events

    def layer5(self) -> None:
        graph = self.graph()
        financial_events = self._financial_events()
        for entity_id in sorted(financial_events):
            self.financial[entity_id] = sig.classify_spending(
                financial_events[entity_id], self.cfg.signals)

        evaluated = sorted({
            self.claims[c].subject for d in sorted(self.seeds)
            for c in self.doc_claims.get(d, [])
            if graph.nodes[self.claims[c].subject].kind == "algorithm"})
        for doc_id in sorted(self.seeds):
            doc = self.documents[doc_id]
            author_entities = []
            for name, _ in doc.metadata.authors:
                entity = self.registry.get(name)
                if entity is not None and entity.kind == "researcher":
                    author_entities.append(entity.entity_id)
            self.coi_flags.extend(sig.detect_coi(
                doc, graph, author_entities, evaluated, self.cfg.signals))

        involved: set[str] = set(evaluated)
        for doc_id in sorted(self.seeds):
            for claim_id in self.doc_claims.get(doc_id, []):
                claim = self.claims[claim_id]
                involved.add(claim.subject)
                if claim.object_is_entity:
                    involved.add(claim.object)
        for edge in graph.edges.values():
            if edge.predicate in ("implements", "evaluates") \
                    and edge.object_is_entity and edge.object in involved:
                involved.add(edge.subject)
        for entity in self.registry.entities():
            if entity.kind != "organization":
                continue
            web = sig.map_conflict_web(entity.entity_id, graph, involved,
                                       self.cfg.signals)
            if web.edges:
                self.conflict_webs.append(web)

        for entity_id in evaluated:
            self.supply_chains.extend(sig.map_supply_chain(
                entity_id, graph, self.cfg.signals.coi_max_hops,
                self.cfg.signals))

        related_pairs = {
            frozenset((e.subject, e.object)) for e in graph.edges.values()
            if e.object_is_entity}
        self.timeline, self.correlations = sig.build_timeline(
            self._strategic_events(graph),
            self.cfg.signals.correlation_window_days, related_pairs)

        profiled = sorted(
            set(self.financial)
            | {f.organization for f in self.coi_flags}
            | {w.entity_id for w in self.conflict_webs})
        for entity_id in profiled:
            self.signal_profiles.append(sig.compose_signal_profile(
                entity_id, graph,
                self.financial.get(entity_id, sig.FinancialProfile(
                    entity_id=entity_id, events=[], dominance="unknown",
                    summary="no financial events")),
                self.coi_flags,
                next((w for w in self.conflict_webs
                      if w.entity_id == entity_id), None),
                [c for c in self.supply_chains if c.dependent == entity_id],
                self.timeline, self.correlations))

        self._persist_signals()
        self._flush_layer("layer5")

    def _persist_signals(self) -> None:
        write_records(self.store_dir / "financial.jsonl",
                      [self.financial[e].to_record()
                       for e in sorted(self.financial)])
        write_records(self.store_dir / "coi.jsonl",
                      [f.to_record() for f in
                       sorted(self.coi_flags,
                              key=lambda f: (f.author, f.organization,
                                             len(f.product_path)))])
        write_records(self.store_dir / "conflict_webs.jsonl",
                      [w.to_record() for w in
                       sorted(self.conflict_webs, key=lambda w: w.entity_id)])
        write_records(self.store_dir / "supply_chains.jsonl",
                      [c.to_record() for c in
                       sorted(self.supply_chains,
                              key=lambda c: (c.dependent, len(c.chain),
                                             str(c.chain)))])
        write_records(self.store_dir / "timeline.jsonl",
                      [e.to_record() for e in self.timeline])
        write_records(self.store_dir / "correlations.jsonl",
                      self.correlations)
        write_records(self.store_dir / "signal_profiles.jsonl",
                      [p.to_record() for p in
                       sorted(self.signal_profiles,
                              key=lambda p: p.entity_id)])

    # --- layer 6: assessment --------------------------------------------------------

    def _claim_coi_context(self, claim: ClaimTriple) -> list[sig.COIFlag]:
        """Flags of involved entities: the asserting orgs plus any stake
        chain terminating at the claim's subject or object."""
        orgs = self.doc_orgs(claim.doc_id)
        endpoints = {claim.subject}
        if claim.object_is_entity:
            endpoints.add(claim.object)
        out = []
        for flag in self.coi_flags:
            if flag.organization in orgs or flag.author in orgs:
                out.append(flag)
            elif flag.product_path and \
                    flag.product_path[-1]["to"] in endpoints:
                out.append(flag)
        return out

    def _self_corrected(self, claim: ClaimTriple) -> bool:
        """A reframing event by the claimant whose source document carries a
        claim aligned with this one."""
        claimant_orgs = self.doc_orgs(claim.doc_id)
        aligned_claims = {a.claim_b for a in self.alignments
                          if a.claim_a == claim.claim_id
                          and a.relation in ("matched", "partially-overlapping")}
        aligned_claims |= {a.claim_a for a in self.alignments
                           if a.claim_b == claim.claim_id
                           and a.relation in ("matched", "partially-overlapping")}
        aligned_docs = {self.claims[c].doc_id for c in aligned_claims
                        if c in self.claims}
        for event in self.timeline:
            if event.kind != "reframing":
                continue
            if not claimant_orgs & set(event.parties):
                continue
            source_doc = self.doc_by_slug(event.source.removeprefix("doc:"))
            if source_doc and source_doc.doc_id in aligned_docs:
                return True
        return False

    def layer6(self) -> None:
        graph = self.graph()
        rubric_by_claim = {r.claim_id: r.summary for r in self.rubrics}
        for claim_id in sorted(self.consensus):
            claim = self.claims[claim_id]
            profile = assess_mod.build_evidence_profile(
                claim, self.verdicts.get(claim_id),
                self.consensus.get(claim_id),
                [f for f in self.coherence if f.doc_id == claim.doc_id],
                self._claim_coi_context(claim),
                rubric_by_claim.get(claim_id),
                source_slug=self.slug_of(claim.doc_id))
            self.profiles.append(profile)

        statuses: dict[str, str] = {}
        rows: list[assess_mod.HypothesisRow] = []
        for profile in self.profiles:
            bundle = assess_mod.generate_hypotheses(
                profile, self.router, self.cfg.assess.n_samples,
                self.cfg.assess.hypothesis_models, self.cfg.max_parallelism)
            row = assess_mod.build_hypothesis_row(
                profile, bundle, self._self_corrected(profile.claim),
                self.cfg.assess)
            if row is not None:
                rows.append(row)
                statuses[profile.claim.claim_id] = row.status
        rows.sort(key=lambda r: r.hypothesis.hypothesis_id)
        self.matrix = rows

        hardware_kinds = {e.entity_id: e.kind
                          for e in self.registry.entities()}
        if self.profiles:
            self.maturity = assess_mod.assess_maturity(
                self.profiles, self.timeline, statuses, hardware_kinds,
                self.cfg.assess)
        self.alphas = assess_mod.detect_alpha(self.profiles, self.cfg.assess)

        self._persist_assess()
        self._write_report()
        self._flush_layer("layer6")

    def _persist_assess(self) -> None:
        write_records(self.store_dir / "profiles.jsonl",
                      [p.to_record() for p in
                       sorted(self.profiles, key=lambda p: p.claim.claim_id)])
        write_records(self.store_dir / "matrix.jsonl",
                      [r.to_record() for r in self.matrix])

    def report_payload(self) -> dict[str, Any]:
        consistency = {
            doc_id: {
                "slug": self.slug_of(doc_id),
                "consistency_score": round(report.consistency_score, 6),
                "counts": report.counts,
                "claims": len(report.verdicts),
                "empty_document": report.empty_document,
            }
            for doc_id, report in sorted(self.consistency.items())}
        independence = [
            {
                "pair": list(self.ratings[key].pair),
                "pair_slugs": [self.slug_of(key[0]), self.slug_of(key[1])],
                "rating": self.ratings[key].rating,
                "author_jaccard": round(self.ratings[key].author_jaccard, 6),
                "weight": self.ratings[key].weight,
            }
            for key in sorted(self.ratings) if key[0] != key[1]]
        return machine_report(
            self.query, self.matrix, self.maturity, self.alphas, consistency,
            independence, self.cfg.to_dict(), self.run_id)

    def _write_report(self) -> None:
        payload = self.report_payload()
        write_json(self.run_dir / "report" / "assessment.json", payload)
        text = narrative_report(payload)
        path = self.run_dir / "report" / "assessment.txt"
        path.parent.mkdir(parents=True, exist_ok=True)
        tmp = path.with_suffix(".tmp")
        tmp.write_text(text, encoding="utf-8")
        tmp.replace(path)

    # --- orchestration -----------------------------------------------------------

    _LAYER_FNS = {
        "layer1": layer1, "layer2": layer2, "layer3": layer3,
        "layer4": layer4, "layer5": layer5, "layer6": layer6,
    }

    def execute(self, stop_after: str | None = None) -> Path:
        self.run_dir.mkdir(parents=True, exist_ok=True)
        self.write_manifest()
        for layer in LAYERS:
            if self.layers_done[layer]:
                continue
            self._LAYER_FNS[layer](self)
            if stop_after == layer:
                break
        return self.run_dir


def _record_precedence(label: str) -> int:
    return {"corroborates": 1, "misrepresents": 2, "contradicts": 3}[label]


def run(query: str, corpus_dir: Path, out_dir: Path, cfg: PipelineConfig,
        provider_spec: ProviderSpec, target_doc: str | None = None,
        stop_after: str | None = None) -> Run:
    state = Run(out_dir, corpus_dir, query, cfg, provider_spec, target_doc)
    state.execute(stop_after=stop_after)
    return state


def resume(run_dir: Path, cfg: PipelineConfig | None = None,
           provider_spec: ProviderSpec | None = None,
           stop_after: str | None = None) -> Run:
    """Continue a run from its first incomplete layer.

    Completed layers are never recomputed; their outputs are reloaded from
    the store. The config snapshot must match the current config.
    """
    manifest_path = Path(run_dir) / "manifest.json"
    try:
        manifest = read_json(manifest_path)
        if manifest.get("schema") != "run-manifest@1":
            raise CorruptManifest(f"unexpected manifest schema in {manifest_path}")
    except (OSError, ValueError) as exc:
        raise CorruptManifest(f"cannot read manifest: {exc}") from exc

    if cfg is None:
        cfg = PipelineConfig.from_dict(manifest["config"])
    if cfg.snapshot_hash() != manifest["config_hash"]:
        raise ConfigDrift(
            "config differs from the run snapshot; refusing to resume")
    if provider_spec is None:
        provider_spec = ProviderSpec.from_record(manifest["provider"])

    state = Run(Path(run_dir), Path(manifest["corpus_dir"]),
                manifest["query"], cfg, provider_spec,
                manifest.get("target_doc"))
    if state.corpus_hash != manifest["corpus_hash"]:
        raise ConfigDrift("corpus changed since the run was started")
    state.layers_done = {layer: bool(manifest["layers"].get(layer))
                         for layer in LAYERS}
    state.seeds = list(manifest.get("seeds", []))
    state.docs_processed = list(manifest.get("docs_processed", []))
    state.queue = list(manifest.get("queue", []))
    state.gaps = list(manifest.get("gaps", []))
    state.citation_gaps = list(manifest.get("citation_gaps", []))
    _reload_state(state)
    state.execute(stop_after=stop_after)
    return state


def _reload_state(state: Run) -> None:
    store = state.store_dir
    if state.layers_done["layer1"]:
        for record in read_all(store / "documents.jsonl"):
            doc = SourceDocument.from_record(record)
            state.documents[doc.doc_id] = doc
        for record in read_all(store / "embeddings.jsonl"):
            state.store.add(EmbeddingRecord(
                owner=record["owner"], vector=tuple(record["vector"]),
                model_tag=record["model_tag"]))
        state.relations = RelationSet(rows=read_all(store / "relations.jsonl"))
    if state.layers_done["layer2"]:
        state._register_relation_entities()
        for record in read_all(store / "entities.jsonl"):
            entity = Entity.from_record(record)
            state.registry.register(entity.name, entity.kind, entity.aliases,
                                    entity.first_seen_doc)
        for record in read_all(store / "claims.jsonl"):
            claim = ClaimTriple.from_record(record)
            state.claims[claim.claim_id] = claim
        state.doc_claims = read_json(store / "doc_claims.json")
        state.doc_entities = read_json(store / "doc_entities.json")
    if state.layers_done["layer3"]:
        state.links = [intra.EvidenceLink(**r)
                       for r in read_all(store / "evidence_links.jsonl")]
        state.coherence = [intra.CoherenceFlag(**r)
                           for r in read_all(store / "coherence_flags.jsonl")]
        state.overclaims = [intra.OverclaimAnnotation(**r)
                            for r in read_all(store / "overclaims.jsonl")]
        for record in read_all(store / "verdicts.jsonl"):
            verdict = intra.ClaimVerdict(**record)
            state.verdicts[verdict.claim_id] = verdict
        for record in read_all(store / "consistency.jsonl"):
            report = intra.ConsistencyReport(**record)
            state.consistency[report.doc_id] = report
    if state.layers_done["layer4"]:
        state.alignments = [cross.ClaimAlignment(**r)
                            for r in read_all(store / "alignments.jsonl")]
        state.agreements = [cross.AgreementRecord.from_record(r)
                            for r in read_all(store / "agreements.jsonl")]
        for record in read_all(store / "independence.jsonl"):
            pair = tuple(record.pop("pair"))
            state.ratings[pair] = cross.IndependenceRating(pair=pair, **record)
        for record in read_all(store / "consensus.jsonl"):
            score = cross.ConsensusScore.from_record(record)
            state.consensus[score.claim_id] = score
        state.fidelity = [cross.CitationFidelityFinding(**r)
                          for r in read_all(store / "fidelity.jsonl")]
        state.rubrics = [
            cross.RubricAssessment(
                claim_id=r["claim_id"], rubric_source=r["rubric_source"],
                criteria=[tuple(c) for c in r["criteria"]],
                summary=r["summary"])
            for r in read_all(store / "rubrics.jsonl")]
    if state.layers_done["layer5"]:
        for record in read_all(store / "financial.jsonl"):
            events = [sig.FinancialEvent(**e) for e in record["events"]]
            state.financial[record["entity_id"]] = sig.FinancialProfile(
                entity_id=record["entity_id"], events=events,
                dominance=record["dominance"], summary=record["summary"])
        state.coi_flags = [sig.COIFlag.from_record(r)
                           for r in read_all(store / "coi.jsonl")]
        state.conflict_webs = [sig.EntityConflictWeb(**r)
                               for r in read_all(store / "conflict_webs.jsonl")]
        state.supply_chains = [sig.SupplyChainDependency(**r)
                               for r in read_all(store / "supply_chains.jsonl")]
        state.timeline = [sig.StrategicEvent.from_record(r)
                          for r in read_all(store / "timeline.jsonl")]
        state.correlations = read_all(store / "correlations.jsonl")
        # signal profiles are recomposed lazily; the persisted file is the
        # deliverable
