"""Layer 5: external signal corroboration.

Builds per-entity signal profiles from structured relation records:
CapEx/OpEx spending classification, conflict-of-interest discovery over the
knowledge graph, supply-chain dependency mapping, and strategic timelines
with temporal correlations.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from datetime import date
from typing import Any

from .config import SignalsConfig
from .errors import UnknownEntity
from .knowledge.graph import KnowledgeGraph, Path, PathStep, find_paths
from .corpus.model import SourceDocument

EVENT_KINDS = ("partnership", "acquisition", "funding", "product-launch",
               "publication", "rebuttal", "reframing")


@dataclass
class FinancialEvent:
    entity_id: str
    date: str              # ISO date
    kind: str              # funding-round | acquisition | revenue | expenditure
    description: str = ""
    amount: float | None = None
    currency: str | None = None
    classification: str = "unclassified"  # capex | opex | unclassified
    source: str = ""

    def to_record(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class FinancialProfile:
    entity_id: str
    events: list[FinancialEvent]
    dominance: str  # capex-dominant | opex-dominant | mixed | unknown
    summary: str

    def to_record(self) -> dict[str, Any]:
        return {"entity_id": self.entity_id,
                "events": [e.to_record() for e in self.events],
                "dominance": self.dominance, "summary": self.summary}


@dataclass
class COIFlag:
    author: str        # researcher entity_id
    organization: str  # entity_id
    role: str
    product_path: list[dict[str, str]]  # edge-labeled path steps
    disclosed: bool

    def to_record(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "COIFlag":
        return cls(**data)


@dataclass
class EntityConflictWeb:
    """Organization-level conflict web: stake edges touching the evaluation.

    Complements author-level COI flags for actors (hardware vendors,
    marketplace hosts) that never author a paper but hold several stakes in
    the evaluated claim at once.
    """

    entity_id: str
    edges: list[dict[str, str]]  # {predicate, target, target_name}

    def to_record(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class SupplyChainDependency:
    dependent: str
    chain: list[dict[str, str]]
    single_supplier: bool

    def to_record(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class StrategicEvent:
    date: str
    kind: str
    parties: list[str]  # entity_ids
    source: str
    note: str = ""

    def to_record(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "StrategicEvent":
        return cls(**data)


@dataclass
class SignalProfile:
    entity_id: str
    financial: FinancialProfile
    coi_flags: list[COIFlag] = field(default_factory=list)
    conflict_web: EntityConflictWeb | None = None
    dependencies: list[SupplyChainDependency] = field(default_factory=list)
    timeline: list[StrategicEvent] = field(default_factory=list)
    correlations: list[dict[str, Any]] = field(default_factory=list)

    def to_record(self) -> dict[str, Any]:
        return {
            "entity_id": self.entity_id,
            "financial": self.financial.to_record(),
            "coi_flags": [f.to_record() for f in self.coi_flags],
            "conflict_web": (None if self.conflict_web is None
                             else self.conflict_web.to_record()),
            "dependencies": [d.to_record() for d in self.dependencies],
            "timeline": [e.to_record() for e in self.timeline],
            "correlations": self.correlations,
        }


# --- spending classification ---------------------------------------------------

def _classify_event(event: FinancialEvent, cfg: SignalsConfig) -> str:
    if event.kind not in ("expenditure", "acquisition"):
        return "unclassified"
    text = event.description.lower()
    if any(k in text for k in cfg.capex_keywords):
        return "capex"
    if any(k in text for k in cfg.opex_keywords):
        return "opex"
    return "unclassified"


def classify_spending(events: list[FinancialEvent],
                      cfg: SignalsConfig | None = None) -> FinancialProfile:
    """Classify expenditures by the keyword rule table; dominance goes to the
    side holding more than the configured fraction of classified amounts."""
    cfg = cfg or SignalsConfig()
    entity_id = events[0].entity_id if events else ""
    classified = []
    for event in events:
        event.classification = _classify_event(event, cfg)
        classified.append(event)
    capex = sum(e.amount or 0.0 for e in classified
                if e.classification == "capex")
    opex = sum(e.amount or 0.0 for e in classified
               if e.classification == "opex")
    total = capex + opex
    if total <= 0.0:
        dominance = "unknown"
    elif capex / total > cfg.dominance_fraction:
        dominance = "capex-dominant"
    elif opex / total > cfg.dominance_fraction:
        dominance = "opex-dominant"
    else:
        dominance = "mixed"
    summary = (f"capex={capex:.2f} opex={opex:.2f} over "
               f"{len(classified)} events")
    return FinancialProfile(entity_id=entity_id,
                            events=sorted(classified,
                                          key=lambda e: (e.date, e.kind)),
                            dominance=dominance, summary=summary)


# --- conflict-of-interest discovery ---------------------------------------------

def _path_steps(path: Path, graph: KnowledgeGraph) -> list[dict[str, str]]:
    return [{"edge_id": s.edge_id, "predicate": s.predicate,
             "from": s.from_entity, "to": s.to_entity,
             "from_name": graph.nodes[s.from_entity].name,
             "to_name": graph.nodes[s.to_entity].name}
            for s in path]


def detect_coi(doc: SourceDocument, graph: KnowledgeGraph,
               author_entities: list[str], evaluated: list[str],
               cfg: SignalsConfig | None = None) -> list[COIFlag]:
    """Author-to-algorithm stake discovery.

    One flag per (author, organization, path) where the author holds a
    founder/officer edge into an organization whose commercial chain reaches
    an evaluated algorithm within the hop budget. disclosed=True only when
    the document declares the interest.
    """
    cfg = cfg or SignalsConfig()
    officer_predicates = set(cfg.officer_predicates)
    chain_predicates = set(cfg.coi_chain_predicates)
    disclosed = bool(doc.metadata.disclosures)
    flags: list[COIFlag] = []
    for author_id in sorted(author_entities):
        if author_id not in graph.nodes:
            continue
        for target in sorted(evaluated):
            if target not in graph.nodes:
                continue
            paths = find_paths(graph, author_id, target, cfg.coi_max_hops,
                               predicate_filter=officer_predicates
                               | chain_predicates)
            for path in paths:
                if not path or path[0].predicate not in officer_predicates:
                    continue
                if any(step.predicate not in chain_predicates
                       for step in path[1:]):
                    continue
                flags.append(COIFlag(
                    author=author_id,
                    organization=path[0].to_entity,
                    role=path[0].predicate,
                    product_path=_path_steps(path, graph),
                    disclosed=disclosed))
    return flags


def map_conflict_web(entity_id: str, graph: KnowledgeGraph,
                     involved: set[str],
                     cfg: SignalsConfig | None = None) -> EntityConflictWeb:
    """Stake edges from one organization into evaluation-involved entities."""
    cfg = cfg or SignalsConfig()
    if entity_id not in graph.nodes:
        raise UnknownEntity(f"unknown entity {entity_id}")
    stake = set(cfg.stake_predicates)
    edges = []
    for edge in graph.out_edges(entity_id):
        if edge.predicate in stake and edge.object_is_entity \
                and edge.object in involved:
            edges.append({"predicate": edge.predicate, "target": edge.object,
                          "target_name": graph.nodes[edge.object].name})
    return EntityConflictWeb(entity_id=entity_id, edges=edges)


# --- supply chain ----------------------------------------------------------------

def map_supply_chain(entity_id: str, graph: KnowledgeGraph, max_hops: int,
                     cfg: SignalsConfig | None = None
                     ) -> list[SupplyChainDependency]:
    """Maximal dependency-typed paths out of an entity.

    single_supplier is set when every path that reaches a manufacturer
    terminates at the same one.
    """
    cfg = cfg or SignalsConfig()
    if entity_id not in graph.nodes:
        raise UnknownEntity(f"unknown entity {entity_id}")
    predicates = set(cfg.dependency_predicates)

    chains: list[Path] = []

    def walk(current: str, visited: set[str], steps: list) -> None:
        extended = False
        if len(steps) < max_hops:
            for edge in graph.out_edges(current):
                if edge.predicate not in predicates or not edge.object_is_entity:
                    continue
                if edge.object in visited:
                    continue
                step = PathStep(edge_id=edge.edge_id, predicate=edge.predicate,
                                from_entity=current, to_entity=edge.object)
                walk(edge.object, visited | {edge.object}, steps + [step])
                extended = True
        if steps and not extended:
            chains.append(tuple(steps))

    walk(entity_id, {entity_id}, [])
    chains.sort(key=lambda p: (len(p), tuple(s.edge_id for s in p)))

    manufacturers = {p[-1].to_entity for p in chains
                     if p[-1].predicate == "manufactured-by"}
    single = len(manufacturers) == 1
    return [SupplyChainDependency(
        dependent=entity_id, chain=_path_steps(path, graph),
        single_supplier=single and path[-1].predicate == "manufactured-by")
        for path in chains]


# --- strategic timeline -------------------------------------------------------------

def _days_between(a: str, b: str) -> int:
    return abs((date.fromisoformat(a) - date.fromisoformat(b)).days)


def build_timeline(events: list[StrategicEvent], window_days: int,
                   related: set[frozenset[str]] | None = None
                   ) -> tuple[list[StrategicEvent], list[dict[str, Any]]]:
    """Sort events chronologically and pair up related ones within the window.

    Two events are related when they share a party, or when `related` links
    any of their party pairs (graph adjacency, precomputed by the caller).
    """
    related = related or set()
    timeline = sorted(events, key=lambda e: (e.date, sorted(e.parties), e.kind))
    correlations: list[dict[str, Any]] = []
    for i, first in enumerate(timeline):
        for second in timeline[i + 1:]:
            gap = _days_between(first.date, second.date)
            if gap > window_days:
                break  # sorted by date; later events only grow the gap
            parties_a, parties_b = set(first.parties), set(second.parties)
            linked = bool(parties_a & parties_b) or any(
                frozenset((x, y)) in related
                for x in parties_a for y in parties_b)
            if linked:
                correlations.append({
                    "first": first.to_record(), "second": second.to_record(),
                    "gap_days": gap,
                    "note": f"{first.kind} followed by {second.kind} "
                            f"within {gap} days",
                })
    return timeline, correlations


def compose_signal_profile(entity_id: str, graph: KnowledgeGraph,
                           financial: FinancialProfile,
                           coi_flags: list[COIFlag],
                           conflict_web: EntityConflictWeb | None,
                           dependencies: list[SupplyChainDependency],
                           timeline: list[StrategicEvent],
                           correlations: list[dict[str, Any]]) -> SignalProfile:
    if entity_id not in graph.nodes:
        raise UnknownEntity(f"unknown entity {entity_id}")
    own_events = [e for e in timeline if entity_id in e.parties]
    own_correlations = [
        c for c in correlations
        if entity_id in c["first"]["parties"] + c["second"]["parties"]]
    return SignalProfile(
        entity_id=entity_id, financial=financial,
        coi_flags=[f for f in coi_flags if f.organization == entity_id
                   or f.author == entity_id],
        conflict_web=conflict_web, dependencies=dependencies,
        timeline=own_events, correlations=own_correlations)
