"""Entities, claim triples, provenance levels, and normalized metrics."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

ENTITY_KINDS = ("organization", "researcher", "algorithm", "hardware",
                "product", "dataset", "metric-concept", "other")

PROVENANCE_LABELS = {
    1: "experimental-data",
    2: "simulation-result",
    3: "theoretical-estimate",
    4: "citation-of-another-work",
    5: "author-assertion",
}


@dataclass(frozen=True)
class ProvenanceLevel:
    level: int

    def __post_init__(self):
        if self.level not in PROVENANCE_LABELS:
            raise ValueError(f"provenance level must be 1-5, got {self.level}")

    @property
    def label(self) -> str:
        return PROVENANCE_LABELS[self.level]


@dataclass
class Entity:
    entity_id: str
    name: str
    kind: str
    aliases: list[str] = field(default_factory=list)
    first_seen_doc: str | None = None

    def to_record(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "Entity":
        return cls(**data)


@dataclass
class OverheadEntry:
    name: str
    quantity: float | None = None
    unit: str | None = None

    def to_record(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class MetricValue:
    """Normalized quantity: scalar or closed interval, in a canonical unit.

    included/excluded overheads carry the named runtime components a
    measurement does or does not cover; excluded entries may state an
    estimated magnitude so definitional asymmetry can be assessed.
    """

    quantity: float | tuple[float, float]
    unit: str  # "s" | "ratio" | "count" | "Hz"
    raw_text: str = ""
    methodology: str = ""
    included_overheads: list[str] = field(default_factory=list)
    excluded_overheads: list[OverheadEntry] = field(default_factory=list)

    @property
    def is_interval(self) -> bool:
        return isinstance(self.quantity, tuple)

    @property
    def upper(self) -> float:
        return self.quantity[1] if self.is_interval else self.quantity

    @property
    def lower(self) -> float:
        return self.quantity[0] if self.is_interval else self.quantity

    def to_record(self) -> dict[str, Any]:
        return {
            "quantity": list(self.quantity) if self.is_interval else self.quantity,
            "unit": self.unit,
            "raw_text": self.raw_text,
            "methodology": self.methodology,
            "included_overheads": list(self.included_overheads),
            "excluded_overheads": [e.to_record() for e in self.excluded_overheads],
        }

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "MetricValue":
        quantity = data["quantity"]
        if isinstance(quantity, list):
            quantity = (quantity[0], quantity[1])
        return cls(
            quantity=quantity, unit=data["unit"],
            raw_text=data.get("raw_text", ""),
            methodology=data.get("methodology", ""),
            included_overheads=list(data.get("included_overheads", [])),
            excluded_overheads=[OverheadEntry(**e)
                                for e in data.get("excluded_overheads", [])],
        )


@dataclass
class ComparabilityVerdict:
    comparable: bool
    discrepancies: list[str] = field(default_factory=list)
    asymmetry_note: str | None = None

    def to_record(self) -> dict[str, Any]:
        return asdict(self)


@dataclass
class ClaimTriple:
    claim_id: str
    subject: str                    # entity_id
    predicate: str                  # normalized verb phrase
    object: str                     # entity_id or literal text
    object_is_entity: bool
    doc_id: str
    section_id: str
    passage_ids: list[str]
    subject_name: str = ""          # canonical names kept for readability
    object_name: str = ""
    provenance: ProvenanceLevel | None = None
    metric: MetricValue | None = None
    cited_refs: list[str] = field(default_factory=list)  # slugs/external ids
    enrichments: dict[str, Any] = field(default_factory=dict)

    @property
    def text(self) -> str:
        return f"{self.subject_name} {self.predicate} {self.object_name}"

    def to_record(self) -> dict[str, Any]:
        return {
            "claim_id": self.claim_id,
            "subject": self.subject,
            "predicate": self.predicate,
            "object": self.object,
            "object_is_entity": self.object_is_entity,
            "doc_id": self.doc_id,
            "section_id": self.section_id,
            "passage_ids": list(self.passage_ids),
            "subject_name": self.subject_name,
            "object_name": self.object_name,
            "provenance": None if self.provenance is None else self.provenance.level,
            "metric": None if self.metric is None else self.metric.to_record(),
            "cited_refs": list(self.cited_refs),
        }

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "ClaimTriple":
        provenance = data.get("provenance")
        metric = data.get("metric")
        return cls(
            claim_id=data["claim_id"], subject=data["subject"],
            predicate=data["predicate"], object=data["object"],
            object_is_entity=data["object_is_entity"], doc_id=data["doc_id"],
            section_id=data["section_id"],
            passage_ids=list(data["passage_ids"]),
            subject_name=data.get("subject_name", ""),
            object_name=data.get("object_name", ""),
            provenance=None if provenance is None else ProvenanceLevel(provenance),
            metric=None if metric is None else MetricValue.from_record(metric),
            cited_refs=list(data.get("cited_refs", [])),
        )
