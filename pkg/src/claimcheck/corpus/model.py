"""Source document model: sections, passages, assets, metadata, quality."""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any

SOURCE_TYPES = ("paper", "patent", "rebuttal", "benchmark",
                "evaluation-framework", "press", "filing", "profile")


@dataclass
class DocumentMetadata:
    authors: list[tuple[str, str]] = field(default_factory=list)  # (name, affiliation)
    publication_date: str | None = None                           # ISO date
    venue: str | None = None
    citation_count: int | None = None
    external_ids: dict[str, str] = field(default_factory=dict)
    disclosures: list[str] = field(default_factory=list)

    def to_record(self) -> dict[str, Any]:
        data = asdict(self)
        data["authors"] = [list(a) for a in self.authors]
        return data

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "DocumentMetadata":
        meta = cls(**{k: v for k, v in data.items() if k != "authors"})
        meta.authors = [(a[0], a[1]) for a in data.get("authors", [])]
        return meta

    def merged_with(self, hints: "DocumentMetadata | None") -> "DocumentMetadata":
        """Overlay hint fields on extracted fields; hints win on conflict."""
        if hints is None:
            return self
        return DocumentMetadata(
            authors=hints.authors or self.authors,
            publication_date=hints.publication_date or self.publication_date,
            venue=hints.venue or self.venue,
            citation_count=(hints.citation_count
                            if hints.citation_count is not None
                            else self.citation_count),
            external_ids={**self.external_ids, **hints.external_ids},
            disclosures=hints.disclosures or self.disclosures,
        )


@dataclass
class Section:
    section_id: str
    heading: str
    level: int
    passages: list[tuple[str, str]]  # (passage_id, text)


@dataclass
class VisualAsset:
    asset_id: str
    kind: str  # figure | plot | diagram | table-image
    caption: str
    inline_refs: list[str] = field(default_factory=list)  # passage_ids
    description: str | None = None
    extracted_trends: list[str] = field(default_factory=list)
    section_id: str | None = None


@dataclass
class SourceScore:
    quality: float
    bias_flags: list[str]
    rationale: str


@dataclass
class SourceDocument:
    doc_id: str
    source_type: str
    title: str
    body: list[Section]
    assets: list[VisualAsset] = field(default_factory=list)
    metadata: DocumentMetadata = field(default_factory=DocumentMetadata)
    quality: SourceScore | None = None

    @property
    def slug(self) -> str:
        """Stable human handle; falls back to the content hash."""
        return self.metadata.external_ids.get("slug", self.doc_id)

    def passages(self) -> list[tuple[str, str]]:
        out: list[tuple[str, str]] = []
        for section in self.body:
            out.extend(section.passages)
        return out

    def passage_text(self, passage_id: str) -> str | None:
        for pid, text in self.passages():
            if pid == passage_id:
                return text
        return None

    def full_text(self) -> str:
        parts = [self.title]
        for section in self.body:
            parts.append(section.heading)
            parts.extend(text for _, text in section.passages)
        return "\n".join(parts)

    def described_assets(self) -> list[VisualAsset]:
        return [a for a in self.assets if a.description]

    def find_section(self, *keywords: str) -> Section | None:
        for section in self.body:
            heading = section.heading.lower()
            if any(k in heading for k in keywords):
                return section
        return None

    def to_record(self) -> dict[str, Any]:
        return {
            "doc_id": self.doc_id,
            "source_type": self.source_type,
            "title": self.title,
            "metadata": self.metadata.to_record(),
            "sections": [
                {"section_id": s.section_id, "heading": s.heading,
                 "level": s.level,
                 "passages": [[pid, text] for pid, text in s.passages]}
                for s in self.body],
            "assets": [
                {"asset_id": a.asset_id, "kind": a.kind, "caption": a.caption,
                 "inline_refs": a.inline_refs, "description": a.description,
                 "extracted_trends": a.extracted_trends,
                 "section_id": a.section_id}
                for a in self.assets],
            "quality": (None if self.quality is None else asdict(self.quality)),
        }

    @classmethod
    def from_record(cls, data: dict[str, Any]) -> "SourceDocument":
        body = [Section(section_id=s["section_id"], heading=s["heading"],
                        level=s["level"],
                        passages=[(p[0], p[1]) for p in s["passages"]])
                for s in data["sections"]]
        assets = [VisualAsset(asset_id=a["asset_id"], kind=a["kind"],
                              caption=a["caption"],
                              inline_refs=a.get("inline_refs", []),
                              description=a.get("description"),
                              extracted_trends=a.get("extracted_trends", []),
                              section_id=a.get("section_id"))
                  for a in data.get("assets", [])]
        quality = data.get("quality")
        return cls(
            doc_id=data["doc_id"], source_type=data["source_type"],
            title=data["title"], body=body, assets=assets,
            metadata=DocumentMetadata.from_record(data["metadata"]),
            quality=None if quality is None else SourceScore(**quality),
        )


@dataclass(frozen=True)
class EmbeddingRecord:
    owner: str  # passage_id or asset_id
    vector: tuple[float, ...]
    model_tag: str

    def to_record(self) -> dict[str, Any]:
        return {"owner": self.owner, "vector": list(self.vector),
                "model_tag": self.model_tag}
