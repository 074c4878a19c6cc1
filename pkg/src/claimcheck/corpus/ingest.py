"""Document ingestion: raw bytes to a structured, content-addressed document.

Accepts pre-extracted text (pdf-text, plain), HTML, or a structured JSON
manifest. Section boundaries come from heading heuristics for flat text and
from explicit structure for manifests. The doc_id is a pure function of the
raw input bytes, so re-ingesting an unchanged corpus is byte-identical.
"""

from __future__ import annotations

import json
import re
from html.parser import HTMLParser

from ..errors import EmptyInput, UnsupportedFormat
from ..ids import hash_bytes, make_id, normalize_text
from .model import (SOURCE_TYPES, DocumentMetadata, Section, SourceDocument,
                    VisualAsset)

FORMATS = ("pdf-text", "html", "plain", "json-manifest")

# Numbered headings ("3.1 Results") or short ALL-CAPS lines start a section.
_NUMBERED = re.compile(r"^\s*(\d+(?:\.\d+)*)[.)]?\s+(\S.*)$")
_ALLCAPS = re.compile(r"^[A-Z][A-Z0-9 \-&]{2,60}$")


def ingest_document(raw: bytes, format: str,
                    hints: DocumentMetadata | None = None) -> SourceDocument:
    if format not in FORMATS:
        raise UnsupportedFormat(f"format {format!r} not one of {FORMATS}")
    if not raw or not raw.decode("utf-8", errors="replace").strip():
        raise EmptyInput("document contains no usable text")
    doc_id = f"doc-{hash_bytes(raw)}"
    if format == "json-manifest":
        doc = _from_manifest(doc_id, raw)
    elif format == "html":
        doc = _from_html(doc_id, raw)
    else:  # plain and pdf-text share the heading heuristics
        doc = _from_plain(doc_id, raw)
    if not doc.body or not doc.passages():
        raise EmptyInput("document yielded no sections or passages")
    doc.metadata = doc.metadata.merged_with(hints)
    return doc


def _section_from(doc_id: str, index: int, heading: str, level: int,
                  passages: list[str]) -> Section:
    section_id = make_id("sec", doc_id, index, heading)
    rows: list[tuple[str, str]] = []
    for p_index, text in enumerate(passages):
        text = normalize_text(text)
        if not text:
            continue
        rows.append((make_id("pas", doc_id, index, p_index, text), text))
    return Section(section_id=section_id, heading=heading, level=level,
                   passages=rows)


def _from_manifest(doc_id: str, raw: bytes) -> SourceDocument:
    try:
        data = json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as exc:
        raise UnsupportedFormat(f"manifest is not valid JSON: {exc}") from exc
    if data.get("manifest_kind", "document") != "document":
        raise UnsupportedFormat(
            f"manifest_kind {data.get('manifest_kind')!r} is not a document")
    source_type = data.get("source_type", "paper")
    if source_type not in SOURCE_TYPES:
        raise UnsupportedFormat(f"unknown source_type {source_type!r}")

    sections: list[Section] = []
    for index, sec in enumerate(data.get("sections", [])):
        sections.append(_section_from(
            doc_id, index, sec.get("heading", f"Section {index + 1}"),
            int(sec.get("level", 1)), list(sec.get("passages", []))))

    meta = data.get("metadata", {})
    metadata = DocumentMetadata(
        authors=[(a["name"], a.get("affiliation", ""))
                 for a in meta.get("authors", [])],
        publication_date=meta.get("publication_date"),
        venue=meta.get("venue"),
        citation_count=meta.get("citation_count"),
        external_ids=dict(meta.get("external_ids", {})),
        disclosures=list(meta.get("disclosures", [])),
    )
    if "slug" in data:
        metadata.external_ids.setdefault("slug", data["slug"])

    assets: list[VisualAsset] = []
    for a_index, asset in enumerate(data.get("assets", [])):
        caption = normalize_text(asset.get("caption", ""))
        refs = []
        for si, pi in asset.get("inline_refs", []):
            section = sections[si]
            refs.append(section.passages[pi][0])
        assets.append(VisualAsset(
            asset_id=make_id("ast", doc_id, a_index, caption),
            kind=asset.get("kind", "figure"), caption=caption,
            inline_refs=refs,
            section_id=(sections[asset["section"]].section_id
                        if "section" in asset else None)))

    return SourceDocument(doc_id=doc_id, source_type=source_type,
                          title=normalize_text(data.get("title", "")),
                          body=sections, assets=assets, metadata=metadata)


def _from_plain(doc_id: str, raw: bytes) -> SourceDocument:
    text = raw.decode("utf-8", errors="replace").replace("\f", "\n")
    lines = text.splitlines()
    title = ""
    blocks: list[tuple[str, int, list[str]]] = []  # (heading, level, paragraphs)
    current: list[str] = []
    paragraph: list[str] = []

    def close_paragraph():
        if paragraph:
            current.append(" ".join(paragraph))
            paragraph.clear()

    def close_block(heading: str, level: int):
        close_paragraph()
        if current or not blocks:
            blocks.append((heading, level, list(current)))
        current.clear()

    heading, level = "Body", 1
    for line in lines:
        stripped = line.strip()
        if not stripped:
            close_paragraph()
            continue
        if not title:
            title = stripped
            continue
        numbered = _NUMBERED.match(stripped)
        if numbered and len(stripped) < 80:
            close_block(heading, level)
            heading = numbered.group(2).strip()
            level = numbered.group(1).count(".") + 1
            continue
        if _ALLCAPS.match(stripped):
            close_block(heading, level)
            heading, level = stripped.title(), 1
            continue
        paragraph.append(stripped)
    close_block(heading, level)

    sections = [_section_from(doc_id, i, h, lv, ps)
                for i, (h, lv, ps) in enumerate(blocks) if ps]
    if not sections and title:
        sections = [_section_from(doc_id, 0, "Body", 1, [title])]
    return SourceDocument(doc_id=doc_id, source_type="paper", title=title,
                          body=sections)


class _HTMLCollector(HTMLParser):
    def __init__(self):
        super().__init__()
        self.title = ""
        self.blocks: list[tuple[str, int, list[str]]] = [("Body", 1, [])]
        self._target: str | None = None
        self._buffer: list[str] = []

    def handle_starttag(self, tag, attrs):
        if tag in ("h1", "h2", "h3", "h4", "h5", "h6", "p", "title"):
            self._target = tag
            self._buffer = []

    def handle_endtag(self, tag):
        if tag != self._target:
            return
        text = normalize_text("".join(self._buffer))
        if text:
            if tag == "title":
                self.title = text
            elif tag.startswith("h"):
                self.blocks.append((text, int(tag[1]), []))
            else:
                self.blocks[-1][2].append(text)
        self._target = None

    def handle_data(self, data):
        if self._target:
            self._buffer.append(data)


def _from_html(doc_id: str, raw: bytes) -> SourceDocument:
    collector = _HTMLCollector()
    collector.feed(raw.decode("utf-8", errors="replace"))
    sections = [_section_from(doc_id, i, h, lv, ps)
                for i, (h, lv, ps) in enumerate(collector.blocks) if ps]
    title = collector.title or next(
        (h for h, _, ps in collector.blocks if ps), "")
    return SourceDocument(doc_id=doc_id, source_type="paper", title=title,
                          body=sections)
