"""Content-hashed identifiers and canonical JSON serialization.

Every identifier in a run store is a pure function of content, so re-running
ingestion or extraction over unchanged inputs yields byte-identical files.
Canonicalization sorts keys and collapses whitespace inside string values
before hashing, which makes fingerprints independent of field ordering and
incidental formatting.
"""

from __future__ import annotations

import hashlib
import json
import re
from typing import Any

_WS = re.compile(r"\s+")


def normalize_text(value: str) -> str:
    """Collapse whitespace runs and strip ends; used before hashing text."""
    return _WS.sub(" ", value).strip()


def _canonicalize(value: Any) -> Any:
    if isinstance(value, str):
        return normalize_text(value)
    if isinstance(value, dict):
        return {k: _canonicalize(v) for k, v in sorted(value.items())}
    if isinstance(value, (list, tuple)):
        return [_canonicalize(v) for v in value]
    return value


def canonical_json(value: Any) -> str:
    """Deterministic JSON used for hashing and config snapshots."""
    return json.dumps(_canonicalize(value), sort_keys=True,
                      separators=(",", ":"), ensure_ascii=False)


def content_hash(value: Any, length: int = 16) -> str:
    """Hex digest of the canonical JSON form of `value`."""
    digest = hashlib.sha256(canonical_json(value).encode("utf-8")).hexdigest()
    return digest[:length]


def hash_bytes(raw: bytes, length: int = 16) -> str:
    return hashlib.sha256(raw).hexdigest()[:length]


def make_id(prefix: str, *parts: Any) -> str:
    """Typed identifier, e.g. make_id("clm", doc_id, subject, predicate)."""
    return f"{prefix}-{content_hash(list(parts))}"
