"""Inference task and response records.

A task fingerprint is a pure function of (kind, canonicalized payload,
schema version): field order and whitespace never change it. Fingerprints
key the replay fixture and the run transcript.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from ..ids import content_hash

SCHEMA_VERSION = "v1"

TASK_KINDS = (
    "extract-entities",
    "extract-claims",
    "classify-provenance",
    "nli-verdict",
    "coherence",
    "overclaim",
    "align-claims",
    "citation-fidelity",
    "root-cause",
    "rubric",
    "describe-asset",
    "hypothesize",
    "counter-hypothesize",
    "embed",
)


@dataclass(frozen=True)
class InferenceTask:
    kind: str
    payload: dict[str, Any]
    fingerprint: str = field(init=False)

    def __post_init__(self):
        if self.kind not in TASK_KINDS:
            raise ValueError(f"unknown task kind: {self.kind}")
        fp = content_hash({"kind": self.kind, "payload": self.payload,
                           "schema": SCHEMA_VERSION}, length=20)
        object.__setattr__(self, "fingerprint", fp)


@dataclass(frozen=True)
class InferenceResponse:
    fingerprint: str
    kind: str
    output: dict[str, Any]
    provider_tag: str
    sample_index: int = 0

    def to_record(self) -> dict[str, Any]:
        return {
            "fingerprint": self.fingerprint,
            "kind": self.kind,
            "output": self.output,
            "provider_tag": self.provider_tag,
            "sample_index": self.sample_index,
            "schema_version": SCHEMA_VERSION,
        }

    @classmethod
    def from_record(cls, record: dict[str, Any]) -> "InferenceResponse":
        return cls(
            fingerprint=record["fingerprint"],
            kind=record["kind"],
            output=record["output"],
            provider_tag=record["provider_tag"],
            sample_index=int(record.get("sample_index", 0)),
        )
