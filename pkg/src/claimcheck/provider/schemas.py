"""Versioned output schemas, one per task kind.

Responses are validated before any caller sees them; a malformed provider
output is a SchemaViolation, never a silent pass-through. Schemas are the
contract that keeps differently-styled inference backends interchangeable.
"""

from __future__ import annotations

from typing import Any

import jsonschema

from ..errors import SchemaViolation
from .tasks import SCHEMA_VERSION

_ENTITY_KINDS = ["organization", "researcher", "algorithm", "hardware",
                 "product", "dataset", "metric-concept", "other"]
_NLI_LABELS = ["supports", "contradicts", "neutral"]
_COHERENCE_DIMS = ["scope-consistency", "baseline-fairness", "reproducibility"]
_SEVERITIES = ["minor", "moderate", "severe"]
_OVERCLAIM_ISSUES = ["overgeneralization", "extreme-value-reporting",
                     "projection-as-result", "scope-inflation",
                     "omitted-limitation"]
_ALIGN_RELATIONS = ["matched", "partially-overlapping", "unrelated"]
_STANCES = ["agrees", "disagrees", "not-applicable"]
_ROOT_CAUSES = ["methodological-difference", "incompatible-experimental-conditions",
                "differing-benchmark-datasets", "runtime-definition-mismatch",
                "baseline-selection", "statistical-sampling", "other"]
_RUBRIC_MET = ["yes", "partial", "no"]


def _obj(properties: dict[str, Any], required: list[str]) -> dict[str, Any]:
    return {"type": "object", "properties": properties,
            "required": required, "additionalProperties": True}


OUTPUT_SCHEMAS: dict[str, dict[str, Any]] = {
    "extract-entities": _obj({
        "entities": {"type": "array", "items": _obj({
            "name": {"type": "string", "minLength": 1},
            "kind": {"enum": _ENTITY_KINDS},
            "aliases": {"type": "array", "items": {"type": "string"}},
        }, ["name", "kind"])},
    }, ["entities"]),
    "extract-claims": _obj({
        "claims": {"type": "array", "items": _obj({
            "subject": {"type": "string", "minLength": 1},
            "predicate": {"type": "string", "minLength": 1},
            "object": {"type": "string", "minLength": 1},
            "object_is_entity": {"type": "boolean"},
            "passages": {"type": "array",
                         "items": {"type": "array",
                                   "items": {"type": "integer"},
                                   "minItems": 2, "maxItems": 2}},
            "metric_text": {"type": ["string", "null"]},
            "methodology": {"type": ["string", "null"]},
            "included_overheads": {"type": "array", "items": {"type": "string"}},
            "excluded_overheads": {"type": "array", "items": _obj({
                "name": {"type": "string"},
                "magnitude": {"type": ["string", "null"]},
            }, ["name"])},
            "cited_refs": {"type": "array", "items": {"type": "string"}},
        }, ["subject", "predicate", "object", "passages"])},
    }, ["claims"]),
    "classify-provenance": _obj({
        "level": {"type": "integer", "minimum": 1, "maximum": 5},
    }, ["level"]),
    "nli-verdict": _obj({
        "label": {"enum": _NLI_LABELS},
        "rationale": {"type": "string"},
    }, ["label"]),
    "coherence": _obj({
        "flags": {"type": "array", "items": _obj({
            "dimension": {"enum": _COHERENCE_DIMS},
            "severity": {"enum": _SEVERITIES},
            "note": {"type": "string"},
        }, ["dimension", "severity", "note"])},
    }, ["flags"]),
    "overclaim": _obj({
        "annotations": {"type": "array", "items": _obj({
            "subject": {"type": "string"},
            "predicate": {"type": "string"},
            "issue": {"enum": _OVERCLAIM_ISSUES},
            "severity": {"enum": ["moderate", "severe"]},
            "claim_text": {"type": "string"},
            "evidence_text": {"type": "string"},
        }, ["subject", "predicate", "issue", "severity",
            "claim_text", "evidence_text"])},
    }, ["annotations"]),
    "align-claims": _obj({
        "relation": {"enum": _ALIGN_RELATIONS},
        "stance": {"enum": _STANCES},
        "rationale": {"type": "string"},
    }, ["relation", "stance"]),
    "citation-fidelity": _obj({
        "faithful": {"type": "boolean"},
        "distortion_note": {"type": ["string", "null"]},
    }, ["faithful"]),
    "root-cause": _obj({
        "category": {"enum": _ROOT_CAUSES},
        "explanation": {"type": "string"},
    }, ["category", "explanation"]),
    "rubric": _obj({
        "criteria": {"type": "array", "items": _obj({
            "name": {"type": "string"},
            "met": {"enum": _RUBRIC_MET},
            "note": {"type": "string"},
        }, ["name", "met", "note"])},
    }, ["criteria"]),
    "describe-asset": _obj({
        "description": {"type": "string", "minLength": 1},
        "trends": {"type": "array", "items": {"type": "string"}},
    }, ["description"]),
    "hypothesize": _obj({
        "statement": {"type": ["string", "null"]},
        "conclusion": {"type": ["string", "null"]},
    }, ["statement", "conclusion"]),
    "counter-hypothesize": _obj({
        "statement": {"type": "string", "minLength": 1},
    }, ["statement"]),
    "embed": _obj({
        "vector": {"type": "array", "items": {"type": "number"}, "minItems": 1},
        "model_tag": {"type": "string"},
    }, ["vector", "model_tag"]),
}


def validate_output(kind: str, output: Any) -> None:
    schema = OUTPUT_SCHEMAS.get(kind)
    if schema is None:
        raise SchemaViolation(f"no output schema for task kind {kind!r} "
                              f"(schema set {SCHEMA_VERSION})")
    try:
        jsonschema.validate(output, schema)
    except jsonschema.ValidationError as exc:
        raise SchemaViolation(
            f"{kind} output failed schema {SCHEMA_VERSION}: {exc.message}"
        ) from exc
