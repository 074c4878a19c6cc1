"""Provider layer: fingerprints, schema validation, replay, retries, fan-out."""

from __future__ import annotations

import json

import pytest

from claimcheck.errors import AllSlotsFailed, ProviderFailure, SchemaViolation
from claimcheck.provider import (InferenceResponse, InferenceTask,
                                 ReplayProvider, ScriptedProvider, Transcript,
                                 fan_out)
from claimcheck.provider.embedder import embed_text

from conftest import PLAYBOOK, StubProvider, make_router


def test_fingerprint_independent_of_field_order():
    a = InferenceTask("nli-verdict", {"claim": {"slug": "d", "subject": "X",
                                                "predicate": "p", "object": "o"},
                                      "passage": {"owner": "p1", "text": "t"}})
    b = InferenceTask("nli-verdict", {"passage": {"text": "t", "owner": "p1"},
                                      "claim": {"object": "o", "predicate": "p",
                                                "subject": "X", "slug": "d"}})
    assert a.fingerprint == b.fingerprint


def test_fingerprint_normalizes_whitespace():
    a = InferenceTask("embed", {"text": "hello   world", "dim": 8,
                                "model_tag": "t"})
    b = InferenceTask("embed", {"text": "hello world ", "dim": 8,
                                "model_tag": "t"})
    assert a.fingerprint == b.fingerprint


def test_unknown_task_kind_rejected():
    with pytest.raises(ValueError):
        InferenceTask("divination", {})


def test_invoke_validates_output_schema():
    backend = StubProvider(lambda t, tag, i: {"label": "perhaps"})
    router = make_router(backend)
    task = InferenceTask("nli-verdict", {"claim": {}, "passage": {"text": "x"}})
    with pytest.raises(SchemaViolation):
        router.invoke(task)
    # deterministic backend is not retried on schema violations
    assert backend.calls == 1


def test_invoke_retries_nondeterministic_backend():
    state = {"n": 0}

    def flaky(task, tag, i):
        state["n"] += 1
        if state["n"] < 3:
            raise ProviderFailure("transient")
        return {"label": "supports", "rationale": ""}

    backend = StubProvider(flaky, deterministic=False)
    router = make_router(backend)
    task = InferenceTask("nli-verdict", {"claim": {}, "passage": {"text": "x"}})
    assert router.invoke(task).output["label"] == "supports"
    assert backend.calls == 3


def test_invoke_exhausts_retries():
    def always_fail(task, tag, i):
        raise ProviderFailure("down")

    backend = StubProvider(always_fail, deterministic=False)
    router = make_router(backend, retries=3)
    task = InferenceTask("nli-verdict", {"claim": {}, "passage": {"text": "x"}})
    with pytest.raises(ProviderFailure):
        router.invoke(task)
    assert backend.calls == 3


def test_replay_serves_recorded_response():
    task = InferenceTask("nli-verdict", {"claim": {}, "passage": {"text": "x"}})
    response = InferenceResponse(fingerprint=task.fingerprint,
                                 kind="nli-verdict",
                                 output={"label": "supports", "rationale": ""},
                                 provider_tag="analyst-a", sample_index=0)
    provider = ReplayProvider({(task.fingerprint, "analyst-a", 0): response})
    router = make_router(provider)
    assert router.invoke(task).output == response.output


def test_replay_miss_names_fingerprint():
    provider = ReplayProvider({})
    router = make_router(provider)
    task = InferenceTask("nli-verdict", {"claim": {}, "passage": {"text": "x"}})
    with pytest.raises(ProviderFailure) as err:
        router.invoke(task)
    assert task.fingerprint in str(err.value)


def test_fan_out_collates_by_provider_and_sample():
    def per_tag(task, tag, i):
        return {"statement": f"s-{tag}", "conclusion": f"c-{tag}-{i}"}

    router = make_router(StubProvider(per_tag))
    task = InferenceTask("hypothesize", {"profile": {"claim": "k"}})
    slots = fan_out(router, task, samples=2,
                    providers=["analyst-c", "analyst-a"])
    keys = [(s.provider_tag, s.sample_index) for s in slots]
    assert keys == [("analyst-a", 0), ("analyst-a", 1),
                    ("analyst-c", 0), ("analyst-c", 1)]
    assert all(s.ok for s in slots)


def test_fan_out_singleton():
    router = make_router(StubProvider(
        lambda t, tag, i: {"statement": "s", "conclusion": "c"}))
    task = InferenceTask("hypothesize", {"profile": {"claim": "k"}})
    slots = fan_out(router, task, samples=1, providers=["analyst-a"])
    assert len(slots) == 1 and slots[0].ok


def test_fan_out_reports_partial_failures():
    def missing_b(task, tag, i):
        if tag == "analyst-b":
            raise ProviderFailure("absent from fixture", retryable=False)
        return {"statement": "s", "conclusion": "c"}

    router = make_router(StubProvider(missing_b))
    task = InferenceTask("hypothesize", {"profile": {"claim": "k"}})
    slots = fan_out(router, task, samples=1,
                    providers=["analyst-a", "analyst-b", "analyst-c"])
    oks = [s for s in slots if s.ok]
    failed = [s for s in slots if not s.ok]
    assert len(oks) == 2 and len(failed) == 1
    assert failed[0].provider_tag == "analyst-b"
    assert "absent" in failed[0].error


def test_fan_out_all_slots_failed():
    def nothing(task, tag, i):
        raise ProviderFailure("no", retryable=False)

    router = make_router(StubProvider(nothing))
    task = InferenceTask("hypothesize", {"profile": {"claim": "k"}})
    with pytest.raises(AllSlotsFailed):
        fan_out(router, task, samples=1, providers=["analyst-a", "analyst-b"])


def test_transcript_round_trips_through_replay(tmp_path):
    playbook = ScriptedProvider.from_path(PLAYBOOK)
    transcript = Transcript()
    router = make_router(playbook, transcript=transcript)
    task = InferenceTask("align-claims", {
        "a": {"slug": "d1", "subject": "X", "predicate": "p", "object": "o"},
        "b": {"slug": "d2", "subject": "X", "predicate": "q", "object": "o"},
    })
    first = router.invoke(task)
    path = tmp_path / "transcript.jsonl"
    path.write_text("\n".join(json.dumps(r) for r in transcript.drain()),
                    encoding="utf-8")
    replay_router = make_router(ReplayProvider.from_path(path))
    assert replay_router.invoke(task).output == first.output


def test_scripted_embed_matches_local_embedder():
    playbook = ScriptedProvider.from_path(PLAYBOOK)
    router = make_router(playbook)
    task = InferenceTask("embed", {"text": "runtime advantage", "dim": 16,
                                   "model_tag": "hashed-bow-v1"})
    out = router.invoke(task).output
    assert out["vector"] == embed_text("runtime advantage", 16)


def test_embedder_deterministic_and_normalized():
    a = embed_text("quantum optimization runtime", 64)
    b = embed_text("quantum optimization runtime", 64)
    assert a == b
    norm = sum(x * x for x in a) ** 0.5
    assert abs(norm - 1.0) < 1e-6
