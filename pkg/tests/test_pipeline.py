"""Orchestration: run/resume, budget, manifests, CLI exit codes."""

from __future__ import annotations

import pytest

from claimcheck.cli import main
from claimcheck.config import PipelineConfig
from claimcheck.errors import (BudgetExceeded, ConfigDrift, CorruptManifest,
                               EmptyCorpus, ProviderFailure)
from claimcheck.jsonl import read_json
from claimcheck.pipeline import LAYERS, ProviderSpec, resume, run

from conftest import (CORPUS_DIR, GOLDEN_QUERY, PLAYBOOK, TRANSCRIPT,
                      dir_digest, run_golden, scripted_spec)


def test_empty_corpus(tmp_path):
    empty = tmp_path / "corpus"
    empty.mkdir()
    with pytest.raises(EmptyCorpus):
        run("anything", empty, tmp_path / "run", PipelineConfig(),
            scripted_spec())


def test_unknown_target_doc(tmp_path):
    with pytest.raises(EmptyCorpus):
        run(GOLDEN_QUERY, CORPUS_DIR, tmp_path / "run", PipelineConfig(),
            scripted_spec(), target_doc="not-a-doc")


def test_budget_exceeded_lists_queued_gaps(tmp_path):
    cfg = PipelineConfig()
    cfg.document_budget = 1
    with pytest.raises(BudgetExceeded) as err:
        run(GOLDEN_QUERY, CORPUS_DIR, tmp_path / "run", cfg, scripted_spec(),
            target_doc="s1-target")
    assert len(err.value.queued) == 10
    # partial results persisted with gap markers
    manifest = read_json(tmp_path / "run" / "manifest.json")
    assert len(manifest["gaps"]) == 10
    assert manifest["layers"]["layer4"] is False
    assert (tmp_path / "run" / "store" / "claims.jsonl").exists()


def test_relevance_gate_without_target(tmp_path):
    state = run("bias-field counterdiabatic runtime advantage", CORPUS_DIR,
                tmp_path / "run", PipelineConfig(), scripted_spec(),
                stop_after="layer2")
    assert state.seeds  # semantic gate found relevant documents


def test_resume_completes_interrupted_run(tmp_path):
    partial = run_golden(tmp_path / "a", stop_after="layer3")
    manifest = read_json(partial.manifest_path)
    assert manifest["layers"]["layer3"] is True
    assert manifest["layers"]["layer4"] is False

    resumed = resume(tmp_path / "a")
    manifest = read_json(resumed.manifest_path)
    assert all(manifest["layers"][layer] for layer in LAYERS)
    assert (tmp_path / "a" / "report" / "assessment.json").exists()


def test_resume_of_complete_run_is_noop(tmp_path):
    state = run_golden(tmp_path / "a")
    before = dir_digest(tmp_path / "a")
    resume(tmp_path / "a")
    assert dir_digest(tmp_path / "a") == before


def test_resume_config_drift(tmp_path):
    run_golden(tmp_path / "a", stop_after="layer2")
    changed = PipelineConfig()
    changed.document_budget = 7
    with pytest.raises(ConfigDrift):
        resume(tmp_path / "a", cfg=changed)


def test_resume_corrupt_manifest(tmp_path):
    run_golden(tmp_path / "a", stop_after="layer1")
    (tmp_path / "a" / "manifest.json").write_text("{not json",
                                                  encoding="utf-8")
    with pytest.raises(CorruptManifest):
        resume(tmp_path / "a")


def test_run_id_stable_across_out_dirs(tmp_path):
    a = run_golden(tmp_path / "a", stop_after="layer1")
    b = run_golden(tmp_path / "b", stop_after="layer1")
    assert a.run_id == b.run_id


def test_live_provider_requires_backend(tmp_path):
    with pytest.raises(ProviderFailure):
        run(GOLDEN_QUERY, CORPUS_DIR, tmp_path / "run", PipelineConfig(),
            ProviderSpec(mode="live", backend="no.such.module:fn"),
            target_doc="s1-target")


# --- CLI ------------------------------------------------------------------------

def cli(*args) -> int:
    return main([str(a) for a in args])


def test_cli_run_and_report(tmp_path, capsys):
    code = cli("run", "--query", GOLDEN_QUERY, "--corpus-dir", CORPUS_DIR,
               "--out", tmp_path / "run", "--provider", "replay",
               "--fixtures", TRANSCRIPT, "--target-doc", "s1-target")
    assert code == 0
    out = tmp_path / "report.txt"
    code = cli("report", "--run-dir", tmp_path / "run", "--out", out,
               "--format", "narrative")
    assert code == 0
    assert "Hypothesis matrix" in out.read_text(encoding="utf-8")


def test_cli_exit_code_precondition(tmp_path, capsys):
    empty = tmp_path / "corpus"
    empty.mkdir()
    code = cli("run", "--query", "q", "--corpus-dir", empty,
               "--out", tmp_path / "run", "--provider", "scripted",
               "--playbook", PLAYBOOK)
    assert code == 2


def test_cli_exit_code_budget(tmp_path, capsys):
    code = cli("run", "--query", GOLDEN_QUERY, "--corpus-dir", CORPUS_DIR,
               "--out", tmp_path / "run", "--provider", "scripted",
               "--playbook", PLAYBOOK, "--target-doc", "s1-target",
               "--budget", "1")
    assert code == 4


def test_cli_exit_code_provider_failure(tmp_path, capsys):
    code = cli("run", "--query", GOLDEN_QUERY, "--corpus-dir", CORPUS_DIR,
               "--out", tmp_path / "run", "--provider", "replay",
               "--fixtures", tmp_path / "missing.jsonl",
               "--target-doc", "s1-target")
    assert code in (2, 3)


def test_cli_layer_subcommand(tmp_path, capsys):
    code = cli("ingest", "--corpus-dir", CORPUS_DIR, "--out",
               tmp_path / "run", "--provider", "scripted",
               "--playbook", PLAYBOOK, "--query", GOLDEN_QUERY,
               "--target-doc", "s1-target")
    assert code == 0
    manifest = read_json(tmp_path / "run" / "manifest.json")
    assert manifest["layers"]["layer1"] is True
    assert manifest["layers"]["layer2"] is False
    # continue through extraction on the same run dir
    code = cli("extract", "--out", tmp_path / "run")
    assert code == 0
    manifest = read_json(tmp_path / "run" / "manifest.json")
    assert manifest["layers"]["layer2"] is True


def test_manifest_records_config_snapshot(tmp_path):
    state = run_golden(tmp_path / "run", stop_after="layer1")
    manifest = read_json(state.manifest_path)
    assert manifest["config_hash"] == PipelineConfig().snapshot_hash()
    assert manifest["corpus_hash"] == state.corpus_hash
    assert manifest["run_id"].startswith("run-")
