#!/usr/bin/env python3
"""Record the replay transcript for the fixture corpus.

Runs the full pipeline once with the scripted provider (recording every
response), then concatenates the per-layer transcript batches into the
single shipped fixture file. Rerun after changing the corpus, the playbook,
or any task payload shape.

Usage:  python3 scripts/record_transcript.py
"""

from __future__ import annotations

import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from claimcheck.config import PipelineConfig            # noqa: E402
from claimcheck.pipeline import ProviderSpec, run      # noqa: E402

QUERY = ("Does the hybrid bias-field optimizer achieve a true runtime "
         "advantage over classical solvers?")


def main() -> None:
    corpus = ROOT / "fixtures" / "corpus"
    playbook = ROOT / "fixtures" / "replay" / "playbook.json"
    out_path = ROOT / "fixtures" / "replay" / "transcript.jsonl"

    with tempfile.TemporaryDirectory() as tmp:
        state = run(QUERY, corpus, Path(tmp) / "run",
                    PipelineConfig(),
                    ProviderSpec(mode="scripted", playbook=str(playbook)),
                    target_doc="s1-target")
        lines: list[str] = []
        for batch in sorted((Path(tmp) / "run" / "transcript").glob("*.jsonl")):
            lines.extend(batch.read_text(encoding="utf-8").splitlines())
        out_path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        print(f"recorded {len(lines)} responses -> {out_path}")


if __name__ == "__main__":
    main()
