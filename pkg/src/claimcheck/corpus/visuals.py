"""Visual asset description via the inference provider."""

from __future__ import annotations

from dataclasses import replace

from ..errors import EmptyInput
from ..provider import InferenceRouter, InferenceTask
from .model import VisualAsset


def describe_visual_asset(asset: VisualAsset, doc_slug: str,
                          router: InferenceRouter) -> VisualAsset:
    """Return a copy with description (and any reported trends) populated.

    Original fields are never modified; provider output is recorded
    verbatim, no fidelity validation is attempted here.
    """
    if not asset.caption.strip():
        raise EmptyInput(
            f"asset {asset.asset_id} has no caption or payload to describe")
    task = InferenceTask("describe-asset", {
        "doc": doc_slug,
        "asset": {"kind": asset.kind, "caption": asset.caption},
    })
    output = router.invoke(task).output
    return replace(asset, description=output["description"],
                   extracted_trends=list(output.get("trends", [])))
