"""Live provider: delegates to a user-configured backend callable.

The backend is named as "package.module:function" and must accept
(kind, payload, provider_tag, sample_index) and return the output dict for
that task kind. Shipping an HTTP client for any particular model vendor is
out of scope; the callable is the integration point.
"""

from __future__ import annotations

import importlib
from typing import Any, Callable

from ..errors import ProviderFailure
from .tasks import InferenceTask

BackendFn = Callable[[str, dict[str, Any], str, int], dict[str, Any]]


def resolve_backend(spec: str) -> BackendFn:
    module_name, _, attr = spec.partition(":")
    if not module_name or not attr:
        raise ProviderFailure(
            f"live backend spec {spec!r} must look like 'pkg.module:function'",
            retryable=False)
    try:
        module = importlib.import_module(module_name)
        return getattr(module, attr)
    except (ImportError, AttributeError) as exc:
        raise ProviderFailure(f"cannot load live backend {spec!r}: {exc}",
                              retryable=False) from exc


class LiveProvider:
    deterministic = False

    def __init__(self, backend: BackendFn):
        self._backend = backend

    @classmethod
    def from_spec(cls, spec: str) -> "LiveProvider":
        return cls(resolve_backend(spec))

    def complete(self, task: InferenceTask, provider_tag: str,
                 sample_index: int) -> dict[str, Any]:
        try:
            return self._backend(task.kind, task.payload, provider_tag,
                                 sample_index)
        except Exception as exc:  # backend faults become provider failures
            raise ProviderFailure(f"live backend error: {exc}") from exc
