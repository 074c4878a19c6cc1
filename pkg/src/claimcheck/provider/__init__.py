"""Uniform abstraction over natural-language inference backends."""

from .base import InferenceRouter, Provider, Transcript
from .fanout import FanOutSlot, fan_out
from .live import LiveProvider
from .replay import ReplayProvider
from .scripted import ScriptedProvider, claim_key, pair_key
from .tasks import SCHEMA_VERSION, InferenceResponse, InferenceTask

__all__ = [
    "InferenceRouter", "Provider", "Transcript", "FanOutSlot", "fan_out",
    "LiveProvider", "ReplayProvider", "ScriptedProvider", "claim_key",
    "pair_key", "SCHEMA_VERSION", "InferenceResponse", "InferenceTask",
]
