"""claimcheck: six-layer technical claim verification over knowledge graphs.

Ingests technical documents, decomposes assertions into provenance-
classified claim triples, audits them within and across sources, corroborates
them against non-academic signals, and emits a scored hypothesis matrix.
All natural-language judgment is delegated to a pluggable inference
provider; everything else is deterministic and replayable offline.
"""

__version__ = "0.1.0"
