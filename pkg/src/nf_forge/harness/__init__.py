"""Executable catalog of lemmas, checked exhaustively in finite universes."""

from .catalog import BY_ID, CATALOG, OUT_OF_SCOPE
from .core import Check, Ctx, Domain, Outcome, SkipLevel
from .runner import (CheckReport, CheckResult, UnknownSelection, audit_table, check_lemma,
                     decode_value, encode_value, replay, run_catalog)

__all__ = ["BY_ID", "CATALOG", "OUT_OF_SCOPE", "Check", "Ctx", "Domain", "Outcome", "SkipLevel",
           "CheckReport", "CheckResult", "UnknownSelection", "audit_table", "check_lemma",
           "decode_value", "encode_value", "replay", "run_catalog"]
