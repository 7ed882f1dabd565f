"""Hurwitz series rings: ring specs, property checks and scenario reports."""

import json

from ._core import (
    BudgetExceeded,
    CapabilityMissing,
    HurwitzError,
    HypothesisNotEstablished,
    LiteralError,
    ParseError,
    UnknownScenario,
    __version__,
    canonical_spec,
    check_json,
    product,
    property_names,
    ring_info,
    run_cli,
    run_scenario_json,
    scenario_ids,
    scenario_summary,
)


def check(property, spec, **options):
    """Runs one check and returns the report as a dict."""
    return json.loads(check_json(property, spec, **options))


def run_scenario(scenario_id, seed=None):
    """Runs a registered scenario and returns the report as a dict."""
    return json.loads(run_scenario_json(scenario_id, seed))


__all__ = [
    "BudgetExceeded",
    "CapabilityMissing",
    "HurwitzError",
    "HypothesisNotEstablished",
    "LiteralError",
    "ParseError",
    "UnknownScenario",
    "__version__",
    "canonical_spec",
    "check",
    "check_json",
    "product",
    "property_names",
    "ring_info",
    "run_cli",
    "run_scenario",
    "run_scenario_json",
    "scenario_ids",
    "scenario_summary",
]
