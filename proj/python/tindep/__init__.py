"""Theta/prism-free graph tools: detection, separators, decompositions and campaigns."""

import json

from . import _core
from ._core import ContractError, Graph, InputError, ResourceError, exact_tia, generator_families, campaign_names

__all__ = [
    "ContractError",
    "Graph",
    "InputError",
    "ResourceError",
    "campaign_names",
    "decompose",
    "detect",
    "exact_tia",
    "generate",
    "generator_families",
    "in_class",
    "mwis",
    "run_campaign",
    "separate",
    "tia_of",
    "validate_decomposition",
]


def detect(graph, pattern, t=3, engine="auto"):
    """Witness dict for pattern in graph, or None when absent."""
    found = _core.detect(graph, pattern, t, engine)
    return None if found is None else json.loads(found)


def in_class(graph, t, engine="auto"):
    return json.loads(_core.in_class(graph, t, engine))


def separate(graph, kind, witness, check_class=True):
    """Separation report for a wheel or pyramid witness dict."""
    return json.loads(_core.separate(graph, kind, json.dumps(witness), check_class))


def decompose(graph, s=0, oracle="min-alpha", kmax=2):
    """Tree decomposition from balanced separators; s=0 picks the least s that works."""
    return json.loads(_core.decompose(graph, s, oracle, kmax))


def validate_decomposition(graph, td):
    return _core.validate_decomposition(graph, json.dumps(td))


def tia_of(graph, td):
    return _core.tia_of(graph, json.dumps(td))


def mwis(graph, weights, decomposition=None):
    """Weights may be ints, Fractions or "p/q" strings. The value is an int, or a "p/q" string when fractional."""
    td = None if decomposition is None else json.dumps(decomposition)
    return json.loads(_core.mwis(graph, [str(w) for w in weights], td))


def generate(family, **options):
    spec = _core.GeneratorSpec()
    spec.family = family
    for key, value in options.items():
        if not hasattr(spec, key):
            raise InputError(f"unknown generator option '{key}'")
        setattr(spec, key, value)
    return json.loads(_core.generate(spec))


def run_campaign(name, trials=100, seed=1, threads=0):
    return json.loads(_core.run_campaign(name, trials, seed, threads))
