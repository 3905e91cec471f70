"""Deterministic finite automata and biautomata."""

import json

from ._core import (
    AlphabetError,
    Bia,
    CapError,
    Dfa,
    Error,
    InvalidBiautomaton,
    ParseError,
    PreconditionError,
    check,
    classify_table,
    properties,
    verify_witness,
    witness,
)


def classify(dfa):
    """Family report of the language of `dfa` as a dict."""
    from ._core import classify_json

    return json.loads(classify_json(dfa))


__all__ = [
    "AlphabetError",
    "Bia",
    "CapError",
    "Dfa",
    "Error",
    "InvalidBiautomaton",
    "ParseError",
    "PreconditionError",
    "check",
    "classify",
    "classify_table",
    "properties",
    "verify_witness",
    "witness",
]
