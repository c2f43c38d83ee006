"""Exact and simulated probabilities for the einz card game.

Every probability is computed by the C++ engine; results come back as plain
Python data. Exact values are given as "num/den" strings next to floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable

from . import _einz
from ._einz import ArithmeticError, InputError, StateError, __version__

__all__ = [
    "ArithmeticError",
    "InputError",
    "StateError",
    "__version__",
    "change14",
    "dealer",
    "evaluate",
    "match",
    "outcome_distribution",
    "simulate",
    "table",
]


def outcome_distribution(decks: int = 1, policy: str = "stand17",
                         arithmetic: str = "exact") -> dict[tuple[str, int, int], Fraction]:
    """Map (kind, score, cards) to its exact probability."""
    return {(kind, score, cards): Fraction(p)
            for kind, score, cards, p in _einz.outcome_distribution(decks, policy, arithmetic)}


def table(id: int, decks: int = 1, format: str = "json", precision: int = 3,
          exact: bool = False, arithmetic: str = "exact") -> Any:
    """One of the six result tables; parsed when format is "json"."""
    text = _einz.table(id, decks, format, precision, exact, arithmetic)
    return json.loads(text) if format == "json" else text


def match(policies: Iterable[str], decks: int = 1, shared_shoe: bool = False) -> dict:
    """Open game between the given seat policies."""
    return json.loads(_einz.match(list(policies), decks, shared_shoe))


def dealer(player: str = "stand17", dealer: str = "stand17", variant: str = "v2",
           decks: int = 1) -> dict:
    """Player against the dealer; win[0] is the player."""
    return json.loads(_einz.dealer(player, dealer, variant, decks))


def evaluate(state: dict | str, arithmetic: str = "exact") -> dict:
    """Action values for an observed state, or a standing comparison."""
    body = state if isinstance(state, str) else json.dumps(state)
    return json.loads(_einz.evaluate(body, arithmetic))


def change14(hand: Iterable[int], seen: Iterable[int] = (), stand_on: int = 17, decks: int = 1,
             arithmetic: str = "exact") -> dict:
    """Keep a 14 or throw it in."""
    return json.loads(_einz.change14(list(hand), list(seen), stand_on, decks, arithmetic))


def simulate(config: dict | str) -> dict:
    """Monte Carlo report for a simulation config."""
    body = config if isinstance(config, str) else json.dumps(config)
    return json.loads(_einz.simulate(body))
