"""Threshold secret sharing over group presentations.

Schemes, shares and messages are passed around as the text of their file
formats, so anything produced here can be handed to the `wpss` CLI and back.
"""

from ._wpss import (
    BudgetError,
    Error,
    IntegrityError,
    ParseError,
    ThresholdError,
    ValidationError,
    access_structure,
    coalition_attack,
    decode,
    encode,
    pool_attack,
    setup,
    verify_signature,
    word_problem,
)

__all__ = [
    "BudgetError",
    "Error",
    "IntegrityError",
    "ParseError",
    "ThresholdError",
    "ValidationError",
    "access_structure",
    "coalition_attack",
    "decode",
    "encode",
    "pool_attack",
    "setup",
    "verify_signature",
    "word_problem",
]
