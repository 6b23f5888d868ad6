"""Solvers for two-player zero-sum extensive-form games."""

from ._efgsolve import (
    CSV_HEADER,
    ConfigError,
    Error,
    Game,
    InvalidArgument,
    ParseError,
    PerfectRecallViolation,
    builtin_game_names,
    load_game,
    parse_game,
    run_checks,
)

__all__ = [
    "CSV_HEADER",
    "ConfigError",
    "Error",
    "Game",
    "InvalidArgument",
    "ParseError",
    "PerfectRecallViolation",
    "builtin_game_names",
    "load_game",
    "parse_game",
    "run_checks",
]
