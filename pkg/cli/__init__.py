"""Command implementations for the spirality command-line tool."""

from .commands import (
    COMMANDS,
    DEFAULT_FAMILY_N,
    DEFAULT_SPARSE_K,
    EXIT_BAD_CYCLE,
    EXIT_BAD_PARAMETER,
    EXIT_INVALID,
    EXIT_NOT_CERTIFIED,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_UNKNOWN_ID,
    run_command,
)

__all__ = [
    'COMMANDS',
    'DEFAULT_FAMILY_N',
    'DEFAULT_SPARSE_K',
    'EXIT_BAD_CYCLE',
    'EXIT_BAD_PARAMETER',
    'EXIT_INVALID',
    'EXIT_NOT_CERTIFIED',
    'EXIT_OK',
    'EXIT_PARSE',
    'EXIT_UNKNOWN_ID',
    'run_command',
]
