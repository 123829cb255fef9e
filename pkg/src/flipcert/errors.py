"""Exception hierarchy shared across the package.

Two families matter for exit-code mapping in the CLI: ``InputError`` covers
malformed or precondition-violating input (exit code 2), everything else
derived from ``FlipcertError`` is a checked failure of an otherwise valid
request (exit code 1).
"""


class FlipcertError(Exception):
    """Base class for every error raised by this package."""


class InputError(FlipcertError):
    """Invalid data or a violated precondition on the caller's side."""
