"""Exception hierarchy shared by all modules."""


class LieBasisError(Exception):
    """Base class for domain failures (CLI exit code 1)."""


class AlphabetError(LieBasisError, ValueError):
    pass


class NotLyndon(LieBasisError, ValueError):
    pass


class NotPartitionable(LieBasisError, ValueError):
    """A sequence has no simple partition.

    ``reason`` is a short human-readable diagnostic, ``blocks`` the offending
    sequence rendered as text.
    """

    def __init__(self, reason: str, blocks: list[str] | None = None):
        super().__init__(reason)
        self.reason = reason
        self.blocks = blocks or []


class NotFullyPartitionable(NotPartitionable):
    """Recursive partitioning stopped at ``stage`` (1-based level)."""

    def __init__(self, reason: str, stage: int, blocks: list[str]):
        super().__init__(reason, blocks)
        self.stage = stage

    def __str__(self) -> str:
        return f"stage {self.stage}: {self.reason}"


class NotATree(LieBasisError, ValueError):
    pass


class NonIntegralCoefficient(LieBasisError, ArithmeticError):
    """A projection coefficient did not divide exactly. Indicates a bug."""


class ParseError(ValueError):
    """Malformed textual input (CLI exit code 2)."""
