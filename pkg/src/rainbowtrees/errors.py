"""Exception types shared across the package."""

from __future__ import annotations


class FileFormatError(ValueError):
    """Malformed coloring or partition file; carries the offending line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class SizeGuardError(ValueError):
    """An instance exceeds the size guard of an exact or exhaustive routine."""


class RainbowTreeMissingError(RuntimeError):
    """A rainbow spanning tree that is guaranteed to exist was not found."""


class ConstructionDefect(RuntimeError):
    """The constructive partition algorithm violated one of its contracts.

    The serialized instance is attached so the failure can be reproduced
    from a single coloring file.
    """

    def __init__(self, message: str, instance_text: str | None = None):
        super().__init__(message)
        self.instance_text = instance_text
