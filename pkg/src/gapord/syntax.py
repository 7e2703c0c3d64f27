"""Tiny scanner shared by the term parsers.

Every syntax in this package is whitespace-insensitive and line-oriented.
Errors carry the offset of the offending character so the CLI can report
positions.
"""

from __future__ import annotations


class TermSyntaxError(ValueError):
    """Raised on malformed term text; ``position`` is a 0-based offset."""

    def __init__(self, reason: str, position: int):
        super().__init__(f"{reason} (at position {position})")
        self.reason = reason
        self.position = position


class Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> bool:
        """Consume ``literal`` if it is next; return whether it was."""
        self.skip_ws()
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            self.error(f"expected {literal!r}")

    def nat(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error("expected a number")
        return int(self.text[start : self.pos])

    def at_end(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def expect_end(self) -> None:
        if not self.at_end():
            self.error("unexpected trailing input")

    def error(self, reason: str) -> None:
        self.skip_ws()
        raise TermSyntaxError(reason, self.pos)
