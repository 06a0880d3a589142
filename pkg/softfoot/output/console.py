"""Console output abstraction.

Commands and harness code print through `ConsoleProtocol` so they can be
driven by Rich in the terminal or captured by `MockConsole` in tests.
Diagnostic lines (`debug`, `info`, `warning`, `error`) are filtered by a
verbosity level read from the `SOFTFOOT_LOG` environment variable; results
(`print`, `success`, `header`) are always shown.
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, field
from enum import Enum, IntEnum, auto
from typing import Protocol

__all__ = [
    "Style",
    "Verbosity",
    "verbosity_from_env",
    "ConsoleProtocol",
    "RichConsole",
    "MockConsole",
    "OutputRecord",
    "LOG_ENV_VAR",
]

LOG_ENV_VAR = "SOFTFOOT_LOG"


class Style(Enum):
    """Text styles for console output."""

    DEFAULT = auto()
    SUCCESS = auto()
    ERROR = auto()
    WARNING = auto()
    INFO = auto()
    DIM = auto()  # debug lines and hints
    HEADER = auto()

    def __str__(self) -> str:
        return self.name.lower()


class Verbosity(IntEnum):
    """Minimum severity of diagnostic lines that get printed."""

    DEBUG = 10
    INFO = 20
    WARNING = 30
    ERROR = 40
    QUIET = 50

    @classmethod
    def parse(cls, text: str | None) -> Verbosity:
        """Parse a level name; unknown or missing names fall back to INFO."""
        if text is None:
            return cls.INFO
        try:
            return cls[text.strip().upper()]
        except KeyError:
            return cls.INFO


def verbosity_from_env(env: Mapping[str, str] | None = None) -> Verbosity:
    """Read the verbosity level from `SOFTFOOT_LOG`."""
    source = os.environ if env is None else env
    return Verbosity.parse(source.get(LOG_ENV_VAR))


# diagnostic style -> (level, prefix)
_DIAGNOSTICS: dict[Style, tuple[Verbosity, str]] = {
    Style.DIM: (Verbosity.DEBUG, "debug:"),
    Style.INFO: (Verbosity.INFO, "info:"),
    Style.WARNING: (Verbosity.WARNING, "warning:"),
    Style.ERROR: (Verbosity.ERROR, "error:"),
}


class ConsoleProtocol(Protocol):
    """Styled console output used by commands and harness code."""

    def print(self, message: str, style: Style = Style.DEFAULT) -> None:
        """Print a result line; never filtered."""
        ...

    def success(self, message: str) -> None: ...

    def error(self, message: str) -> None: ...

    def warning(self, message: str) -> None: ...

    def info(self, message: str) -> None: ...

    def debug(self, message: str) -> None:
        """Print a diagnostic line shown only at debug verbosity."""
        ...

    def header(self, message: str) -> None: ...

    def newline(self) -> None: ...


class RichConsole:
    """Terminal console backed by Rich; diagnostics other than info go to stderr."""

    _RICH_STYLES = {
        Style.DEFAULT: "",
        Style.SUCCESS: "green",
        Style.ERROR: "red bold",
        Style.WARNING: "yellow",
        Style.INFO: "cyan",
        Style.DIM: "dim",
        Style.HEADER: "blue bold",
    }

    def __init__(self, verbosity: Verbosity | None = None) -> None:
        # lazy import
        from rich.console import Console
        from rich.markup import escape

        self._escape = escape
        self._out = Console()
        self._err = Console(stderr=True)
        self.verbosity = verbosity if verbosity is not None else verbosity_from_env()

    def _diagnostic(self, style: Style, message: str) -> None:
        level, prefix = _DIAGNOSTICS[style]
        if level < self.verbosity:
            return
        target = self._out if style is Style.INFO else self._err
        rich_style = self._RICH_STYLES[style]
        if style is Style.DIM:
            text = f"[{rich_style}]{prefix} {self._escape(message)}[/{rich_style}]"
        else:
            text = f"[{rich_style}]{prefix}[/{rich_style}] {self._escape(message)}"
        target.print(text, highlight=False)

    def print(self, message: str, style: Style = Style.DEFAULT) -> None:
        rich_style = self._RICH_STYLES[style] or None
        self._out.print(self._escape(message), style=rich_style, highlight=False)

    def success(self, message: str) -> None:
        self._out.print(f"[green]OK[/green] {self._escape(message)}", highlight=False)

    def error(self, message: str) -> None:
        self._diagnostic(Style.ERROR, message)

    def warning(self, message: str) -> None:
        self._diagnostic(Style.WARNING, message)

    def info(self, message: str) -> None:
        self._diagnostic(Style.INFO, message)

    def debug(self, message: str) -> None:
        self._diagnostic(Style.DIM, message)

    def header(self, message: str) -> None:
        self._out.print(f"\n[blue bold]{self._escape(message)}[/blue bold]", highlight=False)

    def newline(self) -> None:
        self._out.print()


@dataclass(frozen=True, slots=True)
class OutputRecord:
    message: str
    style: Style


def _empty_outputs() -> list[OutputRecord]:
    return []


@dataclass
class MockConsole:
    """Console that records lines for tests.

    Filters diagnostics like `RichConsole`; the default level keeps every
    line, debug included.
    """

    outputs: list[OutputRecord] = field(default_factory=_empty_outputs)
    verbosity: Verbosity = Verbosity.DEBUG

    def _diagnostic(self, style: Style, message: str) -> None:
        level, prefix = _DIAGNOSTICS[style]
        if level >= self.verbosity:
            self.outputs.append(OutputRecord(f"{prefix} {message}", style))

    def print(self, message: str, style: Style = Style.DEFAULT) -> None:
        self.outputs.append(OutputRecord(message, style))

    def success(self, message: str) -> None:
        self.outputs.append(OutputRecord(f"OK {message}", Style.SUCCESS))

    def error(self, message: str) -> None:
        self._diagnostic(Style.ERROR, message)

    def warning(self, message: str) -> None:
        self._diagnostic(Style.WARNING, message)

    def info(self, message: str) -> None:
        self._diagnostic(Style.INFO, message)

    def debug(self, message: str) -> None:
        self._diagnostic(Style.DIM, message)

    def header(self, message: str) -> None:
        self.outputs.append(OutputRecord(message, Style.HEADER))

    def newline(self) -> None:
        self.outputs.append(OutputRecord("", Style.DEFAULT))

    def clear(self) -> None:
        self.outputs.clear()

    @property
    def messages(self) -> list[str]:
        return [o.message for o in self.outputs]

    @property
    def text(self) -> str:
        return "\n".join(self.messages)

    def has_error(self) -> bool:
        return any(o.style is Style.ERROR for o in self.outputs)

    def has_warning(self) -> bool:
        return any(o.style is Style.WARNING for o in self.outputs)

    def find(self, substring: str) -> list[OutputRecord]:
        """Records whose message contains `substring`."""
        return [o for o in self.outputs if substring in o.message]

    def count(self, style: Style) -> int:
        return sum(1 for o in self.outputs if o.style is style)
