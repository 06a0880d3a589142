from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

HarnessErrorKind = Literal["zero_total_force", "no_admissible_rows"]


@dataclass(frozen=True, slots=True)
class HarnessError:
    kind: HarnessErrorKind
    message: str
    hint: str | None = None


ExportErrorKind = Literal["write_failed", "read_failed", "bad_table"]


@dataclass(frozen=True, slots=True)
class ExportError:
    kind: ExportErrorKind
    message: str
    path: str
    hint: str | None = None
