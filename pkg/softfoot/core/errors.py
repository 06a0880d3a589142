"""Exit codes for the softfoot CLI.

Every subcommand maps its outcome onto one of these codes. The values are
part of the command-line contract and must stay stable.
"""

from enum import IntEnum

__all__ = ["ErrorCode"]


class ErrorCode(IntEnum):
    """Process exit codes.

    - 0: every requested solve converged and every file was written
    - 1: user error (invalid config, schema violation, unit mismatch)
    - 2: usage error (unknown subcommand or option, reported by click)
    - 3: solver error (at least one solve failed; partial outputs kept)
    - 5: I/O error (output directory or file not writable)
    - 6: internal error
    """

    OK = 0
    USER_ERROR = 1
    USAGE_ERROR = 2
    SOLVER_ERROR = 3
    IO_ERROR = 5
    INTERNAL_ERROR = 6

    def __str__(self) -> str:
        return self.name.lower().replace("_", " ")

    @property
    def is_success(self) -> bool:
        """Check if this code indicates success."""
        return self == ErrorCode.OK

    @property
    def is_error(self) -> bool:
        """Check if this code indicates an error."""
        return self != ErrorCode.OK
