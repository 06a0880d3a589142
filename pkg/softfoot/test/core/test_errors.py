"""Tests for softfoot.core.errors."""

import pytest

from softfoot.core.errors import ErrorCode


class TestErrorCodeValues:
    """Exit codes are part of the command-line contract."""

    @pytest.mark.parametrize(
        ("code", "value"),
        [
            (ErrorCode.OK, 0),
            (ErrorCode.USER_ERROR, 1),
            (ErrorCode.USAGE_ERROR, 2),
            (ErrorCode.SOLVER_ERROR, 3),
            (ErrorCode.IO_ERROR, 5),
            (ErrorCode.INTERNAL_ERROR, 6),
        ],
    )
    def test_value(self, code: ErrorCode, value: int) -> None:
        assert code == value

    def test_four_is_unused(self) -> None:
        with pytest.raises(ValueError):
            ErrorCode(4)

    def test_codes_are_unique(self) -> None:
        values = [code.value for code in ErrorCode]
        assert len(values) == len(set(values))


class TestErrorCodeUsage:
    """ErrorCode works where an int exit code is expected."""

    def test_can_use_as_int(self) -> None:
        code: int = ErrorCode.SOLVER_ERROR
        assert code == 3

    def test_is_success(self) -> None:
        assert ErrorCode.OK.is_success is True
        assert all(not c.is_success for c in ErrorCode if c is not ErrorCode.OK)

    def test_is_error(self) -> None:
        assert ErrorCode.OK.is_error is False
        assert all(c.is_error for c in ErrorCode if c is not ErrorCode.OK)

    def test_str(self) -> None:
        assert str(ErrorCode.OK) == "ok"
        assert str(ErrorCode.SOLVER_ERROR) == "solver error"
        assert str(ErrorCode.IO_ERROR) == "io error"
