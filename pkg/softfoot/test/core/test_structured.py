"""Tests for softfoot.core.structured."""

import math

import pytest

from softfoot.core.structured import as_float, as_int, as_obj_list, as_str_dict, is_annotation


class TestContainers:
    """Narrowing of nested TOML/JSON containers."""

    def test_str_dict(self) -> None:
        assert as_str_dict({"n": 6}) == {"n": 6}
        assert as_str_dict({1: "a"}) is None
        assert as_str_dict([1]) is None

    def test_obj_list(self) -> None:
        assert as_obj_list([0, 10]) == [0, 10]
        assert as_obj_list((0, 10)) is None


class TestNumbers:
    """Numeric coercion rejects booleans and non-finite values."""

    @pytest.mark.parametrize(
        ("value", "expected"), [(3, 3), (" 12 ", 12), ("x", None), ("", None), (2.0, None)]
    )
    def test_as_int(self, value: object, expected: int | None) -> None:
        assert as_int(value) == expected

    def test_booleans_are_not_numbers(self) -> None:
        assert as_int(True) is None
        assert as_float(False) is None

    @pytest.mark.parametrize(("value", "expected"), [(2, 2.0), (0.5, 0.5), ("1e-3", 1e-3)])
    def test_as_float(self, value: object, expected: float) -> None:
        assert as_float(value) == expected

    @pytest.mark.parametrize("value", [math.nan, math.inf, "inf", "nan", None, [1.0]])
    def test_as_float_rejects(self, value: object) -> None:
        assert as_float(value) is None


def test_annotation_keys() -> None:
    assert is_annotation("_comment")
    assert not is_annotation("n")
