from __future__ import annotations

import ast
from pathlib import Path

PACKAGE_ROOT = Path(__file__).resolve().parents[1]


def _typing_any_lines(tree: ast.AST) -> list[int]:
    """Lines importing `typing.Any` or spelling `typing.Any` / `t.Any`."""
    aliases: set[str] = set()
    lines: list[int] = []
    for node in ast.walk(tree):
        match node:
            case ast.Import(names=names):
                aliases.update(a.asname or a.name for a in names if a.name == "typing")
            case ast.ImportFrom(module="typing" | "typing_extensions", names=names):
                if any(a.name == "Any" for a in names):
                    lines.append(node.lineno)
            case _:
                pass
    for node in ast.walk(tree):
        match node:
            case ast.Attribute(value=ast.Name(id=name), attr="Any") if name in aliases:
                lines.append(node.lineno)
            case _:
                pass
    return lines


def _sources() -> list[Path]:
    return [
        path
        for path in sorted(PACKAGE_ROOT.rglob("*.py"))
        if "__pycache__" not in path.parts
        and not any(part.startswith(".") for part in path.relative_to(PACKAGE_ROOT).parts)
    ]


def test_no_typing_any_in_softfoot() -> None:
    """Explicit typing.Any is forbidden; boundaries go through softfoot.core.structured."""
    offenders: list[str] = []
    for path in _sources():
        rel = path.relative_to(PACKAGE_ROOT)
        tree = ast.parse(path.read_text(encoding="utf-8"), filename=str(rel))
        offenders += [f"{rel}:{line}" for line in _typing_any_lines(tree)]
    assert not offenders, "Explicit typing.Any is forbidden:\n" + "\n".join(offenders)


def test_detector_finds_both_spellings() -> None:
    source = "import typing as t\nfrom typing import Any\nx: t.Any\n"
    assert sorted(_typing_any_lines(ast.parse(source))) == [2, 3]
