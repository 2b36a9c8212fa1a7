"""The ``.hr`` document format: a small YAML mapping describing one hyperring.

::

    q: 2
    axiomMode: strong
    names: [zero, one]
    plus:
      - [[0], [1]]
      - [[1], [0]]
    times:
      - [[0], [0]]
      - [[0], [1]]

Cells are sorted, duplicate-free lists of 0-based indices.  Axioms are not
checked here; that is :func:`hyperrings.core.validate`'s job.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass

import yaml

from .core import HyperOp, Hyperring, HyperstructureError, elements

__all__ = [
    "DocumentError",
    "DocumentSyntaxError",
    "DocumentSemanticError",
    "HyperringDocument",
    "load_document",
    "parse",
    "serialize",
    "digest",
]

_MODES = {"strong": "strong", "strong-distributive": "strong",
          "inclusive": "inclusive", "inclusive-distributive": "inclusive"}


class DocumentError(HyperstructureError):
    pass


class DocumentSyntaxError(DocumentError):
    def __init__(self, msg: str, line: int | None, column: int | None):
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + msg)
        self.line = line
        self.column = column


class DocumentSemanticError(DocumentError):
    def __init__(self, msg: str, path: str):
        super().__init__(f"{path}: {msg}" if path else msg)
        self.path = path


@dataclass(frozen=True)
class HyperringDocument:
    ring: Hyperring
    names: tuple[str, ...] | None = None


def _fail(msg, *path):
    raise DocumentSemanticError(msg, ".".join(str(p) for p in path))


def _table(raw, q, key):
    if not isinstance(raw, list) or len(raw) != q:
        _fail(f"expected a list of {q} rows", key)
    rows = []
    for i, row in enumerate(raw):
        if not isinstance(row, list) or len(row) != q:
            _fail(f"expected a list of {q} cells", key, i)
        cells = []
        for j, cell in enumerate(row):
            if not isinstance(cell, list):
                _fail("cell must be a list of element indices", key, i, j)
            if not cell:
                _fail("empty cell", key, i, j)
            for x in cell:
                if isinstance(x, bool) or not isinstance(x, int):
                    _fail(f"entry {x!r} is not an integer", key, i, j)
                if not 0 <= x < q:
                    _fail(f"entry {x} out of range for q={q}", key, i, j)
            if list(cell) != sorted(set(cell)):
                _fail("cell must be sorted and duplicate-free", key, i, j)
            cells.append(cell)
        rows.append(cells)
    return HyperOp.from_sets(q, rows)


def load_document(text: str) -> HyperringDocument:
    try:
        data = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line = mark.line + 1 if mark else None
        col = mark.column + 1 if mark else None
        raise DocumentSyntaxError(exc.problem or str(exc), line, col) from None
    except yaml.YAMLError as exc:
        raise DocumentSyntaxError(str(exc), None, None) from None
    if not isinstance(data, dict):
        _fail("document must be a mapping with keys q, plus, times")
    unknown = sorted(set(data) - {"q", "plus", "times", "axiomMode", "names"})
    if unknown:
        _fail(f"unknown key {unknown[0]!r}", unknown[0])
    for key in ("q", "plus", "times"):
        if key not in data:
            _fail("missing required key", key)
    q = data["q"]
    if isinstance(q, bool) or not isinstance(q, int) or q < 1:
        _fail("q must be a positive integer", "q")
    mode = data.get("axiomMode", "strong")
    if mode not in _MODES:
        _fail(f"unknown axiom mode {mode!r}", "axiomMode")
    names = data.get("names")
    if names is not None:
        if not isinstance(names, list) or len(names) != q:
            _fail(f"expected {q} names", "names")
        names = tuple(str(n) for n in names)
        if len(set(names)) != q:
            _fail("names must be distinct", "names")
    ring = Hyperring(_table(data["plus"], q, "plus"), _table(data["times"], q, "times"),
                     _MODES[mode])
    return HyperringDocument(ring, names)


def parse(text: str) -> Hyperring:
    """Read an ``.hr`` document; raises :class:`DocumentError` subclasses."""
    return load_document(text).ring


def _rows(op: HyperOp):
    for row in op.table:
        yield "  - [" + ", ".join("[" + ", ".join(map(str, elements(c))) + "]" for c in row) + "]"


def serialize(r: Hyperring, names=None) -> str:
    """Canonical text; ``parse(serialize(r)) == r``."""
    lines = [f"q: {r.q}", f"axiomMode: {r.distributivity}"]
    if names is not None:
        lines.append("names: [" + ", ".join(yaml.safe_dump(str(n), default_style='"').strip()
                                            for n in names) + "]")
    lines.append("plus:")
    lines.extend(_rows(r.plus))
    lines.append("times:")
    lines.extend(_rows(r.times))
    return "\n".join(lines) + "\n"


def digest(r: Hyperring) -> str:
    """Content hash of the canonical serialization (names excluded)."""
    return "sha256:" + hashlib.sha256(serialize(r).encode()).hexdigest()
