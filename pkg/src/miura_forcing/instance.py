"""JSON instance documents.

Canonical form, one line, keys in this order::

    {"rows":2,"cols":3,"creases":[{"kind":"h","r":0,"c":0,"mv":1},...],"coloring":[[0,1,0],[1,2,1]]}

``mv`` is 1 (mountain), -1 (valley) or null (unassigned); ``coloring`` is
optional.  Crease lists that appear as forcing sets use the same entries and
ignore ``mv``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Optional

from .coloring import GridColoring, coloring_to_mv, is_valid_coloring
from .core import CreaseId, GridSize, MVAssignment, PartialMVAssignment, is_valid_crease


class InstanceError(ValueError):
    """Malformed or inconsistent instance; the message names the offending field."""


class InstanceIndexError(InstanceError, IndexError):
    """A crease index outside the pattern."""


@dataclass(frozen=True)
class InstanceDocument:
    rows: int
    cols: int
    creases: tuple[tuple[CreaseId, Optional[int]], ...] = ()
    coloring: Optional[tuple[tuple[int, ...], ...]] = None

    @property
    def size(self) -> GridSize:
        return GridSize(self.rows, self.cols)

    def grid_coloring(self) -> Optional[GridColoring]:
        return None if self.coloring is None else GridColoring(self.size, self.coloring)

    def assignment(self) -> PartialMVAssignment:
        """Assigned creases, filled in from the coloring when one is given."""
        K = self.grid_coloring()
        if K is not None:
            return coloring_to_mv(K)
        values = {e: mv for e, mv in self.creases if mv is not None}
        if len(values) == self.size.num_creases:
            return MVAssignment(self.size, values)
        return PartialMVAssignment(self.size, values)

    @classmethod
    def from_coloring(cls, K: GridColoring) -> "InstanceDocument":
        a = coloring_to_mv(K)
        return cls(K.size.rows, K.size.cols, tuple(a.values.items()), K.colors)

    @classmethod
    def from_assignment(cls, a: PartialMVAssignment, coloring: Optional[GridColoring] = None) -> "InstanceDocument":
        return cls(a.size.rows, a.size.cols, tuple(a.values.items()), None if coloring is None else coloring.colors)


def _crease_json(e: CreaseId, mv: Optional[int] = None, with_mv: bool = True) -> dict:
    d: dict[str, Any] = {"kind": e.kind.lower(), "r": e.r, "c": e.c}
    if with_mv:
        d["mv"] = mv
    return d


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InstanceError(f"{where}: expected an integer, got {value!r}")
    return value


def _parse_crease(item, where: str, size: GridSize, with_mv: bool) -> tuple[CreaseId, Optional[int]]:
    if not isinstance(item, dict):
        raise InstanceError(f"{where}: expected an object")
    allowed = {"kind", "r", "c", "mv"}
    extra = set(item) - allowed
    if extra:
        raise InstanceError(f"{where}: unknown field(s) {sorted(extra)}")
    for key in ("kind", "r", "c") + (("mv",) if with_mv else ()):
        if key not in item:
            raise InstanceError(f"{where}.{key}: missing")
    kind = item["kind"]
    if kind not in ("h", "v"):
        raise InstanceError(f"{where}.kind: expected 'h' or 'v', got {kind!r}")
    e = CreaseId(kind.upper(), _int(item["r"], f"{where}.r"), _int(item["c"], f"{where}.c"))
    if not is_valid_crease(size, e):
        raise InstanceIndexError(f"{where}: crease {e} out of range for a {size.rows}x{size.cols} pattern")
    mv = item.get("mv")
    if mv is not None and (isinstance(mv, bool) or mv not in (1, -1)):
        raise InstanceError(f"{where}.mv: expected 1, -1 or null, got {mv!r}")
    return e, mv


def _load(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceError(f"malformed JSON: {exc}") from None


def _parse_size(obj) -> GridSize:
    if not isinstance(obj, dict):
        raise InstanceError("document: expected a JSON object")
    for key in ("rows", "cols"):
        if key not in obj:
            raise InstanceError(f"{key}: missing")
        if _int(obj[key], key) < 1:
            raise InstanceError(f"{key}: must be positive, got {obj[key]}")
    return GridSize(obj["rows"], obj["cols"])


def parse_instance(text: str) -> InstanceDocument:
    obj = _load(text)
    size = _parse_size(obj)
    extra = set(obj) - {"rows", "cols", "creases", "coloring"}
    if extra:
        raise InstanceError(f"document: unknown field(s) {sorted(extra)}")
    raw = obj.get("creases", [])
    if not isinstance(raw, list):
        raise InstanceError("creases: expected a list")
    creases = []
    seen: dict[CreaseId, int] = {}
    for i, item in enumerate(raw):
        e, mv = _parse_crease(item, f"creases[{i}]", size, with_mv=True)
        if e in seen:
            raise InstanceError(f"creases[{i}]: duplicate of creases[{seen[e]}]")
        seen[e] = i
        creases.append((e, mv))

    coloring = None
    if obj.get("coloring") is not None:
        rows = obj["coloring"]
        if not isinstance(rows, list) or len(rows) != size.rows:
            raise InstanceError(f"coloring: expected {size.rows} rows")
        for r, row in enumerate(rows):
            if not isinstance(row, list) or len(row) != size.cols:
                raise InstanceError(f"coloring[{r}]: expected {size.cols} entries")
            for c, x in enumerate(row):
                if _int(x, f"coloring[{r}][{c}]") not in (0, 1, 2):
                    raise InstanceError(f"coloring[{r}][{c}]: expected 0, 1 or 2, got {x}")
        coloring = tuple(tuple(row) for row in rows)
        K = GridColoring(size, coloring)
        if not is_valid_coloring(K):
            raise InstanceError("coloring: not a proper 3-coloring with top-left cell 0")
        implied = coloring_to_mv(K)
        for i, (e, mv) in enumerate(creases):
            if mv is not None and implied[e] != mv:
                raise InstanceError(f"creases[{i}].mv: {mv} contradicts the coloring (implies {implied[e]})")
    return InstanceDocument(size.rows, size.cols, tuple(creases), coloring)


def serialize_instance(doc: InstanceDocument) -> str:
    obj: dict[str, Any] = {
        "rows": doc.rows,
        "cols": doc.cols,
        "creases": [_crease_json(e, mv) for e, mv in doc.creases],
    }
    if doc.coloring is not None:
        obj["coloring"] = [list(row) for row in doc.coloring]
    return _dump(obj)


def serialize_crease_set(size: GridSize, creases: Iterable[CreaseId], **extra) -> str:
    """A crease set as ``{"rows", "cols", "size", "creases", ...extra}``, creases sorted."""
    cs = sorted(creases)
    obj = {"rows": size.rows, "cols": size.cols, "size": len(cs)}
    obj["creases"] = [_crease_json(e, with_mv=False) for e in cs]
    obj.update(extra)
    return _dump(obj)


def parse_crease_set(text: str, size: GridSize) -> frozenset[CreaseId]:
    """Read a bare crease list, or any object with a ``creases`` list."""
    obj = _load(text)
    if isinstance(obj, dict):
        if "creases" not in obj:
            raise InstanceError("creases: missing")
        obj = obj["creases"]
    if not isinstance(obj, list):
        raise InstanceError("creases: expected a list")
    return frozenset(_parse_crease(item, f"creases[{i}]", size, with_mv=False)[0] for i, item in enumerate(obj))
