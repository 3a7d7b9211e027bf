"""Miura-ori crease pattern model: creases, nodes, MV assignments, local foldability.

Indexing conventions
--------------------
Cells are ``(r, c)`` with ``0 <= r < m`` and ``0 <= c < n``.  Creases sit between
cells and are 0-based:

* ``H(r, c)`` is the horizontal crease between cells ``(r, c)`` and ``(r + 1, c)``.
* ``V(r, c)`` is the zig-zag segment between cells ``(r, c)`` and ``(r, c + 1)``.

Nodes sit between creases and are 1-based: node ``(r, c)`` is where horizontal
line ``r`` meets zig-zag line ``c`` (``1 <= r <= m-1``, ``1 <= c <= n-1``).
Horizontal line ``r`` carries creases ``H(r-1, *)`` and zig-zag line ``c`` carries
creases ``V(*, c-1)``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping, NamedTuple

MOUNTAIN = 1
VALLEY = -1


class GridSize(NamedTuple):
    rows: int
    cols: int

    @classmethod
    def of(cls, rows: int, cols: int) -> "GridSize":
        if rows < 1 or cols < 1:
            raise ValueError(f"grid size must be positive, got {rows}x{cols}")
        return cls(rows, cols)

    @property
    def num_creases(self) -> int:
        m, n = self
        return m * (n - 1) + (m - 1) * n

    @property
    def num_nodes(self) -> int:
        m, n = self
        return (m - 1) * (n - 1)

    def cells(self) -> Iterator[tuple[int, int]]:
        for r in range(self.rows):
            for c in range(self.cols):
                yield r, c


class CreaseId(NamedTuple):
    """A crease, ordered by ``(kind, r, c)`` with ``"H" < "V"``."""

    kind: str
    r: int
    c: int

    def cells(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two cells on either side, in canonical (tail, head) order.

        Vertical dual edges point down; horizontal dual edges follow the
        boustrophedon path (rightward on even rows, leftward on odd rows).
        """
        r, c = self.r, self.c
        if self.kind == "H":
            return (r, c), (r + 1, c)
        if r % 2 == 0:
            return (r, c), (r, c + 1)
        return (r, c + 1), (r, c)

    def __str__(self) -> str:
        return f"{self.kind}({self.r},{self.c})"


class NodeId(NamedTuple):
    r: int
    c: int


class NodeStar(NamedTuple):
    leg: CreaseId
    toe2: CreaseId
    middle: CreaseId
    toe4: CreaseId


def is_valid_crease(size: GridSize, e: CreaseId) -> bool:
    m, n = size
    if e.kind == "H":
        return 0 <= e.r <= m - 2 and 0 <= e.c <= n - 1
    if e.kind == "V":
        return 0 <= e.r <= m - 1 and 0 <= e.c <= n - 2
    return False


def check_crease(size: GridSize, e: CreaseId) -> CreaseId:
    if not is_valid_crease(size, e):
        raise IndexError(f"crease {e} out of range for {size.rows}x{size.cols} pattern")
    return e


def all_creases(size: GridSize) -> list[CreaseId]:
    """Every crease of the pattern in ``(kind, r, c)`` order."""
    m, n = size
    hs = [CreaseId("H", r, c) for r in range(m - 1) for c in range(n)]
    vs = [CreaseId("V", r, c) for r in range(m) for c in range(n - 1)]
    return hs + vs


def crease_index(size: GridSize, e: CreaseId) -> int:
    """Position of ``e`` in :func:`all_creases`."""
    m, n = size
    if e.kind == "H":
        return e.r * n + e.c
    return (m - 1) * n + e.r * (n - 1) + e.c


def crease_between(a: tuple[int, int], b: tuple[int, int]) -> CreaseId:
    """The crease separating two edge-adjacent cells."""
    (r1, c1), (r2, c2) = sorted((a, b))
    if c1 == c2 and r2 == r1 + 1:
        return CreaseId("H", r1, c1)
    if r1 == r2 and c2 == c1 + 1:
        return CreaseId("V", r1, c1)
    raise ValueError(f"cells {a} and {b} are not adjacent")


def interior_nodes(size: GridSize) -> list[NodeId]:
    m, n = size
    return [NodeId(r, c) for r in range(1, m) for c in range(1, n)]


def node_star(size: GridSize, node: NodeId) -> NodeStar:
    """The bird's foot at ``node``.

    The leg lies on the horizontal line.  It points west on odd node rows and
    east on even ones, so the top line of nodes has all legs pointing left.
    The lateral toes are the zig-zag segments above and below the node.
    """
    m, n = size
    r, c = node
    if not (1 <= r <= m - 1 and 1 <= c <= n - 1):
        raise IndexError(f"node {tuple(node)} out of range for {m}x{n} pattern")
    west = CreaseId("H", r - 1, c - 1)
    east = CreaseId("H", r - 1, c)
    north = CreaseId("V", r - 1, c - 1)
    south = CreaseId("V", r, c - 1)
    if r % 2 == 1:
        return NodeStar(west, north, east, south)
    return NodeStar(east, north, west, south)


def nodes_of_crease(size: GridSize, e: CreaseId) -> list[NodeId]:
    """Interior nodes at the two ends of a crease segment."""
    m, n = size
    if e.kind == "H":
        ends = [(e.r + 1, e.c), (e.r + 1, e.c + 1)]
    else:
        ends = [(e.r, e.c + 1), (e.r + 1, e.c + 1)]
    return [NodeId(r, c) for r, c in ends if 1 <= r <= m - 1 and 1 <= c <= n - 1]


@dataclass(frozen=True)
class PartialMVAssignment:
    """Mountain (+1) / valley (-1) values on a subset of the creases."""

    size: GridSize
    values: Mapping[CreaseId, int] = field(default_factory=dict)

    def __post_init__(self):
        size = GridSize.of(*self.size)
        vals = {}
        for e, v in self.values.items():
            e = check_crease(size, CreaseId(*e))
            if v not in (MOUNTAIN, VALLEY):
                raise ValueError(f"crease {e} has value {v!r}; expected +1 or -1")
            vals[e] = int(v)
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "values", MappingProxyType(dict(sorted(vals.items()))))

    def __getitem__(self, e: CreaseId) -> int:
        return self.values[e]

    def get(self, e: CreaseId, default=None):
        return self.values.get(e, default)

    def __contains__(self, e) -> bool:
        return e in self.values

    def __len__(self) -> int:
        return len(self.values)

    def __bool__(self) -> bool:
        # an empty assignment is still an assignment (e.g. the 1x1 pattern)
        return True

    def __hash__(self):
        return hash((self.size, tuple(self.values.items())))

    @property
    def is_total(self) -> bool:
        return len(self.values) == self.size.num_creases

    def restrict(self, creases: Iterable[CreaseId]) -> "PartialMVAssignment":
        return PartialMVAssignment(self.size, {e: self.values[e] for e in creases})

    def flipped(self, *creases: CreaseId) -> "PartialMVAssignment":
        vals = dict(self.values)
        for e in creases:
            vals[e] = -vals[e]
        return type(self)(self.size, vals)


@dataclass(frozen=True, eq=False)
class MVAssignment(PartialMVAssignment):
    """A total MV assignment."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_total:
            missing = [e for e in all_creases(self.size) if e not in self.values]
            raise ValueError(f"assignment is missing {len(missing)} creases, e.g. {missing[0]}")

    def __eq__(self, other):
        if not isinstance(other, PartialMVAssignment):
            return NotImplemented
        return self.size == other.size and self.values == other.values

    __hash__ = PartialMVAssignment.__hash__


def check_birds_foot(a: PartialMVAssignment, node: NodeId) -> bool:
    """Leg value equals the sum of the three toe values."""
    leg, t2, t3, t4 = node_star(a.size, node)
    return a[leg] == a[t2] + a[t3] + a[t4]


def is_locally_flat_foldable(a: PartialMVAssignment) -> tuple[bool, list[NodeId]]:
    """Check the bird's foot condition at every interior node.

    Returns ``(ok, violating_nodes)``.
    """
    if not a.is_total:
        raise ValueError("local foldability needs a total assignment")
    bad = [v for v in interior_nodes(a.size) if not check_birds_foot(a, v)]
    return not bad, bad


def standard_assignment(size: GridSize) -> MVAssignment:
    """The standard Miura-ori assignment.

    Zig-zag line 1 is all mountain and zig-zag lines alternate.  Horizontal
    creases are then determined node by node: with equal lateral toes, the
    leg agrees with them and the middle toe is opposite.
    """
    size = GridSize.of(*size)
    m, n = size
    vals: dict[CreaseId, int] = {}
    for r in range(m):
        for c in range(n - 1):
            vals[CreaseId("V", r, c)] = MOUNTAIN if c % 2 == 0 else VALLEY
    for node in interior_nodes(size):
        leg, t2, mid, t4 = node_star(size, node)
        assert vals[t2] == vals[t4]
        for e, v in ((leg, vals[t2]), (mid, -vals[t2])):
            if vals.setdefault(e, v) != v:
                raise AssertionError(f"inconsistent standard phase at {e}")
    # n == 1: no nodes pin the horizontal creases; continue the alternation
    # that nodes would impose on column 0 (line r+1 odd -> mountain)
    for r in range(m - 1):
        for c in range(n):
            e = CreaseId("H", r, c)
            if e not in vals:
                vals[e] = MOUNTAIN if (r + c) % 2 == 0 else VALLEY
    return MVAssignment(size, vals)
