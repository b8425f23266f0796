"""Marked graph diagrams stored as region-labelled vertex lists.

Every vertex carries its four surrounding regions as an ordered tuple
``(x, a, b, y)``.  For a classical crossing the order is fixed so that the
colouring rule always reads ``y = x * (a . b)``:

* ``x`` lies to the right of the over-strand and to the left of the under-strand,
* ``y`` lies to the left of the over-strand and to the right of the under-strand,
* ``a`` lies to the left of both strands,
* ``b`` lies to the right of both strands.

``x, y`` and ``a, b`` are therefore the two pairs of opposite corners.

For a marked vertex the two pairs of opposite corners are stored the same
way; the positive resolution fuses ``a`` with ``b`` and the negative
resolution fuses ``x`` with ``y``, so the marker direction is encoded by
which pair sits in the ``a, b`` slots.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .errors import BiquasileError, ParseError

__all__ = [
    "VertexKind",
    "Vertex",
    "MarkedGraphDiagram",
    "Equation",
    "SCHEMAS",
    "DEFAULT_SCHEMA",
    "marked_vertex_equations",
    "constraints",
    "resolve",
    "resolution_map",
    "euler_check",
    "parse_diagram",
    "serialize_diagram",
    "load_diagram",
]


class VertexKind(str, enum.Enum):
    POSITIVE = "X+"
    NEGATIVE = "X-"
    MARKED = "M"

    @property
    def sign(self) -> int:
        return {"X+": 1, "X-": -1, "M": 0}[self.value]


@dataclass(frozen=True)
class Vertex:
    kind: VertexKind
    regions: tuple[int, int, int, int]

    def __post_init__(self):
        object.__setattr__(self, "kind", VertexKind(self.kind))
        regs = tuple(int(r) for r in self.regions)
        if len(regs) != 4:
            raise BiquasileError(f"a vertex needs 4 regions, got {len(regs)}")
        object.__setattr__(self, "regions", regs)

    @property
    def x(self) -> int:
        return self.regions[0]

    @property
    def a(self) -> int:
        return self.regions[1]

    @property
    def b(self) -> int:
        return self.regions[2]

    @property
    def y(self) -> int:
        return self.regions[3]

    @property
    def is_crossing(self) -> bool:
        return self.kind is not VertexKind.MARKED


@dataclass(frozen=True)
class MarkedGraphDiagram:
    """An oriented marked graph diagram.

    ``free_regions`` counts regions touched by no vertex (for instance the
    inside of a split circle without vertices).  A diagram without any
    vertex treats all of its regions as free.
    """

    region_count: int
    vertices: tuple[Vertex, ...] = ()
    name: str | None = field(default=None, compare=False)
    components: int | None = None
    free_regions: int = 0

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        R = self.region_count
        if R < 1:
            raise BiquasileError("region_count must be positive")
        used = set()
        for i, v in enumerate(self.vertices, 1):
            for r in v.regions:
                if not 1 <= r <= R:
                    raise BiquasileError(f"vertex {i}: region {r} outside 1..{R}")
                used.add(r)
        if self.vertices:
            unused = R - len(used)
            if unused != self.free_regions:
                raise BiquasileError(
                    f"{unused} regions touch no vertex but free_regions is {self.free_regions}")
        if self.components is not None and self.components < 1:
            raise BiquasileError("components must be positive")

    @property
    def marked_count(self) -> int:
        return sum(1 for v in self.vertices if v.kind is VertexKind.MARKED)

    @property
    def crossing_count(self) -> int:
        return len(self.vertices) - self.marked_count

    @property
    def is_classical(self) -> bool:
        return self.marked_count == 0

    def with_name(self, name: str | None) -> "MarkedGraphDiagram":
        return MarkedGraphDiagram(self.region_count, self.vertices, name,
                                  self.components, self.free_regions)

    def __str__(self) -> str:
        return self.name or f"<diagram regions={self.region_count} vertices={len(self.vertices)}>"


# ---------------------------------------------------------------- constraints

@dataclass(frozen=True)
class Equation:
    """One colouring condition.

    ``kind == "rule"``: ``slots = (x, a, b, y)`` meaning ``y = x * (a . b)``.
    ``kind == "equal"``: ``slots = (u, v)`` meaning ``u = v``.
    """

    vertex: int
    kind: str
    slots: tuple[int, ...]


def _schema_equal_pairs(i: int, v: Vertex) -> list[Equation]:
    return [Equation(i, "equal", (v.x, v.y)), Equation(i, "equal", (v.a, v.b))]


def _schema_reciprocal(i: int, v: Vertex) -> list[Equation]:
    return [Equation(i, "rule", (v.x, v.a, v.b, v.y)), Equation(i, "rule", (v.y, v.a, v.b, v.x))]


SCHEMAS = {"A": _schema_equal_pairs, "B": _schema_reciprocal}
DEFAULT_SCHEMA = "A"


def marked_vertex_equations(index: int, v: Vertex, schema: str = DEFAULT_SCHEMA) -> list[Equation]:
    """Conditions imposed at a marked vertex.

    Schema ``"A"`` (default) makes both pairs of opposite corners equal, so a
    colouring survives either resolution.  Schema ``"B"`` imposes the
    crossing rule in both directions.
    """
    try:
        return SCHEMAS[schema](index, v)
    except KeyError:
        raise BiquasileError(f"unknown marked-vertex schema {schema!r}") from None


def constraints(d: MarkedGraphDiagram, X=None, schema: str = DEFAULT_SCHEMA) -> list[Equation]:
    """All colouring conditions of ``d`` in vertex order.

    ``X`` is accepted for symmetry with the solver API; the equations only
    depend on the diagram.
    """
    out: list[Equation] = []
    for i, v in enumerate(d.vertices):
        if v.kind is VertexKind.MARKED:
            out.extend(marked_vertex_equations(i, v, schema))
        else:
            out.append(Equation(i, "rule", v.regions))
    return out


# ----------------------------------------------------------------- resolution

def _reindex(R: int, merges: Iterable[tuple[int, int]]) -> dict[int, int]:
    ds = DisjointSet(range(1, R + 1))
    for u, v in merges:
        ds.merge(u, v)
    reps = sorted(min(s) for s in ds.subsets())
    new = {rep: k for k, rep in enumerate(reps, 1)}
    return {r: new[min(ds.subset(r))] for r in range(1, R + 1)}


def resolution_map(d: MarkedGraphDiagram, sign: int | str) -> dict[int, int]:
    """Region index of ``d`` -> region index of ``resolve(d, sign)``."""
    return _reindex(d.region_count, _merges(d, sign)[0])


def _merges(d: MarkedGraphDiagram, sign):
    if sign in ("+", 1, "+1"):
        pick = lambda v: (v.a, v.b)  # noqa: E731
        tag = "+"
    elif sign in ("-", -1, "-1"):
        pick = lambda v: (v.x, v.y)  # noqa: E731
        tag = "-"
    else:
        raise BiquasileError(f"resolution sign must be + or -, got {sign!r}")
    return [pick(v) for v in d.vertices if v.kind is VertexKind.MARKED], tag


def resolve(d: MarkedGraphDiagram, sign: int | str) -> MarkedGraphDiagram:
    """Smooth every marked vertex: ``+`` fuses ``(a, b)``, ``-`` fuses ``(x, y)``."""
    merges, tag = _merges(d, sign)
    m = _reindex(d.region_count, merges)
    R = max(m.values())
    verts = tuple(Vertex(v.kind, tuple(m[r] for r in v.regions))
                  for v in d.vertices if v.kind is not VertexKind.MARKED)
    used = {r for v in verts for r in v.regions}
    free = R - len(used) if verts else 0
    name = f"{d.name}[{tag}]" if d.name else None
    return MarkedGraphDiagram(R, verts, name, None, free)


def euler_check(d: MarkedGraphDiagram, components: int | None = None) -> list[str]:
    """Compare the region count with ``V + 1 + k`` for ``k`` split components."""
    k = components if components is not None else d.components
    if k is None:
        k = 1
    expected = len(d.vertices) + 1 + k
    if d.region_count != expected:
        return [f"region count {d.region_count} differs from V + 1 + k = {expected} "
                f"(V={len(d.vertices)}, k={k})"]
    return []


# ------------------------------------------------------------------------ I/O

def parse_diagram(text: str, name: str | None = None) -> MarkedGraphDiagram:
    region_count = None
    components = None
    free = 0
    verts: list[Vertex] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head = parts[0]
        if region_count is None:
            if head != "regions" or len(parts) != 2:
                raise ParseError("expected header 'regions <n>'", lineno)
            region_count = _int(parts[1], lineno)
            if region_count < 1:
                raise ParseError("region count must be positive", lineno)
            continue
        if head in ("components", "free_regions"):
            if verts:
                raise ParseError(f"'{head}' must precede the vertex lines", lineno)
            if len(parts) != 2:
                raise ParseError(f"expected '{head} <k>'", lineno)
            val = _int(parts[1], lineno)
            if head == "components":
                components = val
            else:
                free = val
            continue
        try:
            kind = VertexKind(head)
        except ValueError:
            raise ParseError(f"unknown vertex tag {head!r}", lineno) from None
        if len(parts) != 5:
            raise ParseError(f"expected 4 region indices after {head}", lineno)
        regs = tuple(_int(p, lineno) for p in parts[1:])
        for r in regs:
            if not 1 <= r <= region_count:
                raise ParseError(f"region {r} outside 1..{region_count}", lineno)
        verts.append(Vertex(kind, regs))
    if region_count is None:
        raise ParseError("missing header 'regions <n>'")
    try:
        return MarkedGraphDiagram(region_count, tuple(verts), name, components, free)
    except BiquasileError as e:
        raise ParseError(str(e)) from None


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def serialize_diagram(d: MarkedGraphDiagram, comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines.append(f"regions {d.region_count}")
    if d.components is not None:
        lines.append(f"components {d.components}")
    if d.free_regions:
        lines.append(f"free_regions {d.free_regions}")
    for v in d.vertices:
        lines.append(f"{v.kind.value} " + " ".join(str(r) for r in v.regions))
    return "\n".join(lines) + "\n"


def load_diagram(path: str | Path) -> MarkedGraphDiagram:
    p = Path(path)
    return parse_diagram(p.read_text(), name=p.stem)
