"""Build diagrams from a Morse word (a bottom-to-top sweep of the plane).

A word is a sequence of tokens, each acting at strand position ``i``
(0-based, counted from the left at the current height):

``cupI``
    a new arc opens at positions ``i, i+1``;
``capI``
    the strands at ``i, i+1`` close up;
``xI+`` / ``xI-``
    the strands at ``i, i+1`` cross; with ``+`` the strand arriving from
    the lower left passes over, with ``-`` it passes under;
``mI`` / ``mI*``
    a marked vertex joins the strands at ``i, i+1``; the starred form has
    its marker turned by a quarter turn.

Orientations are propagated along strands.  A marked vertex needs its two
strands running in opposite directions.  ``reverse`` lists surface
components (strand circles glued at marked vertices, numbered by their
lowest strand point in sweep order) whose orientation is flipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from scipy.cluster.hierarchy import DisjointSet

from .diagram import MarkedGraphDiagram, Vertex, VertexKind
from .errors import BiquasileError

__all__ = ["Op", "parse_word", "format_word", "diagram_from_word", "strand_circles",
           "surface_components", "euler_characteristics"]

_TOKEN = re.compile(r"^(cup|cap|x|m)(\d+)([+\-*]?)$")


@dataclass(frozen=True)
class Op:
    kind: str  # "cup", "cap", "x" or "m"
    pos: int
    flag: int = 0  # crossing: +1/-1; marked vertex: 0 or 1 (turned marker)

    def __str__(self) -> str:
        if self.kind == "x":
            return f"x{self.pos}{'+' if self.flag > 0 else '-'}"
        if self.kind == "m":
            return f"m{self.pos}{'*' if self.flag else ''}"
        return f"{self.kind}{self.pos}"


def parse_word(word: str | Iterable[str | Op]) -> list[Op]:
    toks = word.split() if isinstance(word, str) else list(word)
    out = []
    for t in toks:
        if isinstance(t, Op):
            out.append(t)
            continue
        m = _TOKEN.match(t)
        if not m:
            raise BiquasileError(f"bad Morse token {t!r}")
        kind, pos, flag = m.group(1), int(m.group(2)), m.group(3)
        if kind == "x":
            if flag not in "+-" or not flag:
                raise BiquasileError(f"crossing token {t!r} needs + or -")
            out.append(Op(kind, pos, 1 if flag == "+" else -1))
        elif kind == "m":
            if flag not in ("", "*"):
                raise BiquasileError(f"bad marked-vertex token {t!r}")
            out.append(Op(kind, pos, 1 if flag == "*" else 0))
        else:
            if flag:
                raise BiquasileError(f"bad token {t!r}")
            out.append(Op(kind, pos))
    return out


def format_word(ops: Sequence[Op]) -> str:
    return " ".join(str(o) for o in ops)


class _Sweep:
    """Walks a word once, recording strand segments, regions and vertices."""

    def __init__(self, ops: Sequence[Op]):
        self.ops = ops
        self.links: list[tuple[tuple[int, int], tuple[int, int], bool]] = []
        self.region_merges: list[tuple[int, int]] = []
        self.vertex_records = []
        self.graph_links: list[tuple[tuple[int, int], tuple[int, int]]] = []
        n_regions = 1
        gaps = [0]
        width = 0
        for level, op in enumerate(ops):
            i = op.pos
            if op.kind == "cup":
                if not 0 <= i <= width:
                    raise BiquasileError(f"cup at {i} outside 0..{width} (op {level})")
                new = n_regions
                n_regions += 1
                gaps = gaps[:i + 1] + [new] + [gaps[i]] + gaps[i + 1:]
                for p in range(width):
                    self._line((level, p), (level + 1, p if p < i else p + 2))
                self.links.append(((level + 1, i), (level + 1, i + 1), False))
                self.graph_links.append(((level + 1, i), (level + 1, i + 1)))
                width += 2
            elif op.kind == "cap":
                if not 0 <= i <= width - 2:
                    raise BiquasileError(f"cap at {i} outside 0..{width - 2} (op {level})")
                self.region_merges.append((gaps[i], gaps[i + 2]))
                gaps = gaps[:i + 1] + gaps[i + 3:]
                for p in range(width):
                    if p not in (i, i + 1):
                        self._line((level, p), (level + 1, p if p < i else p - 2))
                self.links.append(((level, i), (level, i + 1), False))
                self.graph_links.append(((level, i), (level, i + 1)))
                width -= 2
            elif op.kind in ("x", "m"):
                if not 0 <= i <= width - 2:
                    raise BiquasileError(f"{op.kind} at {i} outside 0..{width - 2} (op {level})")
                top = n_regions
                n_regions += 1
                corners = dict(W=gaps[i], E=gaps[i + 2], S=gaps[i + 1], N=top)
                gaps = gaps[:i + 1] + [top] + gaps[i + 2:]
                for p in range(width):
                    if p not in (i, i + 1):
                        self._line((level, p), (level + 1, p))
                if op.kind == "x":
                    self._line((level, i), (level + 1, i + 1))
                    self._line((level, i + 1), (level + 1, i))
                else:
                    self._line((level, i), (level + 1, i))
                    self._line((level, i + 1), (level + 1, i + 1))
                    self.graph_links.append(((level, i), (level, i + 1)))
                self.graph_links.append(((level, i), (level, i + 1)))
                self.vertex_records.append((op, level, corners))
            else:
                raise BiquasileError(f"unknown op {op.kind!r}")
        if width != 0:
            raise BiquasileError(f"word leaves {width} open strands")
        self.n_regions = n_regions

    def _line(self, u, v):
        self.links.append((u, v, True))
        self.graph_links.append((u, v))


def _orient(sw: _Sweep):
    """Directions of all strand points, and the strand circles.

    Strands at a marked vertex must run in opposite directions, so each
    surface component is oriented as a whole, starting from its lowest point.
    """
    adj: dict = {}

    def link(u, v, same):
        adj.setdefault(u, []).append((v, same))
        adj.setdefault(v, []).append((u, same))

    for u, v, same in sw.links:
        link(u, v, same)
    for op, level, _ in sw.vertex_records:
        if op.kind == "m":
            link((level, op.pos), (level, op.pos + 1), False)
    direction: dict = {}
    for start in sorted(adj):
        if start in direction:
            continue
        direction[start] = 1
        stack = [start]
        while stack:
            u = stack.pop()
            for v, same in adj[u]:
                want = direction[u] if same else -direction[u]
                if v in direction:
                    if direction[v] != want:
                        raise BiquasileError("strands cannot be oriented with every marked "
                                             "vertex joining antiparallel strands")
                else:
                    direction[v] = want
                    stack.append(v)
    circles = DisjointSet()
    for u, v, _ in sw.links:
        circles.add(u)
        circles.add(v)
        circles.merge(u, v)
    return direction, sorted(circles.subsets(), key=min)


def _surface_components(sw: _Sweep) -> list[set]:
    ds = DisjointSet()
    for u, v, _ in sw.links:
        ds.add(u)
        ds.add(v)
        ds.merge(u, v)
    for op, level, _ in sw.vertex_records:
        if op.kind == "m":
            ds.merge((level, op.pos), (level, op.pos + 1))
    return sorted(ds.subsets(), key=min)


def surface_components(word) -> int:
    """Number of surface components described by a word."""
    return len(_surface_components(_Sweep(parse_word(word))))


def euler_characteristics(word) -> list[int]:
    """Euler characteristic of each surface component, in component order.

    For a component with ``V`` marked vertices whose resolutions have
    ``c-`` and ``c+`` circles the value is ``c- + c+ - V``.  Marker 0 smooths
    vertically in the positive resolution; the turned marker smooths
    horizontally there.
    """
    sw = _Sweep(parse_word(word))
    comps = _surface_components(sw)
    where = {node: k for k, c in enumerate(comps) for node in c}
    chi = [0] * len(comps)
    for op, level, _ in sw.vertex_records:
        if op.kind == "m":
            chi[where[(level, op.pos)]] -= 1
    for sign in (1, -1):
        for c in _smoothed_circles(sw, sign):
            chi[where[min(c)]] += 1
    return chi


def _smoothed_circles(sw: _Sweep, sign: int) -> list[set]:
    horizontal = {(level, op.pos) for op, level, _ in sw.vertex_records
                  if op.kind == "m" and (op.flag == 0) != (sign > 0)}
    cut = set()
    for level, i in horizontal:
        cut.update({((level, i), (level + 1, i)), ((level, i + 1), (level + 1, i + 1))})
    ds = DisjointSet()
    for u, v, _ in sw.links:
        ds.add(u)
        ds.add(v)
        if (u, v) not in cut:
            ds.merge(u, v)
    for level, i in horizontal:
        ds.merge((level, i), (level, i + 1))
        ds.merge((level + 1, i), (level + 1, i + 1))
    return ds.subsets()


def strand_circles(word) -> int:
    """Number of strand circles in a word (vertical smoothing at marked vertices)."""
    return len(_orient(_Sweep(parse_word(word)))[1])


_POS = dict(W=(-1, 0), E=(1, 0), S=(0, -1), N=(0, 1))


def _left(corner: str, vec: tuple[int, int]) -> bool:
    px, py = _POS[corner]
    return px * -vec[1] + py * vec[0] > 0


def diagram_from_word(word, reverse: Iterable[int] = (), name: str | None = None
                      ) -> MarkedGraphDiagram:
    """Encode a Morse word as a :class:`MarkedGraphDiagram`."""
    ops = parse_word(word)
    sw = _Sweep(ops)
    direction, _ = _orient(sw)
    comps = _surface_components(sw)
    for c in reverse:
        if not 0 <= c < len(comps):
            raise BiquasileError(f"no surface component {c}; the word has {len(comps)}")
        for node in comps[c]:
            direction[node] = -direction[node]
    regions = DisjointSet(range(sw.n_regions))
    for u, v in sw.region_merges:
        regions.merge(u, v)
    reps = sorted(min(s) for s in regions.subsets())
    index = {rep: k for k, rep in enumerate(reps, 1)}
    reg = lambda r: index[min(regions.subset(r))]  # noqa: E731

    verts = []
    for op, level, c in sw.vertex_records:
        dl = direction[(level, op.pos)]
        dr = direction[(level, op.pos + 1)]
        if op.kind == "m":
            if dl != -dr:
                raise BiquasileError(f"marked vertex at level {level} joins parallel strands")
            # marker 0: the positive smoothing keeps the strands vertical and so
            # fuses the bottom and top corners
            ab, xy = (("S", "N"), ("W", "E")) if op.flag == 0 else (("W", "E"), ("S", "N"))
            verts.append(Vertex(VertexKind.MARKED,
                                (reg(c[xy[0]]), reg(c[ab[0]]), reg(c[ab[1]]), reg(c[xy[1]]))))
            continue
        rising = (dl, dl)  # strand from lower left to upper right
        falling = (-dr, dr)  # strand from lower right to upper left
        over, under = (rising, falling) if op.flag > 0 else (falling, rising)
        positive = over[0] * under[1] - over[1] * under[0] > 0
        role = {}
        for cn in "WESN":
            role[(_left(cn, over), _left(cn, under))] = cn
        x, y = role[(False, True)], role[(True, False)]
        a, b = role[(True, True)], role[(False, False)]
        verts.append(Vertex(VertexKind.POSITIVE if positive else VertexKind.NEGATIVE,
                            (reg(c[x]), reg(c[a]), reg(c[b]), reg(c[y]))))

    graph = DisjointSet()
    for u, v in sw.graph_links:
        graph.add(u)
        graph.add(v)
        graph.merge(u, v)
    k = graph.n_subsets
    R = len(reps)
    used = {r for v in verts for r in v.regions}
    free = R - len(used) if verts else 0
    return MarkedGraphDiagram(R, tuple(verts), name, k, free)
