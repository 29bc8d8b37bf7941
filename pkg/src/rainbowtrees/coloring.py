"""Edge-colored graphs and rainbow tree partitions: data model, validation, I/O.

Vertices are integers 0..n-1, colors are integers 1..r, and every color must
appear on at least one edge.  Edges are unordered pairs, normally stored as
(u, v) with u < v.  A coloring may describe any simple graph; the `complete`
flag marks the usual case where the edge set is all C(n, 2) pairs.  The one
degenerate case is the single-vertex graph, which has r = 0.

Values are treated as immutable after construction and all operations here
are pure functions, so they are safe to share across concurrent workers.

File formats
------------
Coloring file: the first data line is ``n r``, then one line ``u v c`` per
edge with 0 <= u < v < n and 1 <= c <= r.  Lines starting with ``#`` are
comments, blank lines are skipped, duplicate edges are rejected, and
completeness is inferred from the edge count.  Writing is deterministic
(edges in lexicographic order), so equal colorings produce identical files.

Partition file: one line per tree, for example::

    tree 0 2 3 ; edges (0,2) (2,3)
    tree 4 ; edges

Edge colors are not stored in partition files; they are looked up from the
accompanying coloring when the file is read back.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from pathlib import Path

from .errors import FileFormatError
from .unionfind import UnionFind


@dataclass(frozen=True)
class Violation:
    """One invariant violation found by validate()."""

    code: str
    info: tuple = ()

    def __str__(self) -> str:
        if self.info:
            return f"{self.code}{self.info!r}"
        return self.code


@dataclass(frozen=True)
class EdgeColoring:
    """An edge-colored simple graph.

    `colors` maps unordered vertex pairs to colors.  The constructor stores
    the mapping as given; use validate() to check the invariants (vertex
    ranges, color surjectivity, completeness).
    """

    n: int
    r: int
    colors: dict
    complete: bool | None = None

    def __post_init__(self):
        object.__setattr__(self, "colors", dict(self.colors))
        if self.complete is None:
            object.__setattr__(self, "complete", len(self.colors) == comb(self.n, 2))

    __hash__ = None

    @property
    def num_edges(self) -> int:
        return len(self.colors)

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.colors or (v, u) in self.colors

    def color_of(self, u: int, v: int) -> int:
        try:
            return self.colors[(u, v)]
        except KeyError:
            return self.colors[(v, u)]

    def edges(self) -> list[tuple[int, int, int]]:
        """All edges as (u, v, color) with u < v, in lexicographic order."""
        out = [(min(u, v), max(u, v), c) for (u, v), c in self.colors.items()]
        out.sort()
        return out

    def color_classes(self) -> dict[int, list[tuple[int, int]]]:
        """Map each color to its lexicographically sorted edge list."""
        classes: dict[int, list[tuple[int, int]]] = {}
        for u, v, c in self.edges():
            classes.setdefault(c, []).append((u, v))
        return classes


@dataclass(frozen=True)
class Tree:
    """One tree of a partition: a vertex set plus colored edges."""

    vertices: frozenset
    edges: tuple

    @classmethod
    def make(cls, vertices, edges=()) -> "Tree":
        return cls(frozenset(vertices), tuple(sorted(edges)))


@dataclass(frozen=True)
class TreePartition:
    """Vertex-disjoint trees covering all vertices of a coloring."""

    trees: tuple

    @property
    def count(self) -> int:
        return len(self.trees)

    def covered_vertices(self) -> frozenset:
        out: set = set()
        for t in self.trees:
            out |= t.vertices
        return frozenset(out)


def rainbow_complete(n: int) -> EdgeColoring:
    """K_n with every edge its own color, in lexicographic edge order."""
    colors = {}
    c = 1
    for u in range(n):
        for v in range(u + 1, n):
            colors[(u, v)] = c
            c += 1
    return EdgeColoring(n, comb(n, 2), colors, complete=True)


def monochromatic_complete(n: int) -> EdgeColoring:
    """K_n with every edge colored 1 (r = 0 for the single-vertex graph)."""
    colors = {(u, v): 1 for u in range(n) for v in range(u + 1, n)}
    return EdgeColoring(n, 1 if n >= 2 else 0, colors, complete=True)


def validate(c: EdgeColoring) -> list[Violation]:
    """Check every invariant; return all violations (empty list = valid)."""
    out: list[Violation] = []
    n, r = c.n, c.r
    if n < 1:
        out.append(Violation("BadVertexCount", (n,)))
        return out
    if n == 1:
        if r != 0:
            out.append(Violation("BadColorCount", (r,)))
    elif r < 1:
        out.append(Violation("BadColorCount", (r,)))

    seen: set = set()
    used_colors: set = set()
    for (u, v), col in sorted(c.colors.items()):
        ints = isinstance(u, int) and isinstance(v, int)
        if not (ints and 0 <= u < v < n):
            out.append(Violation("BadVertex", (u, v)))
        if ints:
            norm = (u, v) if u <= v else (v, u)
            if norm in seen:
                out.append(Violation("DuplicateEdge", norm))
            seen.add(norm)
        if not (isinstance(col, int) and 1 <= col <= r):
            out.append(Violation("BadColor", (u, v, col)))
        else:
            used_colors.add(col)
    for col in range(1, r + 1):
        if col not in used_colors:
            out.append(Violation("MissingColor", (col,)))
    if c.complete and len(c.colors) != comb(n, 2):
        out.append(Violation("IncompleteGraph", (len(c.colors), comb(n, 2))))
    return out


def is_partition_valid(c: EdgeColoring, p: TreePartition) -> tuple[bool, str | None]:
    """True iff p is a family of vertex-disjoint rainbow trees covering c.

    Returns (ok, first_violation_message).
    """
    if not p.trees:
        return False, "partition has no trees"
    covered: set = set()
    for i, t in enumerate(p.trees):
        if not t.vertices:
            return False, f"tree {i} is empty"
        overlap = covered & t.vertices
        if overlap:
            return False, f"vertex {min(overlap)} appears in more than one tree"
        covered |= t.vertices
        for v in t.vertices:
            if not (0 <= v < c.n):
                return False, f"tree {i} contains out-of-range vertex {v}"
        if len(t.edges) != len(t.vertices) - 1:
            return False, f"tree {i} has {len(t.edges)} edges for {len(t.vertices)} vertices"
        index = {v: j for j, v in enumerate(sorted(t.vertices))}
        uf = UnionFind(len(index))
        tree_colors: set = set()
        for (u, v, col) in t.edges:
            if u not in t.vertices or v not in t.vertices:
                return False, f"tree {i} edge ({u},{v}) leaves its vertex set"
            if not c.has_edge(u, v):
                return False, f"tree {i} edge ({u},{v}) is not in the graph"
            if c.color_of(u, v) != col:
                return False, f"tree {i} edge ({u},{v}) recorded with wrong color {col}"
            if col in tree_colors:
                return False, f"tree {i} repeats color {col}"
            tree_colors.add(col)
            if not uf.union(index[u], index[v]):
                return False, f"tree {i} contains a cycle through ({u},{v})"
    if covered != set(range(c.n)):
        missing = min(set(range(c.n)) - covered)
        return False, f"vertex {missing} is not covered"
    return True, None


def merge_colors(c: EdgeColoring, src: int, dst: int) -> EdgeColoring:
    """Recolor every `src` edge to `dst`, then renumber colors densely.

    Colors above `src` shift down by one, so the result is a valid
    (r-1)-edge-coloring: `dst` only gains edges, every other color keeps its
    edges, and no color index is left unused.
    """
    if src == dst:
        raise ValueError("merge_colors requires two distinct colors")
    for col in (src, dst):
        if not 1 <= col <= c.r:
            raise ValueError(f"color {col} out of range 1..{c.r}")
    merged = {}
    for (u, v), col in c.colors.items():
        if col == src:
            col = dst
        if col > src:
            col -= 1
        merged[(u, v)] = col
    return EdgeColoring(c.n, c.r - 1, merged, complete=c.complete)


@dataclass(frozen=True)
class RestrictionMaps:
    """Old-to-new renumberings produced by restrict()."""

    vertex_map: dict
    color_map: dict

    def vertices_back(self) -> dict:
        return {new: old for old, new in self.vertex_map.items()}

    def colors_back(self) -> dict:
        return {new: old for old, new in self.color_map.items()}


def restrict(c: EdgeColoring, keep) -> tuple[EdgeColoring, RestrictionMaps]:
    """Induced coloring on `keep`, with vertices and colors renumbered.

    Vertices are renumbered 0..|keep|-1 in increasing order; surviving colors
    are renumbered 1..r0 preserving their relative order.
    """
    kept = sorted(set(keep))
    if not kept:
        raise ValueError("restrict requires a nonempty vertex set")
    if kept[0] < 0 or kept[-1] >= c.n:
        raise ValueError("restrict vertex set out of range")
    vmap = {old: new for new, old in enumerate(kept)}
    keep_set = set(kept)
    induced = {}
    for (u, v), col in c.colors.items():
        if u in keep_set and v in keep_set:
            a, b = vmap[u], vmap[v]
            if a > b:
                a, b = b, a
            induced[(a, b)] = col
    surviving = sorted(set(induced.values()))
    cmap = {old: new for new, old in enumerate(surviving, start=1)}
    recolored = {e: cmap[col] for e, col in induced.items()}
    sub = EdgeColoring(len(kept), len(surviving), recolored)
    return sub, RestrictionMaps(vmap, cmap)


# ---------------------------------------------------------------------------
# file I/O


def format_coloring(c: EdgeColoring) -> str:
    lines = [f"{c.n} {c.r}"]
    for u, v, col in c.edges():
        lines.append(f"{u} {v} {col}")
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    n = r = None
    colors: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2:
                raise FileFormatError("expected header `n r`", lineno)
            try:
                n, r = int(parts[0]), int(parts[1])
            except ValueError:
                raise FileFormatError("header values must be integers", lineno) from None
            if n < 1 or r < 0:
                raise FileFormatError(f"bad header n={n} r={r}", lineno)
            continue
        if len(parts) != 3:
            raise FileFormatError("expected edge line `u v c`", lineno)
        try:
            u, v, col = (int(x) for x in parts)
        except ValueError:
            raise FileFormatError("edge values must be integers", lineno) from None
        if not 0 <= u < v < n:
            raise FileFormatError(f"bad edge ({u},{v}); need 0 <= u < v < {n}", lineno)
        if not 1 <= col <= r:
            raise FileFormatError(f"color {col} out of range 1..{r}", lineno)
        if (u, v) in colors:
            raise FileFormatError(f"duplicate edge ({u},{v})", lineno)
        colors[(u, v)] = col
    if n is None:
        raise FileFormatError("empty coloring file")
    return EdgeColoring(n, r, colors)


def read_coloring(path) -> EdgeColoring:
    return parse_coloring(Path(path).read_text())


def write_coloring(c: EdgeColoring, path) -> None:
    Path(path).write_text(format_coloring(c))


def format_partition(p: TreePartition) -> str:
    lines = []
    for t in p.trees:
        verts = " ".join(str(v) for v in sorted(t.vertices))
        edge_part = " ".join(f"({u},{v})" for u, v, _ in sorted(t.edges))
        line = f"tree {verts} ; edges"
        if edge_part:
            line += " " + edge_part
        lines.append(line)
    return "\n".join(lines) + "\n"


def parse_partition(text: str, c: EdgeColoring) -> TreePartition:
    trees = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ";" not in line:
            raise FileFormatError("expected `tree ... ; edges ...`", lineno)
        head, tail = line.split(";", 1)
        head_parts = head.split()
        if not head_parts or head_parts[0] != "tree":
            raise FileFormatError("tree line must start with `tree`", lineno)
        try:
            verts = [int(x) for x in head_parts[1:]]
        except ValueError:
            raise FileFormatError("tree vertices must be integers", lineno) from None
        if not verts:
            raise FileFormatError("tree has no vertices", lineno)
        tail_parts = tail.split()
        if not tail_parts or tail_parts[0] != "edges":
            raise FileFormatError("edge list must start with `edges`", lineno)
        edges = []
        for token in tail_parts[1:]:
            if not (token.startswith("(") and token.endswith(")")):
                raise FileFormatError(f"bad edge token {token!r}", lineno)
            try:
                u, v = (int(x) for x in token[1:-1].split(","))
            except ValueError:
                raise FileFormatError(f"bad edge token {token!r}", lineno) from None
            if not c.has_edge(u, v):
                raise FileFormatError(f"edge ({u},{v}) not present in the coloring", lineno)
            edges.append((min(u, v), max(u, v), c.color_of(u, v)))
        trees.append(Tree.make(verts, edges))
    return TreePartition(tuple(trees))


def read_partition(path, c: EdgeColoring) -> TreePartition:
    return parse_partition(Path(path).read_text(), c)


def write_partition(p: TreePartition, path) -> None:
    Path(path).write_text(format_partition(p))
