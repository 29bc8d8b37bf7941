"""Polynomial-time rainbow tree partition of an edge-colored complete graph.

The algorithm keeps one representative edge per color and hill-climbs: while
some single representative reassignment strictly enlarges the largest
component of the chosen edges, apply the first such move (colors scanned in
increasing order, replacement edges in lexicographic order).  At a local
optimum the largest component is split off as one rainbow tree (its edges
all carry distinct colors, so any spanning tree of it is rainbow) and the
algorithm recurses on the complete graph induced by the remaining vertices.

Base cases: a single vertex is one tree; with one color a maximum matching
plus an optional singleton is optimal.

The number of trees produced is asserted against the closed-form bound
ceil((n - t) / 2) at every call; a violation raises ConstructionDefect
carrying the serialized instance, it is never accepted silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coloring import (
    EdgeColoring,
    Tree,
    TreePartition,
    format_coloring,
    is_partition_valid,
    restrict,
    validate,
)
from .errors import ConstructionDefect
from .formula import f_of_r, partition_number
from .unionfind import UnionFind


@dataclass(frozen=True)
class RepresentativeSubgraph:
    """One chosen edge per color; components ordered by decreasing size."""

    rep_edges: dict    # color -> (u, v)
    components: tuple  # frozensets, sorted by (-size, min vertex)

    @classmethod
    def from_edges(cls, rep_edges: dict) -> "RepresentativeSubgraph":
        return _from_reps(rep_edges)

    @property
    def largest_size(self) -> int:
        return len(self.components[0])

    @property
    def component_count(self) -> int:
        return len(self.components)


@dataclass(frozen=True)
class SwapMove:
    """Reassigning one color's representative to strictly grow the largest component."""

    color: int
    old_edge: tuple
    new_edge: tuple
    new_largest_size: int


def _from_reps(rep_edges: dict) -> RepresentativeSubgraph:
    verts = sorted({x for e in rep_edges.values() for x in e})
    index = {v: i for i, v in enumerate(verts)}
    uf = UnionFind(len(verts))
    for u, v in rep_edges.values():
        uf.union(index[u], index[v])
    groups: dict[int, set] = {}
    for v in verts:
        groups.setdefault(uf.find(index[v]), set()).add(v)
    comps = sorted(groups.values(), key=lambda g: (-len(g), min(g)))
    return RepresentativeSubgraph(dict(rep_edges), tuple(frozenset(g) for g in comps))


def initial_representatives(c: EdgeColoring) -> RepresentativeSubgraph:
    """The lexicographically smallest edge of each color."""
    classes = c.color_classes()
    return _from_reps({col: edges[0] for col, edges in classes.items()})


def find_swap(s: RepresentativeSubgraph, c: EdgeColoring) -> SwapMove | None:
    """First single-representative reassignment that strictly increases the
    largest component, or None when the subgraph is locally maximal."""
    n1 = s.largest_size
    classes = c.color_classes()
    for color in sorted(s.rep_edges):
        h = s.rep_edges[color]
        # component structure of the representatives minus h
        uf = UnionFind(c.n)
        for col2, (u, v) in s.rep_edges.items():
            if col2 != color:
                uf.union(u, v)
        sizes = sorted(
            ((uf.size[root], root) for root in range(c.n) if uf.find(root) == root),
            reverse=True,
        )
        top = sizes[:3]
        for g in classes[color]:
            if g == h:
                continue
            ra, rb = uf.find(g[0]), uf.find(g[1])
            if ra == rb:
                continue
            joined = uf.size[ra] + uf.size[rb]
            others = 0
            for size, root in top:
                if root != ra and root != rb:
                    others = size
                    break
            new_n1 = max(joined, others)
            if new_n1 > n1:
                return SwapMove(color, h, g, new_n1)
    return None


def apply_swap(s: RepresentativeSubgraph, move: SwapMove) -> RepresentativeSubgraph:
    reps = dict(s.rep_edges)
    reps[move.color] = move.new_edge
    return _from_reps(reps)


def _matching_trees(c: EdgeColoring, vertices: list[int]) -> list[Tree]:
    trees = []
    for i in range(0, len(vertices) - 1, 2):
        a, b = vertices[i], vertices[i + 1]
        trees.append(Tree.make([a, b], [(a, b, c.color_of(a, b))]))
    if len(vertices) % 2 == 1:
        trees.append(Tree.make([vertices[-1]]))
    return trees


def _spanning_tree_of_component(c: EdgeColoring, s: RepresentativeSubgraph) -> Tree:
    comp = s.components[0]
    inside = sorted(
        (min(e), max(e)) for e in s.rep_edges.values() if e[0] in comp and e[1] in comp
    )
    index = {v: i for i, v in enumerate(sorted(comp))}
    uf = UnionFind(len(comp))
    picked = []
    for u, v in inside:
        if uf.union(index[u], index[v]):
            picked.append((u, v, c.color_of(u, v)))
    return Tree.make(comp, picked)


def _defect(message: str, c: EdgeColoring) -> ConstructionDefect:
    return ConstructionDefect(message, instance_text=format_coloring(c))


def _construct(c: EdgeColoring, root: EdgeColoring, trace: list | None) -> list[Tree]:
    n, r = c.n, c.r
    if n == 1:
        if trace is not None:
            trace.append({"n": n, "r": r, "moves": 0, "largest": 1, "components": 0})
        return [Tree.make([0])]
    if r == 1:
        if trace is not None:
            trace.append({"n": n, "r": r, "moves": 0, "largest": 2, "components": 0})
        return _matching_trees(c, list(range(n)))

    s = initial_representatives(c)
    moves = 0
    while (move := find_swap(s, c)) is not None:
        s = apply_swap(s, move)
        moves += 1
        if moves > n - 2:
            raise _defect(f"hill-climb exceeded {n - 2} moves at n={n}, r={r}", root)

    n1 = s.largest_size
    k = s.component_count
    t = f_of_r(r)
    if k == 1 and n1 < t + 2 and n1 != n:
        raise _defect(
            f"locally maximal single component has order {n1} < t+2 = {t + 2} (n={n}, r={r})",
            root,
        )
    if trace is not None:
        trace.append({"n": n, "r": r, "moves": moves, "largest": n1, "components": k})

    first = _spanning_tree_of_component(c, s)
    leftover = [v for v in range(n) if v not in s.components[0]]
    if not leftover:
        return [first]
    sub, maps = restrict(c, leftover)
    vback = maps.vertices_back()
    cback = maps.colors_back()
    out = [first]
    for tree in _construct(sub, root, trace):
        verts = [vback[v] for v in tree.vertices]
        edges = []
        for u, v, col in tree.edges:
            a, b = vback[u], vback[v]
            if a > b:
                a, b = b, a
            edges.append((a, b, cback[col]))
        out.append(Tree.make(verts, edges))
    return out


def partition_complete(c: EdgeColoring, trace: list | None = None) -> TreePartition:
    """Partition a complete edge-colored graph into rainbow trees.

    The tree count is guaranteed at most ceil((n - t) / 2) by construction;
    pass a list as `trace` to collect one record per recursion level
    (n, r, accepted swap moves, largest component, component count).
    """
    bad = validate(c)
    if bad:
        raise ValueError("invalid coloring: " + ", ".join(str(v) for v in bad))
    if not c.complete:
        raise ValueError("partition_complete requires a complete graph")
    result = TreePartition(tuple(_construct(c, c, trace)))
    ok, why = is_partition_valid(c, result)
    if not ok:
        raise _defect(f"constructed partition is invalid: {why}", c)
    bound = partition_number(c.n, c.r)
    if result.count > bound:
        raise _defect(
            f"constructed {result.count} trees, above the bound {bound} (n={c.n}, r={c.r})",
            c,
        )
    return result
