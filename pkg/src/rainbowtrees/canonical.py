"""The canonical extremal coloring of K_n and its explicit optimal partition.

For a color count r with threshold t (see formula.f_of_r), the construction
picks a core set of t vertices and one hub vertex, then

  1. gives the core clique distinct colors 1..C(t,2), in lexicographic
     edge order;
  2. assigns each leftover color C(t,2)+1, C(t,2)+2, ... to a core-hub edge,
     in core vertex order;
  3. colors every remaining edge with the one still-unused color if there is
     one (exactly the case r = C(t+1,2)+1), otherwise with color 1.

The step-3 tie-break is a documented choice: any single already-used color
keeps the outside monochromatic, and 1 is the deterministic minimum.  It can
be overridden via `fill_color` to check that results do not depend on it.

This coloring maximizes the number of trees needed: exactly
ceil((n - t) / 2) vertex-disjoint rainbow trees, exhibited by
extremal_partition() as one rainbow spanning tree on the core + hub + one
extra vertex, plus a perfect matching (and possibly a singleton) on the rest.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .coloring import EdgeColoring, Tree, TreePartition
from .errors import RainbowTreeMissingError
from .formula import f_of_r
from .rainbow import rainbow_spanning_tree


@dataclass(frozen=True)
class CanonicalLayout:
    """Vertex roles and bookkeeping of the canonical coloring."""

    t: int
    core: tuple            # vertices 0..t-1, a rainbow clique
    hub: int               # vertex t, carries the leftover colors
    extra: int | None      # vertex t+1 when n >= t+2, else None
    fill_color: int | None  # step-3 color, None when no edge remains
    hub_edges: dict        # leftover color -> its core-hub edge


def generate_canonical(n: int, r: int, fill_color: int | None = None):
    """Build the canonical coloring; returns (EdgeColoring, CanonicalLayout)."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    if not 2 <= r <= comb(n, 2):
        raise ValueError(f"need 2 <= r <= C({n},2)={comb(n, 2)}, got {r}")
    t = f_of_r(r)
    core = tuple(range(t))
    hub = t
    colors: dict = {}
    next_color = 1
    for u in range(t):
        for v in range(u + 1, t):
            colors[(u, v)] = next_color
            next_color += 1
    hub_edges: dict = {}
    i = 0
    while next_color <= r and i < t:
        colors[(i, hub)] = next_color
        hub_edges[next_color] = (i, hub)
        next_color += 1
        i += 1

    remaining = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in colors
    ]
    if next_color == r:
        # exactly one color was never placed; step 3 must use it
        if fill_color is not None:
            raise ValueError(f"fill color is forced to {r} when r = C(t+1,2)+1")
        fill = r
        if not remaining:
            raise AssertionError("unused color with no remaining edge to carry it")
    elif remaining:
        fill = 1 if fill_color is None else fill_color
        if not 1 <= fill <= r:
            raise ValueError(f"fill color {fill} out of range 1..{r}")
    else:
        fill = None
    for e in remaining:
        colors[e] = fill

    extra = t + 1 if n >= t + 2 else None
    layout = CanonicalLayout(t, core, hub, extra, fill, hub_edges)
    return EdgeColoring(n, r, colors, complete=True), layout


def extremal_partition(c: EdgeColoring, layout: CanonicalLayout) -> TreePartition:
    """The optimal partition of a canonical coloring: ceil((n-t)/2) trees."""
    block = list(layout.core) + [layout.hub]
    if layout.extra is not None:
        block.append(layout.extra)
    try:
        forest = rainbow_spanning_tree(c, block)
    except RainbowTreeMissingError as exc:
        raise RainbowTreeMissingError(
            f"canonical core block {block} lost its guaranteed rainbow spanning tree"
        ) from exc
    trees = [Tree.make(block, forest.edges)]
    rest = list(range(max(block) + 1, c.n))
    for j in range(0, len(rest) - 1, 2):
        a, b = rest[j], rest[j + 1]
        trees.append(Tree.make([a, b], [(a, b, c.color_of(a, b))]))
    if len(rest) % 2 == 1:
        trees.append(Tree.make([rest[-1]]))
    return TreePartition(tuple(trees))
