"""Depth-bounded crystal graphs: generation, comparison, counting, export.

Graphs are generated by repeated lowering from a highest-weight root (the
empty partition, or the monomial Y(0,0)).  Every lowering step adds one box
worth of depth, so breadth-first levels are well defined and vertex ids are
canonical: root is 0, children are explored by ascending color, and a
vertex keeps the id it got on first discovery.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Callable

from .arms import ArmSequence, horizontal_arm, is_regular
from .errors import DepthMismatch, ParseError, RankMismatch
from .monomial_crystal import f_m, format_monomial, y
from .partition_crystal import f_down
from .partitions import Partition, check_rank, partitions_of_size

PARTITION_MODEL = "partition"
MONOMIAL_MODEL = "monomial"


@dataclass
class CrystalGraph:
    """Rooted digraph with residue-colored edges and canonical text labels."""

    model: str
    n: int
    depth: int
    arm: str | None
    vertices: list[str]
    edges: list[tuple[int, int, int]]
    root: int = 0

    def out_edges(self) -> list[dict[int, int]]:
        """Per-vertex map color -> destination id."""
        out: list[dict[int, int]] = [{} for _ in self.vertices]
        for src, dst, color in self.edges:
            out[src][color] = dst
        return out


def generate_graph(
    model: str, n: int, depth: int, a: ArmSequence | None = None
) -> CrystalGraph:
    """All vertices within ``depth`` lowering steps of the root, with every
    lowering edge among them."""
    check_rank(n)
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    if model == PARTITION_MODEL:
        if a is None:
            a = horizontal_arm(n)
        root = Partition()

        def step(v, i):
            return f_down(v, i, a)

        def label(v):
            return str(v)

        arm_descriptor = a.descriptor
    elif model == MONOMIAL_MODEL:
        root = y(n, 0, 0)

        def step(v, i):
            return f_m(v, i)

        def label(v):
            return format_monomial(v)

        arm_descriptor = None
    else:
        raise ValueError(f"unknown model {model!r}")

    vertices = [label(root)]
    ids = {root: 0}
    edges: list[tuple[int, int, int]] = []
    frontier = [root]
    for _ in range(depth):
        nxt = []
        for v in frontier:
            src = ids[v]
            for i in range(n):
                w = step(v, i)
                if w is None:
                    continue
                if w not in ids:
                    ids[w] = len(vertices)
                    vertices.append(label(w))
                    nxt.append(w)
                edges.append((src, ids[w], i))
        frontier = nxt
    return CrystalGraph(
        model=model,
        n=n,
        depth=depth,
        arm=arm_descriptor,
        vertices=vertices,
        edges=edges,
    )


@dataclass
class GraphMismatch:
    """First divergence found by the synchronized traversal."""

    kind: str
    vertex1: int | None = None
    vertex2: int | None = None
    color: int | None = None
    detail: str = ""

    def __str__(self):
        where = f" at v{self.vertex1}/v{self.vertex2}" if self.vertex1 is not None else ""
        color = f" color {self.color}" if self.color is not None else ""
        tail = f": {self.detail}" if self.detail else ""
        return f"{self.kind}{where}{color}{tail}"


@dataclass
class GraphComparison:
    """Either a total vertex bijection or a mismatch witness."""

    bijection: dict[int, int] | None = None
    mismatch: GraphMismatch | None = None

    @property
    def isomorphic(self) -> bool:
        return self.mismatch is None


def compare_graphs(
    g1: CrystalGraph,
    g2: CrystalGraph,
    label_map: Callable[[str], str] | None = None,
) -> GraphComparison:
    """Synchronized traversal from the roots following equal-colored edges.

    Returns the vertex bijection when it is total and consistent, else the
    first divergence.  When ``label_map`` is given, each paired vertex must
    also satisfy label_map(label1) == label2.
    """
    if g1.n != g2.n:
        raise RankMismatch(f"ranks differ: {g1.n} vs {g2.n}")
    if g1.depth != g2.depth:
        raise DepthMismatch(f"depths differ: {g1.depth} vs {g2.depth}")

    out1, out2 = g1.out_edges(), g2.out_edges()
    fwd: dict[int, int] = {}
    bwd: dict[int, int] = {}

    def fail(kind, v1=None, v2=None, color=None, detail=""):
        return GraphComparison(
            mismatch=GraphMismatch(kind, v1, v2, color, detail)
        )

    def pair(v1, v2):
        if fwd.get(v1, v2) != v2 or bwd.get(v2, v1) != v1:
            return False
        fresh = v1 not in fwd
        fwd[v1], bwd[v2] = v2, v1
        return True if fresh else None

    state = pair(g1.root, g2.root)
    if state is False:
        return fail("root-pairing", g1.root, g2.root)
    if label_map is not None:
        mapped = label_map(g1.vertices[g1.root])
        if mapped != g2.vertices[g2.root]:
            return fail(
                "label-mismatch", g1.root, g2.root,
                detail=f"{mapped!r} != {g2.vertices[g2.root]!r}",
            )
    queue = deque([(g1.root, g2.root)])
    while queue:
        v1, v2 = queue.popleft()
        colors = set(out1[v1]) | set(out2[v2])
        for color in sorted(colors):
            w1 = out1[v1].get(color)
            w2 = out2[v2].get(color)
            if (w1 is None) != (w2 is None):
                side = "first" if w2 is None else "second"
                return fail(
                    "edge-presence", v1, v2, color,
                    detail=f"only the {side} graph lowers here",
                )
            state = pair(w1, w2)
            if state is False:
                return fail(
                    "inconsistent-pairing", w1, w2, color,
                    detail="conflicts with an earlier pairing",
                )
            if state is True:
                if label_map is not None:
                    mapped = label_map(g1.vertices[w1])
                    if mapped != g2.vertices[w2]:
                        return fail(
                            "label-mismatch", w1, w2, color,
                            detail=f"{mapped!r} != {g2.vertices[w2]!r}",
                        )
                queue.append((w1, w2))
    if len(fwd) != len(g1.vertices) or len(bwd) != len(g2.vertices):
        return fail(
            "unreached-vertices",
            detail=f"paired {len(fwd)} of {len(g1.vertices)}/{len(g2.vertices)}",
        )
    return GraphComparison(bijection=fwd)


def count_regular(n: int, a: ArmSequence, max_size: int) -> list[int]:
    """Number of regular partitions of each size 0..max_size, by exhaustive
    enumeration."""
    check_rank(n)
    if max_size < 0:
        raise ValueError(f"max_size must be >= 0, got {max_size}")
    return [
        sum(1 for lam in partitions_of_size(m) if is_regular(lam, a))
        for m in range(max_size + 1)
    ]


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: CrystalGraph) -> str:
    """GraphViz text; node names v<id>, node label the canonical text,
    edge label the color."""
    lines = ["digraph crystal {"]
    for vid, label in enumerate(g.vertices):
        lines.append(f"  v{vid} [label={_dot_quote(label)}];")
    for src, dst, color in g.edges:
        lines.append(f'  v{src} -> v{dst} [label="{color}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(g: CrystalGraph) -> str:
    """Schema-stable JSON, byte-deterministic for a given graph."""
    doc = {
        "model": g.model,
        "n": g.n,
        "arm": g.arm,
        "depth": g.depth,
        "root": g.root,
        "vertices": [{"id": vid, "label": label} for vid, label in enumerate(g.vertices)],
        "edges": [{"src": s, "dst": d, "color": c} for s, d, c in g.edges],
    }
    return json.dumps(doc, indent=2) + "\n"


def graph_from_json(text: str) -> CrystalGraph:
    """Inverse of :func:`export_json`."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad graph JSON: {exc}") from None
    try:
        vertices_field = doc["vertices"]
        vertices = [""] * len(vertices_field)
        for entry in vertices_field:
            vertices[entry["id"]] = entry["label"]
        edges = [(e["src"], e["dst"], e["color"]) for e in doc["edges"]]
        return CrystalGraph(
            model=doc["model"],
            n=doc["n"],
            depth=doc["depth"],
            arm=doc["arm"],
            vertices=vertices,
            edges=edges,
            root=doc["root"],
        )
    except (KeyError, IndexError, TypeError) as exc:
        raise ParseError(f"graph JSON missing fields: {exc!r}") from None
