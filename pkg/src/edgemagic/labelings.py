"""Total labelings of graphs and the magic-valence checks built on them.

A total labeling assigns the labels 1..p+q bijectively to the p vertices and
q edges of a graph.  It is edge magic when every edge e = uv satisfies
f(u) + f(e) + f(v) = k for one constant k, the valence; a loop at v counts
its endpoint twice, contributing 2 f(v) + f(e).  A super edge magic labeling
is an edge magic labeling whose vertex labels are exactly 1..p.

The text format is one labeling per file: ``v <vertex> <label>`` and
``e <edge-index> <label>`` lines, with ``#`` comments allowed.
"""
from __future__ import annotations

from collections.abc import Mapping, Sequence
from dataclasses import dataclass

from .errors import InvalidLabelingError, ParseError
from .graphs import Graph

__all__ = [
    "TotalLabeling",
    "check_total_labeling",
    "check_vertex_labeling",
    "valence_of",
    "is_super_edge_magic",
    "induced_sums",
    "extend_vertex_labeling",
    "complement",
    "transport",
    "parse_labeling",
    "format_labeling",
]


@dataclass(frozen=True)
class TotalLabeling:
    """Labels for the vertices and edges of a graph, addressed by position."""

    vertex_labels: tuple[int, ...]
    edge_labels: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertex_labels", tuple(int(x) for x in self.vertex_labels))
        object.__setattr__(self, "edge_labels", tuple(int(x) for x in self.edge_labels))

    @property
    def p(self) -> int:
        return len(self.vertex_labels)

    @property
    def q(self) -> int:
        return len(self.edge_labels)

    def label_of_vertex(self, v: int) -> int:
        return self.vertex_labels[v - 1]

    def label_of_edge(self, i: int) -> int:
        return self.edge_labels[i - 1]


def check_total_labeling(G: Graph, f: TotalLabeling) -> None:
    """Raise InvalidLabelingError unless f is a bijection onto 1..p+q for G."""
    if f.p != G.p or f.q != G.q:
        raise InvalidLabelingError(
            f"labeling shape ({f.p} vertices, {f.q} edges) does not match graph ({G.p}, {G.q})"
        )
    total = G.p + G.q
    if sorted(f.vertex_labels + f.edge_labels) != list(range(1, total + 1)):
        raise InvalidLabelingError(f"labels are not a bijection onto 1..{total}")


def check_vertex_labeling(G: Graph, g: Sequence[int]) -> None:
    """Raise InvalidLabelingError unless g is a bijection of the vertices onto 1..p."""
    if len(g) != G.p or sorted(g) != list(range(1, G.p + 1)):
        raise InvalidLabelingError(f"vertex labels are not a bijection onto 1..{G.p}")


def valence_of(G: Graph, f: TotalLabeling) -> int | None:
    """The constant edge sum of f on G, or None when the sums differ.

    Invalid labelings (wrong shape, not a bijection) raise rather than
    returning None, so callers can tell "not magic" from "not a labeling".
    Graphs without edges have no valence.
    """
    check_total_labeling(G, f)
    if G.q == 0:
        return None
    k = None
    for i, (u, v) in enumerate(G.edges):
        s = f.vertex_labels[u - 1] + f.vertex_labels[v - 1] + f.edge_labels[i]
        if k is None:
            k = s
        elif s != k:
            return None
    return k


def is_super_edge_magic(G: Graph, f: TotalLabeling) -> int | None:
    """The valence of f when f is edge magic with vertex labels 1..p, else None."""
    k = valence_of(G, f)
    if k is None:
        return None
    if sorted(f.vertex_labels) != list(range(1, G.p + 1)):
        return None
    return k


def induced_sums(G: Graph, g: Sequence[int]) -> tuple[int, ...]:
    """Endpoint label sums g(u) + g(v), one per edge in edge order."""
    if len(g) != G.p:
        raise InvalidLabelingError(f"expected {G.p} vertex labels, got {len(g)}")
    return tuple(g[u - 1] + g[v - 1] for u, v in G.edges)


def extend_vertex_labeling(G: Graph, g: Sequence[int]) -> TotalLabeling | None:
    """Complete a vertex labeling to a super edge magic labeling if possible.

    Works when the endpoint sums are q distinct consecutive integers: the
    edge whose sum is s then gets label p + q + min_sum - s, which makes
    every edge add up to p + q + min_sum.  Returns None when the sums do not
    form such a run.
    """
    check_vertex_labeling(G, g)
    if G.q == 0:
        return None
    sums = induced_sums(G, g)
    lo = min(sums)
    if sorted(sums) != list(range(lo, lo + G.q)):
        return None
    base = G.p + G.q + lo
    return TotalLabeling(tuple(g), tuple(base - s for s in sums))


def complement(G: Graph, f: TotalLabeling) -> TotalLabeling:
    """Replace every label x by p + q + 1 - x.

    Applying this to an edge magic labeling of valence k gives another edge
    magic labeling, of valence 3(p + q + 1) - k.
    """
    check_total_labeling(G, f)
    c = G.p + G.q + 1
    return TotalLabeling(
        tuple(c - x for x in f.vertex_labels),
        tuple(c - x for x in f.edge_labels),
    )


def transport(src: Graph, f: TotalLabeling, vertex_map: Mapping[int, int], dst: Graph) -> TotalLabeling:
    """Carry a labeling of src over to dst along a vertex bijection.

    The map must send every edge of src onto an edge of dst.  Both graphs
    must have pairwise distinct endpoint pairs (loops are fine, parallel
    edges are not) so the edge correspondence is unambiguous.
    """
    check_total_labeling(src, f)
    if (src.p, src.q) != (dst.p, dst.q):
        raise ValueError("graphs must share vertex and edge counts")
    if sorted(vertex_map) != list(range(1, src.p + 1)) or sorted(vertex_map.values()) != list(
        range(1, dst.p + 1)
    ):
        raise ValueError("vertex_map must be a bijection between the vertex sets")
    if len(set(src.edges)) != src.q or len(set(dst.edges)) != dst.q:
        raise ValueError("transport needs pairwise distinct edge pairs on both sides")
    pos = {e: i for i, e in enumerate(dst.edges)}
    vl = [0] * dst.p
    for v in range(1, src.p + 1):
        vl[vertex_map[v] - 1] = f.vertex_labels[v - 1]
    el = [0] * dst.q
    for i, (u, v) in enumerate(src.edges):
        a, b = vertex_map[u], vertex_map[v]
        key = (a, b) if a <= b else (b, a)
        if key not in pos:
            raise ValueError(f"edge ({u}, {v}) of the source has no image edge in the target")
        el[pos[key]] = f.edge_labels[i]
    return TotalLabeling(tuple(vl), tuple(el))


def parse_labeling(text: str, p: int, q: int) -> TotalLabeling:
    """Parse a labeling file for a graph with p vertices and q edges.

    Every vertex and edge index must be assigned exactly once and the labels
    must form a bijection onto 1..p+q.
    """
    vl: dict[int, int] = {}
    el: dict[int, int] = {}
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3 or parts[0] not in ("v", "e"):
            raise ParseError("expected 'v <vertex> <label>' or 'e <edge-index> <label>'", ln)
        try:
            idx, lab = int(parts[1]), int(parts[2])
        except ValueError:
            raise ParseError("indices and labels must be integers", ln) from None
        bound, store = (p, vl) if parts[0] == "v" else (q, el)
        if not 1 <= idx <= bound:
            raise ParseError(f"index {idx} out of range 1..{bound}", ln)
        if idx in store:
            raise ParseError(f"duplicate assignment for {parts[0]} {idx}", ln)
        store[idx] = lab
    if sorted(vl) != list(range(1, p + 1)):
        raise ParseError(f"labeling must cover all {p} vertices")
    if sorted(el) != list(range(1, q + 1)):
        raise ParseError(f"labeling must cover all {q} edges")
    f = TotalLabeling(tuple(vl[i] for i in range(1, p + 1)), tuple(el[i] for i in range(1, q + 1)))
    total = p + q
    if sorted(f.vertex_labels + f.edge_labels) != list(range(1, total + 1)):
        raise ParseError(f"labels are not a bijection onto 1..{total}")
    return f


def format_labeling(f: TotalLabeling) -> str:
    lines = [f"v {v} {lab}" for v, lab in enumerate(f.vertex_labels, 1)]
    lines.extend(f"e {i} {lab}" for i, lab in enumerate(f.edge_labels, 1))
    return "\n".join(lines) + "\n"
