"""Split doublings of bipartite graphs and the duality tests they support.

Start from a simple bipartite graph with stable parts X and Y, split its
edge set into two parts, and pick a copy count n.  The split doubling
(s2n for short, split to n copies) keeps the original vertices and adds n
fresh copies of each.  Original edges stay.  An edge in the first part
additionally joins its X endpoint to every copy of its Y endpoint; an
edge in the second part joins every copy of its X endpoint to the Y
endpoint.

Orient first-part edges from X to Y and second-part edges the other way,
and the doubling becomes the tensor style composition of that orientation
with a star with loop on n leaves.  The composition rules in the products
module then turn each edge magic labeling of the base graph into a family
of edge magic labelings of the doubling, one per star center, without any
search.

The implication runs backwards too: a graph presented as a split doubling
must reach at least as many valences as the composition guarantees, so a
shortfall certifies that no edge split of the base graph produces it.
obstruction_report runs those tests.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import BudgetExceededError
from .graphs import (
    Bipartition,
    Digraph,
    Graph,
    bipartition,
    check_bipartition,
    edges_match_under,
    underlying,
)
from .labelings import TotalLabeling, is_super_edge_magic, transport, valence_of
from .products import (
    ArcAssignment,
    LabeledDigraph,
    star_loop_labeling,
    induced_labeling_from_sem_factors,
    tensor_product,
)
from .search import DEFAULT_CAP, em_spectrum, sem_spectrum

__all__ = [
    "Decomposition",
    "check_decomposition",
    "enumerate_2_decompositions",
    "orient_for_decomposition",
    "S2nGraph",
    "build_s2n",
    "s2n_iso_map",
    "verify_s2n_iso",
    "induced_s2n_labeling",
    "ObstructionReport",
    "obstruction_report",
]


def check_decomposition(G: Graph, part1: frozenset[int], part2: frozenset[int]) -> bool:
    """True when part1 and part2 split the edge indices 1..q of G exactly."""
    full = frozenset(range(1, G.q + 1))
    return (part1 | part2) == full and not (part1 & part2)


@dataclass(frozen=True)
class Decomposition:
    """An ordered split of a graph's edge set into two index parts.

    Parts may be empty; edge indices are 1-based positions in base.edges.
    """

    base: Graph
    part1: frozenset[int]
    part2: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "part1", frozenset(self.part1))
        object.__setattr__(self, "part2", frozenset(self.part2))
        if not check_decomposition(self.base, self.part1, self.part2):
            raise ValueError("parts must split the edge indices exactly")


def enumerate_2_decompositions(
    G: Graph, include_empty: bool = False, cap: int = 20
) -> Iterator[Decomposition]:
    """All ordered splits of G's edge set into two parts, one per subset.

    Subsets are emitted in increasing binary order, bit i-1 of the mask
    placing edge i in the first part.  Splits with an empty part are
    skipped unless include_empty is set, giving 2^q - 2 splits by default
    and 2^q with the flag.  Refuses graphs with more than cap edges.
    """
    if G.q > cap:
        raise BudgetExceededError(
            f"refusing to enumerate 2^{G.q} splits: q exceeds cap {cap}"
        )
    full = frozenset(range(1, G.q + 1))
    for mask in range(2 ** G.q):
        part1 = frozenset(i for i in full if mask >> (i - 1) & 1)
        if not include_empty and (not part1 or len(part1) == G.q):
            continue
        yield Decomposition(G, part1, full - part1)


def orient_for_decomposition(G: Graph, bip: Bipartition, d: Decomposition) -> Digraph:
    """Orient G's edges by part: first part X to Y, second part Y to X.

    Arc i is the oriented version of edge i, so edge order is preserved.
    """
    if d.base != G:
        raise ValueError("decomposition belongs to a different graph")
    if not check_bipartition(G, bip):
        raise ValueError("not a bipartition of this graph")
    arcs = []
    for i, (u, v) in enumerate(G.edges, start=1):
        x, y = (u, v) if u in bip.X else (v, u)
        arcs.append((x, y) if i in d.part1 else (y, x))
    return Digraph(G.p, tuple(arcs))


@dataclass(frozen=True)
class S2nGraph:
    """A split doubling with its building data and vertex roles.

    Vertices 1..p are the originals; copy block k occupies k*p+1 ..
    (k+1)*p, X copies (in sorted original order) before Y copies.  Edges
    start with the base edges in order, then for each copy level k the
    level's cross edges in base edge order.  roles holds one (side,
    level) pair per vertex, level 0 meaning original.
    """

    base: Graph
    parts: Bipartition
    split: Decomposition
    n: int
    graph: Graph
    roles: tuple[tuple[str, int], ...]

    def copy_index(self, v: int, k: int) -> int:
        """The vertex holding copy k of original vertex v, k in 1..n."""
        if not 1 <= k <= self.n:
            raise ValueError(f"copy level must lie in 1..{self.n}")
        xs = sorted(self.parts.X)
        if v in self.parts.X:
            off = xs.index(v) + 1
        else:
            off = len(xs) + sorted(self.parts.Y).index(v) + 1
        return k * self.base.p + off


def build_s2n(G: Graph, bip: Bipartition, d: Decomposition, n: int) -> S2nGraph:
    """Construct the split doubling of G for the given split and copy count."""
    if n < 1:
        raise ValueError("need at least one copy")
    if not G.is_simple():
        raise ValueError("doubling needs a simple graph")
    if d.base != G:
        raise ValueError("decomposition belongs to a different graph")
    if not check_bipartition(G, bip):
        raise ValueError("not a bipartition of this graph")
    xs, ys = sorted(bip.X), sorted(bip.Y)
    off = {v: i for i, v in enumerate(xs, start=1)}
    off.update({v: len(xs) + i for i, v in enumerate(ys, start=1)})

    def copy_of(v: int, k: int) -> int:
        return k * G.p + off[v]

    edges = list(G.edges)
    for k in range(1, n + 1):
        for i, (u, v) in enumerate(G.edges, start=1):
            x, y = (u, v) if u in bip.X else (v, u)
            if i in d.part1:
                edges.append((x, copy_of(y, k)))
            else:
                edges.append((copy_of(x, k), y))

    roles = [("x", 0) if v in bip.X else ("y", 0) for v in range(1, G.p + 1)]
    for k in range(1, n + 1):
        roles.extend(("x", k) for _ in xs)
        roles.extend(("y", k) for _ in ys)
    return S2nGraph(
        base=G,
        parts=bip,
        split=d,
        n=n,
        graph=Graph(G.p * (n + 1), tuple(edges)),
        roles=tuple(roles),
    )


def s2n_iso_map(s: S2nGraph, center: int = 1) -> dict[int, int]:
    """Vertex bijection from the star composition onto the doubling.

    The composition of the split orientation with an (n+1)-vertex star
    member numbers its vertices (n+1)*(a-1) + i for original vertex a and
    fiber position i.  Fiber position `center` (where the member's center
    sits) carries the originals; the remaining positions carry copy
    levels 1..n in order, skipping the center position.
    """
    n = s.n
    if not 1 <= center <= n + 1:
        raise ValueError(f"center position must lie in 1..{n + 1}")
    out: dict[int, int] = {}
    for a in range(1, s.base.p + 1):
        for i in range(1, n + 2):
            src = (n + 1) * (a - 1) + i
            if i == center:
                out[src] = a
            else:
                out[src] = s.copy_index(a, i if i < center else i - 1)
    return out


def verify_s2n_iso(G: Graph, bip: Bipartition, d: Decomposition, n: int) -> bool:
    """Check that the doubling really is the star composition in disguise.

    Builds both graphs independently and tests the explicit vertex
    bijection; the doubling is assembled edge by edge from the split
    while the composition never looks at the split beyond orientation.
    """
    s = build_s2n(G, bip, d, n)
    D = orient_for_decomposition(G, bip, d)
    star = Digraph(n + 1, tuple((1, j) for j in range(1, n + 2)))
    prod = tensor_product(D, (star,) * G.q)
    return edges_match_under(underlying(prod), s.graph, s2n_iso_map(s, 1))


def induced_s2n_labeling(
    G: Graph,
    bip: Bipartition,
    d: Decomposition,
    n: int,
    f: TotalLabeling,
    r: int,
) -> tuple[S2nGraph, TotalLabeling, int]:
    """Edge magic labeling of the doubling induced by one of the base graph.

    f must be an edge magic labeling of G; r in 1..n+1 picks the center
    label of the star member and hence the valence (n+1)*(v-2) + r + 1,
    where v is the valence of f.  When f is super edge magic so is the
    induced labeling.  Returns the doubling, the labeling, its valence.
    """
    if valence_of(G, f) is None:
        raise ValueError("base labeling is not edge magic")
    s = build_s2n(G, bip, d, n)
    outer = LabeledDigraph(orient_for_decomposition(G, bip, d), f)
    star = star_loop_labeling(n, r)
    ind = induced_labeling_from_sem_factors(outer, ArcAssignment.constant(star, G.q))
    lab = transport(underlying(ind.product), ind.labeling, s2n_iso_map(s, r), s.graph)
    if valence_of(s.graph, lab) != ind.valence:
        raise RuntimeError("transported labeling lost the valence")
    if is_super_edge_magic(G, f) is not None:
        if is_super_edge_magic(s.graph, lab) != ind.valence:
            raise RuntimeError("transported labeling lost the vertex label range")
    return s, lab, ind.valence


@dataclass(frozen=True)
class ObstructionReport:
    """Outcome of testing a claimed split doubling against its base graph.

    instance records whether the candidate has the doubling shape at all
    for the given roles; when it does not, reason says why and every test
    is None.  h1_edges and h2_edges are the cross edges read off the
    candidate, as base vertex pairs (X endpoint first).  The three tests
    are each "pass", "obstruction" or "inconclusive: budget"; an
    obstruction certifies that no edge split of the base graph produces
    the candidate.  overall is one of "not-an-instance",
    "no-decomposition", "inconclusive" and "no-obstruction".
    """

    instance: bool
    reason: str | None
    n: int
    h1_edges: tuple[tuple[int, int], ...] | None
    h2_edges: tuple[tuple[int, int], ...] | None
    base_em_count: int | None
    base_sem_count: int | None
    star_em_count: int | None
    star_sem_count: int | None
    magic_test: str | None
    sem_count_test: str | None
    em_count_test: str | None
    overall: str


def _not_an_instance(n: int, reason: str) -> ObstructionReport:
    return ObstructionReport(
        instance=False,
        reason=reason,
        n=n,
        h1_edges=None,
        h2_edges=None,
        base_em_count=None,
        base_sem_count=None,
        star_em_count=None,
        star_sem_count=None,
        magic_test=None,
        sem_count_test=None,
        em_count_test=None,
        overall="not-an-instance",
    )


def obstruction_report(
    Gstar: Graph,
    roles: Sequence[tuple[str, int]],
    G: Graph,
    n: int,
    cap: int = DEFAULT_CAP,
) -> ObstructionReport:
    """Test whether Gstar can be a split doubling of G with the given roles.

    roles assigns each Gstar vertex a side ("x" or "y") and a copy level
    (0 for original); within one side and level, vertices correspond to
    the sorted base side by rank.  The structural pass extracts the two
    cross edge families and rejects anything the doubling never builds.
    A structurally valid candidate is then tested against what the star
    composition guarantees for every true split: the doubling of an edge
    magic graph stays edge magic (likewise super edge magic), reaches at
    least (n+1) times as many super edge magic valences, and at least
    (n+1) times as many edge magic valences plus two.  Tests whose
    hypothesis fails (a base graph with no labelings of that kind) pass
    vacuously; searches beyond cap leave a test inconclusive.
    """
    if n < 1:
        raise ValueError("need at least one copy")
    bip = bipartition(G)
    if bip is None or not G.is_simple():
        raise ValueError("base graph must be simple and bipartite")
    if len(roles) != Gstar.p:
        raise ValueError(f"need one role per vertex: {Gstar.p} vertices, {len(roles)} roles")
    classes: dict[tuple[str, int], list[int]] = {}
    for w, (side, k) in enumerate(roles, start=1):
        if side not in ("x", "y") or not 0 <= k <= n:
            raise ValueError(f"vertex {w} has undefined role ({side!r}, {k})")
        classes.setdefault((side, k), []).append(w)
    xs, ys = sorted(bip.X), sorted(bip.Y)
    for k in range(n + 1):
        if len(classes.get(("x", k), [])) != len(xs) or len(classes.get(("y", k), [])) != len(ys):
            raise ValueError(f"role classes at level {k} do not match the base sides")

    to_base: dict[int, tuple[str, int, int]] = {}
    for (side, k), members in classes.items():
        for w, b in zip(sorted(members), xs if side == "x" else ys):
            to_base[w] = (side, k, b)

    base_pairs: list[tuple[int, int]] = []
    h1_levels: dict[int, list[tuple[int, int]]] = {k: [] for k in range(1, n + 1)}
    h2_levels: dict[int, list[tuple[int, int]]] = {k: [] for k in range(1, n + 1)}
    for u, v in Gstar.edges:
        su, ku, bu = to_base[u]
        sv, kv, bv = to_base[v]
        if su == sv:
            return _not_an_instance(n, f"edge {{{u}, {v}}} stays on side {su}")
        (kx, bx), (ky, by) = ((ku, bu), (kv, bv)) if su == "x" else ((kv, bv), (ku, bu))
        if kx == 0 and ky == 0:
            base_pairs.append((bx, by))
        elif kx == 0:
            h1_levels[ky].append((bx, by))
        elif ky == 0:
            h2_levels[kx].append((bx, by))
        else:
            return _not_an_instance(
                n, f"edge {{{u}, {v}}} joins copy levels {kx} and {ky}"
            )

    expected = sorted(
        (u, v) if u in bip.X else (v, u) for u, v in G.edges
    )
    if sorted(base_pairs) != expected:
        return _not_an_instance(n, "level 0 does not reproduce the base graph")
    h1 = sorted(set(h1_levels[1]))
    h2 = sorted(set(h2_levels[1]))
    for k in range(1, n + 1):
        for levels, canon, name in ((h1_levels, h1, "first"), (h2_levels, h2, "second")):
            seen = levels[k]
            if len(seen) != len(set(seen)):
                return _not_an_instance(
                    n, f"{name} part cross edges repeat a pair at copy level {k}"
                )
            if sorted(seen) != canon:
                return _not_an_instance(
                    n, f"{name} part cross edges differ between copy levels"
                )

    def counts(H: Graph) -> tuple[int, int] | None:
        try:
            em = len(em_spectrum(H, cap).achieved)
            sem = len(sem_spectrum(H, cap).achieved)
        except BudgetExceededError:
            return None
        return em, sem

    base_counts = counts(G)
    star_counts = counts(Gstar)
    budget = "inconclusive: budget"

    if base_counts is None:
        magic_test = sem_count_test = em_count_test = budget
        base_em: int | None = None
        base_sem: int | None = None
    else:
        base_em, base_sem = base_counts
        if star_counts is None:
            magic_test = budget if base_em or base_sem else "pass"
            sem_count_test = budget if base_sem else "pass"
            em_count_test = budget if base_em else "pass"
        else:
            star_em, star_sem = star_counts
            broke_em = base_em > 0 and star_em == 0
            broke_sem = base_sem > 0 and star_sem == 0
            magic_test = "obstruction" if broke_em or broke_sem else "pass"
            sem_count_test = (
                "pass" if base_sem == 0 or star_sem >= (n + 1) * base_sem else "obstruction"
            )
            em_count_test = (
                "pass" if base_em == 0 or star_em >= (n + 1) * base_em + 2 else "obstruction"
            )

    tests = (magic_test, sem_count_test, em_count_test)
    if "obstruction" in tests:
        overall = "no-decomposition"
    elif budget in tests:
        overall = "inconclusive"
    else:
        overall = "no-obstruction"
    return ObstructionReport(
        instance=True,
        reason=None,
        n=n,
        h1_edges=tuple(h1),
        h2_edges=tuple(h2),
        base_em_count=base_em,
        base_sem_count=base_sem,
        star_em_count=None if star_counts is None else star_counts[0],
        star_sem_count=None if star_counts is None else star_counts[1],
        magic_test=magic_test,
        sem_count_test=sem_count_test,
        em_count_test=em_count_test,
        overall=overall,
    )
