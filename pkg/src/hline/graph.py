"""Core graph value type and exact small-graph algorithms.

Graphs are finite, simple, undirected, with dense 0-based vertex ids and
value semantics: two Graph objects compare equal exactly when they have the
same order and the same edge set.  Everything here is pure and deterministic;
the expensive operations (canonical labeling, longest-cycle search) are exact
and budgeted rather than heuristic, because every graph in scope is small.
"""

from __future__ import annotations

from collections import deque

from .budget import DEFAULT_CANON_CAP, ResourceLimitError, WorkCounter

Edge = tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    """Normalize an endpoint pair to (min, max); rejects self-loops."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple undirected graph on vertices 0..order-1."""

    def __init__(self, order: int, edges=()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            u, v = norm_edge(u, v)
            if not (0 <= u and v < order):
                raise ValueError(f"edge ({u},{v}) out of range for order {order}")
            adj[u].add(v)
            adj[v].add(u)
        self._order = order
        self._adj = tuple(tuple(sorted(s)) for s in adj)
        self._edges = tuple(
            (u, v) for u in range(order) for v in self._adj[u] if u < v
        )
        self._hash = hash((order, self._edges))

    @property
    def order(self) -> int:
        return self._order

    @property
    def size(self) -> int:
        return len(self._edges)

    def edges(self) -> tuple[Edge, ...]:
        """All edges as normalized (u, v) pairs in lexicographic order."""
        return self._edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a, b = norm_edge(u, v)
        return b in self._adj[a]

    def adjacency_sets(self) -> list[set[int]]:
        """Fresh mutable adjacency sets (for search scratch space)."""
        return [set(nbrs) for nbrs in self._adj]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._order == other._order and self._edges == other._edges

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (Graph, (self._order, self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self._order}, edges={list(self._edges)})"


EMPTY_GRAPH = Graph(0)


def relabeled(g: Graph, perm) -> Graph:
    """Apply a permutation (old id -> new id) to vertex labels."""
    return Graph(g.order, [(perm[u], perm[v]) for u, v in g.edges()])


def induced_subgraph(g: Graph, vertices) -> tuple[Graph, list[int]]:
    """Induced subgraph on a vertex subset, compacted to dense ids.

    Returns (subgraph, old_ids) where old_ids[i] is the original id of
    the subgraph's vertex i.  Ids are compacted preserving numeric order.
    """
    old_ids = sorted(vertices)
    idx = {old: new for new, old in enumerate(old_ids)}
    keep = set(old_ids)
    edges = [(idx[u], idx[v]) for u, v in g.edges() if u in keep and v in keep]
    return Graph(len(old_ids), edges), old_ids


def delete_edges(g: Graph, edges) -> Graph:
    drop = {norm_edge(u, v) for u, v in edges}
    return Graph(g.order, [e for e in g.edges() if e not in drop])


def without_isolated(g: Graph) -> Graph:
    """Drop isolated vertices and compact ids, preserving numeric order."""
    touched = sorted({v for e in g.edges() for v in e})
    sub, _ = induced_subgraph(g, touched)
    return sub


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.order
    edges = list(g1.edges()) + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph(g1.order + g2.order, edges)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components as vertex-id sets, ordered by minimum id."""
    seen = [False] * g.order
    out: list[frozenset[int]] = []
    for start in range(g.order):
        if seen[start]:
            continue
        comp = {start}
        seen[start] = True
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.neighbors(u):
                if not seen[w]:
                    seen[w] = True
                    comp.add(w)
                    queue.append(w)
        out.append(frozenset(comp))
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


# ---------------------------------------------------------------------------
# Canonical labeling and isomorphism
# ---------------------------------------------------------------------------


def _refined_colors(g: Graph) -> list[int]:
    """Label-independent vertex colors by iterated neighborhood refinement.

    Colors start from degrees and are refined with sorted neighbor-color
    multisets until stable.  Color ids are ranks of sorted signatures, so
    isomorphic graphs assign corresponding vertices identical colors.
    """
    n = g.order
    if n == 0:
        return []
    sig = [g.degree(v) for v in range(n)]
    rank = {s: i for i, s in enumerate(sorted(set(sig)))}
    colors = [rank[s] for s in sig]
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in g.neighbors(v))))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _canonical_rows(g: Graph, counter: WorkCounter) -> list[int]:
    """Lexicographically greatest adjacency rows over color-respecting orders.

    Positions are blocked by refined color class (classes in color order);
    within a class every vertex choice is branched over, with prefix pruning
    against the best row vector found so far.  The maximum is the same for
    isomorphic graphs and reconstructs the graph, so it is a canonical form.
    """
    n = g.order
    colors = _refined_colors(g)
    cells: dict[int, set[int]] = {}
    for v in range(n):
        cells.setdefault(colors[v], set()).add(v)
    pos_class: list[int] = []
    for c in sorted(cells):
        pos_class.extend([c] * len(cells[c]))
    adj = [set(g.neighbors(v)) for v in range(n)]

    best: list[int] | None = None
    rows: list[int] = []
    placed: list[int] = []

    def search(i: int) -> None:
        nonlocal best
        counter.spend()
        if i == n:
            if best is None or rows > best:
                best = rows.copy()
            return
        cell = cells[pos_class[i]]
        scored = []
        for v in sorted(cell):
            row = 0
            for j in range(i):
                row = (row << 1) | (1 if placed[j] in adj[v] else 0)
            scored.append((row, v))
        scored.sort(reverse=True)
        for row, v in scored:
            rows.append(row)
            # best only ever grows, so pruning on the current value is sound
            if best is not None and rows[: i + 1] < best[: i + 1]:
                rows.pop()
                continue
            placed.append(v)
            cell.remove(v)
            search(i + 1)
            cell.add(v)
            placed.pop()
            rows.pop()

    search(0)
    assert best is not None
    return best


def canonical_code(
    g: Graph, *, cap: int = DEFAULT_CANON_CAP, counter: WorkCounter | None = None
) -> bytes:
    """Canonical byte code: equal codes exactly for isomorphic graphs.

    Deterministic across runs and platforms.  Raises ResourceLimitError if
    the order exceeds `cap` or the labeling search exhausts `counter`.
    """
    n = g.order
    if n > cap:
        raise ResourceLimitError(f"order {n} exceeds canonicalization cap {cap}")
    if counter is None:
        counter = WorkCounter(2_000_000)
    rows = _canonical_rows(g, counter)
    bits = bytearray()
    acc = 0
    nbits = 0
    for i, row in enumerate(rows):
        for k in range(i - 1, -1, -1):
            acc = (acc << 1) | ((row >> k) & 1)
            nbits += 1
            if nbits == 8:
                bits.append(acc)
                acc = 0
                nbits = 0
    if nbits:
        bits.append(acc << (8 - nbits))
    return n.to_bytes(4, "big") + bytes(bits)


def is_isomorphic(
    g1: Graph, g2: Graph, *, cap: int = DEFAULT_CANON_CAP,
    counter: WorkCounter | None = None,
) -> bool:
    """Exact isomorphism test; agrees with canonical_code equality."""
    if g1.order != g2.order or g1.size != g2.size:
        return False
    if sorted(g1.degree(v) for v in range(g1.order)) != sorted(
        g2.degree(v) for v in range(g2.order)
    ):
        return False
    return canonical_code(g1, cap=cap, counter=counter) == canonical_code(
        g2, cap=cap, counter=counter
    )


# ---------------------------------------------------------------------------
# Cycle statistics
# ---------------------------------------------------------------------------


def longest_cycle(g: Graph, counter: WorkCounter | None = None) -> list[int] | None:
    """A longest cycle as a vertex sequence, or None for acyclic graphs.

    Exact DFS anchored at each cycle's minimum vertex, with branch-and-bound
    on the vertices still available to the current anchor.
    """
    if counter is None:
        counter = WorkCounter()
    comp_of: dict[int, frozenset[int]] = {}
    for comp in components(g):
        for v in comp:
            comp_of[v] = comp

    best_len = 0
    best: list[int] | None = None
    path: list[int] = []

    for a in range(g.order):
        if g.degree(a) < 2:
            continue
        avail = {v for v in comp_of[a] if v > a and g.degree(v) >= 2}
        if 1 + len(avail) <= best_len:
            continue
        used = {a}
        path.append(a)

        def dfs() -> None:
            nonlocal best_len, best
            counter.spend()
            if len(path) + (len(avail) - (len(used) - 1)) <= best_len:
                return
            cur = path[-1]
            for x in g.neighbors(cur):
                if x == a and len(path) >= 3 and len(path) > best_len:
                    best_len = len(path)
                    best = path.copy()
                elif x in avail and x not in used:
                    used.add(x)
                    path.append(x)
                    dfs()
                    path.pop()
                    used.remove(x)

        dfs()
        path.pop()
    return best


def circumference(g: Graph, counter: WorkCounter | None = None) -> int:
    """Length of the longest cycle; 0 when the graph is a forest."""
    cyc = longest_cycle(g, counter)
    return 0 if cyc is None else len(cyc)


def girth(g: Graph) -> int:
    """Length of the shortest cycle; 0 (sentinel) when acyclic.

    For each edge (u, v), a BFS in the graph minus that edge measures the
    shortest alternative u-v path, closing the shortest cycle through it.
    """
    best = 0
    for u, v in g.edges():
        dist = _bfs_dist_avoiding_edge(g, u, v)
        if dist is not None:
            cyc = dist + 1
            if best == 0 or cyc < best:
                best = cyc
                if best == 3:
                    return 3
    return best


def _bfs_dist_avoiding_edge(g: Graph, u: int, v: int) -> int | None:
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in g.neighbors(x):
            if x == u and w == v:
                continue
            if w not in dist:
                dist[w] = dist[x] + 1
                if w == v:
                    return dist[w]
                queue.append(w)
    return dist.get(v)


def is_cycle_graph(g: Graph) -> bool:
    """True iff g is connected, has order >= 3, and is 2-regular."""
    return (
        g.order >= 3
        and all(g.degree(v) == 2 for v in range(g.order))
        and is_connected(g)
    )


def unique_cycle(g: Graph) -> list[int] | None:
    """The cycle of a connected unicyclic graph, None otherwise.

    The sequence starts at the cycle's minimum vertex id and proceeds toward
    that vertex's smaller cycle neighbor.
    """
    if g.order == 0 or g.size != g.order or not is_connected(g):
        return None
    # peel leaves; what survives is exactly the unique cycle
    deg = [g.degree(v) for v in range(g.order)]
    queue = deque(v for v in range(g.order) if deg[v] == 1)
    removed = [False] * g.order
    while queue:
        v = queue.popleft()
        removed[v] = True
        for w in g.neighbors(v):
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    cycle_vertices = [v for v in range(g.order) if not removed[v]]
    start = min(cycle_vertices)
    on_cycle = set(cycle_vertices)
    first = min(w for w in g.neighbors(start) if w in on_cycle)
    seq = [start, first]
    while True:
        cur, prev = seq[-1], seq[-2]
        nxt = next(w for w in g.neighbors(cur) if w in on_cycle and w != prev)
        if nxt == start:
            return seq
        seq.append(nxt)
