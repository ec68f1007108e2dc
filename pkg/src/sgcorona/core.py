"""Signed graphs: data model, markings, switching, balance, regularity.

A signed graph is a simple undirected graph whose edges carry a sign in
{+1, -1}.  Everything in this module is an immutable value and every
operation is a pure function, so the API is safe to use concurrently.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

__all__ = [
    "Marking",
    "SignedGraph",
    "BalanceResult",
    "RegularityReport",
    "canonical_marking",
    "mu_signed_graph",
    "balance",
    "is_balanced",
    "switch",
    "regularity",
    "relabel",
    "induced_subgraph",
    "connected_components",
    "empty_graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "disjoint_union",
]


def _check_sign(s: int) -> int:
    if s != 1 and s != -1:
        raise ValueError(f"edge sign must be +1 or -1, got {s!r}")
    return int(s)


@dataclass(frozen=True)
class Marking:
    """A ±1 label per vertex.  diag(values) squared is the identity."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        for v in vals:
            if v != 1 and v != -1:
                raise ValueError(f"marking entries must be +1 or -1, got {v!r}")
        object.__setattr__(self, "values", vals)

    @classmethod
    def all_positive(cls, n: int) -> "Marking":
        return cls((1,) * n)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i: int) -> int:
        return self.values[i]

    def __iter__(self):
        return iter(self.values)


def _as_marks(m, n: int) -> tuple[int, ...]:
    """Accept a Marking or a plain ±1 sequence of length n."""
    vals = tuple(m.values) if isinstance(m, Marking) else tuple(int(v) for v in m)
    if len(vals) != n:
        raise ValueError(f"marking has length {len(vals)}, expected {n}")
    for v in vals:
        if v != 1 and v != -1:
            raise ValueError(f"marking entries must be +1 or -1, got {v!r}")
    return vals


class SignedGraph:
    """Immutable simple undirected graph with edge signs in {+1, -1}.

    Vertices are the integers 0..n-1.  Loops and parallel edges are
    rejected at construction.
    """

    __slots__ = ("_n", "_edges", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        store: dict[tuple[int, int], int] = {}
        for item in edges:
            u, v, s = item
            u, v = int(u), int(v)
            if not (0 <= u < n) or not (0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            key = (u, v) if u < v else (v, u)
            if key in store:
                raise ValueError(f"duplicate edge {key}")
            store[key] = _check_sign(s)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for (u, v), s in store.items():
            adj[u].append((v, s))
            adj[v].append((u, s))
        self._n = n
        self._edges = store
        self._adj = tuple(tuple(sorted(a)) for a in adj)

    # -- basic queries ------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._edges)

    def edges(self) -> list[tuple[int, int, int]]:
        """Edges as (u, v, sign) with u < v, sorted lexicographically."""
        return [(u, v, s) for (u, v), s in sorted(self._edges.items())]

    def has_edge(self, u: int, v: int) -> bool:
        key = (u, v) if u < v else (v, u)
        return key in self._edges

    def sign(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edges[key]
        except KeyError:
            raise ValueError(f"no edge between {u} and {v}") from None

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """Sorted (neighbor, sign) pairs incident to v."""
        return self._adj[v]

    # -- degrees ------------------------------------------------------

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def pos_degree(self, v: int) -> int:
        return sum(1 for _, s in self._adj[v] if s > 0)

    def neg_degree(self, v: int) -> int:
        return sum(1 for _, s in self._adj[v] if s < 0)

    def signed_degree(self, v: int) -> int:
        return sum(s for _, s in self._adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    # -- matrices (exact integer, list-of-rows) -----------------------

    def adjacency(self) -> list[list[int]]:
        a = [[0] * self._n for _ in range(self._n)]
        for (u, v), s in self._edges.items():
            a[u][v] = s
            a[v][u] = s
        return a

    def laplacian(self) -> list[list[int]]:
        mat = [[-x for x in row] for row in self.adjacency()]
        for v in range(self._n):
            mat[v][v] = self.degree(v)
        return mat

    def signless_laplacian(self) -> list[list[int]]:
        mat = self.adjacency()
        for v in range(self._n):
            mat[v][v] = self.degree(v)
        return mat

    def matrix(self, which: str) -> list[list[int]]:
        """The A, L, or Q matrix by one-letter name."""
        if which == "A":
            return self.adjacency()
        if which == "L":
            return self.laplacian()
        if which == "Q":
            return self.signless_laplacian()
        raise ValueError(f"matrix selector must be 'A', 'L' or 'Q', got {which!r}")

    @classmethod
    def from_adjacency(cls, mat) -> "SignedGraph":
        n = len(mat)
        for i, row in enumerate(mat):
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            if mat[i][i] != 0:
                raise ValueError(f"nonzero diagonal at {i}")
        edges = []
        for i in range(n):
            for j in range(i + 1, n):
                if mat[i][j] != mat[j][i]:
                    raise ValueError(f"asymmetric entries at ({i},{j})")
                if mat[i][j] != 0:
                    edges.append((i, j, _check_sign(mat[i][j])))
        return cls(n, edges)

    # -- value semantics ----------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedGraph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._n, frozenset(self._edges.items())))

    def __repr__(self) -> str:
        return f"SignedGraph(n={self._n}, m={self.m})"


# -- markings and balance ---------------------------------------------


def canonical_marking(g: SignedGraph) -> Marking:
    """Mark each vertex with the product of its incident edge signs.

    An isolated vertex gets +1 (empty product).
    """
    marks = []
    for v in range(g.n):
        p = 1
        for _, s in g.neighbors(v):
            p *= s
        marks.append(p)
    return Marking(tuple(marks))


def mu_signed_graph(g: SignedGraph, m) -> SignedGraph:
    """Re-sign every edge uv with m(u)*m(v).  The result is always balanced."""
    marks = _as_marks(m, g.n)
    return SignedGraph(g.n, ((u, v, marks[u] * marks[v]) for u, v, _ in g.edges()))


@dataclass(frozen=True)
class BalanceResult:
    """Outcome of a balance check: a witness marking, or one bad edge."""

    balanced: bool
    marking: Marking | None
    violating_edge: tuple[int, int, int] | None

    def __bool__(self) -> bool:
        return self.balanced


def balance(g: SignedGraph) -> BalanceResult:
    """Decide balance by propagating marks over a BFS forest.

    Roots are the lowest-indexed unvisited vertices and get mark +1, so
    the witness marking is deterministic.  On failure the reported edge
    is the first non-tree edge whose sign contradicts the propagated
    marks, i.e. an edge closing a negative cycle.
    """
    marks = [0] * g.n
    for root in range(g.n):
        if marks[root] != 0:
            continue
        marks[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, s in g.neighbors(u):
                want = s * marks[u]
                if marks[v] == 0:
                    marks[v] = want
                    queue.append(v)
                elif marks[v] != want:
                    edge = (u, v) if u < v else (v, u)
                    return BalanceResult(False, None, (edge[0], edge[1], s))
    return BalanceResult(True, Marking(tuple(marks)), None)


def is_balanced(g: SignedGraph) -> bool:
    return balance(g).balanced


def switch(g: SignedGraph, theta) -> SignedGraph:
    """Multiply each edge sign uv by theta(u)*theta(v).  Involutive."""
    t = _as_marks(theta, g.n)
    return SignedGraph(g.n, ((u, v, s * t[u] * t[v]) for u, v, s in g.edges()))


# -- regularity -------------------------------------------------------


@dataclass(frozen=True)
class RegularityReport:
    """Uniform degree r, uniform signed degree k, and the pair when both hold."""

    degree_regular: int | None
    net_regular: int | None
    co_regular_pair: tuple[int, int] | None


def regularity(g: SignedGraph) -> RegularityReport:
    if g.n == 0:
        return RegularityReport(None, None, None)
    degs = g.degrees()
    sdegs = [g.signed_degree(v) for v in range(g.n)]
    r = degs[0] if all(d == degs[0] for d in degs) else None
    k = sdegs[0] if all(s == sdegs[0] for s in sdegs) else None
    pair = (r, k) if r is not None and k is not None else None
    return RegularityReport(r, k, pair)


# -- structural helpers ------------------------------------------------


def relabel(g: SignedGraph, perm) -> SignedGraph:
    """Rename vertices: vertex v becomes perm[v]."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return SignedGraph(g.n, ((p[u], p[v], s) for u, v, s in g.edges()))


def induced_subgraph(g: SignedGraph, vertices) -> SignedGraph:
    """Subgraph on the given vertices, reindexed in the order supplied."""
    verts = list(vertices)
    index = {v: i for i, v in enumerate(verts)}
    if len(index) != len(verts):
        raise ValueError("duplicate vertices")
    edges = []
    for u, v, s in g.edges():
        if u in index and v in index:
            edges.append((index[u], index[v], s))
    return SignedGraph(len(verts), edges)


def connected_components(g: SignedGraph) -> list[list[int]]:
    """Vertex sets of the connected components, each sorted, in BFS order."""
    seen = [False] * g.n
    comps = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        comp = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v, _ in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comps.append(sorted(comp))
    return comps


# -- small graph constructors ------------------------------------------


def _sign_list(signs, m: int) -> list[int]:
    if signs is None:
        return [1] * m
    if isinstance(signs, int):
        return [_check_sign(signs)] * m
    out = [_check_sign(s) for s in signs]
    if len(out) != m:
        raise ValueError(f"expected {m} signs, got {len(out)}")
    return out


def empty_graph(n: int) -> SignedGraph:
    return SignedGraph(n)


def path_graph(n: int, signs=None) -> SignedGraph:
    """Path on n vertices 0-1-2-...; signs follow edge order."""
    ss = _sign_list(signs, max(n - 1, 0))
    return SignedGraph(n, ((i, i + 1, ss[i]) for i in range(n - 1)))


def cycle_graph(n: int, signs=None) -> SignedGraph:
    """Cycle 0-1-...-(n-1)-0; needs n >= 3."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    ss = _sign_list(signs, n)
    return SignedGraph(n, ((i, (i + 1) % n, ss[i]) for i in range(n)))


def complete_graph(n: int, signs=None) -> SignedGraph:
    """Complete graph; signs follow lexicographic edge order."""
    pairs = list(combinations(range(n), 2))
    ss = _sign_list(signs, len(pairs))
    return SignedGraph(n, ((u, v, s) for (u, v), s in zip(pairs, ss)))


def star_graph(leaves: int, signs=None) -> SignedGraph:
    """Star with center 0 and the given number of leaves."""
    ss = _sign_list(signs, leaves)
    return SignedGraph(leaves + 1, ((0, i + 1, ss[i]) for i in range(leaves)))


def disjoint_union(a: SignedGraph, b: SignedGraph) -> SignedGraph:
    edges = list(a.edges())
    edges.extend((u + a.n, v + a.n, s) for u, v, s in b.edges())
    return SignedGraph(a.n + b.n, edges)
