"""Undirected simple graphs and the primitives built directly on them.

Graphs are immutable after construction: vertex identifiers are 0..n-1,
edges are stored as a sorted tuple of sorted pairs, and equal graphs hash
equally so expensive derived results can be memoised.  Every set-valued
result is returned canonically sorted; ties anywhere are broken by minimum
vertex identifier so that repeated runs produce identical certificates.

All operations are pure functions over immutable values and safe to call
from multiple threads.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InputError

VertexSet = tuple  # sorted tuple of vertex ids


def vset(vertices: Iterable[int]) -> VertexSet:
    """Canonicalize an iterable of vertex ids into a sorted duplicate-free tuple."""
    return tuple(sorted(set(vertices)))


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise InputError("vertex count must be nonnegative")
        canon = set()
        for e in edges:
            u, v = e
            if u == v:
                raise InputError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u},{v}) outside vertex range 0..{n - 1}")
            canon.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(canon))
        adj = [[] for _ in range(n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._hash = hash((n, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def adj(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        a = self._adj[u]
        if len(a) > len(self._adj[v]):
            u, v, a = v, u, self._adj[v]
        return v in a

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def canonical_bytes(self) -> bytes:
        lines = [f"{self.n}"]
        lines += [f"{u} {v}" for u, v in self.edges]
        return ("\n".join(lines) + "\n").encode()

    def sha256(self) -> str:
        return hashlib.sha256(self.canonical_bytes()).hexdigest()


# ---------------------------------------------------------------------------
# generators


def grid(side: int) -> Graph:
    """side x side grid; vertex (r,c) gets id r*side + c."""
    if side < 1:
        raise InputError("grid side must be positive")
    edges = []
    for r in range(side):
        for c in range(side):
            v = r * side + c
            if c + 1 < side:
                edges.append((v, v + 1))
            if r + 1 < side:
                edges.append((v, v + side))
    return Graph(side * side, edges)


def complete(n: int) -> Graph:
    if n < 1:
        raise InputError("vertex count must be positive")
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("vertex count must be positive")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def random_graph(n: int, m: int, seed: int) -> Graph:
    """Uniform random simple graph with exactly m edges; deterministic in seed."""
    if n < 1:
        raise InputError("vertex count must be positive")
    limit = n * (n - 1) // 2
    if m < 0 or m > limit:
        raise InputError(f"edge count {m} out of range 0..{limit}")
    rng = random.Random(seed)
    chosen = rng.sample(range(limit), m)
    edges = []
    for idx in chosen:
        # decode the idx-th pair in lexicographic order
        u = 0
        remaining = idx
        row = n - 1
        while remaining >= row:
            remaining -= row
            u += 1
            row -= 1
        edges.append((u, u + 1 + remaining))
    return Graph(n, edges)


def generate(kind: str, *args, seed: int = 0) -> Graph:
    if kind == "grid":
        return grid(*args)
    if kind == "complete":
        return complete(*args)
    if kind == "path":
        return path_graph(*args)
    if kind == "random":
        if len(args) == 3:
            return random_graph(args[0], args[1], args[2])
        return random_graph(args[0], args[1], seed)
    raise InputError(f"unknown graph kind {kind!r}")


# ---------------------------------------------------------------------------
# file formats


def write_edgelist(g: Graph) -> str:
    return "".join(f"{u} {v}\n" for u, v in g.edges) or f"# n={g.n}\n"


def read_edgelist(text: str, n: int | None = None) -> Graph:
    edges = []
    top = -1
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            if line.startswith("# n="):
                top = max(top, int(line[4:]) - 1)
            continue
        parts = line.split()
        if len(parts) != 2:
            raise InputError(f"malformed edge-list line: {line!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        top = max(top, u, v)
    count = n if n is not None else top + 1
    return Graph(max(count, 0), edges)


def write_dimacs(g: Graph) -> str:
    lines = [f"p edge {g.n} {g.m}"]
    lines += [f"e {u + 1} {v + 1}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] != "edge":
                raise InputError(f"malformed problem line: {line!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise InputError("edge line before problem line")
            edges.append((int(parts[1]) - 1, int(parts[2]) - 1))
        else:
            raise InputError(f"unrecognised DIMACS line: {line!r}")
    if n is None:
        raise InputError("missing problem line")
    return Graph(n, edges)


def read_graph(text: str, fmt: str) -> Graph:
    if fmt == "dimacs":
        return read_dimacs(text)
    if fmt == "edgelist":
        return read_edgelist(text)
    raise InputError(f"unknown graph format {fmt!r}")


def write_graph(g: Graph, fmt: str) -> str:
    if fmt == "dimacs":
        return write_dimacs(g)
    if fmt == "edgelist":
        return write_edgelist(g)
    raise InputError(f"unknown graph format {fmt!r}")


# ---------------------------------------------------------------------------
# substrate operations


def check_vertexset(g: Graph, u: Iterable[int]) -> VertexSet:
    u = vset(u)
    for v in u:
        if not (0 <= v < g.n):
            raise InputError(f"vertex {v} not in graph of order {g.n}")
    return u


def induced_subgraph(g: Graph, u: Iterable[int]) -> tuple[Graph, tuple]:
    """Induced subgraph on u, relabelled to 0..|u|-1.

    Returns (subgraph, mapping) where mapping[i] is the original identifier
    of new vertex i.
    """
    u = check_vertexset(g, u)
    index = {v: i for i, v in enumerate(u)}
    members = set(u)
    edges = [(index[a], index[b]) for a, b in g.edges if a in members and b in members]
    return Graph(len(u), edges), u


def components(g: Graph, removed: Iterable[int] = ()) -> list[VertexSet]:
    """Connected components of g minus `removed`, each sorted, ordered by minimum member."""
    removed = set(removed)
    seen = set(removed)
    out = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.adj(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    stack.append(y)
        out.append(tuple(sorted(comp)))
    return out


def is_connected_set(g: Graph, u: Iterable[int]) -> bool:
    u = vset(u)
    if not u:
        return False
    members = set(u)
    stack = [u[0]]
    seen = {u[0]}
    while stack:
        x = stack.pop()
        for y in g.adj(x):
            if y in members and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(members)


def neighborhood(g: Graph, u: Iterable[int]) -> VertexSet:
    """Open neighborhood N(u): vertices outside u adjacent to u."""
    members = set(u)
    out = set()
    for v in members:
        for w in g.adj(v):
            if w not in members:
                out.add(w)
    return tuple(sorted(out))


def is_path(g: Graph, seq: Sequence[int]) -> bool:
    if len(seq) != len(set(seq)):
        return False
    if not all(0 <= v < g.n for v in seq):
        return False
    return all(g.has_edge(a, b) for a, b in zip(seq, seq[1:]))


# ---------------------------------------------------------------------------
# vertex-disjoint paths (Menger)


def disjoint_paths(g: Graph, a: Iterable[int], b: Iterable[int],
                   internal_forbidden: Iterable[int] = ()) -> tuple[list[tuple], VertexSet]:
    """Maximum set of pairwise vertex-disjoint a-b paths plus a matching separator.

    Paths share no vertices at all, endpoints included; their internal
    vertices avoid `internal_forbidden`.  The returned separator S satisfies
    |S| = number of paths and removing S disconnects a from b.  Vertices in
    a & b count as trivial one-vertex paths.

    Implemented as unit-capacity max-flow on the vertex-split auxiliary
    digraph; augmenting paths are found by BFS visiting neighbours in
    ascending identifier order, so the result is deterministic.
    """
    a = check_vertexset(g, a)
    b = check_vertexset(g, b)
    if not a or not b:
        raise InputError("both terminal sets must be nonempty")
    forb = check_vertexset(g, internal_forbidden)
    if set(forb) & (set(a) | set(b)):
        raise InputError("internal_forbidden must avoid the terminal sets")

    shared = tuple(sorted(set(a) & set(b)))
    active = set(range(g.n)) - set(forb) - set(shared)
    a_side = [v for v in a if v in active]
    b_side = [v for v in b if v in active]

    paths = [(v,) for v in shared]
    separator = list(shared)

    if a_side and b_side:
        flow_paths, cut = _unit_vertex_flow(g, a_side, b_side, active)
        paths.extend(flow_paths)
        separator.extend(cut)

    return paths, tuple(sorted(separator))


def _unit_vertex_flow(g: Graph, sources, sinks, active):
    """Max set of vertex-disjoint paths from sources to sinks within `active`.

    Vertex-split max-flow: every vertex carries an internal unit-capacity
    arc v_in -> v_out; each undirected edge contributes two uncapacitated
    arcs u_out -> v_in and v_out -> u_in, so minimum cuts consist of
    internal arcs (plus terminal super-arcs) only.  Node encoding below:
    2*v is v_in, 2*v + 1 is v_out.
    """
    src_set = set(sources)
    sink_set = set(sinks)
    in_used = [False] * g.n   # internal arc of v saturated
    eflow = set()             # directed pairs (u, v) carrying one unit

    def has_inflow(v):
        return any((w, v) in eflow for w in g.adj(v))

    def residual_succ(x):
        v, is_out = x >> 1, x & 1
        if not is_out:
            if not in_used[v]:
                yield (v << 1) | 1
            for w in g.adj(v):
                if w in active and (w, v) in eflow:
                    yield (w << 1) | 1
        else:
            for w in g.adj(v):
                if w in active and (v, w) not in eflow:
                    yield w << 1
            if in_used[v]:
                yield v << 1

    def bfs_augment():
        parent = {}
        queue = []
        for s in sorted(src_set):
            if in_used[s] and not has_inflow(s):
                continue  # a path already starts here
            parent[s << 1] = None
            queue.append(s << 1)
        qi = 0
        goal = None
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            v, is_out = x >> 1, x & 1
            if is_out and v in sink_set:
                goal = x
                break
            for y in residual_succ(x):
                if y not in parent:
                    parent[y] = x
                    queue.append(y)
        if goal is None:
            return None, parent
        seq = [goal]
        while parent[seq[-1]] is not None:
            seq.append(parent[seq[-1]])
        seq.reverse()
        return seq, parent

    while True:
        seq, reach = bfs_augment()
        if seq is None:
            reachable = reach
            break
        for frm, to in zip(seq, seq[1:]):
            fv, fo = frm >> 1, frm & 1
            tv, to_ = to >> 1, to & 1
            if fv == tv:
                in_used[fv] = (fo == 0)
            elif fo == 1 and to_ == 0:
                if (tv, fv) in eflow:
                    eflow.discard((tv, fv))
                else:
                    eflow.add((fv, tv))
            else:
                eflow.discard((tv, fv))

    succ = {u: v for (u, v) in eflow}
    pred = {v: u for (u, v) in eflow}
    paths = []
    for s in sorted(src_set):
        if not in_used[s] or s in pred:
            continue  # no path starts here
        path = [s]
        while not (path[-1] in sink_set and path[-1] not in succ):
            path.append(succ[path[-1]])
        paths.append(tuple(path))

    cut = set()
    for v in active:
        if (v << 1) in reachable and ((v << 1) | 1) not in reachable:
            cut.add(v)
    for s in src_set:
        if (s << 1) not in reachable:
            cut.add(s)
    for t in sink_set:
        if ((t << 1) | 1) in reachable:
            cut.add(t)
    return paths, sorted(cut)
