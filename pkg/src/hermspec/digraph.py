"""Digraphs and mixed multigraphs with arc multiplicities.

Vertices are 0..n-1.  The canonical representation is the arc multiplicity
map e(u,v); an undirected edge is stored as a digon (arcs both ways) and
recovered by :func:`Digraph.arc_edge_counts`.  Loops are stored separately
and treated as undirected.  Digraph values are immutable: all builders
return new instances.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping


class EdgeListError(ValueError):
    """Malformed edge-list text."""


def _check_vertex(v: int, n: int) -> None:
    if not (0 <= v < n):
        raise ValueError(f"vertex {v} out of range [0, {n})")


@dataclass(frozen=True)
class Digraph:
    """Finite digraph with arc and loop multiplicities.

    ``arcs`` maps ordered pairs (u, v), u != v, to the number of arcs
    u -> v; absent pairs mean 0.  ``loops`` maps a vertex to its loop
    count.  Zero entries are dropped so equality is structural.
    """

    n: int
    arcs: dict = field(default_factory=dict)
    loops: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        arcs = {}
        for (u, v), m in self.arcs.items():
            _check_vertex(u, self.n)
            _check_vertex(v, self.n)
            if u == v:
                raise ValueError("loops are stored via the loops field, not as (v, v) arcs")
            if m < 0:
                raise ValueError("arc multiplicity must be non-negative")
            if m:
                arcs[(u, v)] = int(m)
        loops = {}
        for v, m in self.loops.items():
            _check_vertex(v, self.n)
            if m < 0:
                raise ValueError("loop multiplicity must be non-negative")
            if m:
                loops[v] = int(m)
        object.__setattr__(self, "arcs", arcs)
        object.__setattr__(self, "loops", loops)

    def __hash__(self):
        return hash((
            self.n,
            tuple(sorted(self.arcs.items())),
            tuple(sorted(self.loops.items())),
        ))

    # --- queries ---

    def e(self, u: int, v: int) -> int:
        """Number of arcs from u to v."""
        return self.arcs.get((u, v), 0)

    def loop(self, v: int) -> int:
        return self.loops.get(v, 0)

    def total_arc_mult(self) -> int:
        return sum(self.arcs.values())

    def adjacent(self, u: int, v: int) -> bool:
        """True iff u and v are joined by an arc in either direction."""
        return (u, v) in self.arcs or (v, u) in self.arcs

    def neighbors(self, v: int) -> set:
        """Vertices joined to v by at least one arc, ignoring direction."""
        out = set()
        for (a, b) in self.arcs:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    # --- builders (return new values) ---

    def add_arc(self, u: int, v: int, mult: int = 1) -> "Digraph":
        """New digraph with ``mult`` extra arcs u -> v."""
        _check_vertex(u, self.n)
        _check_vertex(v, self.n)
        if u == v:
            raise ValueError("use add_loop for loops")
        if mult < 1:
            raise ValueError("multiplicity must be >= 1")
        arcs = dict(self.arcs)
        arcs[(u, v)] = arcs.get((u, v), 0) + mult
        return Digraph(self.n, arcs, self.loops)

    def add_edge(self, u: int, v: int, mult: int = 1) -> "Digraph":
        """New digraph with an undirected edge, i.e. a digon u <-> v."""
        return self.add_arc(u, v, mult).add_arc(v, u, mult)

    def add_loop(self, v: int, mult: int = 1) -> "Digraph":
        _check_vertex(v, self.n)
        if mult < 1:
            raise ValueError("multiplicity must be >= 1")
        loops = dict(self.loops)
        loops[v] = loops.get(v, 0) + mult
        return Digraph(self.n, self.arcs, loops)

    # --- structure ---

    def induced_subdigraph(self, vertices: Iterable[int]) -> "Digraph":
        """Subdigraph induced by a vertex subset, relabeled order-preservingly."""
        sub = sorted(set(vertices))
        for v in sub:
            _check_vertex(v, self.n)
        index = {v: i for i, v in enumerate(sub)}
        arcs = {
            (index[u], index[v]): m
            for (u, v), m in self.arcs.items()
            if u in index and v in index
        }
        loops = {index[v]: m for v, m in self.loops.items() if v in index}
        return Digraph(len(sub), arcs, loops)

    def bipartition(self) -> "Bipartition | None":
        """2-coloring of the underlying graph, or None if not bipartite.

        A loop makes the digraph non-bipartite (both arc ends coincide).
        Per component the vertex of smallest index gets side X.
        """
        if self.loops:
            return None
        side = [""] * self.n
        for start in range(self.n):
            if side[start]:
                continue
            side[start] = "X"
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for w in self.neighbors(u):
                    if not side[w]:
                        side[w] = "Y" if side[u] == "X" else "X"
                        queue.append(w)
                    elif side[w] == side[u]:
                        return None
        return Bipartition(tuple(side))

    def arc_edge_counts(self) -> tuple:
        """Canonical (s, t): leftover single arcs and undirected edges.

        Each unordered pair contributes min(e(u,v), e(v,u)) digons to t and
        the surplus |e(u,v) - e(v,u)| to s; each loop counts once in t.
        """
        s = 0
        t = sum(self.loops.values())
        for (u, v), m in self.arcs.items():
            if u < v:
                back = self.e(v, u)
                t += min(m, back)
                s += abs(m - back)
            elif (v, u) not in self.arcs:
                s += m
        return s, t

    def reverse(self) -> "Digraph":
        """Digraph with every arc reversed."""
        return Digraph(self.n, {(v, u): m for (u, v), m in self.arcs.items()}, self.loops)


@dataclass(frozen=True)
class Bipartition:
    """Vertex 2-coloring; side[v] is 'X' or 'Y'."""

    side: tuple

    def parts(self) -> tuple:
        xs = frozenset(v for v, s in enumerate(self.side) if s == "X")
        ys = frozenset(v for v, s in enumerate(self.side) if s == "Y")
        return xs, ys

    def is_valid_for(self, g: Digraph) -> bool:
        if g.loops:
            return False
        return all(self.side[u] != self.side[v] for (u, v) in g.arcs)


# --- generators ---


def new_digraph(n: int) -> Digraph:
    """Digraph on n vertices with no arcs."""
    return Digraph(n)


def directed_cycle(n: int) -> Digraph:
    """Arcs i -> i+1 (mod n); n = 2 yields a digon."""
    if n < 2:
        raise ValueError("directed cycle needs at least 2 vertices")
    arcs = {}
    for i in range(n):
        j = (i + 1) % n
        arcs[(i, j)] = arcs.get((i, j), 0) + 1
    return Digraph(n, arcs)


def directed_path(n: int) -> Digraph:
    """Arcs i -> i+1 for i = 0..n-2."""
    if n < 1:
        raise ValueError("path needs at least 1 vertex")
    return Digraph(n, {(i, i + 1): 1 for i in range(n - 1)})


def circulant(n: int, jumps: Iterable[tuple]) -> Digraph:
    """Circulant digraph: arcs i -> i+offset (mod n) for each (offset, mult)."""
    arcs = {}
    for offset, mult in jumps:
        if not (1 <= offset <= n - 1):
            raise ValueError(f"jump offset {offset} outside [1, {n - 1}]")
        if mult < 1:
            raise ValueError("jump multiplicity must be >= 1")
        for i in range(n):
            key = (i, (i + offset) % n)
            arcs[key] = arcs.get(key, 0) + mult
    return Digraph(n, arcs)


def cartesian_product(g: Digraph, h: Digraph) -> Digraph:
    """Cartesian product; vertex (u, x) is encoded as u * h.n + x.

    Arc multiplicities are copied from the factors, so the second-kind
    spectrum of the product is the multiset of pairwise eigenvalue sums.
    """
    nh = h.n
    arcs = {}
    for (u, v), m in g.arcs.items():
        for x in range(nh):
            arcs[(u * nh + x, v * nh + x)] = m
    for (x, y), m in h.arcs.items():
        for u in range(g.n):
            arcs[(u * nh + x, u * nh + y)] = arcs.get((u * nh + x, u * nh + y), 0) + m
    loops = {}
    for u in range(g.n):
        for x in range(nh):
            m = g.loop(u) + h.loop(x)
            if m:
                loops[u * nh + x] = m
    return Digraph(g.n * nh, arcs, loops)


def random_digraph(n, rng, arc_prob=0.3, max_mult=1):
    """Random digraph: each ordered pair gets an arc with ``arc_prob``."""
    arcs = {}
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < arc_prob:
                arcs[(u, v)] = int(rng.integers(1, max_mult + 1))
    return Digraph(n, arcs)


def random_mixed_graph(n, rng, pair_prob=0.5, max_mult=2):
    """Random loop-free mixed graph: occupied pairs become an arc (either
    direction) or an undirected edge, with multiplicity up to ``max_mult``."""
    arcs = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() >= pair_prob:
                continue
            m = int(rng.integers(1, max_mult + 1))
            kind = rng.integers(0, 3)
            if kind == 0:
                arcs[(u, v)] = m
            elif kind == 1:
                arcs[(v, u)] = m
            else:
                arcs[(u, v)] = m
                arcs[(v, u)] = m
    return Digraph(n, arcs)


def random_bipartite_digraph(n, rng, pair_prob=0.5, max_mult=2):
    """Random bipartite digraph: arcs only across a random vertex split."""
    if n < 2:
        return Digraph(n)
    cut = int(rng.integers(1, n))
    arcs = {}
    for u in range(cut):
        for v in range(cut, n):
            if rng.random() >= pair_prob:
                continue
            m = int(rng.integers(1, max_mult + 1))
            kind = rng.integers(0, 3)
            if kind == 0:
                arcs[(u, v)] = m
            elif kind == 1:
                arcs[(v, u)] = m
            else:
                arcs[(u, v)] = m
                arcs[(v, u)] = m
    return Digraph(n, arcs)


# --- edge-list text format ---
#
#   n <count>
#   a <u> <v> [mult]     arc u -> v
#   e <u> <v> [mult]     undirected edge (digon)
#   l <v> [mult]         loop
#
# '#' begins a comment; mult defaults to 1.


def parse_edge_list(text: str) -> Digraph:
    """Parse the line-oriented edge-list format."""
    n = None
    g = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        kind = parts[0]
        try:
            args = [int(p) for p in parts[1:]]
        except ValueError as exc:
            raise EdgeListError(f"line {lineno}: non-integer field in {raw!r}") from exc
        if kind == "n":
            if n is not None:
                raise EdgeListError(f"line {lineno}: duplicate vertex-count line")
            if len(args) != 1 or args[0] < 0:
                raise EdgeListError(f"line {lineno}: expected 'n <count>'")
            n = args[0]
            g = Digraph(n)
            continue
        if g is None:
            raise EdgeListError(f"line {lineno}: 'n <count>' must come first")
        try:
            if kind == "a":
                if len(args) == 2:
                    g = g.add_arc(args[0], args[1])
                elif len(args) == 3:
                    g = g.add_arc(args[0], args[1], args[2])
                else:
                    raise EdgeListError(f"line {lineno}: expected 'a <u> <v> [mult]'")
            elif kind == "e":
                if len(args) == 2:
                    g = g.add_edge(args[0], args[1])
                elif len(args) == 3:
                    g = g.add_edge(args[0], args[1], args[2])
                else:
                    raise EdgeListError(f"line {lineno}: expected 'e <u> <v> [mult]'")
            elif kind == "l":
                if len(args) == 1:
                    g = g.add_loop(args[0])
                elif len(args) == 2:
                    g = g.add_loop(args[0], args[1])
                else:
                    raise EdgeListError(f"line {lineno}: expected 'l <v> [mult]'")
            else:
                raise EdgeListError(f"line {lineno}: unknown record {kind!r}")
        except ValueError as exc:
            if isinstance(exc, EdgeListError):
                raise
            raise EdgeListError(f"line {lineno}: {exc}") from exc
    if g is None:
        raise EdgeListError("missing 'n <count>' line")
    return g


def serialize_edge_list(g: Digraph) -> str:
    """Canonical edge-list text; parse(serialize(g)) == g exactly."""
    lines = [f"n {g.n}"]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            fwd, back = g.e(u, v), g.e(v, u)
            digons = min(fwd, back)
            if digons:
                lines.append(f"e {u} {v} {digons}")
            if fwd > back:
                lines.append(f"a {u} {v} {fwd - back}")
            elif back > fwd:
                lines.append(f"a {v} {u} {back - fwd}")
    for v in sorted(g.loops):
        lines.append(f"l {v} {g.loops[v]}")
    return "\n".join(lines) + "\n"


def load_edge_list(path) -> Digraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())


def save_edge_list(g: Digraph, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_edge_list(g))


def digraph_digest(g: Digraph) -> str:
    """SHA-256 of the canonical serialization; stable input fingerprint."""
    return hashlib.sha256(serialize_edge_list(g).encode("utf-8")).hexdigest()
