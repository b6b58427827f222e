"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is a single integer bitset over the upper triangle, laid out in
graph6 column order ``(0,1), (0,2), (1,2), (0,3), ...``.  Degrees are cached
at construction; a :class:`Graph` never changes after it is built.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Iterator, Sequence

MAX_GRAPH6_N = 62
MAX_CANON_N = 10


class GraphError(ValueError):
    """Invalid graph construction."""


class ParseError(GraphError):
    """Malformed graph6 or edge-list input.

    ``position`` is a byte offset (graph6) or a 1-based line number
    (edge lists).
    """

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


def _bit(u: int, v: int) -> int:
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


class Graph:
    __slots__ = ("n", "mask", "deg", "_nbrs", "_pairs", "_hash")

    def __init__(self, n: int, mask: int = 0):
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        if mask < 0 or mask >> (n * (n - 1) // 2):
            raise GraphError("adjacency mask has bits outside the triangle")
        self.n = n
        self.mask = mask
        nbrs = [0] * n
        for v in range(1, n):
            base = v * (v - 1) // 2
            col = (mask >> base) & ((1 << v) - 1)
            while col:
                low = col & -col
                u = low.bit_length() - 1
                nbrs[u] |= 1 << v
                nbrs[v] |= 1 << u
                col ^= low
        self._nbrs = tuple(nbrs)
        self.deg = tuple(bin(x).count("1") for x in nbrs)
        self._pairs = None
        self._hash = None

    # ---- basic queries -------------------------------------------------

    @property
    def m(self) -> int:
        return bin(self.mask).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and bool(self._nbrs[u] >> v & 1)

    def neighbors(self, u: int) -> list[int]:
        x = self._nbrs[u]
        out = []
        while x:
            low = x & -x
            out.append(low.bit_length() - 1)
            x ^= low
        return out

    def neighbor_mask(self, u: int) -> int:
        return self._nbrs[u]

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return [(u, v) for u in range(self.n) for v in self.neighbors(u) if u < v]

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self._nbrs[u] >> v & 1
        ]

    def degree_pairs(self) -> tuple[tuple[tuple[int, int], int], ...]:
        """Multiset of endpoint degree pairs ``((hi, lo), count)``, sorted.

        Every degree-based edge index depends on the graph only through this
        multiset.
        """
        if self._pairs is None:
            c: Counter = Counter()
            for u, v in self.edges:
                a, b = self.deg[u], self.deg[v]
                c[(a, b) if a >= b else (b, a)] += 1
            self._pairs = tuple(sorted(c.items()))
        return self._pairs

    # ---- value semantics -----------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.mask == other.mask

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.mask))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges})"

    def __reduce__(self):
        return (Graph, (self.n, self.mask))


@dataclass(frozen=True)
class DegreeStats:
    n: int
    m: int
    delta_max: int
    delta_min: int


@dataclass(frozen=True)
class Predicates:
    is_connected: bool
    is_regular: bool
    has_regular_components: bool
    is_biregular: bool
    has_pendant: bool
    has_isolated: bool


# ---- construction ------------------------------------------------------


def from_edge_list(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 1:
        raise GraphError(f"vertex count must be positive, got {n}")
    mask = 0
    for pair in edges:
        u, v = int(pair[0]), int(pair[1])
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"vertex out of range in edge {(u, v)} for n={n}")
        if u == v:
            raise GraphError(f"loop edge {(u, v)}")
        b = 1 << _bit(u, v)
        if mask & b:
            raise GraphError(f"duplicate edge {(u, v)}")
        mask |= b
    return Graph(n, mask)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    if u == v:
        raise GraphError(f"loop edge {(u, v)}")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex out of range in edge {(u, v)} for n={g.n}")
    b = 1 << _bit(u, v)
    if g.mask & b:
        raise GraphError(f"edge {(u, v)} already present")
    return Graph(g.n, g.mask | b)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``u`` renamed ``perm[u]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabeling is not a permutation")
    return from_edge_list(g.n, [(perm[u], perm[v]) for u, v in g.edges])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph(n, (1 << (n * (n - 1) // 2)) - 1)


def star(leaves: int) -> Graph:
    return from_edge_list(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges: list[tuple[int, int]] = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return from_edge_list(offset, edges)


# ---- graph6 ------------------------------------------------------------


def parse_graph6(text: bytes | str) -> Graph:
    if isinstance(text, str):
        try:
            data = text.strip().encode("ascii")
        except UnicodeEncodeError as exc:
            raise ParseError("graph6 must be ASCII", exc.start) from None
    else:
        data = bytes(text).strip()
    if data.startswith(b">>graph6<<"):
        data = data[len(b">>graph6<<"):]
    if not data:
        raise ParseError("empty graph6 string", 0)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise ParseError(f"byte {c!r} at offset {i} outside [63, 126]", i)
    n = data[0] - 63
    if n > MAX_GRAPH6_N:
        raise ParseError("only the single-byte size header (n < 63) is supported", 0)
    if n == 0:
        raise ParseError("graph6 encodes an empty vertex set", 0)
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(data) - 1 != want:
        raise ParseError(
            f"expected {want} data bytes for n={n}, got {len(data) - 1}",
            min(len(data), 1 + want),
        )
    mask = 0
    k = 0
    for i, c in enumerate(data[1:], start=1):
        x = c - 63
        for shift in range(5, -1, -1):
            if k < nbits:
                if x >> shift & 1:
                    mask |= 1 << k
            elif x >> shift & 1:
                raise ParseError(f"nonzero padding bit at offset {i}", i)
            k += 1
    return Graph(n, mask)


def to_graph6(g: Graph) -> str:
    if g.n > MAX_GRAPH6_N:
        raise GraphError("graph6 output limited to n < 63")
    nbits = g.n * (g.n - 1) // 2
    out = [chr(g.n + 63)]
    for start in range(0, nbits, 6):
        x = 0
        for k in range(start, start + 6):
            x <<= 1
            if k < nbits and g.mask >> k & 1:
                x |= 1
        out.append(chr(x + 63))
    return "".join(out)


# ---- edge-list text ----------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` on the first content line, then ``u v`` lines (0-based)."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise ParseError(f"line {lineno}: expected integers, got {raw.strip()!r}", lineno) from None
        if n is None:
            if len(nums) != 1:
                raise ParseError(f"line {lineno}: first line must hold the vertex count", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw.strip()!r}", lineno)
        edges.append((lineno, nums[0], nums[1]))
    if n is None:
        raise ParseError("edge list is empty", 1)
    mask = 0
    for lineno, u, v in edges:
        if not (0 <= u < n and 0 <= v < n) or u == v:
            raise ParseError(f"line {lineno}: invalid edge {(u, v)} for n={n}", lineno)
        b = 1 << _bit(u, v)
        if mask & b:
            raise ParseError(f"line {lineno}: duplicate edge {(u, v)}", lineno)
        mask |= b
    try:
        return Graph(n, mask)
    except GraphError as exc:
        raise ParseError(str(exc), 1) from None


def to_edge_list(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graphs(path: str | Path) -> list[Graph]:
    """Read a corpus file.

    A file whose first content line is a bare integer is one edge list;
    otherwise every non-blank, non-comment line is a graph6 string.
    """
    text = Path(path).read_text()
    content = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    first = next((ln for ln in content if ln), None)
    if first is None:
        return []
    if first.isdigit():
        return [parse_edge_list(text)]
    graphs = []
    for lineno, ln in enumerate(content, start=1):
        if not ln:
            continue
        try:
            graphs.append(parse_graph6(ln))
        except ParseError as exc:
            raise ParseError(f"line {lineno}: {exc}", lineno) from None
    return graphs


# ---- statistics and predicates -----------------------------------------


def degree_stats(g: Graph) -> DegreeStats:
    return DegreeStats(n=g.n, m=g.m, delta_max=max(g.deg), delta_min=min(g.deg))


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp_mask = 1 << s
        frontier = comp_mask
        while frontier:
            nxt = 0
            x = frontier
            while x:
                low = x & -x
                nxt |= g.neighbor_mask(low.bit_length() - 1)
                x ^= low
            frontier = nxt & ~comp_mask
            comp_mask |= nxt
        seen |= comp_mask
        comps.append([v for v in range(g.n) if comp_mask >> v & 1])
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) == 1


def is_biregular(g: Graph) -> bool:
    return len(g.degree_pairs()) <= 1


def predicates(g: Graph) -> Predicates:
    comps = components(g)
    return Predicates(
        is_connected=len(comps) == 1,
        is_regular=len(set(g.deg)) == 1,
        has_regular_components=all(len({g.deg[v] for v in c}) == 1 for c in comps),
        is_biregular=is_biregular(g),
        has_pendant=1 in g.deg,
        has_isolated=0 in g.deg,
    )


# ---- canonical form ----------------------------------------------------


def _refined_cells(g: Graph) -> list[list[int]]:
    """Ordered equitable partition from colour refinement, seeded by degree.

    The order of the cells depends only on isomorphism-invariant data.
    """
    colors = list(g.deg)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in g.neighbors(v))))
            for v in range(g.n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            break
        ncolors = len(rank)
    cells: dict[int, list[int]] = {}
    for v in range(g.n):
        cells.setdefault(colors[v], []).append(v)
    return [cells[c] for c in sorted(cells)]


def _search(g: Graph, slots: list[list[int]]) -> list[int]:
    """Vertex ordering giving the lexicographically smallest column bitstring.

    ``slots[k]`` lists the vertices allowed at position ``k``.  Column ``k``
    holds the adjacency bits of the vertex at position ``k`` to positions
    ``0..k-1``, most significant first; a branch is cut as soon as its
    column prefix exceeds the incumbent's.
    """
    n = g.n
    nbrs = [g.neighbor_mask(v) for v in range(n)]
    best: list[int] = []
    best_perm: list[int] = []
    perm: list[int] = []
    cols: list[int] = []

    def dfs(k: int, used: int) -> None:
        nonlocal best, best_perm
        if k == n:
            if not best or cols < best:
                best = list(cols)
                best_perm = list(perm)
            return
        for v in slots[k]:
            if used >> v & 1:
                continue
            c = 0
            for w in perm:
                c = (c << 1) | (nbrs[v] >> w & 1)
            cols.append(c)
            if not best or cols <= best[: k + 1]:
                perm.append(v)
                dfs(k + 1, used | (1 << v))
                perm.pop()
            cols.pop()

    dfs(0, 0)
    return best_perm


def canonical_labeling(g: Graph, order: str = "refined") -> list[int]:
    """Return ``perm`` with ``perm[k]`` = original vertex placed at position ``k``.

    ``order`` selects the search space:

    * ``"refined"``: positions grouped by refined colour cell (default).
    * ``"reversed"``: the same cells taken in reverse order; a different but
      equally canonical labeling, used to cross-check enumeration counts.
    * ``"exhaustive"``: every one of the ``n!`` orderings.
    """
    if g.n > MAX_CANON_N:
        raise GraphError(f"canonical form supported only for n <= {MAX_CANON_N}, got n={g.n}")
    if order == "exhaustive":
        slots = [list(range(g.n))] * g.n
    else:
        cells = _refined_cells(g)
        if order == "reversed":
            cells = cells[::-1]
        elif order != "refined":
            raise ValueError(f"unknown canonical order {order!r}")
        slots = [cell for cell in cells for _ in cell]
    return _search(g, slots)


def canonical_graph(g: Graph, order: str = "refined") -> Graph:
    perm = canonical_labeling(g, order)
    pos = [0] * g.n
    for k, v in enumerate(perm):
        pos[v] = k
    return relabel(g, pos)


def canonical_form(g: Graph, order: str = "refined") -> bytes:
    """Isomorphism-invariant byte string (graph6 of the canonical relabeling)."""
    return to_graph6(canonical_graph(g, order)).encode("ascii")


def iter_masks(n: int) -> Iterator[Graph]:
    for mask in range(1 << (n * (n - 1) // 2)):
        yield Graph(n, mask)
