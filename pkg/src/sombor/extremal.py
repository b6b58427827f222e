"""Exhaustive search over small graphs.

Graphs of order ``n`` are generated one isomorphism class at a time by
adding edges to canonical representatives and deduplicating with
:func:`~sombor.graph.canonical_form`.  Every class here excludes isolated
vertices, so ``all`` means "minimum degree at least 1".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

from .graph import (
    Graph,
    add_edge,
    canonical_form,
    canonical_graph,
    cycle,
    complete,
    disjoint_union,
    is_connected,
    iter_masks,
    parse_graph6,
    path,
)
from .indices import DomainError, IndexSpec, ka, ka_reduced, named_index

MAX_ENUM_N = 7
REL_TOL = 1e-9

KINDS = ("all", "connected", "no_pendant", "connected_no_pendant")

FIRST = "extremal_first"  # K_n maximizes, trees / matchings minimize KA
SECOND = "extremal_second"  # cycles minimize reduced KA for alpha, beta < 0


class UnsupportedError(ValueError):
    """Request beyond the exhaustive-search cap."""


@dataclass(frozen=True)
class GraphClass:
    n: int
    kind: str = "all"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown graph class {self.kind!r}; expected one of {KINDS}")
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def connected(self) -> bool:
        return self.kind in ("connected", "connected_no_pendant")

    @property
    def pendant_free(self) -> bool:
        return self.kind in ("no_pendant", "connected_no_pendant")

    def contains(self, g: Graph) -> bool:
        if g.n != self.n or min(g.deg) < (2 if self.pendant_free else 1):
            return False
        return not self.connected or is_connected(g)


def _check_cap(n: int) -> None:
    if n > MAX_ENUM_N:
        raise UnsupportedError(f"exhaustive enumeration supports n <= {MAX_ENUM_N}, got n={n}")


@lru_cache(maxsize=None)
def _all_graphs(n: int, order: str) -> tuple[Graph, ...]:
    """Canonical representatives of every graph of order ``n`` (isolated vertices allowed)."""
    _check_cap(n)
    empty = canonical_graph(Graph(n), order)
    level = {canonical_form(empty, order): empty}
    out = [empty]
    for _ in range(n * (n - 1) // 2):
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            for u, v in g.non_edges():
                h = add_edge(g, u, v)
                key = canonical_form(h, order)
                if key not in nxt:
                    nxt[key] = canonical_graph(h, order)
        level = dict(sorted(nxt.items()))
        out.extend(level.values())
    return tuple(out)


def enumerate_graphs(cls: GraphClass, order: str = "refined") -> Iterator[Graph]:
    """Members of ``cls``, one per isomorphism class, by edge count then canonical form."""
    for g in _all_graphs(cls.n, order):
        if cls.contains(g):
            yield g


def enumerate_by_masks(cls: GraphClass, order: str = "refined") -> list[Graph]:
    """The members of ``cls`` found by scanning every labeled adjacency mask.

    Shares nothing with the augmentation path except ``canonical_form``;
    practical up to ``n = 6``.
    """
    _check_cap(cls.n)
    keys = {canonical_form(g, order) for g in iter_masks(cls.n) if cls.contains(g)}
    return [parse_graph6(k) for k in sorted(keys)]


def count(cls: GraphClass, order: str = "refined") -> int:
    return sum(1 for _ in enumerate_graphs(cls, order))


# ---- predicted extremal graphs -----------------------------------------


def near_matching(n: int) -> Graph:
    """``n/2`` copies of ``P_2``, or ``(n-3)/2`` copies plus one ``P_3`` for odd ``n``."""
    if n < 2:
        raise ValueError("need n >= 2")
    if n % 2 == 0:
        return disjoint_union(*[path(2)] * (n // 2))
    return disjoint_union(*[path(2)] * ((n - 3) // 2), path(3))


def _partitions(n: int, smallest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for k in range(smallest, n + 1):
        for rest in _partitions(n - k, k):
            yield [k] + rest


def cycle_unions(n: int) -> list[Graph]:
    """Every disjoint union of cycles with ``n`` vertices in total (the 2-regular graphs)."""
    return [disjoint_union(*map(cycle, parts)) for parts in _partitions(n, 3)]


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


@dataclass(frozen=True)
class Prediction:
    theorem: str
    claim: str
    description: str
    test: Callable[[list[Graph]], bool]


def _same_set(expected: list[Graph]) -> Callable[[list[Graph]], bool]:
    want = sorted(canonical_form(g) for g in expected)
    return lambda found: sorted(canonical_form(g) for g in found) == want


def predict(cls: GraphClass, spec: IndexSpec, direction: str) -> Optional[Prediction]:
    """The optimizer set a known extremal result claims for this search, if any."""
    form = spec.as_ka()
    if form is None:
        return None
    reduced, a, b = form
    n = cls.n
    first_applies = (not reduced and a * b > 0) or (reduced and a > 0 and b > 0)
    if first_applies and not cls.pendant_free and n >= 2:
        if direction == "max":
            return Prediction(FIRST, "1", f"K_{n} unique maximizer", _same_set([complete(n)]))
        if cls.connected:
            return Prediction(FIRST, "2", "every minimizer is a tree", lambda fs: all(map(is_tree, fs)))
        return Prediction(FIRST, "3", "unique minimizer is the near-perfect matching", _same_set([near_matching(n)]))
    if reduced and a < 0 and b < 0 and cls.pendant_free and n >= 3:
        if direction == "max":
            return Prediction(SECOND, "1", f"K_{n} unique maximizer", _same_set([complete(n)]))
        if cls.connected:
            return Prediction(SECOND, "2", f"C_{n} unique minimizer", _same_set([cycle(n)]))
        return Prediction(SECOND, "3", "minimizers are exactly the cycle unions", _same_set(cycle_unions(n)))
    return None


# ---- optimization ------------------------------------------------------


@dataclass
class ExtremalReport:
    graph_class: GraphClass
    index: IndexSpec
    direction: str
    optimum: float
    optimizers: list[str]
    candidates: int
    theorem: Optional[str] = None
    claim: Optional[str] = None
    prediction: Optional[str] = None
    matches_theorem: Optional[bool] = None
    values: dict = field(default_factory=dict, repr=False)

    @property
    def unique(self) -> bool:
        return len(self.optimizers) == 1

    def to_dict(self) -> dict:
        return {
            "class": {"n": self.graph_class.n, "kind": self.graph_class.kind},
            "index": {"family": self.index.family, "alpha": self.index.alpha, "beta": self.index.beta},
            "direction": self.direction,
            "candidates": self.candidates,
            "optimum": self.optimum,
            "optimizers": list(self.optimizers),
            "theorem": self.theorem,
            "claim": self.claim,
            "prediction": self.prediction,
            "matches_theorem": self.matches_theorem,
        }


def optimize(cls: GraphClass, index: IndexSpec, direction: str = "max") -> ExtremalReport:
    """Global optimum of ``index`` over ``cls`` with every optimizer, up to isomorphism."""
    if direction not in ("min", "max"):
        raise ValueError("direction must be 'min' or 'max'")
    form = index.as_ka()
    if form is not None and form[0] and form[1] < 0 and not cls.pendant_free:
        raise DomainError("reduced KA with alpha < 0 needs a pendant-free graph class")
    members = list(enumerate_graphs(cls))
    if not members:
        raise ValueError(f"graph class {cls} is empty")
    values = [named_index(g, index).value for g in members]
    best = min(values) if direction == "min" else max(values)
    tol = REL_TOL * max(1.0, abs(best))
    winners = [g for g, v in zip(members, values) if abs(v - best) <= tol]
    report = ExtremalReport(
        graph_class=cls,
        index=index,
        direction=direction,
        optimum=best,
        optimizers=[canonical_form(g).decode() for g in winners],
        candidates=len(members),
        values={canonical_form(g).decode(): v for g, v in zip(members, values)},
    )
    pred = predict(cls, index, direction)
    if pred is not None:
        report.theorem = pred.theorem
        report.claim = pred.claim
        report.prediction = pred.description
        report.matches_theorem = pred.test(winners)
    return report


@dataclass
class MonotonicityResult:
    holds: bool
    checked: int
    counterexample: Optional[dict] = None


def verify_edge_monotonicity(
    cls: GraphClass, alpha: float, beta: float, reduced: bool = False
) -> MonotonicityResult:
    """Whether adding any missing edge to any member of ``cls`` strictly raises KA."""
    if alpha * beta <= 0:
        raise DomainError("edge monotonicity needs alpha * beta > 0")
    if reduced and alpha < 0 and not cls.pendant_free:
        raise DomainError("reduced KA with alpha < 0 needs a pendant-free graph class")
    index = ka_reduced if reduced else ka
    checked = 0
    for g in enumerate_graphs(cls):
        before = index(g, alpha, beta).value
        for u, v in g.non_edges():
            after = index(add_edge(g, u, v), alpha, beta).value
            checked += 1
            if not after - before > REL_TOL * max(1.0, abs(before)):
                return MonotonicityResult(
                    False,
                    checked,
                    {"graph": canonical_form(g).decode(), "edge": (u, v), "before": before, "after": after},
                )
    return MonotonicityResult(True, checked)


@dataclass
class ClaimVerdict:
    claim: str
    status: str  # confirmed, refuted or not_applicable
    detail: str = ""
    reports: list[ExtremalReport] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "status": self.status,
            "detail": self.detail,
            "reports": [r.to_dict() for r in self.reports],
        }


def _claim(name: str, reports: list[ExtremalReport], detail: str) -> ClaimVerdict:
    ok = all(r.matches_theorem for r in reports)
    return ClaimVerdict(name, "confirmed" if ok else "refuted", detail, reports)


def verify_extremal_claims(n: int, alpha: float, beta: float) -> dict[str, ClaimVerdict]:
    """Check every extremal claim that applies at ``(n, alpha, beta)`` by brute force.

    Claims 1a-1c concern plain KA with ``alpha * beta > 0``; 1d repeats them
    for reduced KA with ``alpha, beta > 0``; 2a-2c concern reduced KA with
    ``alpha, beta < 0`` on pendant-free graphs.
    """
    _check_cap(n)
    out: dict[str, ClaimVerdict] = {}

    def first(spec: IndexSpec) -> list[ClaimVerdict]:
        conn, every = GraphClass(n, "connected"), GraphClass(n, "all")
        return [
            _claim("max", [optimize(conn, spec, "max"), optimize(every, spec, "max")], f"K_{n} unique maximizer"),
            _claim("tree", [optimize(conn, spec, "min")], "connected minimizers are trees"),
            _claim("matching", [optimize(every, spec, "min")], "near-perfect matching unique minimizer"),
        ]

    na = "not_applicable"
    if alpha * beta > 0 and n >= 2:
        for key, v in zip(("1a", "1b", "1c"), first(IndexSpec("KA", alpha, beta))):
            v.claim = key
            out[key] = v
    else:
        for key in ("1a", "1b", "1c"):
            out[key] = ClaimVerdict(key, na, "needs alpha * beta > 0")

    if alpha > 0 and beta > 0 and n >= 2:
        parts = first(IndexSpec("KA_reduced", alpha, beta))
        reports = [r for p in parts for r in p.reports]
        out["1d"] = ClaimVerdict(
            "1d",
            "confirmed" if all(p.status == "confirmed" for p in parts) else "refuted",
            "claims 1a-1c for reduced KA",
            reports,
        )
    else:
        out["1d"] = ClaimVerdict("1d", na, "needs alpha, beta > 0")

    if alpha < 0 and beta < 0 and n >= 3:
        spec = IndexSpec("KA_reduced", alpha, beta)
        wp, cwp = GraphClass(n, "no_pendant"), GraphClass(n, "connected_no_pendant")
        out["2a"] = _claim("2a", [optimize(cwp, spec, "max"), optimize(wp, spec, "max")], f"K_{n} unique maximizer")
        out["2b"] = _claim("2b", [optimize(cwp, spec, "min")], f"C_{n} unique minimizer")
        out["2c"] = _claim("2c", [optimize(wp, spec, "min")], "cycle unions are exactly the minimizers")
    else:
        for key in ("2a", "2b", "2c"):
            out[key] = ClaimVerdict(key, na, "needs alpha, beta < 0 and n >= 3")
    return out
