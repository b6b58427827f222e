"""Degree-based edge and vertex indices.

Everything reduces to one kernel, the edge sum of ``(f(d_u)^a + f(d_v)^a)^b``
with ``f(d) = d`` (plain) or ``f(d) = d - 1`` (reduced).  Named indices are
parameter choices of that kernel.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph

FAMILIES = (
    "KA",
    "KA_reduced",
    "SumConnectivity",
    "SO",
    "SO_red",
    "mSO",
    "BSO",
    "SO_alpha",
    "M1",
    "M1_var",
    "Forgotten",
    "ISI",
)

# CLI spellings accepted in addition to the canonical family names.
ALIASES = {
    "KAred": "KA_reduced",
    "KA_red": "KA_reduced",
    "chi": "SumConnectivity",
    "SOred": "SO_red",
    "SOalpha": "SO_alpha",
    "F": "Forgotten",
    "M1var": "M1_var",
}


class DomainError(ValueError):
    """An index evaluated outside the set of graphs where it is defined."""


def ipow(d: float, a: float) -> float:
    """``d ** a`` for ``d >= 0`` with the short cuts used throughout.

    ``d == 1`` and the exponents 0, 1, 2, 3 are exact; ``0 ** a`` is 0 for
    ``a > 0`` and undefined (``DomainError``) for ``a < 0``.
    """
    if a == 0:
        return 1.0
    if d == 1:
        return 1.0
    if d == 0:
        if a > 0:
            return 0.0
        raise DomainError(f"0 raised to negative power {a}")
    if a == 1:
        return float(d)
    if a == 2:
        return float(d * d)
    if a == 3:
        return float(d * d * d)
    return math.pow(d, a)


@dataclass(frozen=True)
class IndexSpec:
    family: str
    alpha: Optional[float] = None
    beta: Optional[float] = None

    def __post_init__(self):
        family = ALIASES.get(self.family, self.family)
        if family not in FAMILIES:
            raise ValueError(f"unknown index family {self.family!r}")
        object.__setattr__(self, "family", family)
        needs_alpha = family in ("KA", "KA_reduced", "SO_alpha", "M1_var")
        needs_beta = family in ("KA", "KA_reduced", "SumConnectivity")
        if needs_alpha and self.alpha is None:
            raise ValueError(f"{family} requires alpha")
        if needs_beta and self.beta is None:
            raise ValueError(f"{family} requires beta")
        if family == "SO_alpha" and self.alpha == 0:
            raise ValueError("SO_alpha requires alpha != 0")

    def as_ka(self) -> Optional[tuple[bool, float, float]]:
        """``(reduced, alpha, beta)`` if this index is a KA specialization."""
        f = self.family
        if f == "KA":
            return (False, self.alpha, self.beta)
        if f == "KA_reduced":
            return (True, self.alpha, self.beta)
        if f == "SumConnectivity":
            return (False, 1.0, self.beta)
        if f == "SO":
            return (False, 2.0, 0.5)
        if f == "SO_red":
            return (True, 2.0, 0.5)
        if f == "mSO":
            return (False, 2.0, -0.5)
        if f == "BSO":
            return (False, -2.0, 0.5)
        if f == "SO_alpha":
            return (False, self.alpha, 1.0 / self.alpha)
        return None

    @property
    def label(self) -> str:
        args = [f"{k}={v!r}" for k, v in (("alpha", self.alpha), ("beta", self.beta)) if v is not None]
        return f"{self.family}({','.join(args)})" if args else self.family


@dataclass(frozen=True)
class IndexValue:
    value: float
    edge_terms: Optional[tuple[float, ...]] = field(default=None, compare=False)

    def __float__(self) -> float:
        return self.value


def _require_no_isolated(g: Graph, what: str) -> None:
    if 0 in g.deg:
        v = g.deg.index(0)
        raise DomainError(f"{what}: vertex {v} is isolated")


def _edge_kernel(g: Graph, alpha: float, beta: float, shift: int, terms: bool) -> IndexValue:
    if not terms:
        total = 0.0
        for (a, b), count in g.degree_pairs():
            s = ipow(a - shift, alpha) + ipow(b - shift, alpha)
            total += count * ipow(s, beta)
        return IndexValue(total)
    out = []
    for u, v in g.edges:
        s = ipow(g.deg[u] - shift, alpha) + ipow(g.deg[v] - shift, alpha)
        out.append(ipow(s, beta))
    return IndexValue(math.fsum(out), tuple(out))


def ka(g: Graph, alpha: float, beta: float, terms: bool = False) -> IndexValue:
    """Sum over edges of ``(d_u**alpha + d_v**alpha) ** beta``."""
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise DomainError("alpha and beta must be finite")
    _require_no_isolated(g, "KA")
    return _edge_kernel(g, alpha, beta, 0, terms)


def ka_reduced(g: Graph, alpha: float, beta: float, terms: bool = False) -> IndexValue:
    """Reduced KA: degrees replaced by ``d - 1``.

    Pendant vertices contribute ``0 ** alpha = 0`` when ``alpha > 0``; for
    ``alpha < 0`` the index is undefined on graphs with pendant vertices.
    An edge whose reduced base sum is 0 (a ``P_2`` component) is undefined
    for ``beta < 0``.
    """
    if not (math.isfinite(alpha) and math.isfinite(beta)):
        raise DomainError("alpha and beta must be finite")
    if alpha == 0:
        raise DomainError("reduced KA is not supported for alpha = 0")
    _require_no_isolated(g, "reduced KA")
    if alpha < 0 and 1 in g.deg:
        raise DomainError(f"reduced KA with alpha < 0: vertex {g.deg.index(1)} is pendant")
    if beta < 0:
        for u, v in g.edges:
            if g.deg[u] == 1 and g.deg[v] == 1:
                raise DomainError(
                    f"reduced KA with beta < 0: edge {(u, v)} joins two pendant vertices"
                )
    return _edge_kernel(g, alpha, beta, 1, terms)


def vertex_index(g: Graph, family: str, alpha: Optional[float] = None) -> IndexValue:
    """Vertex sums ``sum d_u ** alpha``: ``M1`` (alpha 2), ``Forgotten`` (3), ``M1_var``."""
    family = ALIASES.get(family, family)
    if family == "M1":
        alpha = 2.0
    elif family == "Forgotten":
        alpha = 3.0
    elif family != "M1_var":
        raise ValueError(f"{family!r} is not a vertex index")
    if alpha is None:
        raise ValueError("M1_var requires alpha")
    if alpha <= 0:
        _require_no_isolated(g, f"M1_var with alpha={alpha}")
    return IndexValue(math.fsum(ipow(d, alpha) for d in g.deg))


def isi(g: Graph) -> IndexValue:
    """Inverse sum indeg index, sum over edges of ``d_u d_v / (d_u + d_v)``."""
    _require_no_isolated(g, "ISI")
    return IndexValue(sum(c * (a * b) / (a + b) for (a, b), c in g.degree_pairs()))


def named_index(g: Graph, spec: IndexSpec, terms: bool = False) -> IndexValue:
    kas = spec.as_ka()
    if kas is not None:
        reduced, alpha, beta = kas
        return (ka_reduced if reduced else ka)(g, alpha, beta, terms)
    if spec.family == "ISI":
        return isi(g)
    return vertex_index(g, spec.family, spec.alpha)


def edge_sum_identity_check(g: Graph, alpha: float) -> tuple[float, float]:
    """Both sides of ``sum_uv (d_u^a + d_v^a) = sum_u d_u^(a+1)``."""
    return ka(g, alpha, 1.0).value, vertex_index(g, "M1_var", alpha + 1.0).value
