"""Executable checkers for the Sombor/KA inequalities.

Every displayed bound is one :class:`CheckResult` row.  A row stores the side
claimed smaller as ``lhs`` and the side claimed larger as ``rhs``, so
``slack = rhs - lhs >= 0`` always means "holds".  Hypotheses are checked by
the checkers themselves: a parameter point or graph outside a theorem's
domain yields a single ``hypothesis_unmet`` row instead of an exception.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .graph import Graph, degree_stats, predicates, to_graph6
from .indices import DomainError, isi, ka, ka_reduced, vertex_index

TOL = 1e-9

SQRT2 = math.sqrt(2.0)


class Verdict(str, Enum):
    HOLDS_STRICT = "holds_strict"
    TIGHT = "tight"
    VIOLATED = "violated"
    HYPOTHESIS_UNMET = "hypothesis_unmet"


@dataclass(frozen=True)
class CheckResult:
    theorem: str
    case: int
    params: Mapping[str, float]
    lhs: Optional[float]
    rhs: Optional[float]
    slack: Optional[float]
    verdict: Verdict
    strict: bool = False
    tightness_predicted: Optional[bool] = None
    tightness_observed: Optional[bool] = None
    variant: str = ""
    note: str = ""
    graph: str = ""
    graph_index: int = -1

    @property
    def ok(self) -> bool:
        return self.verdict is not Verdict.VIOLATED


def _close(a: float, b: float, tol: float = TOL) -> bool:
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def bound(
    theorem: str,
    case: int,
    params: Mapping[str, float],
    smaller: float,
    larger: float,
    *,
    strict: bool = False,
    predicted: Optional[bool] = None,
    variant: str = "",
    note: str = "",
    tol: float = TOL,
) -> CheckResult:
    """Classify the claim ``smaller <= larger`` (``<`` when ``strict``).

    A strict claim attained with equality is a violation of that claim.
    """
    slack = larger - smaller
    scale = tol * max(1.0, abs(smaller), abs(larger))
    observed = abs(slack) <= scale
    if slack < -scale or (strict and observed):
        verdict = Verdict.VIOLATED
    elif observed:
        verdict = Verdict.TIGHT
    else:
        verdict = Verdict.HOLDS_STRICT
    return CheckResult(
        theorem=theorem,
        case=case,
        params=dict(params),
        lhs=smaller,
        rhs=larger,
        slack=slack,
        verdict=verdict,
        strict=strict,
        tightness_predicted=None if strict else predicted,
        tightness_observed=observed,
        variant=variant,
        note=note,
    )


def unmet(theorem: str, params: Mapping[str, float], note: str, variant: str = "") -> CheckResult:
    return CheckResult(
        theorem=theorem,
        case=0,
        params=dict(params),
        lhs=None,
        rhs=None,
        slack=None,
        verdict=Verdict.HYPOTHESIS_UNMET,
        variant=variant,
        note=note,
    )


@dataclass(frozen=True)
class _Facts:
    n: int
    m: int
    dmax: int
    dmin: int
    connected: bool
    regular: bool
    regular_components: bool
    biregular: bool
    pendant: bool
    isolated: bool
    # every edge joins two vertices of equal degree, that degree being
    # the minimum or the maximum degree of the graph
    extreme_level_edges: bool


@lru_cache(maxsize=8192)
def _facts(g: Graph) -> _Facts:
    st = degree_stats(g)
    pr = predicates(g)
    ext = all(a == b and a in (st.delta_min, st.delta_max) for (a, b), _ in g.degree_pairs())
    return _Facts(
        n=st.n,
        m=st.m,
        dmax=st.delta_max,
        dmin=st.delta_min,
        connected=pr.is_connected,
        regular=pr.is_regular,
        regular_components=pr.has_regular_components,
        biregular=pr.is_biregular,
        pendant=pr.has_pendant,
        isolated=pr.has_isolated,
        extreme_level_edges=ext,
    )


# ---- scalar inequalities -----------------------------------------------


def power_sum_bounds(x: float, y: float, a: float) -> list[tuple[int, float, float, bool]]:
    """Lines ``(case, smaller, larger, strict)`` comparing ``(x+y)^a`` with ``x^a + y^a``.

    Cases 1-2 for ``a > 1``, 3-4 for ``0 < a < 1``, 5 for ``a < 0``; the
    non-strict lines are equalities exactly when ``x == y``.
    """
    if x <= 0 or y <= 0:
        raise DomainError("x and y must be positive")
    s = x**a + y**a
    t = (x + y) ** a
    c = 2.0 ** (a - 1)
    if a > 1:
        return [(1, s, t, True), (2, t, c * s, False)]
    if 0 < a < 1:
        return [(3, c * s, t, False), (4, t, s, True)]
    if a < 0:
        return [(5, t, c * s, False)]
    raise DomainError(f"exponent {a} has no bound in this family")


def scalar_alb(x: float, y: float, alpha: float) -> tuple[float, float]:
    """``((x^a + y^a)^(1/a), x + (2^(1/a) - 1) y)`` for ``x >= y >= 0``, ``a >= 1``.

    The first never exceeds the second, with equality iff ``y == 0``,
    ``y == x`` or ``a == 1``.
    """
    if y < 0 or x < y:
        raise DomainError(f"need x >= y >= 0, got x={x}, y={y}")
    if alpha < 1:
        raise DomainError(f"need alpha >= 1, got {alpha}")
    lhs = (x**alpha + y**alpha) ** (1.0 / alpha)
    rhs = x + (2.0 ** (1.0 / alpha) - 1.0) * y
    return lhs, rhs


def holder_constant(p: float, a: float, b: float) -> float:
    """Constant of the reversed Hölder inequality for ratio bounds ``a <= w^p/z^q <= b``."""
    if p <= 1:
        raise DomainError(f"need p > 1, got {p}")
    if not 0 < a <= b:
        raise DomainError(f"need 0 < a <= b, got a={a}, b={b}")
    q = p / (p - 1.0)
    if p < 2:
        return (a / b) ** (1.0 / (2 * q)) / p + (b / a) ** (1.0 / (2 * p)) / q
    return (b / a) ** (1.0 / (2 * q)) / p + (a / b) ** (1.0 / (2 * p)) / q


# ---- graph theorems ----------------------------------------------------

ISOLATED_NOTE = "graph has an isolated vertex"


def _chain(
    theorem: str,
    g: Graph,
    alpha: float,
    beta: float,
    lam: float,
    index: Callable[[Graph, float, float], float],
    params: Mapping[str, float],
) -> list[CheckResult]:
    """Compare ``I(a, b)`` against ``I(a b / l, l)`` and ``2^(b-l) I(a b / l, l)``.

    Shared by the plain and reduced chains; the six bounds are numbered as
    they are displayed, bound ``k`` getting ``case = k``.
    """
    f = _facts(g)
    try:
        main = index(g, alpha, beta)
        other = index(g, alpha * beta / lam, lam)
    except DomainError as exc:
        return [unmet(theorem, params, f"index undefined: {exc}")]
    scaled = 2.0 ** (beta - lam) * other
    pred = f.regular_components
    if beta > lam and beta * lam > 0:
        return [
            bound(theorem, 1, params, other, main, strict=True),
            bound(theorem, 2, params, main, scaled, predicted=pred),
        ]
    if beta < lam and beta * lam > 0:
        return [
            bound(theorem, 3, params, scaled, main, predicted=pred),
            bound(theorem, 4, params, main, other, strict=True),
        ]
    if beta < 0 < lam:
        return [bound(theorem, 5, params, main, scaled, predicted=pred)]
    return [bound(theorem, 6, params, scaled, main, predicted=pred)]


def _chain_params_ok(theorem: str, alpha, beta, lam, params) -> Optional[CheckResult]:
    if alpha == 0 or beta == 0 or lam == 0:
        return unmet(theorem, params, "alpha, beta, lambda must be nonzero")
    if beta == lam:
        return unmet(theorem, params, "excluded case beta = lambda")
    return None


def check_T1(g: Graph, alpha: float, beta: float, lam: float) -> list[CheckResult]:
    """Plain KA chain between ``KA_{a,b}`` and ``KA_{ab/l, l}``."""
    tid = "T1_chain"
    params = {"alpha": alpha, "beta": beta, "lambda": lam}
    if _facts(g).isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    bad = _chain_params_ok(tid, alpha, beta, lam, params)
    if bad:
        return [bad]
    return _chain(tid, g, alpha, beta, lam, lambda h, a, b: ka(h, a, b).value, params)


def check_T2(g: Graph, alpha: float, beta: float, lam: float) -> list[CheckResult]:
    """Reduced KA chain; pendant vertices excluded when ``a < 0`` or ``a b l < 0``."""
    tid = "T2_chain_red"
    params = {"alpha": alpha, "beta": beta, "lambda": lam}
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    bad = _chain_params_ok(tid, alpha, beta, lam, params)
    if bad:
        return [bad]
    if (alpha < 0 or alpha * beta * lam < 0) and f.pendant:
        return [unmet(tid, params, "pendant vertex with alpha < 0 or alpha*beta*lambda < 0")]
    return _chain(tid, g, alpha, beta, lam, lambda h, a, b: ka_reduced(h, a, b).value, params)


def _so(g: Graph, a: float) -> float:
    return ka(g, a, 1.0 / a).value


def check_SOalpha_chain(g: Graph, alpha: float, mu: float) -> list[CheckResult]:
    tid = "C_SOalpha_chain"
    params = {"alpha": alpha, "mu": mu}
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    if alpha == 0 or mu == 0:
        return [unmet(tid, params, "alpha, mu must be nonzero")]
    if alpha == mu:
        return [unmet(tid, params, "excluded case alpha = mu")]
    so_a, so_mu = _so(g, alpha), _so(g, mu)
    scaled = 2.0 ** (1.0 / alpha - 1.0 / mu) * so_mu
    pred = f.regular_components
    if mu > alpha and alpha * mu > 0:
        return [
            bound(tid, 1, params, so_mu, so_a, strict=True),
            bound(tid, 2, params, so_a, scaled, predicted=pred),
        ]
    if mu < alpha and alpha * mu > 0:
        return [
            bound(tid, 3, params, scaled, so_a, predicted=pred),
            bound(tid, 4, params, so_a, so_mu, strict=True),
        ]
    if alpha < 0 < mu:
        return [bound(tid, 5, params, so_a, scaled, predicted=pred)]
    return [unmet(tid, params, "regime mu < 0 < alpha is not covered")]


def check_SOalpha_M1(g: Graph, alpha: float) -> list[CheckResult]:
    tid = "C_SOalpha_M1"
    params = {"alpha": alpha}
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    if alpha in (0, 1):
        return [unmet(tid, params, "alpha must differ from 0 and 1")]
    m1 = vertex_index(g, "M1").value
    so1 = ka(g, 1.0, 1.0).value
    if not _close(m1, so1, 1e-12):
        raise AssertionError(f"SO_1 = {so1} disagrees with M1 = {m1}")
    so_a = _so(g, alpha)
    scaled = 2.0 ** (1.0 / alpha - 1.0) * m1
    pred = f.regular_components
    if 0 < alpha < 1:
        return [
            bound(tid, 1, params, m1, so_a, strict=True),
            bound(tid, 2, params, so_a, scaled, predicted=pred),
        ]
    if alpha > 1:
        return [
            bound(tid, 3, params, scaled, so_a, predicted=pred),
            bound(tid, 4, params, so_a, m1, strict=True),
        ]
    return [bound(tid, 5, params, so_a, scaled, predicted=pred)]


def check_mSO_BSO(g: Graph) -> list[CheckResult]:
    tid = "C_mSO_BSO"
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, {}, ISOLATED_NOTE)]
    mso = ka(g, 2.0, -0.5).value
    bso = ka(g, -2.0, 0.5).value
    return [bound(tid, 1, {}, mso, 0.5 * bso, predicted=f.regular_components)]


def _zagreb_ratio(g: Graph, alpha: float) -> float:
    f = _facts(g)
    hi = f.dmax ** (alpha / 2)
    lo = f.dmin ** (alpha / 2)
    m1 = vertex_index(g, "M1_var", alpha + 1.0).value
    return (m1 + 2.0 * hi * lo * f.m) / (SQRT2 * (hi + lo))


def check_KA_M1var(g: Graph, alpha: float, beta: float) -> list[CheckResult]:
    """Lower bound of ``KA_{a,b}`` by the variable Zagreb index ``M1^(a+1)``.

    Equality can only occur in the ``b >= 1/2`` bound.  For ``b > 1/2`` it
    occurs exactly on regular graphs; at ``b = 1/2`` exactly when every edge
    joins two vertices of degree ``delta`` or two of degree ``Delta`` (the
    same thing for connected graphs).
    """
    tid = "T_KA_M1var"
    params = {"alpha": alpha, "beta": beta}
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    if alpha == 0:
        return [unmet(tid, params, "alpha must be nonzero")]
    if beta <= 0:
        return [unmet(tid, params, "beta must be positive")]
    value = ka(g, alpha, beta).value
    x = _zagreb_ratio(g, alpha)
    if beta < 0.5:
        return [bound(tid, 1, params, x ** (2 * beta), value)]
    pred = f.extreme_level_edges if beta == 0.5 else f.regular
    return [bound(tid, 2, params, x ** (2 * beta) * f.m ** (1 - 2 * beta), value, predicted=pred)]


def check_SO_F(g: Graph) -> list[CheckResult]:
    tid = "C_SO_F"
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, {}, ISOLATED_NOTE)]
    so = ka(g, 2.0, 0.5).value
    fi = vertex_index(g, "Forgotten").value
    lower = (fi + 2.0 * f.dmax * f.dmin * f.m) / (SQRT2 * (f.dmax + f.dmin))
    return [bound(tid, 1, {}, lower, so, predicted=f.extreme_level_edges)]


def check_T_Holder(g: Graph, alpha: float, beta: float, mu: float, p: float) -> list[CheckResult]:
    """Hölder sandwich of ``KA_{a,b}^p`` by ``KA_{a,p(b-mu)} KA_{a,p mu/(p-1)}^(p-1)``.

    Rows hold the p-th roots of both sides: case 1 is
    ``D_p (KA_{a,p(b-mu)})^(1/p) (KA_{a,p mu/(p-1)})^(1/q) <= KA_{a,b}`` with
    ``D_p = 1 / C_p``, case 2 is the plain Hölder upper bound.
    """
    tid = "T_Holder"
    params = {"alpha": alpha, "beta": beta, "mu": mu, "p": p}
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    if p <= 1:
        return [unmet(tid, params, "p must exceed 1")]
    q = p / (p - 1.0)
    # Compared after taking p-th roots: raising to the p-th power pushes
    # small KA values below the absolute floor of the tolerance.
    main = ka(g, alpha, beta).value
    prod = ka(g, alpha, p * (beta - mu)).value ** (1.0 / p) * ka(g, alpha, p * mu / (p - 1.0)).value ** (1.0 / q)
    shift = beta - mu * q
    e = p * shift
    lo = (2.0 * f.dmin**alpha) ** e
    hi = (2.0 * f.dmax**alpha) ** e
    if alpha * shift >= 0:
        c = holder_constant(p, lo, hi)
    else:
        c = holder_constant(p, hi, lo)
    lower_pred = f.regular if alpha * shift != 0 else None
    return [
        bound(tid, 1, params, prod / c, main, predicted=lower_pred),
        bound(tid, 2, params, main, prod, predicted=True if f.biregular else None),
    ]


def check_C_Holder_mp(g: Graph, alpha: float, mu: float, p: float) -> list[CheckResult]:
    tid = "C_Holder_mp"
    params = {"alpha": alpha, "mu": mu, "p": p}
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    if p <= 1:
        return [unmet(tid, params, "p must exceed 1")]
    prod = ka(g, alpha, -p * mu).value * ka(g, alpha, p * mu / (p - 1.0)).value ** (p - 1.0)
    return [bound(tid, 1, params, float(f.m) ** p, prod, predicted=True if f.biregular else None)]


def check_mSO_SO_product(g: Graph) -> list[CheckResult]:
    tid = "C_mSO_SO_product"
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, {}, ISOLATED_NOTE)]
    prod = ka(g, 2.0, -0.5).value * ka(g, 2.0, 0.5).value
    m2 = float(f.m * f.m)
    coef = (f.dmax + f.dmin) ** 2 / (4.0 * f.dmax * f.dmin)
    return [
        bound(tid, 1, {}, m2, prod, predicted=True if f.biregular else None),
        bound(tid, 2, {}, prod, coef * m2, predicted=f.regular),
    ]


def _sharp_rows(tid: str, g: Graph, alpha: float, per_edge_variant: Optional[bool], params) -> list[CheckResult]:
    f = _facts(g)
    m1 = vertex_index(g, "M1").value
    so_a = _so(g, alpha)
    gap = (2.0 - 2.0 ** (1.0 / alpha)) * f.dmin
    if alpha == 1:
        lower_pred = printed_pred = edge_pred = True
    else:
        lower_pred, printed_pred, edge_pred = f.regular_components, None, f.regular
    rows = [bound(tid, 1, params, 2.0 ** (1.0 / alpha - 1.0) * m1, so_a, predicted=lower_pred)]
    if per_edge_variant is not True:
        rows.append(
            bound(
                tid, 2, params, so_a, m1 - gap, predicted=printed_pred, variant="printed",
                note="gap (2 - 2^(1/alpha)) * delta subtracted once",
            )
        )
    if per_edge_variant is not False:
        rows.append(
            bound(
                tid, 3, params, so_a, m1 - gap * f.m, predicted=edge_pred, variant="per_edge",
                note="gap (2 - 2^(1/alpha)) * delta subtracted once per edge",
            )
        )
    return rows


def check_SOalpha_M1_sharp(
    g: Graph, alpha: float, per_edge_variant: Optional[bool] = None
) -> list[CheckResult]:
    """Sharpened ``SO_a`` vs ``M1`` bounds for ``a >= 1``.

    ``per_edge_variant`` selects the upper bound: ``False`` subtracts the
    degree gap once, as printed; ``True`` subtracts it for every edge, which
    is what summing the per-edge inequality gives; ``None`` reports both.
    Case 1 is the lower bound ``2^(1/a - 1) M1 <= SO_a``.
    """
    tid = "T_SOalpha_M1_sharp"
    params = {"alpha": alpha}
    if _facts(g).isolated:
        return [unmet(tid, params, ISOLATED_NOTE)]
    if alpha < 1:
        return [unmet(tid, params, "alpha must be at least 1")]
    return _sharp_rows(tid, g, alpha, per_edge_variant, params)


def check_SO_M1_sharp(g: Graph, per_edge_variant: Optional[bool] = None) -> list[CheckResult]:
    tid = "C_SO_M1_sharp"
    if _facts(g).isolated:
        return [unmet(tid, {}, ISOLATED_NOTE)]
    return _sharp_rows(tid, g, 2.0, per_edge_variant, {})


def check_ISI(g: Graph) -> list[CheckResult]:
    tid = "T_ISI"
    f = _facts(g)
    if f.isolated:
        return [unmet(tid, {}, ISOLATED_NOTE)]
    so = ka(g, 2.0, 0.5).value
    d = vertex_index(g, "M1").value - 2.0 * isi(g).value
    note = "stated hypothesis alpha >= 1 does not enter the bound; ignored"
    return [
        bound(tid, 1, {}, so, SQRT2 * d, predicted=f.regular_components, note=note),
        bound(tid, 2, {}, d, so, strict=True, note=note),
    ]


# ---- catalog and sweep -------------------------------------------------


@dataclass(frozen=True)
class Theorem:
    id: str
    symbols: tuple[str, ...]
    check: Callable[..., list[CheckResult]]
    iff: bool  # stated tightness characterization is an equivalence


CATALOG: tuple[Theorem, ...] = (
    Theorem("T1_chain", ("alpha", "beta", "lambda"), check_T1, True),
    Theorem("T2_chain_red", ("alpha", "beta", "lambda"), check_T2, True),
    Theorem("C_SOalpha_chain", ("alpha", "mu"), check_SOalpha_chain, True),
    Theorem("C_SOalpha_M1", ("alpha",), check_SOalpha_M1, True),
    Theorem("C_mSO_BSO", (), check_mSO_BSO, True),
    Theorem("T_KA_M1var", ("alpha", "beta"), check_KA_M1var, True),
    Theorem("C_SO_F", (), check_SO_F, True),
    Theorem("T_Holder", ("alpha", "beta", "mu", "p"), check_T_Holder, True),
    Theorem("C_Holder_mp", ("alpha", "mu", "p"), check_C_Holder_mp, False),
    Theorem("C_mSO_SO_product", (), check_mSO_SO_product, True),
    Theorem("T_SOalpha_M1_sharp", ("alpha",), check_SOalpha_M1_sharp, True),
    Theorem("C_SO_M1_sharp", (), check_SO_M1_sharp, True),
    Theorem("T_ISI", (), check_ISI, True),
)

THEOREM_IDS = tuple(t.id for t in CATALOG)

SYMBOLS = ("alpha", "beta", "lambda", "mu", "p")


def _values(*xs: str) -> tuple[float, ...]:
    return tuple(float(Fraction(x)) for x in xs)


DEFAULT_GRID: dict[str, tuple[float, ...]] = {
    "alpha": _values("-2", "-1", "-1/2", "1/4", "1/2", "1", "2", "3"),
    "beta": _values("-2", "-1", "-1/2", "1/4", "1/3", "1/2", "1", "2"),
    "lambda": _values("-2", "-1", "-1/2", "1/2", "1", "2"),
    "mu": _values("-2", "-1", "-1/2", "1/2", "1", "2"),
    "p": _values("3/2", "2", "3"),
}


def parse_grid(text: str) -> dict[str, tuple[float, ...]]:
    """Parse ``symbol: v1, v2, ...`` lines; values may be fractions like ``-1/2``.

    Symbols left out keep their default values.
    """
    grid = dict(DEFAULT_GRID)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ":" in line:
            key, _, rest = line.partition(":")
        elif "=" in line:
            key, _, rest = line.partition("=")
        else:
            raise ValueError(f"grid line {lineno}: expected 'symbol: values'")
        key = key.strip().lower()
        if key == "lam":
            key = "lambda"
        if key not in SYMBOLS:
            raise ValueError(f"grid line {lineno}: unknown symbol {key!r}")
        items = [t for t in rest.replace(",", " ").replace("[", " ").replace("]", " ").split() if t]
        try:
            grid[key] = tuple(float(Fraction(t)) for t in items)
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"grid line {lineno}: bad value list {rest.strip()!r}") from None
    return grid


def theorem_points(theorem: Theorem, grid: Mapping[str, Sequence[float]]) -> list[tuple[float, ...]]:
    return list(product(*(grid[s] for s in theorem.symbols)))


def check_graph(
    g: Graph,
    grid: Mapping[str, Sequence[float]] = DEFAULT_GRID,
    theorems: Iterable[Theorem] = CATALOG,
) -> list[CheckResult]:
    rows: list[CheckResult] = []
    for th in theorems:
        for point in theorem_points(th, grid):
            rows.extend(th.check(g, *point))
    return rows


@dataclass
class SuiteResult:
    rows: list[CheckResult]
    summary: dict = field(default_factory=dict)

    @property
    def violations(self) -> list[CheckResult]:
        return [r for r in self.rows if r.verdict is Verdict.VIOLATED]


def summarize(rows: Iterable[CheckResult]) -> dict:
    per: dict[str, dict[str, int]] = {}
    totals = {v.value: 0 for v in Verdict}
    mismatches = 0
    for r in rows:
        bucket = per.setdefault(r.theorem, {v.value: 0 for v in Verdict})
        bucket[r.verdict.value] += 1
        totals[r.verdict.value] += 1
        if r.tightness_predicted is not None and r.tightness_predicted != r.tightness_observed:
            mismatches += 1
    return {"totals": totals, "by_theorem": per, "tightness_mismatches": mismatches}


def run_suite(
    corpus: Sequence[Graph],
    grid: Mapping[str, Sequence[float]] = DEFAULT_GRID,
    theorems: Optional[Iterable[Theorem]] = None,
    workers: int = 1,
) -> SuiteResult:
    """Every theorem at every grid point on every graph.

    Rows come out ordered by graph, then catalog order, then grid point,
    whatever the number of workers.
    """
    theorems = tuple(CATALOG if theorems is None else theorems)

    def one(item: tuple[int, Graph]) -> list[CheckResult]:
        i, g = item
        g6 = to_graph6(g)
        return [replace(r, graph=g6, graph_index=i) for r in check_graph(g, grid, theorems)]

    items = list(enumerate(corpus))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(one, items))
    else:
        chunks = [one(it) for it in items]
    rows = [r for chunk in chunks for r in chunk]
    return SuiteResult(rows=rows, summary=summarize(rows))
