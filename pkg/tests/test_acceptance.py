"""Acceptance gate: one test (or group of tests) per criterion.

The terminal summary prints ``criterion N: PASS/FAIL`` for each of them.
"""

import json
import math
import time
from collections import Counter

import numpy as np
import pytest

from sombor.cli import main
from sombor.extremal import (
    GraphClass,
    count,
    cycle_unions,
    enumerate_graphs,
    is_tree,
    near_matching,
    optimize,
    verify_edge_monotonicity,
)
from sombor.extremal import _all_graphs
from sombor.graph import canonical_form, complete, cycle, iter_masks, parse_graph6, relabel, to_graph6
from sombor.indices import IndexSpec, isi, ka, vertex_index
from sombor.inequalities import CATALOG, TOL, Verdict, check_SO_F, holder_constant, run_suite

S2 = math.sqrt(2)


@pytest.fixture(scope="module")
def sweep():
    corpus = [g for n in range(2, 7) for g in enumerate_graphs(GraphClass(n, "connected"))]
    t0 = time.perf_counter()
    res = run_suite(corpus)
    return corpus, res, time.perf_counter() - t0


# ---- 1 ----------------------------------------------------------------------


@pytest.mark.acceptance(1)
def test_soundness_sweep(sweep):
    corpus, res, elapsed = sweep
    assert len(corpus) == 1 + 2 + 6 + 21 + 112
    assert {r.theorem for r in res.rows} == {t.id for t in CATALOG}
    assert elapsed < 120
    bad = res.violations
    summary = Counter((r.theorem, r.case, r.graph) for r in bad)
    assert not bad, f"{len(bad)} violated rows: {dict(summary)}"


# ---- 2 ----------------------------------------------------------------------


@pytest.mark.acceptance(2)
def test_tightness_biconditionals(sweep):
    _, res, _ = sweep
    iff = {t.id for t in CATALOG if t.iff}
    checked = 0
    mismatches = []
    for r in res.rows:
        if r.tightness_predicted is None or r.theorem not in iff:
            continue
        checked += 1
        if r.tightness_predicted != r.tightness_observed:
            mismatches.append((r.theorem, r.case, r.graph, r.params))
    assert checked > 10_000
    assert not mismatches, mismatches[:10]


@pytest.mark.acceptance(2)
def test_tightness_sufficient_conditions(sweep):
    _, res, _ = sweep
    rows = [r for r in res.rows if r.theorem in ("T_Holder", "C_Holder_mp") and r.tightness_predicted]
    assert rows
    assert all(r.tightness_observed for r in rows)


@pytest.mark.acceptance(2)
def test_sharp_per_edge_variant_biconditional(sweep):
    _, res, _ = sweep
    rows = [r for r in res.rows if r.variant == "per_edge"]
    assert rows and all(r.tightness_predicted == r.tightness_observed for r in rows)


@pytest.mark.acceptance(2)
def test_strict_lines_stay_strict(sweep):
    _, res, _ = sweep
    strict = [r for r in res.rows if r.strict and r.verdict is not Verdict.HYPOTHESIS_UNMET]
    assert strict
    off = [r for r in strict if not r.slack > TOL * max(1, abs(r.lhs), abs(r.rhs))]
    assert all(r.theorem == "T2_chain_red" for r in off)


# ---- 3 ----------------------------------------------------------------------


@pytest.mark.acceptance(3)
def test_spot_values():
    k3 = complete(3)
    so = ka(k3, 2, 0.5).value
    assert abs(so - 6 * S2) <= 1e-12 * 6 * S2
    prod = ka(k3, 2, -0.5).value * so
    assert abs(prod - 9) <= 1e-9 * 9
    rhs = S2 * (vertex_index(k3, "M1").value - 2 * isi(k3).value)
    assert abs(rhs - so) <= 1e-9 * so
    (row,) = check_SO_F(k3)
    assert abs(row.lhs - 6 * S2) <= 1e-9 * 6 * S2
    assert row.verdict is Verdict.TIGHT


# ---- 4 ----------------------------------------------------------------------

POSITIVE_PRODUCT_POINTS = [(2.0, 0.5), (1.0, 1.0), (0.5, 2.0), (-1.0, -1.0), (-2.0, -0.5)]


@pytest.mark.acceptance(4)
@pytest.mark.parametrize("n", range(4, 8))
def test_extremal_plain(n):
    assert len(POSITIVE_PRODUCT_POINTS) >= 4
    kn = canonical_form(complete(n)).decode()
    matching = canonical_form(near_matching(n)).decode()
    for a, b in POSITIVE_PRODUCT_POINTS:
        spec = IndexSpec("KA", a, b)
        for kind in ("connected", "all"):
            rep = optimize(GraphClass(n, kind), spec, "max")
            assert rep.optimizers == [kn], (a, b, kind)
        rep = optimize(GraphClass(n, "connected"), spec, "min")
        assert all(is_tree(parse_graph6(g6)) for g6 in rep.optimizers), (a, b)
        rep = optimize(GraphClass(n, "all"), spec, "min")
        assert rep.optimizers == [matching], (a, b)


# ---- 5 ----------------------------------------------------------------------

NEGATIVE_POINTS = [(-1.0, -1.0), (-2.0, -0.5), (-0.5, -2.0)]


@pytest.mark.acceptance(5)
@pytest.mark.parametrize("n", range(3, 8))
def test_extremal_reduced(n):
    kn = canonical_form(complete(n)).decode()
    cn = canonical_form(cycle(n)).decode()
    unions = sorted(canonical_form(g).decode() for g in cycle_unions(n))
    for a, b in NEGATIVE_POINTS:
        spec = IndexSpec("KA_reduced", a, b)
        rep = optimize(GraphClass(n, "connected_no_pendant"), spec, "min")
        assert rep.optimizers == [cn], (a, b)
        rep = optimize(GraphClass(n, "no_pendant"), spec, "min")
        assert sorted(rep.optimizers) == unions, (a, b)
        for kind in ("connected_no_pendant", "no_pendant"):
            rep = optimize(GraphClass(n, kind), spec, "max")
            assert rep.optimizers == [kn], (a, b, kind)


# ---- 6 ----------------------------------------------------------------------

GRID_PRODUCT_POSITIVE = [
    (a, b)
    for a in (-2.0, -1.0, -0.5, 0.25, 0.5, 1.0, 2.0, 3.0)
    for b in (-2.0, -1.0, -0.5, 0.25, 1 / 3, 0.5, 1.0, 2.0)
    if a * b > 0
]


@pytest.mark.acceptance(6)
@pytest.mark.parametrize("n", range(2, 7))
def test_edge_monotonicity(n):
    checked = 0
    for a, b in GRID_PRODUCT_POSITIVE:
        res = verify_edge_monotonicity(GraphClass(n, "all"), a, b)
        assert res.holds, res.counterexample
        checked += res.checked
        cls = GraphClass(n, "all" if a > 0 else "no_pendant")
        res = verify_edge_monotonicity(cls, a, b, reduced=True)
        assert res.holds, res.counterexample
        checked += res.checked
    assert n == 2 or checked > 0


# ---- 7 ----------------------------------------------------------------------

RATIO_PAIRS = [(1.0, 2.0), (1.0, 4.0), (0.5, 10.0)]


def _worst_ratio(p, a, b, trials, rng, k=8):
    q = p / (p - 1)
    c = holder_constant(p, a, b)
    z = rng.uniform(0.05, 3.0, size=(trials, k))
    r = rng.uniform(a, b, size=(trials, k))
    # half the trials put every ratio at an endpoint
    r[::2] = rng.choice([a, b], size=(len(r[::2]), k))
    w = (r * z**q) ** (1 / p)
    lhs = np.sum(w**p, axis=1) ** (1 / p) * np.sum(z**q, axis=1) ** (1 / q)
    return float(np.max(lhs / (c * np.sum(w * z, axis=1))))


@pytest.mark.acceptance(7)
@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
@pytest.mark.parametrize("a, b", RATIO_PAIRS)
def test_converse_holder(p, a, b):
    rng = np.random.default_rng(20240 + int(10 * p) + int(10 * b))
    assert _worst_ratio(p, a, b, 10_000, rng) <= 1 + 1e-12


@pytest.mark.acceptance(7)
@pytest.mark.parametrize("p", [1.5, 2.0, 3.0])
def test_converse_holder_equal_bounds(p):
    for a in (0.5, 1.0, 3.0):
        assert abs(holder_constant(p, a, a) - 1) <= 1e-12


# ---- 8 ----------------------------------------------------------------------


@pytest.mark.acceptance(8)
def test_sharp_bound_discrepancy_rows():
    res = run_suite([complete(3)])
    for tid in ("T_SOalpha_M1_sharp", "C_SO_M1_sharp"):
        rows = {
            r.variant: r
            for r in res.rows
            if r.theorem == tid and r.variant and r.params.get("alpha", 2.0) == 2.0
        }
        assert rows["printed"].verdict is Verdict.HOLDS_STRICT
        assert rows["per_edge"].verdict is Verdict.TIGHT
        assert math.isclose(rows["printed"].rhs, 12 - (2 - S2) * 2, rel_tol=1e-12)
        assert math.isclose(rows["per_edge"].rhs, 6 * S2, rel_tol=1e-12)


# ---- 9 ----------------------------------------------------------------------


@pytest.mark.acceptance(9)
def test_graph6_round_trip():
    for n in range(1, 7):
        for g in iter_masks(n):
            assert parse_graph6(to_graph6(g)) == g
    rng = np.random.default_rng(9)
    for g in _all_graphs(7, "refined"):
        assert parse_graph6(to_graph6(g)) == g
        h = relabel(g, [int(x) for x in rng.permutation(7)])
        assert parse_graph6(to_graph6(h)) == h


@pytest.mark.acceptance(9)
def test_counts_stable_under_order():
    for n in range(2, 8):
        for kind in ("all", "connected", "no_pendant", "connected_no_pendant"):
            cls = GraphClass(n, kind)
            assert count(cls, "refined") == count(cls, "reversed")
    assert len(_all_graphs(7, "refined")) == len(_all_graphs(7, "reversed")) == 1044


@pytest.mark.acceptance(9)
def test_suite_reports_byte_identical(tmp_path):
    out = tmp_path / "report.json"
    argv = ["suite", "--max-n", "5", "--no-timestamp", "-o", str(out)]
    codes, blobs = [], []
    for _ in range(2):
        codes.append(main(argv))
        blobs.append(out.read_bytes())
    assert codes[0] == codes[1]
    assert blobs[0] == blobs[1]
    json.loads(blobs[0])
