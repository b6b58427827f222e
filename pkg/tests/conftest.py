import math

import pytest

from sombor.graph import complete, cycle, disjoint_union, from_edge_list, path, star


# ---- independent oracles (plain Python, no package code) -----------------


def oracle_degrees(n, edges):
    d = [0] * n
    for u, v in edges:
        d[u] += 1
        d[v] += 1
    return d


def oracle_ka(n, edges, alpha, beta, shift=0):
    """Term-by-term edge sum straight from the definition."""
    d = oracle_degrees(n, edges)
    return math.fsum(((d[u] - shift) ** alpha + (d[v] - shift) ** alpha) ** beta for u, v in edges)


def oracle_vertex_sum(n, edges, alpha):
    return math.fsum(x**alpha for x in oracle_degrees(n, edges))


def oracle_isi(n, edges):
    d = oracle_degrees(n, edges)
    return math.fsum(d[u] * d[v] / (d[u] + d[v]) for u, v in edges)


# ---- named graphs --------------------------------------------------------


@pytest.fixture
def P2():
    return path(2)


@pytest.fixture
def P3():
    return path(3)


@pytest.fixture
def P4():
    return path(4)


@pytest.fixture
def K3():
    return complete(3)


@pytest.fixture
def K4():
    return complete(4)


@pytest.fixture
def K13():
    return star(3)


@pytest.fixture
def C4():
    return cycle(4)


@pytest.fixture
def K3_P2():
    return disjoint_union(complete(3), path(2))


@pytest.fixture
def K4_minus_edge():
    return from_edge_list(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


# ---- acceptance reporting ------------------------------------------------

_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n): acceptance criterion number n")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("acceptance")
    if marker is None or call.when != "call":
        return
    n = marker.args[0]
    passed = call.excinfo is None
    prev = _ACCEPTANCE.get(n, True)
    _ACCEPTANCE[n] = prev and passed


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {n}: {'PASS' if _ACCEPTANCE[n] else 'FAIL'}")
