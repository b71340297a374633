"""Shared helpers: brute-force counting oracle and acceptance reporting."""

from __future__ import annotations

import itertools
import time
from fractions import Fraction

import pytest

from ehrhart_lab import zoo
from ehrhart_lab.geometry import LatticePolytope

ACCEPTANCE_LINES: list[str] = []


def brute_count(P: LatticePolytope, m: int, strict: bool = False) -> int:
    """Count lattice points of mP by scanning the bounding box of its vertices."""
    if m == 0:
        return 0 if strict and P.dim > 0 else 1
    n = P.ambient_dim
    lo = [min(v[i] for v in P.vertices) * m for i in range(n)]
    hi = [max(v[i] for v in P.vertices) * m for i in range(n)]
    total = 0
    for x in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        if P.hrep.contains(x, m, strict):
            total += 1
    return total


class Timer:
    def __init__(self, number: int, title: str, limit: float):
        self.number, self.title, self.limit = number, title, limit

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        dt = time.perf_counter() - self.t0
        ok = exc_type is None and dt < self.limit
        mark = "PASS" if ok else "FAIL"
        line = f"[{mark}] criterion {self.number:2d}: {self.title} ({dt:.2f}s, limit {self.limit:g}s)"
        ACCEPTANCE_LINES.append(line)
        print(line)
        if exc_type is None:
            assert dt < self.limit, line
        return False


@pytest.fixture
def criterion():
    return Timer


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion")[1].split(":")[0])):
            terminalreporter.write_line(line)


def fixture_corpus() -> list[tuple[str, LatticePolytope]]:
    """Every geometric fixture small enough for full property checks."""
    out = [(name, zoo.registry(name)) for name in zoo.REGISTRY]
    out += [(f"reeve:{q}", zoo.reeve(q)) for q in (1, 2, 12, 34)]
    out += [(f"generalized_reeve:{q},{k}", zoo.generalized_reeve(q, k)) for q, k in ((3, 2), (2, 3), (5, 3))]
    out += [
        ("simplex:3", zoo.standard_simplex(3)),
        ("reflexive_simplex:4", zoo.standard_reflexive_simplex(4)),
        ("cross:3", zoo.cross_polytope(3)),
        ("cube:3,1", zoo.cube(3, 1)),
        ("cube:2,2", zoo.cube(2, 2)),
        ("box:1,2,3", zoo.box((1, 2, 3))),
        ("hypersimplex:2,4", zoo.hypersimplex(2, 4)),
        ("hypersimplex:2,5", zoo.hypersimplex(2, 5)),
        ("chain:4", zoo.order_polytope(zoo.chain(4))),
        ("fan:3", zoo.order_polytope(zoo.fan_poset(3))),
        ("sym_edge:cycle4", zoo.symmetric_edge_polytope(zoo.cycle_graph(4))),
        ("edge:K4", zoo.edge_polytope(zoo.complete_graph(4))),
    ]
    return out


def F(*xs):
    return [Fraction(x) for x in xs]
