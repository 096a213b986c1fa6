import os
import random
import time
from contextlib import contextmanager

import pytest
from hypothesis import HealthCheck, settings

from coedge import kernels
from coedge.fixtures import fixture_graphs
from coedge.graph import Graph

settings.register_profile(
    "repo",
    max_examples=200,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


@pytest.fixture(scope="session")
def fixtures():
    return fixture_graphs()


@pytest.fixture(params=sorted(kernels.IMPLEMENTATIONS))
def backend(request):
    return kernels.IMPLEMENTATIONS[request.param]


def random_graph(rng: random.Random, n: int, density: float = 0.5) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < density]
    return Graph.from_edges(n, edges)


def random_relabel(rng: random.Random, g: Graph) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


class AcceptanceLog:
    """Collects one status line per acceptance criterion."""

    def __init__(self):
        self.lines: dict[str, str] = {}

    @contextmanager
    def criterion(self, key: str, title: str, limit: float):
        info = {"status": "PASS", "note": ""}
        start = time.perf_counter()
        try:
            yield info
        except BaseException:
            info["status"] = "FAIL"
            raise
        finally:
            elapsed = time.perf_counter() - start
            if elapsed > limit:
                info["status"] = "FAIL"
                info["note"] = (info["note"] + "; " if info["note"] else "") + f"over the {limit:g}s limit"
            note = f" -- {info['note']}" if info["note"] else ""
            line = f"criterion {key:>2} {info['status']:<7} {elapsed:7.2f}s / {limit:g}s  {title}{note}"
            self.lines[key] = line
            print(line)
        assert elapsed <= limit, f"criterion {key} took {elapsed:.1f}s, limit {limit:g}s"


ACCEPTANCE = AcceptanceLog()


@pytest.fixture(scope="session")
def acceptance():
    return ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE.lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE.lines, key=lambda k: int(k)):
        terminalreporter.write_line(ACCEPTANCE.lines[key])
