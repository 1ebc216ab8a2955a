import random
from itertools import combinations

import pytest

from tope_committees import load_fixture, parse_topes
from tope_committees.ingest import random_non_acyclic

HEX_TOPES = ["+-+", "+--", "++-", "-+-", "-++", "--+"]
HEX0_TOPES = ["+++", "++-", "+--", "---", "--+", "-++"]

# the seven negative parts of the max-positive topes of the 28-tope example
PAPER_COATOM_COMPLEMENTS = [{1, 2}, {1, 5}, {1, 6}, {2, 3}, {2, 4}, {3, 5}, {4, 6}]

RANDOM_SEED = 20261019
RANDOM_COUNT = 50


@pytest.fixture(scope="session")
def paper28():
    return load_fixture("paper28")


@pytest.fixture(scope="session")
def hexs():
    return load_fixture("hex")


@pytest.fixture(scope="session")
def hex0():
    return parse_topes("\n".join(HEX0_TOPES))


@pytest.fixture(scope="session")
def random_instances():
    """(arrangement, reorientation, tope set) triples, d = 3, 4 <= n <= 7."""
    rng = random.Random(RANDOM_SEED)
    return [random_non_acyclic(rng, rng.randint(4, 7)) for _ in range(RANDOM_COUNT)]


# ---------------------------------------------------------------------------
# string-level oracles, written against the definitions and nothing else

def pos_part(t):
    return {i + 1 for i, c in enumerate(t) if c == "+"}


def oracle_conv(topes, a, n):
    a = set(a)
    witnesses = [t for t in topes if a <= pos_part(t)]
    if not witnesses:
        return set(range(1, n + 1))
    return {b for b in range(1, n + 1) if all(t[b - 1] == "+" for t in witnesses)}


def oracle_committees(topes):
    n = len(topes[0])
    return [set(k) for k in combinations(topes, 3)
            if all(sum(t[e] == "+" for t in k) >= 2 for e in range(n))]


def oracle_triangle_count(vertices, adjacent):
    return sum(1 for u, v, w in combinations(vertices, 3)
               if adjacent(u, v) and adjacent(u, w) and adjacent(v, w))


def all_subsets(n):
    for r in range(n + 1):
        yield from (set(c) for c in combinations(range(1, n + 1), r))


# ---------------------------------------------------------------------------
# acceptance summary

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


def record(criterion, ok, detail=""):
    ACCEPTANCE_RESULTS.append((criterion, bool(ok), detail))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE_RESULTS:
        line = f"{'PASS' if ok else 'FAIL'}  {criterion}"
        terminalreporter.write_line(line + (f"  ({detail})" if detail else ""))
