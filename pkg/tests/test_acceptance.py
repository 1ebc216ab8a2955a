"""Exit criteria. Each test records one PASS/FAIL line shown in the summary."""

import random
import subprocess
import sys
import time
from itertools import combinations

from tope_committees.committees import (count_committees3_lattice, count_committees_eq1,
                                        count_no_opposite_triples,
                                        count_no_opposite_triples_brute, enumerate_committees3,
                                        is_committee_general)
from tope_committees.convexity import build_lattice, classify, conv, ex, mobius_recursive
from tope_committees.fixtures import fixture_path, load_fixture
from tope_committees.graphs import (build_graph, connectivity, count_triangles,
                                    formula_counts, gamma_max_degrees, gamma_max_terms,
                                    odd_cycle_committee_check, sample_odd_cycles)
from tope_committees.ingest import geometric_conv, make_arrangement, random_non_acyclic
from tope_committees.signs import negative_part, read_topes, validate

from conftest import (PAPER_COATOM_COMPLEMENTS, RANDOM_COUNT, RANDOM_SEED, all_subsets,
                      oracle_committees, record)

PAPER_PAIRS = [
    ({1, 2}, {3, 5}), ({1, 2}, {4, 6}), ({1, 5}, {2, 3}), ({1, 5}, {2, 4}),
    ({1, 5}, {4, 6}), ({1, 6}, {2, 3}), ({1, 6}, {2, 4}), ({1, 6}, {3, 5}),
    ({2, 3}, {4, 6}), ({2, 4}, {3, 5}), ({3, 5}, {4, 6}),
]
PAPER_PAIR_VALUES = [1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 1]
PAPER_COMMITTEE_NEGATIVE_PARTS = {
    frozenset({frozenset({1, 2}), frozenset({3, 5}), frozenset({4, 6})}),
    frozenset({frozenset({1, 5}), frozenset({2, 3}), frozenset({4, 6})}),
    frozenset({frozenset({1, 6}), frozenset({2, 4}), frozenset({3, 5})}),
}


def _random_suite():
    rng = random.Random(RANDOM_SEED)
    return [random_non_acyclic(rng, rng.randint(4, 7), d=3) for _ in range(RANDOM_COUNT)]


def test_golden_fixture():
    t0 = time.perf_counter()
    ts = read_topes(fixture_path("paper28"))
    report = validate(ts)
    lat = build_lattice(ts)
    elapsed = time.perf_counter() - t0
    e6 = set(range(1, 7))
    ok = (ts.n == 6 and len(ts) == 28 and report.ok and not report.warnings
          and set(lat.coatoms) == {frozenset(e6 - d) for d in PAPER_COATOM_COMPLEMENTS}
          and len(lat.coatoms) == 7 and elapsed < 1.0)
    record("golden fixture: n=6, 28 topes, valid, coatoms = complements of the 7 pairs",
           ok, f"{elapsed:.3f}s")
    assert ok


def test_coatom_pair_reproduction():
    t0 = time.perf_counter()
    ts = load_fixture("paper28")
    lat = build_lattice(ts)
    terms = gamma_max_terms(ts, lat)
    fc = formula_counts(ts, lat)
    found = enumerate_committees3(ts, restrict_max_positive=True)
    elapsed = time.perf_counter() - t0
    pairs = [(set(t.first), set(t.second)) for t in terms]
    values = [t.coatoms for t in terms]
    negs = {frozenset(frozenset(negative_part(t)) for t in c.topes(ts)) for c in found}
    ok = (pairs == PAPER_PAIRS and values == PAPER_PAIR_VALUES and sum(values) == 9
          and fc.committees_eq7 == 3 and len(found) == 3
          and negs == PAPER_COMMITTEE_NEGATIVE_PARTS and elapsed < 1.0)
    record("max-positive committees: 11 pair values 1,1,1,0,1,0,1,1,1,1,1, sum 9, count 3",
           ok, f"values={values}, {elapsed:.3f}s")
    assert ok


def test_four_way_agreement():
    t0 = time.perf_counter()
    ts = load_fixture("paper28")
    lat = build_lattice(ts)
    gamma = build_graph(ts, "gamma")
    brute = oracle_committees(ts.topes)
    n_triples = sum(1 for _ in combinations(ts.topes, 3))
    counts = {
        "brute": len(brute),
        "enumerate": len(enumerate_committees3(ts)),
        "sum_exact_parts": count_committees_eq1(ts),
        "lattice_sum": count_committees3_lattice(ts, lat),
        "direct": count_triangles(gamma, "direct"),
        "trace": count_triangles(gamma, "trace"),
        "neighborhood": count_triangles(gamma, "neighborhood"),
    }
    elapsed = time.perf_counter() - t0
    ok = n_triples == 3276 and len(set(counts.values())) == 1 and elapsed < 5.0
    record("golden four-way agreement: brute force, exact-part sum, lattice sum, triangles",
           ok, f"{counts}, {elapsed:.3f}s")
    assert ok


def test_hex_fixture():
    t0 = time.perf_counter()
    ts = load_fixture("hex")
    lat = build_lattice(ts)
    fc = formula_counts(ts, lat)
    gamma = build_graph(ts, "gamma")
    found = enumerate_committees3(ts)
    conn = connectivity(gamma)
    elapsed = time.perf_counter() - t0
    ok = (len(found) == 1 and set(found[0].topes(ts)) == {"+-+", "++-", "-++"}
          and fc.edges_eq5 == 6 == len(gamma.edges)
          and fc.vertices_eq6 == 6
          and count_no_opposite_triples(ts, lat) == 5 == count_no_opposite_triples_brute(ts)
          and fc.cyclomatic_gamma == 1 == len(gamma.edges) - len(gamma.vertices) + 1
          and conn.cyclomatic == 1
          and fc.committees_eq7 == 1
          and elapsed < 1.0)
    record("HEX: 1 committee, 6 edges, 6 vertices, 5 opposite-free triples, cyclomatic 1",
           ok, f"{elapsed:.3f}s")
    assert ok


def _identities(ts, lat):
    fc = formula_counts(ts, lat)
    gamma = build_graph(ts, "gamma")
    gamma_max = build_graph(ts, "gamma_max", lat)
    tri = count_triangles(gamma, "direct")
    conn, conn_max = connectivity(gamma), connectivity(gamma_max)
    return {
        "edges": fc.edges_eq5 == len(gamma.edges),
        "vertices": fc.vertices_eq6 == len(ts),
        "lattice_sum": count_committees3_lattice(ts, lat) == tri,
        "exact_part_sum": count_committees_eq1(ts) == tri,
        "max_committees": fc.committees_eq7 == count_triangles(gamma_max, "direct"),
        "no_opposites": count_no_opposite_triples(ts, lat) == count_no_opposite_triples_brute(ts),
        "degrees": gamma_max_degrees(ts, lat) == {v: gamma_max.degree(v)
                                                  for v in gamma_max.vertices},
        "cyclomatic_gamma": fc.cyclomatic_gamma == conn.cyclomatic,
        "cyclomatic_gamma_max": fc.cyclomatic_gamma_max == conn_max.cyclomatic,
        "edges_gamma_max": fc.edges_gamma_max == len(gamma_max.edges),
        "connected": conn.is_connected and conn_max.is_connected,
    }


def test_random_property_suite():
    t0 = time.perf_counter()
    suite = _random_suite()
    failures = []
    for k, (_, _, ts) in enumerate(suite):
        assert validate(ts, strict=True).ok
        bad = [name for name, ok in _identities(ts, build_lattice(ts)).items() if not ok]
        if bad:
            failures.append((k, bad))
    elapsed = time.perf_counter() - t0
    sizes = sorted({ts.n for _, _, ts in suite})
    ok = (len(suite) >= 50 and not failures and max(sizes) <= 7 and elapsed < 60.0)
    record(f"random suite: {len(suite)} non-acyclic realizable OMs, all identities exact",
           ok, f"n in {sizes}, failures={failures}, {elapsed:.2f}s")
    assert ok


def test_mobius_closed_form():
    instances = [load_fixture("paper28"), load_fixture("hex")]
    instances += [ts for _, _, ts in _random_suite()]
    mismatches = 0
    boolean_failures = 0
    members_checked = 0
    for ts in instances:
        lat = build_lattice(ts)
        rec = mobius_recursive(lat)
        free = set(lat.free_masks)
        for a, v in rec.items():
            members_checked += 1
            closed = (-1) ** bin(a).count("1") if (a == 0 or a in free) else 0
            if closed != v or lat.mobius_values[a] != v:
                mismatches += 1
        for a in lat.free_sets:
            if sum(1 for m in lat.members if m <= a) != 2 ** len(a):
                boolean_failures += 1
    ok = mismatches == 0 and boolean_failures == 0
    record("Möbius closed form equals recursion; free lower intervals Boolean",
           ok, f"{len(instances)} instances, {members_checked} members")
    assert ok


def test_convexity_axioms():
    hexs = load_fixture("hex")
    realizable = [(make_arrangement([(1, 0), (1, 1), (0, 1)]).reoriented({2}), hexs)]
    realizable += [(arr.reoriented(r), ts) for arr, r, ts in _random_suite()]
    instances = [(None, load_fixture("paper28"))] + realizable
    problems = []
    for arr, ts in instances:
        hulls = {frozenset(a): conv(ts, a) for a in all_subsets(ts.n)}
        for a, h in hulls.items():
            if not (a <= h and conv(ts, h) == h):
                problems.append(("extensive/idempotent", sorted(a)))
            if classify(ts, a).acyclic and conv(ts, ex(ts, a)) != h:
                problems.append(("conv(ex)", sorted(a)))
            if arr is not None and geometric_conv(arr, a) != h:
                problems.append(("geometric", sorted(a)))
        for a in hulls:
            for b in hulls:
                if a <= b and not hulls[a] <= hulls[b]:
                    problems.append(("monotone", sorted(a), sorted(b)))
        ms = set(build_lattice(ts).members)
        if any(a & b not in ms for a in ms for b in ms):
            problems.append(("intersection", ts.n))
    ok = not problems and max(ts.n for _, ts in instances) <= 7
    record("convexity axioms exhaustive, tope hull = feasibility hull on realizable inputs",
           ok, f"{len(instances)} instances, problems={problems[:3]}")
    assert ok


def test_odd_cycles():
    rng = random.Random(RANDOM_SEED)
    instances = [load_fixture("paper28"), load_fixture("hex")]
    instances += [ts for _, _, ts in _random_suite()[:10]]
    sampled = 0
    lengths = set()
    failed = 0
    for ts in instances:
        g = build_graph(ts, "gamma")
        for cyc in sample_odd_cycles(g, rng, 40):
            sampled += 1
            lengths.add(len(cyc))
            if not (odd_cycle_committee_check(ts, g, cyc) and is_committee_general(ts, cyc)):
                failed += 1
    ok = sampled >= 100 and failed == 0
    record("odd cycles of the covering graph are committees",
           ok, f"{sampled} cycles, lengths {sorted(lengths)}")
    assert ok


def test_determinism():
    cmd = [sys.executable, "-m", "tope_committees", "counts", "--cross-check", "--json",
           str(fixture_path("paper28"))]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    ok = first == second and b'"all_consistent": true' in first
    record("counts --cross-check JSON is byte-identical across runs", ok, f"{len(first)} bytes")
    assert ok
