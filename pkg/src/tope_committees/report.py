"""Side-by-side counts: closed forms next to direct enumeration."""

from __future__ import annotations

from dataclasses import dataclass, fields

from .committees import (count_committees3_lattice, count_committees_eq1,
                         count_no_opposite_triples, count_no_opposite_triples_brute,
                         enumerate_committees3)
from .convexity import ConvexLattice
from .graphs import build_graph, connectivity, count_triangles, formula_counts
from .signs import ToposSet


@dataclass(frozen=True)
class CountsReport:
    tope_count: int
    vertices_eq6: int
    edge_count_direct: int | None
    edges_eq5: int
    triangles_direct: int | None
    triangles_trace: int | None
    triangles_eq4: int | None
    committees_eq1: int
    committees_eq8: int
    no_opposite_triples_formula: int
    no_opposite_triples_brute: int | None
    gamma_max_edges_direct: int | None
    gamma_max_edges_formula: int
    committees_eq7: int
    committees_max_direct: int | None
    cyclomatic_gamma_formula: int
    cyclomatic_gamma_direct: int | None
    cyclomatic_gamma_max: int
    all_consistent: bool | None

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def counts_report(ts: ToposSet, lat: ConvexLattice, cross_check: bool = False) -> CountsReport:
    fc = formula_counts(ts, lat)
    formula = dict(
        tope_count=len(ts),
        vertices_eq6=fc.vertices_eq6,
        edges_eq5=fc.edges_eq5,
        committees_eq1=count_committees_eq1(ts),
        committees_eq8=count_committees3_lattice(ts, lat),
        no_opposite_triples_formula=count_no_opposite_triples(ts, lat),
        gamma_max_edges_formula=fc.edges_gamma_max,
        committees_eq7=fc.committees_eq7,
        cyclomatic_gamma_formula=fc.cyclomatic_gamma,
        cyclomatic_gamma_max=fc.cyclomatic_gamma_max,
    )
    if not cross_check:
        return CountsReport(
            edge_count_direct=None, triangles_direct=None, triangles_trace=None,
            triangles_eq4=None, no_opposite_triples_brute=None,
            gamma_max_edges_direct=None, committees_max_direct=None,
            cyclomatic_gamma_direct=None, all_consistent=None, **formula)

    gamma = build_graph(ts, "gamma")
    gamma_max = build_graph(ts, "gamma_max", lat)
    conn = connectivity(gamma)
    conn_max = connectivity(gamma_max)
    direct = dict(
        edge_count_direct=len(gamma.edges),
        triangles_direct=count_triangles(gamma, "direct"),
        triangles_trace=count_triangles(gamma, "trace"),
        triangles_eq4=count_triangles(gamma, "neighborhood"),
        no_opposite_triples_brute=count_no_opposite_triples_brute(ts),
        gamma_max_edges_direct=len(gamma_max.edges),
        committees_max_direct=len(enumerate_committees3(ts, restrict_max_positive=True)),
        cyclomatic_gamma_direct=conn.cyclomatic,
    )
    brute_committees = len(enumerate_committees3(ts))
    f, d = formula, direct
    checks = [
        f["tope_count"] == f["vertices_eq6"],
        d["edge_count_direct"] == f["edges_eq5"],
        len({d["triangles_direct"], d["triangles_trace"], d["triangles_eq4"],
             f["committees_eq1"], f["committees_eq8"], brute_committees}) == 1,
        f["no_opposite_triples_formula"] == d["no_opposite_triples_brute"],
        f["gamma_max_edges_formula"] == d["gamma_max_edges_direct"],
        f["committees_eq7"] == d["committees_max_direct"]
        == count_triangles(gamma_max, "neighborhood"),
        f["cyclomatic_gamma_formula"] == d["cyclomatic_gamma_direct"],
        f["cyclomatic_gamma_max"] == conn_max.cyclomatic,
    ]
    return CountsReport(all_consistent=all(checks), **formula, **direct)
