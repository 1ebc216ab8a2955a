"""Graphs on topes and the triangle / edge / cyclomatic counts built on them.

Vertices are canonical tope indices, so graphs of different kinds on the
same tope set can be compared through explicit index maps.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from .committees import check_lattice, is_committee_general
from .convexity import ConvexLattice, build_lattice, coatoms_above_mask, join_mask
from .signs import ToposSet, format_subset, from_mask

KINDS = ("gamma", "g", "kneser_pos", "kneser_neg", "gamma_max")


class FormulaError(ArithmeticError):
    """A sum that must be divisible left a remainder."""


@dataclass(frozen=True)
class TopeGraph:
    kind: str
    vertices: tuple[int, ...]
    edges: frozenset[tuple[int, int]]

    @cached_property
    def position(self) -> dict[int, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def neighbors(self) -> dict[int, frozenset[int]]:
        nb: dict[int, set[int]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return {v: frozenset(s) for v, s in nb.items()}

    @property
    def adjacency(self) -> np.ndarray:
        """0/1 adjacency matrix with rows in :attr:`vertices` order."""
        a = np.zeros((len(self.vertices), len(self.vertices)), dtype=np.int64)
        pos = self.position
        for u, v in self.edges:
            a[pos[u], pos[v]] = a[pos[v], pos[u]] = 1
        return a

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def _pairs(vertices: Sequence[int], adjacent) -> frozenset[tuple[int, int]]:
    return frozenset((u, v) for u, v in combinations(vertices, 2) if adjacent(u, v))


def kneser_graph(family: Sequence[frozenset]) -> frozenset[tuple[int, int]]:
    """Edges of the Kneser graph of ``family``: index pairs of disjoint members."""
    return frozenset((i, j) for i, j in combinations(range(len(family)), 2)
                     if not family[i] & family[j])


def bmax_vertices(ts: ToposSet, lat: ConvexLattice) -> tuple[int, ...]:
    """Topes whose positive parts are lattice coatoms."""
    coatoms = set(lat.coatom_masks)
    return tuple(i for i, m in enumerate(ts.pos_masks) if m in coatoms)


def build_graph(ts: ToposSet, kind: str, lat: ConvexLattice | None = None) -> TopeGraph:
    kind = kind.replace("-", "_")
    masks = ts.pos_masks
    full = ts.full
    vertices = tuple(range(len(ts)))
    if kind == "gamma":
        edges = _pairs(vertices, lambda u, v: masks[u] | masks[v] == full)
    elif kind == "g":
        edges = _pairs(vertices, lambda u, v: not masks[u] & masks[v])
    elif kind == "kneser_pos":
        edges = kneser_graph([from_mask(m) for m in masks])
    elif kind == "kneser_neg":
        edges = kneser_graph([from_mask(full ^ m) for m in masks])
    elif kind == "gamma_max":
        if lat is None:
            lat = build_lattice(ts)
        check_lattice(ts, lat)
        vertices = bmax_vertices(ts, lat)
        edges = _pairs(vertices, lambda u, v: masks[u] | masks[v] == full)
    else:
        raise ValueError(f"unknown graph kind {kind!r}; expected one of {', '.join(KINDS)}")
    return TopeGraph(kind, vertices, edges)


# ---------------------------------------------------------------------------
# triangles

def triangles(g: TopeGraph) -> list[tuple[int, int, int]]:
    """Vertex triples spanning a triangle, each listed once in sorted order."""
    nb = g.neighbors
    out = []
    for u, v in g.sorted_edges():
        for w in nb[u] & nb[v]:
            if w > v:
                out.append((u, v, w))
    return sorted(out)


def _triangles_direct(g: TopeGraph) -> int:
    e = g.edges
    return sum(1 for u, v, w in combinations(g.vertices, 3)
               if (u, v) in e and (u, w) in e and (v, w) in e)


def _triangles_trace(g: TopeGraph) -> int:
    a = g.adjacency.astype(object)
    t = int(np.trace(a @ a @ a))
    if t % 6:
        raise FormulaError(f"trace(A^3) = {t} is not divisible by 6")
    return t // 6


def _triangles_neighborhood(g: TopeGraph) -> int:
    nb = g.neighbors
    s = sum(len(nb[u] & nb[v]) for u, v in g.edges)
    if s % 3:
        raise FormulaError(f"common-neighbour sum {s} is not divisible by 3")
    return s // 3


_TRIANGLE_METHODS = {
    "direct": _triangles_direct,
    "trace": _triangles_trace,
    "neighborhood": _triangles_neighborhood,
}


def count_triangles(g: TopeGraph, method: str = "neighborhood") -> int:
    try:
        fn = _TRIANGLE_METHODS[method]
    except KeyError:
        raise ValueError(f"unknown method {method!r}") from None
    return fn(g)


# ---------------------------------------------------------------------------
# connectivity

@dataclass(frozen=True)
class Connectivity:
    components: int
    is_connected: bool
    cyclomatic: int


def connectivity(g: TopeGraph) -> Connectivity:
    nb = g.neighbors
    seen: set[int] = set()
    components = 0
    for s in g.vertices:
        if s in seen:
            continue
        components += 1
        seen.add(s)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in nb[u]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return Connectivity(components, components == 1,
                        len(g.edges) - len(g.vertices) + components)


# ---------------------------------------------------------------------------
# lattice formulas

def _halfspace_size(ts: ToposSet, a: int) -> int:
    return sum(1 for m in ts.pos_masks if m & a == a)


@dataclass(frozen=True)
class CoatomPairTerm:
    first: frozenset[int]
    second: frozenset[int]
    join: frozenset[int]
    coatoms: int


def coatom_complements(lat: ConvexLattice) -> list[int]:
    """E - C for each coatom C, ordered lexicographically."""
    top = lat.top
    return sorted((top ^ c for c in lat.coatom_masks),
                  key=lambda d: sorted(from_mask(d)))


def gamma_max_terms(ts: ToposSet, lat: ConvexLattice) -> list[CoatomPairTerm]:
    """Interval-coatom counts |[D1 v D2, top]^c| over disjoint pairs of
    coatom complements, pairs in lexicographic order."""
    check_lattice(ts, lat)
    ds = coatom_complements(lat)
    out = []
    for d1, d2 in combinations(ds, 2):
        if d1 & d2:
            continue
        j = join_mask(lat, d1, d2)
        out.append(CoatomPairTerm(from_mask(d1), from_mask(d2), from_mask(j),
                           len(coatoms_above_mask(lat, j))))
    return out


def gamma_max_degrees(ts: ToposSet, lat: ConvexLattice) -> dict[int, int]:
    """Degree of each bmax tope predicted by the coatoms above its negative part."""
    check_lattice(ts, lat)
    return {i: len(coatoms_above_mask(lat, ts.full ^ ts.pos_masks[i]))
            for i in bmax_vertices(ts, lat)}


def degree_check_gamma_max(ts: ToposSet, lat: ConvexLattice,
                           g: TopeGraph | None = None) -> bool:
    if g is None:
        g = build_graph(ts, "gamma_max", lat)
    predicted = gamma_max_degrees(ts, lat)
    return set(predicted) == set(g.vertices) and all(
        g.degree(v) == d for v, d in predicted.items())


@dataclass(frozen=True)
class FormulaCounts:
    edges_eq5: int
    vertices_eq6: int
    cyclomatic_gamma: int
    edges_gamma_max: int
    cyclomatic_gamma_max: int
    committees_eq7: int

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def formula_counts(ts: ToposSet, lat: ConvexLattice) -> FormulaCounts:
    """Edge, vertex, cyclomatic and committee counts from lattice data only."""
    check_lattice(ts, lat)
    t = len(ts)
    free = [(bin(a).count("1"), _halfspace_size(ts, a)) for a in lat.free_masks]

    edges = comb(t, 2) + sum((-1) ** k * comb(h, 2) for k, h in free)
    vertices = sum((-1) ** (k - 1) * h for k, h in free)
    cyc = 1 + comb(t, 2) + sum((-1) ** k * comb(1 + h, 2) for k, h in free)

    deg_sum = sum(len(coatoms_above_mask(lat, d)) for d in coatom_complements(lat))
    if deg_sum % 2:
        raise FormulaError(f"interval-coatom degree sum {deg_sum} is odd")
    edges_max = deg_sum // 2
    cyc_max = 1 + edges_max - len(lat.coatom_masks)

    s7 = sum(term.coatoms for term in gamma_max_terms(ts, lat))
    if s7 % 3:
        raise FormulaError(f"interval-coatom pair sum {s7} is not divisible by 3")
    return FormulaCounts(edges, vertices, cyc, edges_max, cyc_max, s7 // 3)


# ---------------------------------------------------------------------------
# odd cycles

def _is_cycle(g: TopeGraph, cycle: Sequence[int]) -> bool:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        return False
    nb = g.neighbors
    return all(v in nb and cycle[(i + 1) % len(cycle)] in nb[v]
               for i, v in enumerate(cycle))


def odd_cycle_committee_check(ts: ToposSet, g: TopeGraph, cycle: Sequence[int]) -> bool:
    """Whether the vertex set of an odd cycle of ``g`` is a committee."""
    cycle = list(cycle)
    if len(cycle) % 2 == 0 or not _is_cycle(g, cycle):
        raise ValueError("input is not an odd cycle of the graph")
    return is_committee_general(ts, cycle)


def sample_odd_cycles(g: TopeGraph, rng: random.Random, count: int,
                      max_tries: int = 10_000) -> list[tuple[int, ...]]:
    """Up to ``count`` distinct odd cycles found by self-avoiding random walks."""
    nb = {v: sorted(s) for v, s in g.neighbors.items()}
    starts = [v for v in g.vertices if nb[v]]
    found: dict[frozenset, tuple[int, ...]] = {}
    for _ in range(max_tries):
        if len(found) >= count or not starts:
            break
        path = [rng.choice(starts)]
        on_path = {path[0]}
        while True:
            u = path[-1]
            if len(path) >= 3 and len(path) % 2 and path[0] in nb[u]:
                found.setdefault(frozenset(path), tuple(path))
                if rng.random() < 0.5:
                    break
            options = [w for w in nb[u] if w not in on_path]
            if not options:
                break
            w = rng.choice(options)
            path.append(w)
            on_path.add(w)
    return list(found.values())


# ---------------------------------------------------------------------------
# export

def to_dot(g: TopeGraph, ts: ToposSet) -> str:
    lines = [f"// kind: {g.kind}", "graph topes {"]
    for v in g.vertices:
        lines.append(f'  {v} [label="{ts.topes[v]}"];')
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(g: TopeGraph, ts: ToposSet) -> dict:
    return {
        "kind": g.kind,
        "vertices": [{"index": v, "tope": ts.topes[v]} for v in g.vertices],
        "edges": [list(e) for e in g.sorted_edges()],
    }


def format_pair(term: CoatomPairTerm) -> str:
    return (f"[{{{format_subset(term.first)}}} v {{{format_subset(term.second)}}}] "
            f"= {{{format_subset(term.join)}}}: {term.coatoms}")
