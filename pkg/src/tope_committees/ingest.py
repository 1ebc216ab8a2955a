"""Tope sets of central hyperplane arrangements, computed over the rationals.

A sign vector s is a tope of the arrangement with normals v_1..v_n iff the
strict system s_i <v_i, x> > 0 has a solution. Feasibility is decided by
Fourier-Motzkin elimination on exact fractions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .signs import ParseError, ToposSet, from_mask, full_mask, to_mask

MAX_ARRANGEMENT_ELEMENTS = 16

Row = tuple[Fraction, ...]


# ---------------------------------------------------------------------------
# Fourier-Motzkin

def _normalize(row: Sequence[Fraction]) -> Row | None:
    """Scale by a positive factor so the first nonzero entry is +-1; None for zero rows."""
    for c in row:
        if c:
            s = abs(c)
            return tuple(x / s for x in row)
    return None


def strictly_feasible(rows: Iterable[Sequence[Fraction]]) -> bool:
    """Whether {x : <a, x> > 0 for every row a} is nonempty."""
    system: set[Row] = set()
    for r in rows:
        r = _normalize([Fraction(x) for x in r])
        if r is None:
            return False
        system.add(r)
    if not system:
        return True
    d = len(next(iter(system)))
    for j in range(d):
        pos = [r for r in system if r[j] > 0]
        neg = [r for r in system if r[j] < 0]
        nxt = {r for r in system if r[j] == 0}
        for p in pos:
            for q in neg:
                combined = _normalize([-q[j] * a + p[j] * b for a, b in zip(p, q)])
                if combined is None:
                    return False
                nxt.add(combined)
        system = nxt
        if not system:
            return True
    # every variable is gone; anything left reads 0 > 0
    return not system


# ---------------------------------------------------------------------------
# arrangements

@dataclass(frozen=True)
class Arrangement:
    d: int
    vectors: tuple[Row, ...]

    @property
    def n(self) -> int:
        return len(self.vectors)

    def reoriented(self, subset: Iterable[int] | int) -> "Arrangement":
        flip = to_mask(subset, self.n)
        return Arrangement(self.d, tuple(
            tuple(-x for x in v) if flip >> i & 1 else v
            for i, v in enumerate(self.vectors)))

    def to_text(self) -> str:
        return "".join(" ".join(str(x) for x in v) + "\n" for v in self.vectors)


def _parallel(u: Row, v: Row) -> bool:
    return all(u[i] * v[j] == u[j] * v[i] for i, j in combinations(range(len(u)), 2))


def make_arrangement(vectors: Iterable[Iterable]) -> Arrangement:
    vecs = tuple(tuple(Fraction(x) for x in v) for v in vectors)
    if not vecs:
        raise ValueError("an arrangement needs at least one vector")
    d = len(vecs[0])
    for i, v in enumerate(vecs, 1):
        if len(v) != d:
            raise ValueError(f"vector {i} has {len(v)} entries, expected {d}")
        if not any(v):
            raise ValueError(f"vector {i} is zero")
    for i, j in combinations(range(len(vecs)), 2):
        if _parallel(vecs[i], vecs[j]):
            raise ValueError(f"vectors {i + 1} and {j + 1} are parallel")
    return Arrangement(d, vecs)


def parse_arrangement(text: str) -> Arrangement:
    """Parse ``.arr`` content: one vector per line, entries integer or p/q."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([Fraction(tok) for tok in line.split()])
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
    if not rows:
        raise ParseError("no vectors found")
    try:
        return make_arrangement(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def read_arrangement(path) -> Arrangement:
    with open(path, encoding="utf-8") as fh:
        return parse_arrangement(fh.read())


def _signed_rows(arr: Arrangement, pos: int, subset: int | None = None) -> list[Row]:
    return [v if pos >> i & 1 else tuple(-x for x in v)
            for i, v in enumerate(arr.vectors)
            if subset is None or subset >> i & 1]


def arrangement_topes(arr: Arrangement, reorient: Iterable[int] | int = ()) -> ToposSet:
    """Every sign vector whose strict system is feasible, after reorientation."""
    if arr.n > MAX_ARRANGEMENT_ELEMENTS:
        raise ValueError(
            f"{arr.n} elements exceeds the enumeration bound {MAX_ARRANGEMENT_ELEMENTS}")
    arr = arr.reoriented(reorient)
    masks = [m for m in range(1 << arr.n) if strictly_feasible(_signed_rows(arr, m))]
    return ToposSet.from_masks(masks, arr.n)


def geometric_conv(arr: Arrangement, subset: Iterable[int] | int) -> frozenset[int]:
    """Hull of ``subset`` from feasibility alone: b is in it iff no x has
    <v_a, x> > 0 on the subset and <v_b, x> < 0."""
    a = to_mask(subset, arr.n)
    base = [v for i, v in enumerate(arr.vectors) if a >> i & 1]
    if not strictly_feasible(base):
        return from_mask(full_mask(arr.n))
    hull = 0
    for b, v in enumerate(arr.vectors):
        if a >> b & 1 or not strictly_feasible(base + [tuple(-x for x in v)]):
            hull |= 1 << b
    return from_mask(hull)


def maximal_feasible_subsystems(arr: Arrangement) -> list[frozenset[int]]:
    """Inclusion-maximal index sets S with {<v_i, x> > 0 : i in S} feasible."""
    feasible = [s for s in range(1 << arr.n)
                if strictly_feasible(_signed_rows(arr, full_mask(arr.n), s))]
    fs = set(feasible)
    maximal = [s for s in feasible
               if not any(s | (1 << i) in fs for i in range(arr.n) if not s >> i & 1)]
    return sorted((from_mask(s) for s in maximal), key=sorted)


# ---------------------------------------------------------------------------
# random fixtures

def random_arrangement(rng: random.Random, n: int, d: int = 3, box: int = 3,
                       max_tries: int = 1000) -> Arrangement:
    """Integer normals from [-box, box]^d, redrawn until simple."""
    for _ in range(max_tries):
        vecs = [tuple(rng.randint(-box, box) for _ in range(d)) for _ in range(n)]
        try:
            return make_arrangement(vecs)
        except ValueError:
            continue
    raise RuntimeError(f"no simple arrangement of {n} vectors found in {max_tries} draws")


def random_non_acyclic(rng: random.Random, n: int, d: int = 3, box: int = 3,
                       max_tries: int = 100) -> tuple[Arrangement, frozenset[int], ToposSet]:
    """A random simple arrangement plus a reorientation without the all-plus tope.

    Returns the arrangement, the reorientation and the reoriented tope set.
    """
    full = full_mask(n)
    for _ in range(max_tries):
        arr = random_arrangement(rng, n, d, box)
        ts = arrangement_topes(arr)
        taken = set(ts.pos_masks)
        # flipping R creates the all-plus tope iff E - R is a positive part
        options = [r for r in range(1 << n) if full ^ r not in taken]
        if not options:
            continue
        r = rng.choice(options)
        return arr, from_mask(r), arrangement_topes(arr, r)
    raise RuntimeError("could not draw a non-acyclic arrangement")
