"""Three-tope committees: predicates, brute-force enumeration, lattice sums.

A 3-subset of topes is a committee when every positive halfspace holds at
least two of its members, and an anti-committee when its negation is a
committee, i.e. when its positive parts are pairwise disjoint.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .convexity import ConvexLattice, LatticeError, conv_mask, ex_mask
from .signs import ToposSet, bmax_positive, from_mask, to_mask


@dataclass(frozen=True)
class HalfspaceIndex:
    elements: frozenset[int]
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True, order=True)
class Committee:
    members: tuple[int, int, int]
    max_positive: bool = False

    def topes(self, ts: ToposSet) -> list[str]:
        return [ts.topes[i] for i in self.members]


def _count_positive_on(ts: ToposSet, b: int) -> int:
    return sum(1 for m in ts.pos_masks if m & b == b)


def halfspace(ts: ToposSet, subset: Iterable[int] | int) -> HalfspaceIndex:
    """Topes positive on every element of ``subset`` (all topes for the empty set)."""
    b = to_mask(subset, ts.n)
    members = frozenset(i for i, m in enumerate(ts.pos_masks) if m & b == b)
    return HalfspaceIndex(from_mask(b), members)


def _check_indices(ts: ToposSet, k: Sequence[int], size: int | None = 3) -> tuple[int, ...]:
    k = tuple(k)
    if size is not None and len(k) != size:
        raise ValueError(f"expected {size} tope indices, got {len(k)}")
    if len(set(k)) != len(k):
        raise ValueError(f"duplicate tope indices in {k}")
    for i in k:
        if not 0 <= i < len(ts):
            raise ValueError(f"tope index {i} out of range 0..{len(ts) - 1}")
    return k


def _majority_positive(masks: Sequence[int], n: int) -> bool:
    return all(2 * sum(m >> e & 1 for m in masks) > len(masks) for e in range(n))


def is_committee(ts: ToposSet, k: Sequence[int]) -> bool:
    k = _check_indices(ts, k)
    return _majority_positive([ts.pos_masks[i] for i in k], ts.n)


def is_anti_committee(ts: ToposSet, k: Sequence[int]) -> bool:
    k = _check_indices(ts, k)
    return _majority_positive([ts.full ^ ts.pos_masks[i] for i in k], ts.n)


def is_committee_general(ts: ToposSet, k: Sequence[int]) -> bool:
    """Strict-majority condition for a tope subset of any size."""
    k = _check_indices(ts, k, size=None)
    return bool(k) and _majority_positive([ts.pos_masks[i] for i in k], ts.n)


def enumerate_committees3(ts: ToposSet, restrict_max_positive: bool = False) -> list[Committee]:
    """All 3-committees by checking every triple of topes."""
    bmax = set(bmax_positive(ts))
    pool = sorted(bmax) if restrict_max_positive else range(len(ts))
    masks = ts.pos_masks
    out = []
    for k in combinations(pool, 3):
        if _majority_positive([masks[i] for i in k], ts.n):
            out.append(Committee(k, all(i in bmax for i in k)))
    return out


def enumerate_anti_committees3(ts: ToposSet) -> list[tuple[int, int, int]]:
    masks = ts.pos_masks
    return [k for k in combinations(range(len(ts)), 3)
            if not (masks[k[0]] & masks[k[1]] or masks[k[0]] & masks[k[2]]
                    or masks[k[1]] & masks[k[2]])]


def negate_indices(ts: ToposSet, k: Iterable[int]) -> tuple[int, ...]:
    out = []
    for i in k:
        j = ts.opposite(i)
        if j is None:
            raise ValueError(f"tope {ts.topes[i]} has no opposite")
        out.append(j)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# closed-form counts

def check_lattice(ts: ToposSet, lat: ConvexLattice) -> None:
    if lat.ts != ts:
        raise LatticeError("lattice was built for a different tope set")


def exact_part_factor(ts: ToposSet, a: int) -> int:
    """Topes positive on ex(A) and negative on ex(conv(E - A))."""
    pos = ex_mask(ts, a)
    neg = ex_mask(ts, conv_mask(ts, ts.full & ~a))
    return sum(1 for m in ts.pos_masks if m & pos == pos and not m & neg)


def count_committees3_lattice(ts: ToposSet, lat: ConvexLattice) -> int:
    """Sum over unordered triples of proper lattice members meeting pairwise in
    the bottom, of the product of their exact-part factors."""
    check_lattice(ts, lat)
    proper = [a for a in lat.member_masks if a and a != lat.top]
    factor = {a: exact_part_factor(ts, a) for a in proper}
    total = 0
    for i, a in enumerate(proper):
        for j in range(i + 1, len(proper)):
            b = proper[j]
            if a & b:
                continue
            ab = a | b
            for c in proper[j + 1:]:
                if not c & ab:
                    total += factor[a] * factor[b] * factor[c]
    return total


def count_committees_eq1(ts: ToposSet) -> int:
    """Unordered triples of pairwise-disjoint nonempty subsets S1, S2, S3,
    weighted by the number of topes whose positive part is exactly S_k.

    Only realized positive parts can contribute, so the sum runs over those.
    """
    parts = Counter(m for m in ts.pos_masks if m)
    keys = sorted(parts)
    total = 0
    for i, a in enumerate(keys):
        for j in range(i + 1, len(keys)):
            b = keys[j]
            if a & b:
                continue
            for c in keys[j + 1:]:
                if not c & (a | b):
                    total += parts[a] * parts[b] * parts[c]
    return total


def free_halfspace_sizes(ts: ToposSet, lat: ConvexLattice) -> list[tuple[int, int]]:
    """(|A|, |T_A^+|) for every free proper member A."""
    return [(bin(a).count("1"), _count_positive_on(ts, a)) for a in lat.free_masks]


def count_no_opposite_triples(ts: ToposSet, lat: ConvexLattice) -> int:
    """3-subsets with no opposite pair that meet every positive halfspace."""
    check_lattice(ts, lat)
    if len(ts) % 2:
        raise ValueError("tope count must be even")
    total = 8 * comb(len(ts) // 2, 3)
    for size, count in free_halfspace_sizes(ts, lat):
        total += (-1) ** size * comb(count, 3)
    return total


def count_no_opposite_triples_brute(ts: ToposSet) -> int:
    masks = ts.pos_masks
    full = ts.full
    count = 0
    for a, b, c in combinations(masks, 3):
        if a ^ b == full or a ^ c == full or b ^ c == full:
            continue
        if a | b | c == full:
            count += 1
    return count


def committees_to_dict(ts: ToposSet, committees: Sequence[Committee]) -> list[dict]:
    return [{"topes": c.topes(ts), "indices": list(c.members),
             "max_positive": c.max_positive} for c in committees]
