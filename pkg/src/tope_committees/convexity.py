"""Convex hulls, extreme points and the lattice of convex sets.

Everything is computed from topes alone: ``b`` lies in the hull of an
acyclic set ``A`` iff every tope that is positive on ``A`` is positive on
``b``. For a simple oriented matroid this agrees with the covector
definition, since composing a covector with a tope gives a tope.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .signs import ToposSet, format_subset, from_mask, full_mask, subset_key, to_mask

MAX_LATTICE_ELEMENTS = 20

Subset = Iterable[int] | int


class LatticeError(ValueError):
    pass


# ---------------------------------------------------------------------------
# mask-level primitives

def conv_mask(ts: ToposSet, a: int) -> int:
    hull = ts.full
    found = False
    for m in ts.pos_masks:
        if m & a == a:
            hull &= m
            found = True
    return hull if found else ts.full


def is_acyclic_mask(ts: ToposSet, a: int) -> bool:
    return any(m & a == a for m in ts.pos_masks)


def ex_mask(ts: ToposSet, a: int) -> int:
    if a == ts.full:
        return a
    out = 0
    rest = a
    while rest:
        bit = rest & -rest
        rest ^= bit
        if not conv_mask(ts, a & ~bit) & bit:
            out |= bit
    return out


# ---------------------------------------------------------------------------
# public subset operations

def conv(ts: ToposSet, subset: Subset) -> frozenset[int]:
    """Convex hull of ``subset``; the whole ground set if it is not acyclic."""
    return from_mask(conv_mask(ts, to_mask(subset, ts.n)))


def ex(ts: ToposSet, subset: Subset) -> frozenset[int]:
    """Extreme points: members not in the hull of the others.

    ``ex(E) = E`` by convention. For non-acyclic proper subsets the same
    formula is applied with the extended hull.
    """
    return from_mask(ex_mask(ts, to_mask(subset, ts.n)))


@dataclass(frozen=True)
class SubsetClassification:
    acyclic: bool
    convex: bool
    free: bool
    hull: frozenset[int]
    extreme: frozenset[int]


def classify(ts: ToposSet, subset: Subset) -> SubsetClassification:
    a = to_mask(subset, ts.n)
    hull = conv_mask(ts, a)
    extreme = ex_mask(ts, a)
    acyclic = is_acyclic_mask(ts, a)
    if acyclic:
        assert conv_mask(ts, extreme) == hull, "conv(ex(A)) != conv(A)"
    convex = acyclic and hull == a
    free = convex and extreme == a
    return SubsetClassification(acyclic, convex, free, from_mask(hull), from_mask(extreme))


# ---------------------------------------------------------------------------
# the lattice

def _bitcount(x: int) -> int:
    return bin(x).count("1")


def _mask_key(m: int) -> tuple[int, tuple[int, ...]]:
    return subset_key(from_mask(m))


@dataclass(frozen=True)
class ConvexLattice:
    """Convex subsets of E ordered by inclusion, with E adjoined as the top.

    Members are stored as bitmasks in canonical order (by size, then
    lexicographically); the public methods speak frozensets.
    """

    ts: ToposSet
    member_masks: tuple[int, ...]
    coatom_masks: tuple[int, ...]
    free_masks: tuple[int, ...]
    mobius_values: dict[int, int] = field(repr=False)

    @property
    def n(self) -> int:
        return self.ts.n

    @property
    def top(self) -> int:
        return self.ts.full

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.member_masks)

    @property
    def members(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in self.member_masks]

    @property
    def proper_members(self) -> list[frozenset[int]]:
        """Members other than the bottom (empty set) and the top (E)."""
        return [from_mask(m) for m in self.member_masks if m and m != self.top]

    @property
    def coatoms(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in self.coatom_masks]

    @property
    def free_sets(self) -> list[frozenset[int]]:
        return [from_mask(m) for m in self.free_masks]

    def __len__(self) -> int:
        return len(self.member_masks)

    def __contains__(self, subset) -> bool:
        try:
            return to_mask(subset, self.n) in self._member_set
        except ValueError:
            return False

    def member(self, subset: Subset) -> int:
        """Mask of ``subset``, raising :class:`LatticeError` if it is not a member."""
        m = to_mask(subset, self.n)
        if m not in self._member_set:
            raise LatticeError(f"{format_subset(from_mask(m))} is not a convex set")
        return m

    def to_dict(self) -> dict:
        def rows(masks):
            return [sorted(from_mask(m)) for m in masks]
        return {
            "n": self.n,
            "members": rows(self.member_masks),
            "coatoms": rows(self.coatom_masks),
            "free_sets": rows(self.free_masks),
            "mobius": [{"set": sorted(from_mask(m)), "value": self.mobius_values[m]}
                       for m in self.member_masks if m != self.top],
        }


def build_lattice(ts: ToposSet, verify: bool = False,
                  max_elements: int = MAX_LATTICE_ELEMENTS) -> ConvexLattice:
    """Enumerate the convex sets of ``ts`` by scanning all 2**n subsets.

    With ``verify`` set, the closed-form Möbius values are checked against
    the recursive definition and free sets against their Boolean lower
    intervals.
    """
    n = ts.n
    if n > max_elements:
        raise LatticeError(f"{n} elements exceeds the enumeration bound {max_elements}")
    top = full_mask(n)

    members = {a for a in range(1 << n) if conv_mask(ts, a) == a}
    # non-acyclic sets have hull E, so E is the only non-acyclic fixed point
    members.add(top)
    member_masks = tuple(sorted(members, key=_mask_key))

    proper = [a for a in member_masks if a != top]
    for i, a in enumerate(proper):
        for b in proper[i + 1:]:
            if a & b not in members:
                raise LatticeError(
                    f"{format_subset(from_mask(a))} and {format_subset(from_mask(b))}"
                    " intersect in a non-convex set")

    coatoms = tuple(
        a for a in proper
        if not any(b != a and b & a == a for b in proper))
    free = tuple(a for a in proper if a and ex_mask(ts, a) == a)
    free_set = set(free)
    mobius = {a: (-1) ** _bitcount(a) if (a == 0 or a in free_set) else 0 for a in proper}

    lat = ConvexLattice(ts, member_masks, coatoms, free, mobius)
    if verify:
        verify_mobius(lat)
    return lat


def mobius_recursive(lat: ConvexLattice) -> dict[int, int]:
    """mu(0, A) for every proper member, straight from the recursive definition."""
    mu: dict[int, int] = {}
    # canonical order lists subsets before supersets
    for a in lat.member_masks:
        if a == lat.top:
            continue
        if a == 0:
            mu[a] = 1
            continue
        mu[a] = -sum(v for b, v in mu.items() if b != a and b & a == b)
    return mu


def verify_mobius(lat: ConvexLattice) -> None:
    rec = mobius_recursive(lat)
    for a, v in rec.items():
        if lat.mobius_values[a] != v:
            raise LatticeError(
                f"Möbius mismatch at {format_subset(from_mask(a))}: "
                f"closed form {lat.mobius_values[a]}, recursive {v}")
    for a in lat.free_masks:
        below = sum(1 for b in lat.member_masks if b & a == b)
        if below != 1 << _bitcount(a):
            raise LatticeError(
                f"lower interval of free set {format_subset(from_mask(a))} has {below} members")


def mobius(lat: ConvexLattice, subset: Subset, verify: bool = False) -> int:
    a = lat.member(subset)
    if a == lat.top:
        raise LatticeError("mobius is defined for members below the adjoined top")
    if verify:
        rec = mobius_recursive(lat)[a]
        if rec != lat.mobius_values[a]:
            raise LatticeError(f"Möbius mismatch: {lat.mobius_values[a]} != {rec}")
    return lat.mobius_values[a]


def coatoms_above_mask(lat: ConvexLattice, d: int) -> list[int]:
    return [c for c in lat.coatom_masks if c & d == d]


def coatoms_above(lat: ConvexLattice, subset: Subset) -> list[frozenset[int]]:
    """Coatoms of the interval [D, top]; a coatom yields itself, the top yields none."""
    return [from_mask(c) for c in coatoms_above_mask(lat, lat.member(subset))]


def join_mask(lat: ConvexLattice, a: int, b: int) -> int:
    return conv_mask(lat.ts, a | b)


def meet_join(lat: ConvexLattice, a: Subset, b: Subset) -> tuple[frozenset[int], frozenset[int]]:
    ma, mb = lat.member(a), lat.member(b)
    return from_mask(ma & mb), from_mask(join_mask(lat, ma, mb))
