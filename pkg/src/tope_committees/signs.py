"""Sign vectors, tope sets, parsing and validation.

A tope over the ground set E = {1..n} is a zero-free sign vector, stored as
a string over ``+`` and ``-``. Ground subsets are handled internally as
bitmasks (element ``e`` is bit ``e - 1``) and exposed as frozensets of
1-based elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

PLUS = "+"
MINUS = "-"

# U+2212 shows up when topes are pasted from typeset text
_ALIASES = str.maketrans({"−": MINUS, "–": MINUS})


class ParseError(ValueError):
    """Malformed input file."""


class ValidationError(ValueError):
    """A tope set violates the standing assumptions."""

    def __init__(self, report: "ValidationReport"):
        self.report = report
        super().__init__("; ".join(v.message for v in report.violations))


# ---------------------------------------------------------------------------
# ground subsets

def to_mask(subset: Iterable[int] | int, n: int) -> int:
    """Bitmask of a set of 1-based elements; raises if any element is outside 1..n."""
    if isinstance(subset, int):
        if subset < 0 or subset >> n:
            raise ValueError(f"mask {subset:#x} is not a subset of 1..{n}")
        return subset
    mask = 0
    for e in subset:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} is not in the ground set 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return frozenset(out)


def full_mask(n: int) -> int:
    return (1 << n) - 1


def subset_key(subset: Iterable[int]) -> tuple[int, tuple[int, ...]]:
    """Sort key for ground subsets: by size, then lexicographically."""
    s = tuple(sorted(subset))
    return len(s), s


def format_subset(subset: Iterable[int]) -> str:
    """``{1,2}`` -> ``"12"`` for n < 10, comma separated otherwise."""
    s = sorted(subset)
    if not s:
        return "{}"
    if s[-1] < 10:
        return "".join(map(str, s))
    return ",".join(map(str, s))


# ---------------------------------------------------------------------------
# sign vectors

def negate(tope: str) -> str:
    return tope.translate(str.maketrans("+-", "-+"))


def positive_mask(tope: str) -> int:
    mask = 0
    for i, c in enumerate(tope):
        if c == PLUS:
            mask |= 1 << i
    return mask


def tope_from_mask(pos: int, n: int) -> str:
    return "".join(PLUS if pos >> i & 1 else MINUS for i in range(n))


def positive_part(tope: str) -> frozenset[int]:
    return frozenset(i + 1 for i, c in enumerate(tope) if c == PLUS)


def negative_part(tope: str) -> frozenset[int]:
    return frozenset(i + 1 for i, c in enumerate(tope) if c == MINUS)


# ---------------------------------------------------------------------------
# tope sets

@dataclass(frozen=True)
class ToposSet:
    """A collection of topes on E = {1..n}, kept in canonical order.

    Canonical order is lexicographic with ``+`` before ``-`` (which is also
    ASCII order). Construct through :meth:`from_topes` to get the ordering;
    the raw constructor trusts its input.
    """

    n: int
    topes: tuple[str, ...]

    @classmethod
    def from_topes(cls, topes: Iterable[str]) -> "ToposSet":
        topes = sorted(t.translate(_ALIASES) for t in topes)
        if not topes:
            raise ValueError("a tope set needs at least one tope")
        n = len(topes[0])
        for t in topes:
            if len(t) != n or set(t) - {PLUS, MINUS}:
                raise ValueError(f"not a tope of length {n}: {t!r}")
        return cls(n, tuple(topes))

    @classmethod
    def from_masks(cls, masks: Iterable[int], n: int) -> "ToposSet":
        return cls.from_topes(tope_from_mask(m, n) for m in masks)

    def __len__(self) -> int:
        return len(self.topes)

    def __iter__(self):
        return iter(self.topes)

    @cached_property
    def pos_masks(self) -> tuple[int, ...]:
        """Positive parts as bitmasks, aligned with :attr:`topes`."""
        return tuple(positive_mask(t) for t in self.topes)

    @cached_property
    def index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.topes)}

    @cached_property
    def by_positive_mask(self) -> dict[int, int]:
        """Map positive-part mask -> tope index. Unique for distinct topes."""
        return {m: i for i, m in enumerate(self.pos_masks)}

    @property
    def full(self) -> int:
        return full_mask(self.n)

    @property
    def acyclic(self) -> bool:
        """Whether the all-plus vector is a tope."""
        return self.full in self.by_positive_mask

    def opposite(self, i: int) -> int | None:
        """Index of -T for tope index ``i``, or None if it is missing."""
        return self.by_positive_mask.get(self.full ^ self.pos_masks[i])

    def to_text(self) -> str:
        return "".join(t + "\n" for t in self.topes)


def parse_topes(text: str) -> ToposSet:
    """Parse ``.topes`` content. Checks well-formedness only, not validity."""
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip().translate(_ALIASES)
        if not line or line.startswith("#"):
            continue
        bad = set(line) - {PLUS, MINUS}
        if bad:
            raise ParseError(
                f"line {lineno}: unexpected character(s) {''.join(sorted(bad))!r}"
                " (topes are strings over '+' and '-')")
        rows.append((lineno, line))
    if not rows:
        raise ParseError("no topes found")
    n = len(rows[0][1])
    seen: dict[str, int] = {}
    for lineno, line in rows:
        if len(line) != n:
            raise ParseError(f"line {lineno}: length {len(line)}, expected {n}")
        if line in seen:
            raise ParseError(f"line {lineno}: duplicate of line {seen[line]}")
        seen[line] = lineno
    return ToposSet.from_topes(line for _, line in rows)


def read_topes(path) -> ToposSet:
    with open(path, encoding="utf-8") as fh:
        return parse_topes(fh.read())


# ---------------------------------------------------------------------------
# validation

@dataclass(frozen=True)
class Violation:
    rule: str
    message: str
    indices: tuple[int, ...] = ()


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple[Violation, ...] = ()
    warnings: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        def rows(vs):
            return [{"rule": v.rule, "message": v.message, "indices": list(v.indices)}
                    for v in vs]
        return {"ok": self.ok, "violations": rows(self.violations),
                "warnings": rows(self.warnings)}


def validate(ts: ToposSet, strict: bool = False) -> ValidationReport:
    """Check the necessary conditions on a tope set.

    Covers zero-freeness, distinctness, symmetry (T in the set implies -T in
    the set) and simplicity (no constant, parallel or antiparallel columns).
    Passing does not certify that the set comes from an oriented matroid.
    The all-plus tope is reported as a warning, or as a violation when
    ``strict`` is set.
    """
    violations: list[Violation] = []
    warnings: list[Violation] = []
    n = ts.n

    for i, t in enumerate(ts.topes):
        if len(t) != n or set(t) - {PLUS, MINUS}:
            violations.append(Violation(
                "zero-free", f"tope {i} ({t!r}) is not a zero-free vector of length {n}",
                (i,)))
    if violations:
        return ValidationReport(tuple(violations), ())

    first: dict[str, int] = {}
    for i, t in enumerate(ts.topes):
        if t in first:
            violations.append(Violation(
                "distinct", f"tope {t} is listed twice", (first[t], i)))
        else:
            first[t] = i

    for i, t in enumerate(ts.topes):
        if negate(t) not in first:
            violations.append(Violation(
                "symmetry", f"opposite {negate(t)} of tope {t} is missing", (i,)))

    columns = ["".join(t[e] for t in ts.topes) for e in range(n)]
    for e, col in enumerate(columns):
        if len(set(col)) < 2:
            violations.append(Violation(
                "simple", f"element {e + 1} has the same sign on every tope", (e + 1,)))
    for e in range(n):
        for f in range(e + 1, n):
            if columns[e] == columns[f]:
                violations.append(Violation(
                    "simple", f"elements {e + 1} and {f + 1} are parallel", (e + 1, f + 1)))
            elif columns[e] == negate(columns[f]):
                violations.append(Violation(
                    "simple", f"elements {e + 1} and {f + 1} are antiparallel",
                    (e + 1, f + 1)))

    if ts.acyclic:
        i = ts.by_positive_mask[ts.full]
        finding = Violation("acyclic", "the all-plus vector is a tope (acyclic)", (i,))
        (violations if strict else warnings).append(finding)

    return ValidationReport(tuple(violations), tuple(warnings))


def check(ts: ToposSet, strict: bool = False) -> ToposSet:
    """Return ``ts`` unchanged, raising :class:`ValidationError` if it is invalid."""
    report = validate(ts, strict=strict)
    if not report.ok:
        raise ValidationError(report)
    return ts


def reorient(ts: ToposSet, subset: Iterable[int] | int) -> ToposSet:
    """Flip the signs of every tope at the elements of ``subset``."""
    flip = to_mask(subset, ts.n)
    return ToposSet.from_masks((m ^ flip for m in ts.pos_masks), ts.n)


def bmax_positive(ts: ToposSet) -> tuple[int, ...]:
    """Indices of topes whose positive parts are maximal under inclusion."""
    masks = ts.pos_masks
    return tuple(
        i for i, m in enumerate(masks)
        if not any(o != m and o & m == m for o in masks))


def tope_strings(ts: ToposSet, indices: Sequence[int]) -> list[str]:
    return [ts.topes[i] for i in indices]
