"""Flat axis-parallel boxes in R^d with exact rational coordinates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable, Sequence

from .coloring import chromatic_number
from .errors import InvalidArgument
from .graph import Graph, complement
from .interval import interval_graph_of

Point = tuple[Fraction, ...]


def to_fraction(x) -> Fraction:
    """Accept ints, Fractions, and strings such as ``"3/4"``; reject floats."""
    if isinstance(x, bool) or isinstance(x, float):
        raise InvalidArgument(f"coordinate {x!r} must be an integer or rational string")
    try:
        return Fraction(x)
    except (TypeError, ValueError):
        raise InvalidArgument(f"cannot read coordinate {x!r} as a rational") from None


def _fmt(x: Fraction) -> int | str:
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AxisBox:
    """Product of closed intervals, one per axis. Degenerate axes are allowed."""

    intervals: tuple[tuple[Fraction, Fraction], ...]

    def __post_init__(self) -> None:
        norm = []
        for i, iv in enumerate(self.intervals, start=1):
            lo, hi = (to_fraction(t) for t in iv)
            if lo > hi:
                raise InvalidArgument(f"axis {i}: lo {lo} > hi {hi}")
            norm.append((lo, hi))
        if not norm:
            raise InvalidArgument("a box needs at least one axis")
        object.__setattr__(self, "intervals", tuple(norm))

    @classmethod
    def of(cls, *intervals: Iterable) -> "AxisBox":
        return cls(tuple(tuple(iv) for iv in intervals))

    @property
    def d(self) -> int:
        return len(self.intervals)

    @property
    def dim(self) -> int:
        """Number of axes on which the box has positive extent."""
        return sum(lo < hi for lo, hi in self.intervals)

    def is_p_box(self, p: int) -> bool:
        return self.dim <= p

    def has_exact_dim(self, p: int) -> bool:
        return self.dim == p

    def degenerate_axes(self) -> list[int]:
        return [i for i, (lo, hi) in enumerate(self.intervals, start=1) if lo == hi]

    def contains(self, point: Sequence) -> bool:
        return all(lo <= x <= hi for (lo, hi), x in zip(self.intervals, point))

    def to_json(self) -> list:
        return [[_fmt(lo), _fmt(hi)] for lo, hi in self.intervals]


def boxes_intersect(a: AxisBox, b: AxisBox) -> bool:
    if a.d != b.d:
        raise InvalidArgument(f"dimension mismatch: {a.d} vs {b.d}")
    return all(
        max(alo, blo) <= min(ahi, bhi)
        for (alo, ahi), (blo, bhi) in zip(a.intervals, b.intervals)
    )


@dataclass(frozen=True)
class BoxFamily:
    """Ordered boxes in a shared ambient dimension; box ``i`` is vertex ``i + 1``."""

    d: int
    boxes: tuple[AxisBox, ...] = ()

    def __post_init__(self) -> None:
        if self.d < 1:
            raise InvalidArgument(f"ambient dimension must be positive, got {self.d}")
        boxes = tuple(self.boxes)
        for i, b in enumerate(boxes, start=1):
            if b.d != self.d:
                raise InvalidArgument(f"box {i} lives in R^{b.d}, family is in R^{self.d}")
        object.__setattr__(self, "boxes", boxes)

    def __len__(self) -> int:
        return len(self.boxes)

    def subfamily(self, indices: Iterable[int]) -> "BoxFamily":
        """Boxes at the given 0-based positions, in that order."""
        return BoxFamily(self.d, tuple(self.boxes[i] for i in indices))

    def max_dim(self) -> int:
        return max((b.dim for b in self.boxes), default=0)

    def padded(self, d: int) -> "BoxFamily":
        """Embed into R^d by appending the point ``0`` on each new axis."""
        if d < self.d:
            raise InvalidArgument(f"cannot pad R^{self.d} down to R^{d}")
        extra = ((Fraction(0), Fraction(0)),) * (d - self.d)
        return BoxFamily(d, tuple(AxisBox(b.intervals + extra) for b in self.boxes))

    def to_json(self) -> dict:
        return {"d": self.d, "boxes": [b.to_json() for b in self.boxes]}

    @classmethod
    def from_json(cls, data: dict) -> "BoxFamily":
        try:
            d = int(data["d"])
            boxes = tuple(AxisBox(tuple(tuple(iv) for iv in b)) for b in data["boxes"])
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidArgument(f"malformed box family JSON: {exc}") from None
        return cls(d, boxes)


def intersection_graph(family: BoxFamily) -> Graph:
    boxes = family.boxes
    edges = [
        (i + 1, j + 1)
        for i, j in combinations(range(len(boxes)), 2)
        if boxes_intersect(boxes[i], boxes[j])
    ]
    return Graph(len(boxes), frozenset(edges))


def project_axis(family: BoxFamily, axis: int) -> tuple[list[tuple[Fraction, Fraction]], Graph]:
    """Per-box intervals on ``axis`` (1-based) and their interval graph."""
    if not 1 <= axis <= family.d:
        raise InvalidArgument(f"axis {axis} outside 1..{family.d}")
    ivs = [b.intervals[axis - 1] for b in family.boxes]
    graph = interval_graph_of({i: iv for i, iv in enumerate(ivs, start=1)}, len(ivs))
    return ivs, graph


# -- piercing -------------------------------------------------------------------


@dataclass
class Piercing:
    pierceable: bool
    points: list[Point] | None = None

    def __bool__(self) -> bool:
        return self.pierceable

    def to_json(self) -> dict:
        out: dict = {"pierceable": self.pierceable}
        if self.points is not None:
            out["points"] = [[_fmt(x) for x in pt] for pt in self.points]
        return out


def validate_piercing(family: BoxFamily, points: Sequence[Sequence]) -> bool:
    return all(any(b.contains(pt) for pt in points) for b in family.boxes)


def pierceable(family: BoxFamily, n: int) -> Piercing:
    """Decide whether ``n`` points pierce every box, by exact grid search.

    Any piercing point can slide down, axis by axis, to the largest lower
    endpoint among the boxes it pierces without leaving any of them, so the
    grid of lower endpoints is a complete candidate set. Each level pierces
    the first unpierced box, trying only candidates whose pierced sets are
    inclusion-maximal.
    """
    if n <= 0:
        raise InvalidArgument(f"number of points must be positive, got {n}")
    boxes = family.boxes
    m = len(boxes)
    if m == 0:
        return Piercing(True, [])
    grids = [sorted({b.intervals[a][0] for b in boxes}) for a in range(family.d)]
    # containing[a][value] = bitmask of boxes whose axis-a interval contains value
    containing = [
        {v: sum(1 << i for i, b in enumerate(boxes) if b.intervals[a][0] <= v <= b.intervals[a][1]) for v in grid}
        for a, grid in enumerate(grids)
    ]
    full = (1 << m) - 1

    def solve(left: int, k: int) -> list[Point] | None:
        if not left:
            return []
        if k == 0:
            return None
        first = (left & -left).bit_length() - 1
        target = boxes[first]
        axes = [[v for v in grids[a] if target.intervals[a][0] <= v <= target.intervals[a][1]] for a in range(family.d)]
        options: dict[int, Point] = {}
        for pt in product(*axes):
            hit = left
            for a, v in enumerate(pt):
                hit &= containing[a][v]
            if hit not in options:
                options[hit] = pt
        hits = sorted(options, key=lambda h: (-h.bit_count(), h))
        maximal = [h for h in hits if not any(h != o and h & o == h for o in hits)]
        for h in maximal:
            rest = solve(left & ~h, k - 1)
            if rest is not None:
                return [options[h]] + rest
        return None

    found = solve(full, n)
    if found is None:
        return Piercing(False)
    if not validate_piercing(family, found):
        raise AssertionError("piercing witness failed validation")
    return Piercing(True, found)


def piercing_number(family: BoxFamily) -> int:
    """Least number of points piercing the family, as χ of the complement graph."""
    if len(family) == 0:
        return 0
    return chromatic_number(complement(intersection_graph(family)))[0]


def geometric_piercing_number(family: BoxFamily, limit: int | None = None) -> int:
    """Least ``n`` with :func:`pierceable`; the slow oracle for :func:`piercing_number`."""
    if len(family) == 0:
        return 0
    limit = len(family) if limit is None else limit
    for n in range(1, limit + 1):
        if pierceable(family, n):
            return n
    raise InvalidArgument(f"family needs more than {limit} points")
