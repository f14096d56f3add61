"""Helly-Gallai numbers for 2-piercing families of flat boxes.

A family that is not 2-pierceable while all its proper subfamilies are has
piercing number 3, and the complement of its intersection graph is an odd
cycle (the only 3-critical graphs). Upper bounds on the Helly-Gallai number
therefore reduce to showing that complements of long odd cycles admit no
realization by m-boxes, which :func:`upper_bound_check` does exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import gallery
from .boxes import BoxFamily, pierceable, piercing_number
from .boxicity import realizable_some_d
from .budget import Budget
from .errors import BudgetExceeded, InvalidArgument, Unsupported
from .graph import complement, make_cycle


def h_value(m: int, d: int | None = None) -> int:
    """Helly-Gallai number for 2-piercing m-boxes in R^d, d > m.

    The value does not depend on ``d``; the argument is accepted and ignored.
    """
    if m < 1:
        raise InvalidArgument(f"box dimension must be at least 1, got {m}")
    if m == 1:
        return 5
    if m == 2:
        return 7
    return 3 * m if m % 2 else 3 * m - 1


def dg_h_value(d: int) -> int:
    """Helly-Gallai number for 2-piercing full-dimensional boxes in R^d."""
    if d < 1:
        raise InvalidArgument(f"dimension must be at least 1, got {d}")
    return 3 * d if d % 2 else 3 * d - 1


def _validate_witness(family: BoxFamily, h: int) -> None:
    if len(family) != h:
        raise AssertionError(f"witness has {len(family)} boxes, expected {h}")
    if pierceable(family, 2):
        raise AssertionError("witness family is 2-pierceable")
    if piercing_number(family) != 3:
        raise AssertionError("witness family does not have piercing number 3")
    for idx in combinations(range(h), h - 1):
        if not pierceable(family.subfamily(idx), 2):
            raise AssertionError(f"subfamily {idx} is not 2-pierceable")


def lower_bound_witness(m: int, d: int | None = None) -> BoxFamily:
    """A family of ``h`` m-boxes in R^d, not 2-pierceable, whose ``h - 1``-subfamilies are.

    ``d`` defaults to ``m + 1``. For ``d > m`` the size is :func:`h_value`
    and the family is the C5 / C7 complement construction padded to R^d.
    ``d == m`` is supported for ``m`` in {1, 2} with size :func:`dg_h_value`.
    """
    if m not in (1, 2):
        raise Unsupported(f"no stored witness for m = {m}")
    d = m + 1 if d is None else d
    if d < m:
        raise InvalidArgument(f"ambient dimension {d} is below box dimension {m}")
    if d == m:
        if m == 1:
            family, h = gallery.disjoint_intervals(3), dg_h_value(1)
        else:
            family, h = gallery.c5c_family(), dg_h_value(2)
    else:
        base = gallery.c5c_family() if m == 1 else gallery.c7c_family()
        family, h = base.padded(d), h_value(m)
    if family.max_dim() > m:
        raise AssertionError("witness boxes exceed dimension m")
    _validate_witness(family, h)
    return family


@dataclass
class HellyReport:
    h: int
    family_size: int
    subfamilies_checked: int
    all_subfamilies_pierceable: bool
    family_pierceable: bool
    failing_subfamily: list[int] | None = None
    per_subfamily: list[dict] | None = None

    @property
    def implication_holds(self) -> bool:
        return self.family_pierceable or not self.all_subfamilies_pierceable

    def to_json(self) -> dict:
        out = {
            "h": self.h,
            "family_size": self.family_size,
            "subfamilies_checked": self.subfamilies_checked,
            "all_subfamilies_2_pierceable": self.all_subfamilies_pierceable,
            "family_2_pierceable": self.family_pierceable,
            "implication_holds": self.implication_holds,
        }
        if self.failing_subfamily is not None:
            out["failing_subfamily"] = self.failing_subfamily
        if self.per_subfamily is not None:
            out["per_subfamily"] = self.per_subfamily
        return out


def helly_gallai_check(family: BoxFamily, h: int, detail: bool = False) -> HellyReport:
    """Test "every h-subfamily 2-pierceable implies the family is" on one family.

    Subfamilies are reported with 1-based box indices. When ``h`` exceeds the
    family size the family itself is the only subfamily.
    """
    if h < 1:
        raise InvalidArgument(f"h must be positive, got {h}")
    size = min(h, len(family))
    all_ok = True
    failing = None
    rows = [] if detail else None
    checked = 0
    for idx in combinations(range(len(family)), size):
        checked += 1
        ok = bool(pierceable(family.subfamily(idx), 2))
        if rows is not None:
            rows.append({"boxes": [i + 1 for i in idx], "2_pierceable": ok})
        if not ok and all_ok:
            all_ok = False
            failing = [i + 1 for i in idx]
            if rows is None:
                break
    return HellyReport(h, len(family), checked, all_ok, bool(pierceable(family, 2)), failing, rows)


@dataclass
class UpperBoundReport:
    m: int
    h: int
    items: dict[int, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return bool(self.items) and all(v == "not realizable" for v in self.items.values())

    def to_json(self) -> dict:
        return {"m": self.m, "h": self.h, "items": {str(s): v for s, v in self.items.items()}, "passed": self.passed}


def upper_bound_check(
    m: int,
    s_list: list[int] | None = None,
    budget_factory=None,
) -> UpperBoundReport:
    """Check that complements of odd cycles longer than ``h_value(m)`` are not m-box graphs.

    ``s_list`` defaults to the first two odd lengths above ``h_value(m)``.
    Each entry gets its own budget from ``budget_factory`` (no limit by
    default); an exhausted budget is reported as ``budget-exceeded``.
    """
    h = h_value(m)
    if s_list is None:
        first = h + 1 if h % 2 == 0 else h + 2
        s_list = [first, first + 2]
    report = UpperBoundReport(m, h)
    for s in s_list:
        if s % 2 == 0 or s <= h:
            raise InvalidArgument(f"cycle length {s} must be odd and larger than {h}")
        budget = budget_factory() if budget_factory else Budget()
        try:
            found = realizable_some_d(complement(make_cycle(s)), m, budget)
        except BudgetExceeded:
            report.items[s] = "budget-exceeded"
            continue
        report.items[s] = "realizable" if found else "not realizable"
    return report
