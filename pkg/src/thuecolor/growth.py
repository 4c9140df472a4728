"""Growth claims: coloring one more element multiplies the count of valid
colorings by at least a stated rate, provided lists are large enough.

A claim fixes a regime, a maximum degree, a minimum list size, and the
growth rate.  Checking an instance (graph, lists, element) computes the
two exact counts and compares C(g) against rate * C(g minus x).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from .bounds import CBRT2, CBRT4, ceil_snapped
from .counting import ListAssignment, count_colorings
from .graphs import ElementId, ElementKind, GeneralizedGraph, delete
from .repetition import Regime, relevant_elements

# a ratio within 5% of the required rate is reported as tight
_TIGHT_FACTOR = 1.05


@dataclass(frozen=True)
class GrowthClaim:
    """A concrete growth statement at a fixed maximum degree."""

    name: str
    regime: Regime
    delta: int
    list_size: int
    growth: float
    element_kind: ElementKind | None = None  # None: any element kind
    growth_edge: float | None = None  # sharper rate when x is an edge
    desk_scale: bool = True

    def growth_for(self, x_kind: ElementKind) -> float:
        if x_kind is ElementKind.EDGE and self.growth_edge is not None:
            return self.growth_edge
        return self.growth


@dataclass(frozen=True)
class ClaimFamily:
    """A growth claim parameterized by the maximum degree."""

    name: str
    regime: Regime
    element_kind: ElementKind | None
    min_delta: int
    reference_delta: int
    list_size: Callable[[int], int]
    growth: Callable[[int], float]
    growth_edge: Callable[[int], float] | None = None
    desk_scale: bool = True

    def at(self, delta: int) -> GrowthClaim:
        if delta < self.min_delta:
            raise ValueError(
                f"claim {self.name} requires Delta >= {self.min_delta}, got {delta}"
            )
        return GrowthClaim(
            name=self.name,
            regime=self.regime,
            delta=delta,
            list_size=self.list_size(delta),
            growth=self.growth(delta),
            element_kind=self.element_kind,
            growth_edge=None if self.growth_edge is None else self.growth_edge(delta),
            desk_scale=self.desk_scale,
        )


def _thue_choice_lists(d: int) -> int:
    gamma_term = (3.0 / CBRT4) * d ** (-1 / 3) + CBRT4 * d ** (-2 / 3) + 1.0 / d
    return ceil_snapped(d * (d - 1) * (1.0 + gamma_term) + 1.0)


def _thue_choice_growth(d: int) -> float:
    return d * (d - 1) * (1.0 + CBRT2 * d ** (-1 / 3))


def _total_lists(d: int) -> int:
    gamma = 3.0 / CBRT2 + 8.0 * d ** (-1 / 3)
    return ceil_snapped(d * d * (1.0 + gamma * d ** (-1 / 3)))


def _total_growth(d: int) -> float:
    return d * d * (1.0 + CBRT4 * d ** (-1 / 3))


CLAIM_FAMILIES: dict[str, ClaimFamily] = {
    fam.name: fam
    for fam in (
        # paths with 4-element lists double the count per vertex
        ClaimFamily(
            name="path",
            regime=Regime.VERTEX,
            element_kind=ElementKind.VERTEX,
            min_delta=2,
            reference_delta=2,
            list_size=lambda d: 4,
            growth=lambda d: 2.0,
        ),
        ClaimFamily(
            name="thue_choice",
            regime=Regime.VERTEX,
            element_kind=ElementKind.VERTEX,
            min_delta=2,
            reference_delta=2,
            list_size=_thue_choice_lists,
            growth=_thue_choice_growth,
        ),
        ClaimFamily(
            name="weak_total",
            regime=Regime.WEAK_TOTAL,
            element_kind=None,
            min_delta=2,
            reference_delta=2,
            list_size=lambda d: 6 * d,
            growth=lambda d: 3.0 * d,
        ),
        # high-degree refinement; counts at Delta >= 300 are far beyond
        # exhaustive checking, see bounds.certify_delta_inequalities
        ClaimFamily(
            name="improved_weak_total",
            regime=Regime.WEAK_TOTAL,
            element_kind=None,
            min_delta=300,
            reference_delta=300,
            list_size=lambda d: ceil_snapped(4.25 * d),
            growth=lambda d: 1.62 * d,
            growth_edge=lambda d: 4.2 * d,
            desk_scale=False,
        ),
        ClaimFamily(
            name="total_thue",
            regime=Regime.STRONG_TOTAL,
            element_kind=None,
            min_delta=2,
            reference_delta=2,
            list_size=_total_lists,
            growth=_total_growth,
        ),
    )
}


def builtin_claims() -> list[GrowthClaim]:
    """The five built-in claims, each at its reference degree."""
    return [fam.at(fam.reference_delta) for fam in CLAIM_FAMILIES.values()]


def claim_family(name: str) -> ClaimFamily:
    try:
        return CLAIM_FAMILIES[name]
    except KeyError:
        raise ValueError(
            f"unknown claim {name!r}; known: {', '.join(CLAIM_FAMILIES)}"
        ) from None


@dataclass(frozen=True)
class GrowthReport:
    claim: GrowthClaim
    element: ElementId
    lhs: int  # count with x present
    count_without: int
    rhs_bound: float
    ratio: float  # lhs / count_without, inf when the smaller count is 0
    holds: bool
    tight: bool


def check_growth(
    g: GeneralizedGraph,
    lists: ListAssignment,
    claim: GrowthClaim,
    x: ElementId,
) -> GrowthReport:
    """Exactly check one growth instance.

    The comparison C(g) >= rate * C(g minus x) is made in exact rational
    arithmetic against the binary value of the rate.
    """
    if not claim.desk_scale:
        raise ValueError(
            f"claim {claim.name} is not desk-scale; its constants are certified "
            "by bounds.certify_delta_inequalities instead"
        )
    if x not in g:
        raise ValueError(f"element not in graph: {x}")
    if claim.element_kind is not None and x.kind is not claim.element_kind:
        raise ValueError(
            f"claim {claim.name} deletes a {claim.element_kind.name.lower()}, got {x}"
        )
    if x.kind not in claim.regime.element_kinds:
        raise ValueError(f"element {x} is not colored under regime {claim.regime.value}")
    if g.max_degree > claim.delta:
        raise ValueError(
            f"graph degree {g.max_degree} exceeds the claim's Delta {claim.delta}"
        )
    min_size = lists.min_size(relevant_elements(g, claim.regime))
    if min_size < claim.list_size:
        raise ValueError(
            f"smallest list has {min_size} colors, claim needs {claim.list_size}"
        )
    rate = claim.growth_for(x.kind)
    lhs = count_colorings(g, lists, claim.regime)
    without = count_colorings(delete(g, {x}), lists, claim.regime)
    if without == 0:
        holds = True
        ratio = math.inf
    else:
        holds = Fraction(lhs, without) >= Fraction(rate)
        ratio = lhs / without
    tight = holds and math.isfinite(ratio) and ratio <= rate * _TIGHT_FACTOR
    return GrowthReport(
        claim=claim,
        element=x,
        lhs=lhs,
        count_without=without,
        rhs_bound=rate * without,
        ratio=ratio,
        holds=holds,
        tight=tight,
    )


@dataclass(frozen=True)
class SweepSummary:
    reports: tuple[GrowthReport, ...]
    min_ratio: float
    failures: tuple[GrowthReport, ...]

    @property
    def all_hold(self) -> bool:
        return not self.failures


def sweep(
    corpus: Iterable[tuple[GeneralizedGraph, ListAssignment, ElementId]],
    claim: GrowthClaim,
) -> SweepSummary:
    """Run check_growth over a corpus of (graph, lists, element) instances."""
    reports = tuple(check_growth(g, lists, claim, x) for g, lists, x in corpus)
    min_ratio = min((r.ratio for r in reports), default=math.inf)
    failures = tuple(r for r in reports if not r.holds)
    return SweepSummary(reports=reports, min_ratio=min_ratio, failures=failures)
