"""Closed-form color bounds and the alpha/gamma trade-off optimization.

Each bound is a function of the maximum degree Delta.  The generic
shape behind them: with lists of size gamma*f(Delta) one extra colored
element multiplies the count of valid colorings by alpha*f(Delta)
provided gamma >= alpha + sum_i a_i / alpha^(i-1), so the best constant
is gamma* = min over alpha of that expression.  The series here are
geometric or first-moment geometric and are always evaluated in closed
form, never by truncation.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

# exact expressions, not decimal approximations
CBRT2 = 2.0 ** (1.0 / 3.0)
CBRT4 = 2.0 ** (2.0 / 3.0)

_SNAP_EPS = 1e-9


def ceil_snapped(x: float, eps: float = _SNAP_EPS) -> int:
    """Ceiling that forgives float noise just below an integer.

    Formula values that are mathematically integral can land a few ulp
    above the integer; plain ceil would then overshoot by one.
    """
    return math.ceil(x - eps)


def sum_geometric(x):
    """sum_{i>=1} x^(i-1) = 1/(1-x) for |x| < 1.  Exact on Fractions."""
    if abs(x) >= 1:
        raise ValueError("geometric series needs |x| < 1")
    return (1 - x) ** -1


def sum_weighted_geometric(x):
    """sum_{i>=1} i*x^(i-1) = (1-x)^-2 for |x| < 1.  Exact on Fractions."""
    if abs(x) >= 1:
        raise ValueError("weighted geometric series needs |x| < 1")
    return (1 - x) ** -2


@dataclass(frozen=True)
class GeometricSums:
    sum_i_x: object  # float, or Fraction when called with a Fraction


def geometric_sums(x) -> GeometricSums:
    """Closed form of the weighted geometric series used in the bounds."""
    return GeometricSums(sum_i_x=sum_weighted_geometric(x))


# ---------------------------------------------------------------------------
# bound formulas
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundFormula:
    """A named closed-form bound with its validity range in Delta."""

    name: str
    min_delta: int
    evaluate: Callable[[int], float | int]
    description: str


def _thue_choice(d: int) -> float:
    return d * d + (3.0 / CBRT4) * d ** (5.0 / 3.0) + CBRT4 * d ** (4.0 / 3.0)


def _thue_choice_refined(d: int) -> int:
    inner = 1.0 + (3.0 / CBRT4) * d ** (-1.0 / 3.0) + CBRT4 * d ** (-2.0 / 3.0) + 1.0 / d
    return ceil_snapped(d * (d - 1) * inner + 1.0)


def _weak_total(d: int) -> int:
    return 6 * d


def _improved_weak_total(d: int) -> int:
    return ceil_snapped(4.25 * d)


def _total_thue(d: int) -> float:
    return d * d + (3.0 / CBRT2) * d ** (5.0 / 3.0) + 8.0 * d ** (4.0 / 3.0) + 1.0


_total_formula = BoundFormula(
    name="total_thue",
    min_delta=1,
    evaluate=_total_thue,
    description="list colorings of vertices and edges together, all three path kinds",
)

BOUNDS: dict[str, BoundFormula] = {
    f.name: f
    for f in (
        BoundFormula(
            "thue_choice",
            1,
            _thue_choice,
            "vertex list colorings, Delta^2 + (3/2^(2/3)) Delta^(5/3) + 2^(2/3) Delta^(4/3)",
        ),
        BoundFormula(
            "thue_choice_refined",
            1,
            _thue_choice_refined,
            "integral refinement ceil(Delta(Delta-1)(1 + ...) + 1) of thue_choice",
        ),
        BoundFormula(
            "weak_total",
            1,
            _weak_total,
            "vertices and edges together, mixed paths only: 6 Delta",
        ),
        BoundFormula(
            "improved_weak_total",
            300,
            _improved_weak_total,
            "mixed paths only, large degree: ceil(4.25 Delta)",
        ),
        _total_formula,
        BoundFormula(
            "edge_thue_choice",
            1,
            _total_thue,
            "edge list colorings; same expression as total_thue",
        ),
    )
}


def bound_names() -> tuple[str, ...]:
    return tuple(BOUNDS)


def eval_bound(name: str, delta: int) -> float | int:
    """Evaluate a named bound at maximum degree ``delta``."""
    try:
        formula = BOUNDS[name]
    except KeyError:
        raise ValueError(f"unknown bound {name!r}; known: {', '.join(BOUNDS)}") from None
    if delta < formula.min_delta:
        raise ValueError(
            f"bound {name} requires Delta >= {formula.min_delta}, got {delta}"
        )
    return formula.evaluate(delta)


# ---------------------------------------------------------------------------
# alpha/gamma optimization
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesBound:
    """Objective alpha + const + geometric*a/(a-1) + weighted*(a/(a-1))^2.

    ``geometric`` weights the series with a_i = 1, ``weighted`` the
    series with a_i = i.  The domain opens at the series' radius of
    convergence: alpha > 1 when either series is present, alpha > 0
    otherwise.
    """

    const: float = 0.0
    geometric: float = 0.0
    weighted: float = 0.0

    @property
    def domain_low(self) -> float:
        return 1.0 if (self.geometric or self.weighted) else 0.0

    def objective(self, alpha: float) -> float:
        if alpha <= self.domain_low:
            raise ValueError(f"alpha must exceed {self.domain_low}")
        value = alpha + self.const
        if self.geometric:
            value += self.geometric * sum_geometric(1.0 / alpha)
        if self.weighted:
            value += self.weighted * sum_weighted_geometric(1.0 / alpha)
        return value


SERIES_PRESETS: dict[str, SeriesBound] = {
    "path": SeriesBound(geometric=1.0),
    "weak-total": SeriesBound(weighted=1.0),
}
SERIES_PRESETS["weak_total"] = SERIES_PRESETS["weak-total"]


@dataclass(frozen=True)
class OptimizeResult:
    alpha: float
    gamma: float
    interior: bool


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def optimize(series: SeriesBound, tol: float = 1e-9, scan_check: bool = False
             ) -> OptimizeResult:
    """Minimize the series objective by golden section over a doubling bracket.

    Returns the argmin and minimum to within ``tol``.  When the
    objective increases all the way down to the domain edge the infimum
    sits at the boundary and the result is flagged non-interior.
    ``scan_check`` adds a 1000-point unimodality scan over the bracket.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    lo = series.domain_low
    f = series.objective

    t1 = max(tol, 1e-9)
    t2 = 2 * t1
    f1, f2 = f(lo + t1), f(lo + t2)
    if f1 > f2:
        # descending: climb the doubling ladder until the objective rises
        t_prev, t_cur, f_cur = t1, t2, f2
        while True:
            t_next = 2 * t_cur
            if t_next > 2.0**200:
                raise ValueError("no bracket found within configured range")
            f_next = f(lo + t_next)
            if f_next > f_cur:
                a, b = t_prev, t_next
                break
            t_prev, t_cur, f_cur = t_cur, t_next, f_next
    else:
        # rising here; the minimum, if interior, hides between the
        # boundary and t2.  Halve toward the boundary looking for a rise.
        a = b = 0.0
        found = False
        for _ in range(240):
            t_half = t1 / 2
            f_half = f(lo + t_half)
            if f_half > f1:
                a, b = t_half, t2
                found = True
                break
            t2, t1, f1 = t1, t_half, f_half
        if not found:
            return OptimizeResult(alpha=lo + t1, gamma=f1, interior=False)

    if scan_check:
        _scan_unimodal(f, lo + a, lo + b)

    xatol = max(tol * 1e-3, 5e-14 * max(1.0, lo + b))
    a, b = lo + a, lo + b
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    while (b - a) > xatol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    alpha = (a + b) / 2
    return OptimizeResult(alpha=alpha, gamma=f(alpha), interior=True)


def _scan_unimodal(f: Callable[[float], float], a: float, b: float) -> None:
    values = [f(a + (b - a) * k / 999.0) for k in range(1000)]
    rising = False
    for prev, cur in zip(values, values[1:]):
        if cur > prev:
            rising = True
        elif cur < prev and rising:
            raise ValueError("objective is not unimodal on the bracket")


def root_cubic(tol: float = 1e-12) -> float:
    """The unique real root above 1 of 4x^3 - 20x^2 - 4x - 3.

    This is the closed-form value of the weak-total optimization
    minimum; bisection is plenty at this scale.
    """
    def p(x: float) -> float:
        return ((4 * x - 20) * x - 4) * x - 3

    a, b = 1.0, 16.0
    if p(a) >= 0 or p(b) <= 0:
        raise RuntimeError("root bracket lost")
    while b - a > tol:
        mid = (a + b) / 2
        if p(mid) < 0:
            a = mid
        else:
            b = mid
    return (a + b) / 2


# ---------------------------------------------------------------------------
# certification of the large-degree weak-total constants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CertifyReport:
    """Inequalities certifying the (4.25, 1.62, 4.2) constant triple.

    ``edge_rate``: 4.25 - (2/Delta) * sum_i i/1.62^(i-1) >= 4.2, the
    Delta-dependent requirement for edge growth.
    ``vertex_rate``: 4.25 - sum_i i * (1.62*4.2)^(-(i-1)/2) >= 1.62,
    constant in Delta.
    """

    delta: int
    edge_rate_lhs: float
    edge_rate_margin: float
    edge_rate_holds: bool
    vertex_rate_lhs: float
    vertex_rate_margin: float
    vertex_rate_holds: bool
    holds: bool


def certify_delta_inequalities(delta: int) -> CertifyReport:
    if delta < 1:
        raise ValueError("Delta must be positive")
    edge_lhs = 4.25 - (2.0 / delta) * sum_weighted_geometric(1.0 / 1.62)
    vertex_lhs = 4.25 - sum_weighted_geometric(1.0 / math.sqrt(1.62 * 4.2))
    edge_ok = edge_lhs >= 4.2
    vertex_ok = vertex_lhs >= 1.62
    return CertifyReport(
        delta=delta,
        edge_rate_lhs=edge_lhs,
        edge_rate_margin=edge_lhs - 4.2,
        edge_rate_holds=edge_ok,
        vertex_rate_lhs=vertex_lhs,
        vertex_rate_margin=vertex_lhs - 1.62,
        vertex_rate_holds=vertex_ok,
        holds=edge_ok and vertex_ok,
    )
