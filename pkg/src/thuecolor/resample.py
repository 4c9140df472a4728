"""Randomized list coloring by resampling violating squares.

Draw every color uniformly from its list, then repeatedly locate the
shortest violating square path and redraw the colors of its second half
(the later elements in the path's canonical orientation).  Runs are
reproducible: all randomness flows from a 64-bit seed through PCG64
streams split with SeedSequence.
"""
from __future__ import annotations

import statistics
from dataclasses import dataclass

import numpy as np

from .counting import ListAssignment
from .graphs import ElementId, GeneralizedGraph, from_standard
from .repetition import Color, Regime, find_violating_path, relevant_elements

RNG_ALGORITHM = "pcg64"


@dataclass(frozen=True)
class ResampleRun:
    seed: int
    max_steps: int
    steps_used: int
    outcome: str  # "success" or "exhausted"
    coloring: dict[ElementId, Color] | None
    algorithm: str = RNG_ALGORITHM


def resample_color(
    g: GeneralizedGraph,
    lists: ListAssignment,
    regime: Regime,
    seed: int,
    max_steps: int,
) -> ResampleRun:
    """Run the resampling colorer until valid or ``max_steps`` resamples."""
    if max_steps < 0:
        raise ValueError("max_steps must be nonnegative")
    elems = relevant_elements(g, regime)
    palettes = {}
    for x in elems:
        palette = tuple(sorted(lists.colors(x)))
        if not palette:
            raise ValueError(f"empty color list for element {x}")
        palettes[x] = palette
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    coloring = {x: palettes[x][int(rng.integers(len(palettes[x])))] for x in elems}
    steps = 0
    while True:
        violation = find_violating_path(g, coloring, regime)
        if violation is None:
            return ResampleRun(seed, max_steps, steps, "success", dict(coloring))
        if steps >= max_steps:
            return ResampleRun(seed, max_steps, steps, "exhausted", None)
        half = len(violation.elements) // 2
        for x in violation.elements[half:]:
            coloring[x] = palettes[x][int(rng.integers(len(palettes[x])))]
        steps += 1


# ---------------------------------------------------------------------------
# random graph models and the success profile
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RandomGraphSpec:
    """Random graph model: d-regular pairing or bounded-degree binomial."""

    model: str  # "regular" or "gnp"
    n: int
    degree: int = 0
    p: float = 0.0

    def sample(self, rng: np.random.Generator) -> GeneralizedGraph:
        if self.model == "regular":
            return _sample_regular(self.n, self.degree, rng)
        if self.model == "gnp":
            return _sample_gnp(self.n, self.p, rng)
        raise ValueError(f"unknown random graph model {self.model!r}")


def _sample_regular(n: int, d: int, rng: np.random.Generator) -> GeneralizedGraph:
    """Pairing model with rejection; retries until the pairing is simple."""
    if n * d % 2 or d >= n or d < 1:
        raise ValueError(f"no simple {d}-regular graph on {n} vertices")
    stubs = [v for v in range(n) for _ in range(d)]
    for _ in range(10_000):
        perm = rng.permutation(len(stubs))
        pairs = set()
        ok = True
        for k in range(0, len(stubs), 2):
            u, w = stubs[perm[k]], stubs[perm[k + 1]]
            key = (min(u, w), max(u, w))
            if u == w or key in pairs:
                ok = False
                break
            pairs.add(key)
        if ok:
            return from_standard(n, sorted(pairs))
    raise RuntimeError(f"pairing model failed to produce a simple {d}-regular graph")


def _sample_gnp(n: int, p: float, rng: np.random.Generator) -> GeneralizedGraph:
    if not (0.0 <= p <= 1.0):
        raise ValueError("edge probability must lie in [0, 1]")
    edges = [
        (u, w)
        for u in range(n)
        for w in range(u + 1, n)
        if rng.random() < p
    ]
    return from_standard(n, edges)


@dataclass(frozen=True)
class SuccessProfile:
    trials: int
    successes: int
    success_rate: float | None  # None when trials == 0
    median_steps: float | None  # over successful runs
    p90_steps: float | None
    max_steps_used: int | None
    algorithm: str = RNG_ALGORITHM


def success_profile(
    generator: RandomGraphSpec,
    claim,
    trials: int,
    seed: int,
    max_steps: int = 100_000,
    colors: int | None = None,
) -> SuccessProfile:
    """Sample graphs and run the colorer at the claim's list size.

    ``colors`` overrides the list size, e.g. to use a theorem's bound
    instead of the underlying claim's.  Per-trial seeds are split from
    ``seed``, so profiles are reproducible end to end.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    k = claim.list_size if colors is None else colors
    root = np.random.SeedSequence(seed)
    steps_ok: list[int] = []
    successes = 0
    for child in root.spawn(trials):
        graph_ss, run_ss = child.spawn(2)
        g = generator.sample(np.random.Generator(np.random.PCG64(graph_ss)))
        run_seed = int(run_ss.generate_state(1)[0])
        run = resample_color(g, ListAssignment.uniform(g, k), claim.regime, run_seed, max_steps)
        if run.outcome == "success":
            successes += 1
            steps_ok.append(run.steps_used)
    return SuccessProfile(
        trials=trials,
        successes=successes,
        success_rate=None if trials == 0 else successes / trials,
        median_steps=statistics.median(steps_ok) if steps_ok else None,
        p90_steps=_quantile(steps_ok, 0.9) if steps_ok else None,
        max_steps_used=max(steps_ok) if steps_ok else None,
    )


def _quantile(values: list[int], q: float) -> float:
    ordered = sorted(values)
    pos = q * (len(ordered) - 1)
    lo = int(pos)
    hi = min(lo + 1, len(ordered) - 1)
    return ordered[lo] + (ordered[hi] - ordered[lo]) * (pos - lo)
