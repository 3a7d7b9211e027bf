"""Small reproducible experiments behind the scripts in ``scripts/``."""
from __future__ import annotations

import random
import statistics
import time
from collections import Counter
from dataclasses import dataclass, field

from .coloring import diagonal_coloring, standard_coloring
from .constructions import domino_forcing_standard, greedy_forcing
from .core import GridSize
from .digraph import is_forcing
from .min_forcing import min_forcing_set
from .sampling import random_coloring


@dataclass(frozen=True)
class SandwichConfig:
    """Random colorings per size; minimum forcing set sizes against both bounds."""

    rows: tuple[int, ...] = (2, 3, 4, 5, 6)
    cols: tuple[int, ...] = (2, 3, 4, 5, 6)
    samples: int = 200
    seed: int = 0


@dataclass
class SandwichRow:
    rows: int
    cols: int
    lower: int
    upper: int
    histogram: dict[int, int] = field(default_factory=dict)
    greedy_ok: bool = True
    seconds: float = 0.0

    @property
    def mean(self) -> float:
        return statistics.fmean(k for k, c in self.histogram.items() for _ in range(c))

    @property
    def within_bounds(self) -> bool:
        return all(self.lower <= k <= self.upper for k in self.histogram)


def run_sandwich(cfg: SandwichConfig) -> list[SandwichRow]:
    rng = random.Random(cfg.seed)
    out = []
    for m in cfg.rows:
        for n in cfg.cols:
            size = GridSize(m, n)
            t = time.perf_counter()
            counts: Counter[int] = Counter()
            greedy_ok = True
            for _ in range(cfg.samples):
                K = random_coloring(size, rng)
                counts[len(min_forcing_set(K))] += 1
                F = greedy_forcing(K)
                greedy_ok &= is_forcing(K, F)[0]
            row = SandwichRow(m, n, m + n - 2, (m * n + 1) // 2, dict(sorted(counts.items())), greedy_ok)
            row.seconds = time.perf_counter() - t
            out.append(row)
    return out


@dataclass(frozen=True)
class ExtremesConfig:
    """Sizes at which to compare the standard and diagonal patterns."""

    max_rows: int = 6
    max_cols: int = 6


@dataclass(frozen=True)
class ExtremesRow:
    rows: int
    cols: int
    standard_min: int
    domino: int
    diagonal_min: int


def run_extremes(cfg: ExtremesConfig) -> list[ExtremesRow]:
    """Exact minima for the standard and diagonal colorings next to the domino set size."""
    out = []
    for m in range(1, cfg.max_rows + 1):
        for n in range(1, cfg.max_cols + 1):
            size = GridSize(m, n)
            out.append(
                ExtremesRow(
                    m,
                    n,
                    len(min_forcing_set(standard_coloring(size))),
                    len(domino_forcing_standard(size)),
                    len(min_forcing_set(diagonal_coloring(size))),
                )
            )
    return out
