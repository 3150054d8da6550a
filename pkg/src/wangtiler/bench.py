"""Seeded benchmark harness for the cover heuristics.

Runs each (tile set, size, algorithm) combination over a block of seeds and
aggregates min/avg/max placed tiles plus mean runtime, mirroring the
randomized-restart protocol used for the published quality tables.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass

from .errors import ConfigurationError
from .heuristics import alg1_simple, alg2_half, alg3_twothirds, alg4_improve
from .tileset import TileSet, builtin_names, builtin_set, complete_stochastic_set

REPORT_SCHEMA_VERSION = 1

_RAW_ALGS = {"1": alg1_simple, "2": alg2_half, "3": alg3_twothirds}
_INIT_OF = {"1": "simple", "2": "half", "3": "twothirds"}


def resolve_set(spec: str) -> TileSet:
    """Resolve a tile set spec string: a built-in name, ``complete:<n>``,
    or a path to a tile set file."""
    if spec.startswith("complete:"):
        return complete_stochastic_set(int(spec.split(":", 1)[1]))
    if spec in builtin_names():
        return builtin_set(spec)
    from .fileio import load_tileset
    return load_tileset(spec)


def run_algorithm(ts: TileSet, height: int, width: int, alg: str,
                  improve: bool, seed: int):
    """One seeded run of algorithm "1"|"2"|"3", optionally with the
    improvement loop on top."""
    if alg not in _RAW_ALGS:
        raise ConfigurationError(f"algorithm must be one of 1/2/3, got {alg!r}")
    if improve:
        return alg4_improve(ts, height, width, _INIT_OF[alg], seed)
    return _RAW_ALGS[alg](ts, height, width, seed)


@dataclass(frozen=True)
class BenchConfig:
    sets: tuple[str, ...]
    sizes: tuple[tuple[int, int], ...]
    algs: tuple[str, ...] = ("1",)
    improve: bool = True
    seeds: int = 100
    seed_base: int = 0


@dataclass(frozen=True)
class BenchRow:
    set_name: str
    height: int
    width: int
    alg: str
    improve: bool
    seconds_mean: float
    min_placed: int
    avg_placed: float
    max_placed: int
    runs: tuple = ()


@dataclass(frozen=True)
class BenchReport:
    rows: tuple[BenchRow, ...]

    def to_text(self) -> str:
        header = (f"{'tile set':<16} {'size':<8} {'alg':<8} "
                  f"{'t [s]':>8} {'min':>6} {'avg':>9} {'max':>6}")
        lines = [header, "-" * len(header)]
        for r in self.rows:
            alg = f"4/{r.alg}" if r.improve else r.alg
            lines.append(
                f"{r.set_name:<16} {r.height}x{r.width:<6} {alg:<8} "
                f"{r.seconds_mean:>8.3f} {r.min_placed:>6} "
                f"{r.avg_placed:>9.2f} {r.max_placed:>6}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "version": REPORT_SCHEMA_VERSION,
            "rows": [
                {
                    "set": r.set_name,
                    "height": r.height,
                    "width": r.width,
                    "alg": r.alg,
                    "improve": r.improve,
                    "seconds_mean": r.seconds_mean,
                    "min": r.min_placed,
                    "avg": r.avg_placed,
                    "max": r.max_placed,
                    "runs": list(r.runs),
                }
                for r in self.rows
            ],
        }
        return json.dumps(payload, indent=2) + "\n"


def run_benchmark(config: BenchConfig, keep_runs: bool = False) -> BenchReport:
    """Seeds run from seed_base to seed_base + seeds - 1; aggregation is
    order-independent, so rows are reproducible for a fixed config."""
    if config.seeds < 1:
        raise ConfigurationError("need at least one seed")
    rows = []
    for spec in config.sets:
        ts = resolve_set(spec)
        name = ts.name or spec
        for (h, w) in config.sizes:
            for alg in config.algs:
                placed = []
                runs = []
                t0 = time.perf_counter()
                for s in range(config.seed_base, config.seed_base + config.seeds):
                    t1 = time.perf_counter()
                    run = run_algorithm(ts, h, w, alg, config.improve, s)
                    millis = (time.perf_counter() - t1) * 1000.0
                    placed.append(run.placed)
                    if keep_runs:
                        runs.append({"placed": run.placed, "bound": run.bound,
                                     "seed": s, "millis": millis})
                mean_s = (time.perf_counter() - t0) / config.seeds
                rows.append(BenchRow(name, h, w, alg, config.improve, mean_s,
                                     min(placed), sum(placed) / len(placed),
                                     max(placed), tuple(runs)))
    return BenchReport(tuple(rows))
