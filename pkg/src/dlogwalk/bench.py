"""Step-count measurements for the walk variants.

Each trial draws a uniformly random exponent n, computes the matching
target, and times the solver on it.  The drawn n depends only on
(seed_base, trial index), never on the variant, so step counts are
comparable across variants on identical instances.  Wall-clock time is
recorded only when `timing` is on; the default leaves the nanos column at 0
so that identical seeds give byte-identical CSV output.
"""

import csv
import io
import json
import random
import statistics
import time
from dataclasses import dataclass, replace

from .gf2m import BinaryFieldParams
from .walk import WalkConfig, _generator_pow, build_table_one, run_dlog

CSV_COLUMNS = ("variant", "prime_or_field", "n_true", "seed", "steps",
               "restarts", "success", "nanos")


@dataclass(frozen=True)
class TrialRecord:
    variant: str
    prime_or_field: str
    n_true: int
    seed: int
    steps: int
    restarts: int
    success: bool
    nanos: int


@dataclass(frozen=True)
class StepStats:
    trials: int
    successes: int
    success_rate: float
    mean_steps: float
    median_steps: float
    stddev_steps: float
    ratio_mean_to_sqrt_order: float


def group_label(params) -> str:
    if isinstance(params, BinaryFieldParams):
        return f"gf2^{params.m}/0x{params.poly:x}"
    return str(params.p)


def run_trials(params, variant: str, trial_count: int, seed_base: int,
               config: WalkConfig | None = None,
               timing: bool = False) -> list[TrialRecord]:
    """Run `trial_count` independent solves; failures are recorded, not raised."""
    if trial_count < 1:
        raise ValueError("trial_count must be >= 1")
    if config is None:
        config = WalkConfig(variant=variant)
    else:
        if config.variant != variant:
            raise ValueError("config.variant disagrees with variant argument")
        if config.seed is not None or config.choices is not None:
            raise ValueError("per-trial seeds are derived from seed_base")
    order = params.order
    label = group_label(params)
    table = build_table_one(params, config)
    records = []
    for i in range(trial_count):
        seed = seed_base + i
        n_true = random.Random(seed).randrange(order)
        target = _target_for(params, n_true)
        cfg = replace(config, seed=seed)
        t0 = time.perf_counter_ns()
        result = run_dlog(params, target, cfg, table=table)
        nanos = time.perf_counter_ns() - t0 if timing else 0
        records.append(TrialRecord(
            variant=variant, prime_or_field=label, n_true=n_true, seed=seed,
            steps=result.steps_taken, restarts=result.restarts,
            success=result.success, nanos=nanos))
    return records


def _target_for(params, n: int) -> int:
    return 1 if n == 0 else _generator_pow(params, n)


def summarize(records: list[TrialRecord], order: int) -> StepStats:
    """Aggregate step statistics; only successful trials enter the step stats."""
    if not records:
        raise ValueError("no trial records to summarize")
    steps = [r.steps for r in records if r.success]
    successes = len(steps)
    if steps:
        mean = statistics.mean(steps)
        median = statistics.median(steps)
        stddev = statistics.stdev(steps) if len(steps) > 1 else 0.0
    else:
        mean = median = stddev = float("nan")
    return StepStats(
        trials=len(records),
        successes=successes,
        success_rate=successes / len(records),
        mean_steps=float(mean),
        median_steps=float(median),
        stddev_steps=float(stddev),
        ratio_mean_to_sqrt_order=float(mean) / order ** 0.5)


def records_to_csv(records: list[TrialRecord]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow([r.variant, r.prime_or_field, r.n_true, r.seed,
                         r.steps, r.restarts, int(r.success), r.nanos])
    return buf.getvalue()


def write_csv(records: list[TrialRecord], path: str):
    with open(path, "w", newline="") as fh:
        fh.write(records_to_csv(records))


def stats_to_json(stats: StepStats) -> str:
    return json.dumps(stats.__dict__, indent=2, sort_keys=True) + "\n"


def write_json(stats: StepStats, path: str):
    with open(path, "w") as fh:
        fh.write(stats_to_json(stats))
