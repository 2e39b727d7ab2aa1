"""Shared driver for the desk-scale table runs."""

import argparse
import time
from pathlib import Path

from wdom.experiments import ExperimentSpec, experiment_csv, experiment_json, run_experiment


def main(corpus, name):
    ap = argparse.ArgumentParser(description=f"{name}: 10 graphs per config, T3/T5/T6, 20 iterations")
    ap.add_argument("--seed", type=int, default=2024)
    ap.add_argument("--repeats", type=int, default=10)
    ap.add_argument("--iterations", type=int, default=20)
    ap.add_argument("--out", default="results")
    args = ap.parse_args()

    spec = ExperimentSpec(corpus=corpus, repeats=args.repeats, iterations=args.iterations, master_seed=args.seed)
    t0 = time.perf_counter()
    result = run_experiment(spec)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    (out / f"{name}.csv").write_text(experiment_csv(result))
    (out / f"{name}.json").write_text(experiment_json(result))

    print(f"{'config':<14}{'variant':<8}{'size':>6}{'wt':>9}{'| size':>8}{'wt':>9}{'time':>8}")
    for a in result.aggregates:
        print(f"{a['config']:<14}{a['variant']:<8}{a['best_size']:>6.1f}{a['best_size_weight']:>9.1f}"
              f"{a['best_weight_size']:>8.1f}{a['best_weight']:>9.1f}{a['time_s']:>8.3f}")
    print(f"total {time.perf_counter() - t0:.1f} s; CSV/JSON in {out}/")
