"""Socializers vs breeders on equal seeds.

Writes both batches as CSV and prints per-run divergence statistics:
memetic vs genetic optimisation, rise days, breeding time and the age effect.

    python scripts/run_comparison.py --runs 20 --days 2000 --out results/comparison
"""
import argparse
import logging
from pathlib import Path

from dualinherit import Config, emit_csv, run_batch
from dualinherit.analysis import rise_day, survived_past, window_mean
from dualinherit.config import parse_config


def fmt(v):
    return "-" if v is None else f"{v:.3f}"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--config")
    ap.add_argument("--runs", type=int, default=20)
    ap.add_argument("--days", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--smooth", type=int, default=50, help="trailing window for rise days")
    ap.add_argument("--out", default="results/comparison")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    base = parse_config(open(args.config).read()) if args.config else Config()
    base = base.replace(runs=args.runs, max_days=args.days, base_seed=args.seed)
    tail = max(1, args.days // 10)
    lo = args.days // 2
    batches = {}
    for mode in ("socializers", "breeders"):
        batches[mode] = run_batch(base.replace(mode=mode), workers=args.workers)
        emit_csv(batches[mode], Path(args.out) / mode)

    print("mode  seed  collapse  gen>=200  mem>=200  rise_g  rise_m  breed_t  genome_b  young  old")
    for mode, batch in batches.items():
        for r in batch.runs:
            s = r.series
            print(
                f"{mode[:4]:5} {r.seed:5} {str(r.collapse_day or '-'):>8}"
                f"  {fmt(window_mean(s, 'genetic_opt', 200, args.days)):>8}"
                f"  {fmt(window_mean(s, 'memetic_opt', 200, args.days)):>8}"
                f"  {str(rise_day(s, 'genetic_opt', smooth=args.smooth, tail=tail)):>6}"
                f"  {str(rise_day(s, 'memetic_opt', smooth=args.smooth, tail=tail)):>6}"
                f"  {fmt(window_mean(s, 'breed_time', lo, args.days)):>7}"
                f"  {fmt(window_mean(s, 'genome_breed', lo, args.days)):>8}"
                f"  {fmt(window_mean(s, 'young_activity', lo, args.days)):>5}"
                f"  {fmt(window_mean(s, 'old_activity', lo, args.days)):>5}"
            )
    for mode, batch in batches.items():
        alive = [r for r in batch.runs if survived_past(r, lo)]
        bt = [window_mean(r.series, "breed_time", lo, args.days) for r in alive]
        bt = [v for v in bt if v is not None]
        if bt:
            print(f"{mode}: {len(alive)} runs alive at day {lo}, mean breed_time {sum(bt) / len(bt):.4f}")


if __name__ == "__main__":
    main()
