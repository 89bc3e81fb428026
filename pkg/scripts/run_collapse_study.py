"""Long-horizon socializers batch: how often does the population die out?

    python scripts/run_collapse_study.py --runs 100 --days 5000 --out results/collapse
"""
import argparse
import logging
import time

from dualinherit import Config, emit_csv, run_batch
from dualinherit.config import parse_config

REFERENCE = 0.21


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--config", help="base config file")
    ap.add_argument("--runs", type=int, default=100)
    ap.add_argument("--days", type=int, default=5000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", default="results/collapse")
    args = ap.parse_args()
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

    cfg = parse_config(open(args.config).read()) if args.config else Config()
    cfg = cfg.replace(mode="socializers", runs=args.runs, max_days=args.days, base_seed=args.seed)
    t0 = time.time()
    batch = run_batch(cfg, workers=args.workers)
    emit_csv(batch, args.out)

    days = sorted(r.collapse_day for r in batch.runs if r.collapse_day is not None)
    final = [r.series[-1] for r in batch.runs if r.collapse_day is None]
    print(f"runs={args.runs} days={args.days} elapsed={time.time() - t0:.0f}s")
    print(f"collapse_fraction={batch.collapse_fraction:.3f} (reference {REFERENCE})")
    print(f"collapse_days={days}")
    if final:
        pops = sorted(m.population for m in final)
        print(f"surviving population min/median/max={pops[0]}/{pops[len(pops) // 2]}/{pops[-1]}")
        bt = [m.breed_time for m in final if m.breed_time is not None]
        print(f"final-day breed_time mean={sum(bt) / len(bt):.4f} min={min(bt):.4f}")


if __name__ == "__main__":
    main()
