"""``simulate`` command-line entry point."""
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .config import MODES, Config, ConfigError, parse_config
from .network import NetworkGenerationError
from .runner import emit_csv, run_batch


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="simulate", description="Run gene-culture co-evolution experiments.")
    p.add_argument("--config", type=Path, help="key = value config file (defaults when omitted)")
    p.add_argument("--seed", type=int, help="base seed; run i uses seed + i")
    p.add_argument("--runs", type=int)
    p.add_argument("--days", type=int, help="max_days override")
    p.add_argument("--mode", choices=MODES)
    p.add_argument("--out", type=Path, default=Path("out"))
    p.add_argument("--dump-network", action="store_true", help="write network_<i>.txt per run")
    p.add_argument("--snapshot-every", type=int, default=0, metavar="N",
                   help="write per-agent snapshot rows every N days")
    p.add_argument("--workers", type=int, default=1, help="worker processes for batch runs")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def load_config(args: argparse.Namespace) -> Config:
    cfg = Config()
    if args.config is not None:
        try:
            text = args.config.read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read config {args.config}: {exc.strerror or exc}") from None
        cfg = parse_config(text)
    overrides = {}
    if args.seed is not None:
        overrides["base_seed"] = args.seed
    if args.runs is not None:
        overrides["runs"] = args.runs
    if args.days is not None:
        overrides["max_days"] = args.days
    if args.mode is not None:
        overrides["mode"] = args.mode
    return cfg.replace(**overrides) if overrides else cfg


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        if args.snapshot_every < 0:
            raise ConfigError("--snapshot-every must be >= 0")
        cfg = load_config(args)
        result = run_batch(cfg, workers=args.workers, snapshot_every=args.snapshot_every,
                           dump_network=args.dump_network)
        emit_csv(result, args.out)
    except (ConfigError, NetworkGenerationError, OSError) as exc:
        print(f"simulate: error: {exc}", file=sys.stderr)
        return 2
    print(f"{cfg.runs} run(s), mode={cfg.mode}, collapse_fraction={result.collapse_fraction:.6f} -> {args.out}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
