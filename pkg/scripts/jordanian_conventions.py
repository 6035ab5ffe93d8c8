"""How the Jordanian sl(2) entry behaves under the two leg conventions.

Its defining representation depends on h, and the colour action rescales h.
Under the paper-fixed convention every leg uses the base-h representation;
under the leg-parameter convention each leg uses the representation at its
own transformed h. This script tabulates the worst residual of each identity
family under both.

    python scripts/jordanian_conventions.py --samples 20 --seed 42
"""
from __future__ import annotations

import argparse
from collections import defaultdict
from dataclasses import dataclass

from colhopf.catalog import CONVENTIONS
from colhopf.verify import run_suite


@dataclass
class Config:
    samples: int = 20
    seed: int = 42
    algebra: str = "uh_sl2"


def run(cfg: Config) -> None:
    report = run_suite(cfg.algebra, samples=cfg.samples, seed=cfg.seed, threads=1)
    worst = defaultdict(float)
    for e in report.entries:
        if e.convention:
            family = e.label.split("[")[0].split("(")[0]
            key = (e.check, family, e.convention)
            worst[key] = max(worst[key], e.residual)
    rows = sorted({(c, f) for c, f, _ in worst})
    print(f"{'check':<24} {'identity':<24} " + " ".join(f"{c:>14}" for c in CONVENTIONS))
    for check, family in rows:
        cells = " ".join(f"{worst.get((check, family, c), float('nan')):>14.3e}" for c in CONVENTIONS)
        print(f"{check:<24} {family:<24} {cells}")


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--algebra", default=Config.algebra)
    run(Config(**vars(p.parse_args())))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
