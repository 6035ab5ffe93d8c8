"""Coloured Yang-Baxter residuals for every catalog family, per convention.

    python scripts/ybe_sweep.py --samples 20 --seed 42
"""
from __future__ import annotations

import argparse
import itertools
import time
import zlib
from dataclasses import dataclass

import numpy as np

from colhopf.catalog import CONVENTIONS, registry
from colhopf.catalog.base import make_spec
from colhopf.verify import ColouredSystem, check_yang_baxter


@dataclass
class Config:
    samples: int = 20
    seed: int = 42
    tol: float = 1e-10


def triples(group, rng, n):
    if group.discrete:
        return list(itertools.product(group.enumerate(), repeat=3))
    return [tuple(group.sample(rng) for _ in range(3)) for _ in range(n)]


def run(cfg: Config) -> bool:
    ok = True
    print(f"{'algebra':<12} {'colouring':<11} {'triples':>7} " + " ".join(f"{c:>14}" for c in CONVENTIONS))
    for alg, cid in registry.families():
        d = registry.get(alg)
        col = d.colouring(cid)
        rng = np.random.default_rng([cfg.seed, zlib.crc32(f"ybe/{alg}/{cid}".encode())])
        worst = dict.fromkeys(CONVENTIONS, 0.0)
        cases = triples(col.group, rng, cfg.samples)
        for lam, mu, nu in cases:
            spec = make_spec(d, d.sample_params(rng))
            for conv in CONVENTIONS:
                r = check_yang_baxter(ColouredSystem(spec, col, conv).R, spec.dim, lam, mu, nu, cfg.tol)
                worst[conv] = max(worst[conv], r.relative)
        ok &= all(v <= cfg.tol for v in worst.values())
        print(f"{alg:<12} {cid:<11} {len(cases):>7} " + " ".join(f"{worst[c]:>14.3e}" for c in CONVENTIONS))
    return ok


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--tol", type=float, default=Config.tol)
    cfg = Config(**vars(p.parse_args()))
    start = time.perf_counter()
    ok = run(cfg)
    print(f"{'YBE holds' if ok else 'YBE VIOLATED'} in {time.perf_counter() - start:.2f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
