"""Compare series-evaluated coloured R-matrices with the printed closed forms.

    python scripts/reproduce_closed_forms.py --samples 25 --seed 42
"""
from __future__ import annotations

import argparse
import time
import zlib
from dataclasses import dataclass

import numpy as np

from colhopf import tensorkit as tk
from colhopf.catalog import PAPER_FIXED, closed_form_R, coloured_R_matrix, registry
from colhopf.catalog.base import make_spec


@dataclass
class Config:
    samples: int = 25
    seed: int = 42
    tol: float = 1e-10


def run(cfg: Config) -> bool:
    ok = True
    print(f"{'algebra':<12} {'colouring':<11} {'dim':>4} {'max rel residual':>18}")
    for alg, cid in registry.families():
        d = registry.get(alg)
        if d.closed_form is None:
            continue
        col = d.colouring(cid)
        rng = np.random.default_rng([cfg.seed, zlib.crc32(f"closed-form/{alg}/{cid}".encode())])
        worst = 0.0
        for _ in range(cfg.samples):
            spec = make_spec(d, d.sample_params(rng))
            lam, mu = col.group.sample(rng), col.group.sample(rng)
            series = coloured_R_matrix(spec, col, lam, mu, PAPER_FIXED)
            worst = max(worst, tk.approx_eq(series, closed_form_R(spec, col, lam, mu), cfg.tol).relative)
        ok &= worst <= cfg.tol
        print(f"{alg:<12} {cid:<11} {spec.dim:>4} {worst:>18.3e}")
    return ok


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--samples", type=int, default=Config.samples)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--tol", type=float, default=Config.tol)
    cfg = Config(**vars(p.parse_args()))
    start = time.perf_counter()
    ok = run(cfg)
    print(f"{'all match' if ok else 'MISMATCH'} in {time.perf_counter() - start:.2f}s")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
