"""Sample certified generators and check each certificate against the oracle.

Prints per-certificate counts of confirmed instances and any counterexample.
"""

import argparse
import time
from collections import Counter
from dataclasses import dataclass

import numpy as np

from classa.certifier import certify, expected_kind, numeric_monotonicity
from classa.closed_form import build_model
from classa.sampling import INSTANCES


@dataclass
class Config:
    per_certificate: int = 1000
    seed: int = 0
    grid: int = 2001


def run(cfg: Config) -> int:
    rng = np.random.default_rng(cfg.seed)
    failures = 0
    for name, sample in INSTANCES.items():
        start = time.perf_counter()
        kinds = Counter()
        for _ in range(cfg.per_certificate):
            spec = sample(rng)
            c = next(c for c in certify(spec) if c.name == name)
            verdict = numeric_monotonicity(spec, cfg.grid)
            kinds[verdict.kind] += 1
            want = expected_kind(c, build_model(spec).kappa0)
            if not c.holds or verdict.kind != want:
                failures += 1
                print(f"COUNTEREXAMPLE {name}: n={spec.degree} M={spec.M.tolist()} w={spec.w.tolist()} "
                      f"expected {want}, oracle {verdict.kind}")
        took = time.perf_counter() - start
        print(f"{name:<17} {cfg.per_certificate} instances  {dict(kinds)}  {took:.1f} s")
    print("no counterexamples" if failures == 0 else f"{failures} counterexamples")
    return int(failures > 0)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-n", "--per-certificate", type=int, default=Config.per_certificate)
    ap.add_argument("--seed", type=int, default=Config.seed)
    ap.add_argument("--grid", type=int, default=Config.grid)
    a = ap.parse_args()
    raise SystemExit(run(Config(a.per_certificate, a.seed, a.grid)))
