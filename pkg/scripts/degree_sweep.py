"""Degree dependence of the complex certificate for one generator.

For each degree the bounds of the degree-dependent test are printed next to
|cos gamma| and the oracle verdict for the given seed.
"""

import argparse
from dataclasses import dataclass

from classa.certifier import check_complex_degree, numeric_monotonicity
from classa.curve import CurveSpec
from classa.registry import select


@dataclass
class Config:
    example: str = "15@3"
    n_min: int = 2
    n_max: int = 12


def run(cfg: Config) -> None:
    base = select(cfg.example)[0].spec
    print(f"{'n':>3}  {'|cos g|':>9}  {'bound dec':>10}  {'bound inc':>10}  {'test':<5}  oracle")
    for n in range(cfg.n_min, cfg.n_max + 1):
        c = check_complex_degree(base.M, n)
        verdict = numeric_monotonicity(CurveSpec(n, base.M, base.w, base.b0)).kind
        print(f"{n:>3}  {c.detail('abs_cos_gamma'):>9.5f}  {c.detail('bound_decreasing'):>10.5f}  "
              f"{c.detail('bound_increasing'):>10.5f}  {'holds' if c.holds else 'fails':<5}  {verdict}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--example", default=Config.example)
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    a = ap.parse_args()
    run(Config(a.example, a.n_min, a.n_max))
