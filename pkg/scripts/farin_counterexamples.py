"""Scan (sigma_min, sigma_max) pairs where sigma_min**3 >= sigma_max holds but
the subdivided matrix loses it, and report the Cao and Zhao cases."""

import argparse
from dataclasses import dataclass

import numpy as np

from classa.farin import expansion_condition, negative_witness, profile_value, subdivision_sv_profile, zhao_ratio


@dataclass
class Config:
    sigma_mins: tuple = (1.05, 1.2, 1.5, 2.0, 3.0)
    per_sigma: int = 5
    grid: int = 10001


def run(cfg: Config) -> None:
    print("sigma_min  sigma_max   f'(0)       witness t    f(t)")
    for lo in cfg.sigma_mins:
        for hi in np.linspace(3 * lo - 2, lo**3, cfg.per_sigma + 2)[1:-1]:
            t = negative_witness(lo, hi)
            ft = float(profile_value(lo, hi, t)) if t is not None else float("nan")
            fp = subdivision_sv_profile(lo, hi, 2).f_prime_at_zero
            print(f"{lo:9.4f}  {hi:9.5f}  {fp:+.4e}  {t if t is not None else float('nan'):11.4g}  {ft:+.3e}")

    prof = subdivision_sv_profile(1.05, 1.102, cfg.grid)
    t, f = prof.minimum
    print(f"\nCao sigma=(1.05, 1.102): min f = {f:.3g} at t = {t:.3g}, "
          f"f(0.5) = {float(profile_value(1.05, 1.102, 0.5))!r}")

    m, v = [[1.2545, -2.9594], [1.5576, 2.3836]], [0.9724, 0.2333]
    holds, lam = expansion_condition(m)
    print(f"Zhao: v.Mv/v.v = {zhao_ratio(m, v):.5f}, min eigenvalue of symmetric part = {lam:.5f}, "
          f"expansion {'holds' if holds else 'fails'}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--per-sigma", type=int, default=Config.per_sigma)
    ap.add_argument("--grid", type=int, default=Config.grid)
    a = ap.parse_args()
    run(Config(per_sigma=a.per_sigma, grid=a.grid))
