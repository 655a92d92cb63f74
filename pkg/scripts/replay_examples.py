"""Replay the example registry and write one curve/curvature SVG per record."""

import argparse
from dataclasses import dataclass
from pathlib import Path

from classa.cli import plot_svg, run_examples
from classa.registry import select


@dataclass
class Config:
    out_dir: Path = Path("figures")
    grid: int = 2001


def run(cfg: Config) -> int:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    rows = run_examples(grid=cfg.grid)
    for row in rows:
        rec = select(row.key)[0]
        name = f"example_{row.key.replace('@', '_n')}.svg"
        (cfg.out_dir / name).write_text(plot_svg(rec.spec, title=f"{row.key}: {rec.figure_ref}"))
        print(f"{row.key:<6} {row.observed:<20} {'ok' if row.passed else 'MISMATCH':<8} {name}")
    failed = sum(not r.passed for r in rows)
    print(f"{len(rows) - failed}/{len(rows)} verdicts reproduced, figures in {cfg.out_dir}")
    return int(failed > 0)


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Config.out_dir)
    ap.add_argument("--grid", type=int, default=Config.grid)
    a = ap.parse_args()
    raise SystemExit(run(Config(a.out_dir, a.grid)))
