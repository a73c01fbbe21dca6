"""Region tags on a (1/p, s) grid, ready for an external plotting tool.

Usage: python3 scripts/region_map.py [--n 1] [--p-steps 41] [--s-steps 81] [--out regions.csv]
"""
import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction

from fourier_besov.space_lattice import region_grid, region_grid_csv


@dataclass(frozen=True)
class RegionConfig:
    n: int = 1
    p_steps: int = 41
    s_range: tuple = (Fraction(-2), Fraction(2))
    s_steps: int = 81


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=RegionConfig.n)
    ap.add_argument("--p-steps", type=int, default=RegionConfig.p_steps)
    ap.add_argument("--s-steps", type=int, default=RegionConfig.s_steps)
    ap.add_argument("--out")
    args = ap.parse_args()
    cfg = RegionConfig(n=args.n, p_steps=args.p_steps, s_steps=args.s_steps)
    text = region_grid_csv(region_grid(cfg.p_steps, cfg.s_range, cfg.n, cfg.s_steps))
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


if __name__ == "__main__":
    main()
