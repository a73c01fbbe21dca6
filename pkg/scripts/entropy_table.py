"""Entropy brackets for sigma_j = j^-rho, with brute-force values where affordable.

Usage: python3 scripts/entropy_table.py [--rho 1] [--length 256] [--k-max 32]
"""
import argparse
from dataclasses import dataclass

import numpy as np

from fourier_besov.entropy_lab import brute_force_entropy, entropy_bracket_diagonal


@dataclass(frozen=True)
class TableConfig:
    rho: float = 1.0
    length: int = 256
    k_max: int = 32


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rho", type=float, default=TableConfig.rho)
    ap.add_argument("--length", type=int, default=TableConfig.length)
    ap.add_argument("--k-max", type=int, default=TableConfig.k_max)
    cfg = TableConfig(**{k: v for k, v in vars(ap.parse_args()).items()})
    sigma = np.arange(1, cfg.length + 1, dtype=float) ** (-cfg.rho)
    print("k,lower,upper,brute_force_top2")
    for k in range(1, cfg.k_max + 1):
        b = entropy_bracket_diagonal(sigma, k)
        # e_k of the two-axis truncation, a lower bound for e_k of the full diagonal
        brute = repr(brute_force_entropy(sigma[:2], k)) if k <= 4 else ""
        print(f"{k},{b.lower!r},{b.upper!r},{brute}")


if __name__ == "__main__":
    main()
