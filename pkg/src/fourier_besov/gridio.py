"""Plain-text GridFunction files and builtin generators.

File layout: a header line ``n N L`` followed by N^n lines ``re im`` in
row-major order.
"""
import math

import numpy as np

from .littlewood_paley import GridFunction, sample


def write_grid(f, path):
    flat = f.values.ravel()
    with open(path, "w") as fh:
        fh.write(f"{f.n} {f.N} {float(f.L)!r}\n")
        for z in flat:
            fh.write(f"{float(z.real)!r} {float(z.imag)!r}\n")


def read_grid(path):
    with open(path) as fh:
        header = fh.readline().split()
        if len(header) != 3:
            raise ValueError(f"{path}: header must be 'n N L'")
        n, N, L = int(header[0]), int(header[1]), float(header[2])
        data = np.loadtxt(fh, ndmin=2)
    if data.shape != (N**n, 2):
        raise ValueError(f"{path}: expected {N**n} rows of 're im', got {data.shape[0]}")
    return GridFunction((data[:, 0] + 1j * data[:, 1]).reshape((N,) * n), L)


def smooth_bump(t):
    """exp(-1/(1-t^2)) on |t| < 1, zero outside (array in, array out)."""
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < 1
    out[inside] = np.exp(-1.0 / (1.0 - t[inside] ** 2))
    return out


def gaussian(n=1, N=1024, L=16.0, width=1.0):
    return sample(lambda *xs: np.exp(-sum(x**2 for x in xs) / (2 * width**2)), n, N, L)


def bump(n=1, N=1024, L=16.0, radius=1.0):
    return sample(lambda *xs: smooth_bump(np.sqrt(sum(x**2 for x in xs)) / radius), n, N, L)


def modulated_bump(n=1, N=1024, L=16.0, radius=4.0, freq=1.0):
    """Bump times a plane wave along the first axis."""
    return sample(
        lambda *xs: smooth_bump(np.sqrt(sum(x**2 for x in xs)) / radius) * np.exp(1j * freq * xs[0]),
        n, N, L,
    )


GENERATORS = {
    "gaussian": gaussian,
    "bump": bump,
    "modulated-bump": modulated_bump,
}


def generate(name, **params):
    try:
        gen = GENERATORS[name]
    except KeyError:
        raise ValueError(f"unknown generator {name!r}; choose from {sorted(GENERATORS)}") from None
    return gen(**params)


def gaussian_sobolev_oracle(sigma):
    """||e^{-x^2/2} | H^sigma(R)|| for integer sigma >= 0, closed form.

    The transform is e^{-xi^2/2}, so the squared norm is
    sum_k C(sigma, k) Gamma(k + 1/2).
    """
    return math.sqrt(sum(math.comb(sigma, k) * math.gamma(k + 0.5) for k in range(sigma + 1)))
