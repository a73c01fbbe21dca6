import math

import numpy as np
import pytest

from fourier_besov.gridio import (
    GENERATORS,
    bump,
    gaussian,
    gaussian_sobolev_oracle,
    generate,
    modulated_bump,
    read_grid,
    smooth_bump,
    write_grid,
)
from fourier_besov.littlewood_paley import GridFunction


@pytest.mark.parametrize("n, N", [(1, 16), (2, 8)])
def test_round_trip_is_exact(tmp_path, n, N):
    rng = np.random.default_rng(n)
    f = GridFunction(rng.standard_normal((N,) * n) + 1j * rng.standard_normal((N,) * n), 3.7)
    path = tmp_path / "f.grid"
    write_grid(f, path)
    g = read_grid(path)
    assert g.L == f.L and np.array_equal(g.values, f.values)


def test_file_layout(tmp_path):
    path = tmp_path / "f.grid"
    write_grid(GridFunction(np.arange(8) + 0.5j, 2.0), path)
    lines = path.read_text().splitlines()
    assert lines[0] == "1 8 2.0"
    assert len(lines) == 9 and lines[1] == "0.0 0.5"


@pytest.mark.parametrize(
    "text, match",
    [("1 8\n", "header"), ("1 8 2.0\n" + "0 0\n" * 7, "expected 8 rows")],
)
def test_read_rejects_malformed(tmp_path, text, match):
    path = tmp_path / "bad.grid"
    path.write_text(text)
    with pytest.raises(ValueError, match=match):
        read_grid(path)


def test_smooth_bump_support_and_peak():
    t = np.array([-1.0, -0.5, 0.0, 0.999, 1.0, 2.0])
    v = smooth_bump(t)
    assert v[0] == v[4] == v[5] == 0
    assert v[2] == pytest.approx(math.exp(-1))
    assert np.all(v >= 0)


def test_generators_by_name():
    assert set(GENERATORS) == {"gaussian", "bump", "modulated-bump"}
    f = generate("gaussian", n=1, N=64, L=8.0, width=2.0)
    assert np.allclose(f.values, gaussian(1, 64, 8.0, 2.0).values)
    with pytest.raises(ValueError, match="unknown generator"):
        generate("sinc")


def test_bump_and_modulation():
    b = bump(1, 256, 8.0, radius=2.0)
    m = modulated_bump(1, 256, 8.0, radius=2.0, freq=3.0)
    assert np.allclose(np.abs(m.values), b.values)
    assert np.all(b.values[np.abs(b.axis()) >= 2.0] == 0)
    assert bump(2, 32, 4.0).n == 2


@pytest.mark.parametrize("sigma, expected", [(0, math.pi**0.25), (1, math.sqrt(1.5 * math.sqrt(math.pi)))])
def test_gaussian_oracle(sigma, expected):
    assert gaussian_sobolev_oracle(sigma) == pytest.approx(expected, rel=1e-14)
