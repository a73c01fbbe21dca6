"""Explicit non-compactness witnesses: dyadic dilates and modulations of a bump.

Both families are bounded in the source space while their Fourier
transforms stay a fixed distance apart in the target space, so no finite
epsilon-net of the image exists.
"""
from dataclasses import dataclass, field
import json
import math
import os

import numpy as np

from .errors import DomainError
from .exact import as_rational, fmt, is_inf, to_float
from .gridio import smooth_bump, write_grid
from .littlewood_paley import (
    GridFunction,
    ResolutionOfUnity,
    forward_transform,
    inverse_transform,
    lp_norm,
    max_level,
    sample,
    space_norm,
)

DILATED = "dilated"
MODULATED = "modulated"
KINDS = (DILATED, MODULATED)


@dataclass(frozen=True)
class WitnessFamily:
    kind: str
    base: GridFunction
    members: list
    p: object
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        if not self.members:
            raise ValueError("a witness family needs at least one member")
        shapes = {(g.values.shape, g.L) for _, g in self.members}
        if len(shapes) != 1:
            raise ValueError("members must share grid geometry")

    @property
    def indices(self):
        return [i for i, _ in self.members]

    def member(self, index):
        for i, g in self.members:
            if i == index:
                return g
        raise KeyError(index)

    def transformed(self):
        return [(i, forward_transform(g)) for i, g in self.members]

    def lp_norms(self, p=None):
        p = self.p if p is None else p
        return [lp_norm(g, p) for _, g in self.members]


def support_radius(f, rel_tol=1e-14):
    """Largest |x| where |f| exceeds rel_tol times its maximum."""
    a = np.abs(f.values)
    peak = a.max()
    if peak == 0:
        return 0.0
    return float(f.radius()[a > rel_tol * peak].max())


def _refine_axis(v, axis, r):
    """Trigonometric interpolation on an r-times finer grid along one axis,
    keeping the central window of the original length."""
    N = v.shape[axis]
    c = np.fft.fft(v, axis=axis)
    M = N * r
    shape = list(v.shape)
    shape[axis] = M
    C = np.zeros(shape, dtype=complex)
    h = N // 2
    take = lambda a, sl: a[(slice(None),) * axis + (sl,)]  # noqa: E731
    take(C, slice(0, h))[...] = take(c, slice(0, h))
    take(C, slice(M - h + 1, M))[...] = take(c, slice(h + 1, N))
    nyq = take(c, slice(h, h + 1))
    take(C, slice(h, h + 1))[...] = nyq / 2
    take(C, slice(M - h, M - h + 1))[...] = nyq / 2
    fine = np.fft.ifft(C, axis=axis) * r
    start = h * (r - 1)
    return take(fine, slice(start, start + N))


def dyadic_dilate(psi, j):
    """Samples of x -> psi(2^{-j} x) on the grid of psi (band-limited interpolation)."""
    if j < 0:
        raise DomainError("dilation level must be >= 0")
    v = np.array(psi.values)
    r = 2**j
    if r > 1:
        for ax in range(psi.n):
            v = _refine_axis(v, ax, r)
    return psi.like(v)


def dilated_family(psi, p, j_range=range(7), profile=None):
    """Members f_j = 2^{-jn/p} psi(2^{-j} x) for j in ``j_range``.

    ``psi`` is the sampled profile.  When the callable ``profile`` that
    produced it is also given, dilates are sampled exactly instead of by
    band-limited interpolation.  The profile should be supported inside the
    annulus where the first dyadic block is identically one, so that the
    transformed member j lives in block j alone.
    """
    p = as_rational(p, allow_inf=True)
    js = list(j_range)
    if not js:
        raise ValueError("j_range is empty")
    return _dilated(psi, profile, p, js)


def dilated_family_on_grid(profile, p, n, N, L, j_range=range(7)):
    """:func:`dilated_family` for a callable profile sampled on a fresh grid."""
    return dilated_family(sample(profile, n, N, L), p, j_range, profile=profile)


def _dilated(base, profile, p, js):
    R = support_radius(base)
    L = base.L
    j_support = int(math.floor(math.log2(L / R))) if R > 0 else 10**6
    if 2.0**j_support * R >= L:
        j_support -= 1
    # transformed members live on the dual grid; their dyadic blocks reach level J_dual
    dual = GridFunction(np.zeros(base.values.shape), base.dual_half_width)
    j_alias = max_level(dual)
    j_max = min(j_support, j_alias)
    bad = [j for j in js if j < 0 or j > j_max]
    if bad:
        raise DomainError(
            f"dilation levels {bad} overflow the grid: support radius {R:.4g} at L = {L:.4g} "
            f"and dual block budget allow j <= {j_max}"
        )
    n = base.n
    inv_p = 0.0 if is_inf(p) else 1.0 / to_float(p)
    members = []
    for j in js:
        if profile is not None:
            psi_j = sample(lambda *xs: profile(*(x / 2.0**j for x in xs)), n, base.N, L)
        else:
            psi_j = dyadic_dilate(base, j)
        members.append((j, psi_j * 2.0 ** (-j * n * inv_p)))
    meta = {"support_radius": R, "max_admissible_j": j_max, "L": L, "N": base.N, "n": n}
    return WitnessFamily(DILATED, base, members, p, meta)


def default_dilation_profile(lo=0.76, hi=0.99):
    """Smooth bump on lo < x_1 < hi, inside the region where phi_0(x) == 1."""
    c, w = (lo + hi) / 2, (hi - lo) / 2

    def profile(*xs):
        r = np.sqrt(sum(x**2 for x in xs))
        return smooth_bump((r - c) / w) if len(xs) > 1 else smooth_bump((xs[0] - c) / w)

    return profile


def modulated_family(psi, m_list, p=2):
    """Members e^{i m.x} (F^{-1} psi)(x), one per lattice point m.

    ``psi`` is sampled on the frequency grid; every m must be a multiple of
    the frequency spacing and keep the shifted support inside the grid.
    """
    p = as_rational(p, allow_inf=True)
    raw = [np.atleast_1d(np.asarray(m, dtype=float)) for m in m_list]
    if any(np.any(r != np.round(r)) for r in raw):
        raise DomainError("lattice points must have integer components")
    ms = [tuple(r.astype(int).tolist()) for r in raw]
    if not ms:
        raise ValueError("m_list is empty")
    n = psi.n
    if any(len(m) != n for m in ms):
        raise DomainError(f"lattice points must have {n} components")
    base_x = inverse_transform(psi)
    dxi = psi.spacing
    R = support_radius(psi)
    for m in ms:
        steps = [mi / dxi for mi in m]
        if any(abs(s - round(s)) > 1e-9 for s in steps):
            raise DomainError(f"lattice point {m} is not a multiple of the frequency spacing {dxi:.6g}")
        if math.hypot(*m) + R >= psi.L:
            raise DomainError(
                f"lattice point {m} shifts the spectrum (radius {R:.4g}) past the Nyquist bound {psi.L:.6g}"
            )
    coords = base_x.coordinates()
    members = []
    for m in ms:
        phase = np.exp(1j * sum(mi * x for mi, x in zip(m, coords)))
        members.append((m if n > 1 else m[0], base_x * phase))
    meta = {"support_radius": R, "frequency_spacing": dxi, "L": base_x.L, "N": psi.N, "n": n}
    return WitnessFamily(MODULATED, psi, members, p, meta)


def default_modulation_base(n=1, N=2048, L_x=32 * math.pi, radius=0.45):
    """Bump of the given radius on the frequency grid dual to [-L_x, L_x)."""
    L_xi = math.pi * N / (2 * L_x)
    return sample(lambda *xs: smooth_bump(np.sqrt(sum(x**2 for x in xs)) / radius), n, N, L_xi)


def translate(psi, m):
    """psi(. - m) on the grid of psi (m a multiple of the spacing)."""
    shift = [int(round(mi / psi.spacing)) for mi in np.atleast_1d(m)]
    return psi.like(np.roll(psi.values, shift, axis=tuple(range(psi.n))))


def block_alignment(fam):
    """Fraction of L_2 energy of each transformed member outside the plateau
    of its own dyadic block (dilated families only)."""
    if fam.kind != DILATED:
        raise ValueError("alignment is defined for dilated families")
    res = ResolutionOfUnity(max(fam.indices))
    out = {}
    for j, g in fam.members:
        lo, hi = res.plateau(j)
        # block j of f^_j is filtered by phi_j on the transform of f^_j, i.e. on f_j(-x)
        r = g.radius()
        inside = (r >= lo) & (r <= hi)
        a = np.abs(g.values) ** 2
        total = a.sum()
        out[j] = float(a[~inside].sum() / total) if total > 0 else 0.0
    return out


@dataclass(frozen=True)
class SeparationReport:
    indices: list
    distances: np.ndarray
    norms: list
    min_offdiag: float
    median_norm: float
    threshold: float

    @property
    def certified(self):
        return self.min_offdiag >= self.threshold * self.median_norm > 0

    def to_json(self):
        return {
            "indices": [list(i) if isinstance(i, tuple) else i for i in self.indices],
            "distances": self.distances.tolist(),
            "norms": self.norms,
            "min_offdiag": self.min_offdiag,
            "median_norm": self.median_norm,
            "threshold": self.threshold,
            "certified": self.certified,
        }


def separation_matrix(fam, space, threshold=0.1):
    """Pairwise target-space distances of the transformed members."""
    if len(fam.members) < 3:
        raise ValueError("separation needs at least 3 members")
    hats = [g for _, g in fam.transformed()]
    k = len(hats)
    D = np.zeros((k, k))
    for a in range(k):
        for b in range(a + 1, k):
            D[a, b] = D[b, a] = space_norm(hats[a] - hats[b], space)
    norms = [space_norm(g, space) for g in hats]
    off = D[~np.eye(k, dtype=bool)]
    return SeparationReport(fam.indices, D, norms, float(off.min()), float(np.median(norms)), threshold)


def export_family(fam, directory):
    """Write members as grid files plus a JSON manifest; returns the manifest path."""
    os.makedirs(directory, exist_ok=True)
    entries = []
    for idx, g in fam.members:
        tag = "_".join(map(str, idx)) if isinstance(idx, tuple) else str(idx)
        name = f"{fam.kind}_{tag}.grid"
        write_grid(g, os.path.join(directory, name))
        entries.append({"index": list(idx) if isinstance(idx, tuple) else idx, "file": name})
    manifest = {"kind": fam.kind, "p": fmt(fam.p), "members": entries}
    path = os.path.join(directory, "manifest.json")
    with open(path, "w") as fh:
        json.dump(manifest, fh, indent=2, sort_keys=True)
    return path
