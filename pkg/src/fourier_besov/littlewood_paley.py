"""Discrete Fourier transform, dyadic resolution of unity and norms on grids.

R^n is modelled by the torus [-L, L)^n sampled at N points per axis.  The
transform is the Riemann sum of (2 pi)^{-n/2} \\int e^{-ix.xi} f(x) dx and maps
onto the dual grid xi_k = pi k / L, k in [-N/2, N/2), whose half-width is
pi N / (2L).  Applying the transform to a function on the dual grid lands
back on the original grid, so the pair is exactly invertible.
"""
from dataclasses import dataclass, field
import math

import numpy as np

from .errors import TruncationError, UnsupportedParameters
from .exact import to_float
from .space_lattice import Family, SpaceSpec


@dataclass(frozen=True)
class GridFunction:
    """Complex samples on the uniform grid over [-L, L)^n (n = 1 or 2)."""

    values: np.ndarray
    L: float

    def __post_init__(self):
        v = np.array(self.values, dtype=complex)
        if v.ndim not in (1, 2):
            raise ValueError(f"only n = 1 or 2 grids are supported, got shape {v.shape}")
        N = v.shape[0]
        if any(m != N for m in v.shape):
            raise ValueError(f"grid must be square, got shape {v.shape}")
        if N < 8 or N & (N - 1):
            raise ValueError(f"samples per axis must be a power of two >= 8, got {N}")
        if not np.all(np.isfinite(v)):
            raise ValueError("grid values must be finite")
        if not self.L > 0:
            raise ValueError(f"half-width L must be positive, got {self.L}")
        v.setflags(write=False)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "L", float(self.L))

    @property
    def n(self):
        return self.values.ndim

    @property
    def N(self):
        return self.values.shape[0]

    @property
    def spacing(self):
        return 2 * self.L / self.N

    @property
    def cell_measure(self):
        return self.spacing**self.n

    @property
    def dual_half_width(self):
        return math.pi * self.N / (2 * self.L)

    def axis(self):
        return -self.L + self.spacing * np.arange(self.N)

    def coordinates(self):
        """Coordinate arrays, one per axis, broadcast to the grid shape."""
        ax = self.axis()
        return np.meshgrid(*([ax] * self.n), indexing="ij") if self.n > 1 else [ax]

    def radius(self):
        return np.sqrt(sum(c**2 for c in self.coordinates()))

    def like(self, values):
        return GridFunction(values, self.L)

    def __add__(self, other):
        return self.like(self.values + _vals(other))

    def __sub__(self, other):
        return self.like(self.values - _vals(other))

    def __mul__(self, c):
        return self.like(self.values * _vals(c))

    __rmul__ = __mul__


def _vals(x):
    return x.values if isinstance(x, GridFunction) else x


def sample(func, n, N, L):
    """GridFunction of ``func`` evaluated on the coordinate arrays."""
    template = GridFunction(np.zeros((N,) * n), L)
    return template.like(func(*template.coordinates()))


def _checkerboard(N, n):
    s = (-1.0) ** np.arange(N)
    out = s
    for _ in range(n - 1):
        out = np.multiply.outer(out, s)
    return out


def _transform(f, sign):
    n, N = f.n, f.N
    chk = _checkerboard(N, n)
    scale = (2 * math.pi) ** (-n / 2) * f.cell_measure * (-1.0) ** (n * N // 2)
    if sign < 0:
        core = np.fft.fftn(chk * f.values)
    else:
        core = np.fft.ifftn(chk * f.values) * N**n
    return GridFunction(scale * chk * core, f.dual_half_width)


def forward_transform(f):
    """Riemann-sum Fourier transform onto the dual grid."""
    return _transform(f, -1)


def inverse_transform(g):
    """Inverse of :func:`forward_transform` (same quadrature with e^{+ix.xi})."""
    return _transform(g, +1)


# --- dyadic resolution of unity ---------------------------------------------

def _bump_tail(u):
    out = np.zeros_like(u, dtype=float)
    pos = u > 0
    out[pos] = np.exp(-1.0 / u[pos])
    return out


def transition_profile(t):
    """Smooth monotone step: 1 for t <= 1, 0 for t >= 3/2."""
    t = np.asarray(t, dtype=float)
    a = _bump_tail(1.5 - t)
    b = _bump_tail(t - 1.0)
    return a / (a + b)


@dataclass(frozen=True)
class ResolutionOfUnity:
    J_max: int

    def phi0(self, r):
        return transition_profile(r)

    def phi(self, j, r):
        r = np.asarray(r, dtype=float)
        if j == 0:
            return transition_profile(r)
        return transition_profile(r / 2.0**j) - transition_profile(r / 2.0 ** (j - 1))

    def partial_sum(self, J, r):
        """Sum of phi_0..phi_J; telescopes to phi_0(2^{-J} r)."""
        return sum(self.phi(j, r) for j in range(J + 1))

    def plateau(self, j):
        """Closed radial interval where phi_j == 1 exactly."""
        if j == 0:
            return (0.0, 1.0)
        return (0.75 * 2.0**j, 2.0**j)

    def support(self, j):
        if j == 0:
            return (0.0, 1.5)
        return (2.0 ** (j - 1), 1.5 * 2.0**j)


def make_resolution(J_max):
    if J_max < 0:
        raise ValueError("J_max must be >= 0")
    return ResolutionOfUnity(int(J_max))


def max_level(f):
    """Largest J whose block support fits below the dual-grid half-width."""
    nyq = f.dual_half_width
    if nyq < 1.5:
        return -1
    return int(math.floor(math.log2(nyq / 1.5)))


# --- norms -------------------------------------------------------------------

def weight(r2, alpha):
    """w_alpha = (1 + |x|^2)^{alpha/2} from squared radius."""
    return (1.0 + r2) ** (alpha / 2.0)


def lp_norm(f, p, alpha=None):
    """Riemann-sum L_p (quasi-)norm, optionally with weight w_alpha."""
    p = to_float(p)
    a = np.abs(f.values)
    if alpha is not None:
        a = a * weight(f.radius() ** 2, to_float(alpha))
    if math.isinf(p):
        return float(a.max())
    return float((np.sum(a**p) * f.cell_measure) ** (1.0 / p))


def lorentz_norm(f, p, r):
    """L_{p,r} quasi-norm of the sample step function via its rearrangement.

    The sorted moduli a_1 >= a_2 >= ... each occupy one cell of measure h, so
    the integral of (t^{1/p} f*(t))^r dt/t is a finite sum.
    """
    p, r = to_float(p), to_float(r)
    if not 0 < p < math.inf:
        raise UnsupportedParameters("Lorentz norm needs 0 < p < inf")
    a = np.sort(np.abs(f.values).ravel())[::-1]
    h = f.cell_measure
    t = h * np.arange(1, a.size + 1)
    if math.isinf(r):
        return float(np.max(t ** (1.0 / p) * a))
    e = r / p
    steps = t**e - (t - h) ** e
    return float(((p / r) * np.sum(a**r * steps)) ** (1.0 / r))


def sobolev_norm(f, sigma):
    """||w_sigma f^||_2 on the dual grid."""
    g = forward_transform(f)
    w2 = (1.0 + g.radius() ** 2) ** float(sigma)
    return float(np.sqrt(np.sum(w2 * np.abs(g.values) ** 2) * g.cell_measure))


@dataclass(frozen=True)
class BesovNormResult:
    total: float
    per_level: list
    truncation_level: int
    s: float
    q: float
    tail: float = 0.0
    meta: dict = field(default_factory=dict)

    def recompute(self):
        return aggregate(self.per_level, self.s, self.q)


def aggregate(per_level, s, q):
    terms = np.array([2.0 ** (j * s) * v for j, v in per_level])
    if math.isinf(q):
        return float(terms.max()) if terms.size else 0.0
    return float(np.sum(terms**q) ** (1.0 / q))


def dyadic_blocks(f, J=None):
    """Yield (j, (phi_j f^)^vee) for j = 0..J on the grid of f."""
    J_adm = max_level(f)
    if J is None:
        J = J_adm
    if J < 0 or J > J_adm:
        raise TruncationError(
            f"dyadic level J = {J} aliases: blocks need (3/2) 2^J <= pi N / (2L) = "
            f"{f.dual_half_width:.6g}; max admissible J = {J_adm}",
            J_adm,
        )
    g = forward_transform(f)
    rad = g.radius()
    res = ResolutionOfUnity(J)
    blocks = [(j, inverse_transform(g.like(res.phi(j, rad) * g.values))) for j in range(J + 1)]
    tail_mult = 1.0 - transition_profile(rad / 2.0**J)
    tail = float(np.sqrt(np.sum(np.abs(tail_mult * g.values) ** 2) * g.cell_measure))
    return blocks, J, tail


def besov_norm(f, s, p, q, alpha=None, J=None):
    """Dyadic B^s_{p,q} norm, weighted by w_alpha inside the L_p norms if given.

    ``tail`` in the result is the L_2 mass of f^ beyond the last block, zero
    for inputs band-limited below (3/2) 2^J.
    """
    s, p, q = to_float(s), to_float(p), to_float(q)
    blocks, J, tail = dyadic_blocks(f, J)
    per_level = [(j, lp_norm(b, p, alpha)) for j, b in blocks]
    return BesovNormResult(aggregate(per_level, s, q), per_level, J, s, q, tail,
                           {"p": p, "alpha": None if alpha is None else to_float(alpha)})


def space_norm(f, space):
    """Norm of a GridFunction in a SpaceSpec computable on grids."""
    if space.n != f.n:
        raise UnsupportedParameters(f"space dimension {space.n} does not match grid dimension {f.n}")
    if space.family is Family.LP or (space.family is Family.LORENTZ and space.r == space.p):
        # L_p is computed directly, not through its B^0_{2,2} alias at p = 2
        return lp_norm(f, space.p)
    c = space.canonical()
    if c.family is Family.LORENTZ:
        if c.r == c.p:
            return lp_norm(f, c.p)
        return lorentz_norm(f, c.p, c.r)
    if c.family is Family.BESOV:
        return besov_norm(f, c.s, c.p, c.q).total
    if c.family is Family.WEIGHTED_BESOV:
        return besov_norm(f, c.s, c.p, c.q, alpha=c.alpha).total
    raise UnsupportedParameters(f"no grid norm for {space}")


def check_embedding_inequality(corpus, src, dst):
    """Worst ratio ||f|dst|| / ||f|src|| over a corpus (a monitor, not a proof)."""
    if not corpus:
        raise ValueError("corpus must be non-empty")
    if not isinstance(src, SpaceSpec) or not isinstance(dst, SpaceSpec):
        raise TypeError("src and dst must be SpaceSpec")
    ratios = []
    for f in corpus:
        a = space_norm(f, src)
        b = space_norm(f, dst)
        ratios.append(b / a if a > 0 else (0.0 if b == 0 else math.inf))
    return max(ratios)
