"""Singular-value decay of the discretised Fourier map and entropy brackets.

In Hilbert space the approximation numbers of a compact operator are its
singular values, and for power-type decay entropy numbers share the same
exponent.  So the decay exponent of F: H^{s1}(R) -> H^{s2}(R) is measured by
an SVD of a weighted DFT matrix, while the entropy-number machinery itself
is exercised separately on finite diagonal operators, where both sides of
the bracket are computable.

Entropy computations treat the spaces as real.
"""
from dataclasses import dataclass, field
import csv
import io
import json
import math
from fractions import Fraction
from functools import cached_property

import numpy as np
from scipy.linalg import svdvals
from scipy.optimize import brentq

from . import rates
from .covering import search_ellipse_covering, search_segment_covering
from .errors import DomainError, UnsupportedParameters
from .exact import as_rational, fmt

DEFAULT_WINDOW = (8, 64)
DEFAULT_TOL = 0.15
MIN_R_SQUARED = 0.98


def _real(x):
    """Float from a rational-like value (strings such as '-1/2' allowed)."""
    if isinstance(x, (str, Fraction, int)) and not isinstance(x, bool):
        return float(as_rational(x))
    return float(x)


@dataclass(frozen=True, eq=False)
class KernelMatrix:
    entries: np.ndarray
    meta: dict

    def __post_init__(self):
        A = self.entries
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ValueError(f"kernel must be square, got {A.shape}")
        if not np.all(np.isfinite(A)):
            raise ValueError("kernel entries must be finite")

    @property
    def rows(self):
        return self.entries.shape[0]

    @property
    def cols(self):
        return self.entries.shape[1]

    @cached_property
    def singular_values(self):
        return svdvals(self.entries)


def build_fourier_kernel(s1, s2, n=1, L=32.0, N=512):
    """Matrix of F: H^{s1} -> H^{s2} conjugated to a map L_2 -> L_2.

    Columns carry u = w_{s1} f^ sampled on the frequency grid, rows carry
    w_{s2} (F f^) on the space grid; the middle factor is the unitary DFT
    e^{-i x xi} sqrt(dx dxi / 2 pi).
    """
    s1f, s2f = _real(s1), _real(s2)
    if not (s1f > 0 > s2f):
        raise UnsupportedParameters(f"kernel needs s1 > 0 > s2, got s1 = {s1}, s2 = {s2}")
    if n != 1:
        raise UnsupportedParameters("kernel SVD is implemented for n = 1 only")
    if N < 8 or N & (N - 1):
        raise DomainError(f"N must be a power of two >= 8, got {N}")
    if not L > 0:
        raise DomainError("L must be positive")
    h = 2 * L / N
    x = (np.arange(N) - N // 2) * h
    xi = (np.arange(N) - N // 2) * (math.pi / L)
    U = np.exp(-1j * np.outer(x, xi)) / math.sqrt(N)
    w2 = (1 + x**2) ** (s2f / 2)
    w1 = (1 + xi**2) ** (-s1f / 2)
    A = w2[:, None] * U * w1[None, :]
    meta = {"s1": s1f, "s2": s2f, "n": n, "L": float(L), "N": N}
    return KernelMatrix(A, meta)


def balanced_half_width(s1, s2, N, k_max=64):
    """Half-width L that gives the space and frequency boxes equal room.

    Level sets {sigma >= eps} of the symbol w_{s2}(x) w_{s1}(xi)^{-1} are
    boxes of sides eps^{1/s2} and eps^{-1/s1}; the grid sees [-L, L] and
    [-pi N / 2L, pi N / 2L], so L is chosen with the two aspect ratios
    matching at eps = k_max^{-min(s1, |s2|)}.
    """
    s1f, s2f = _real(s1), abs(_real(s2))
    eps = k_max ** (-min(s1f, s2f))
    ratio = eps ** (-1 / s2f + 1 / s1f)
    return math.sqrt(ratio * math.pi * N / 2)


@dataclass(frozen=True)
class DecayFit:
    power_exponent: float
    r_squared: float
    window: tuple
    sequence_length: int
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = self.window
        if not (1 <= lo < hi <= self.sequence_length):
            raise DomainError(f"window {self.window} is not inside [1, {self.sequence_length}]")

    def to_json(self):
        return {
            "exponent": self.power_exponent,
            "r2": self.r_squared,
            "window": list(self.window),
            "sequence_length": self.sequence_length,
            "meta": self.meta,
        }


def fit_power_law(sigma, window=DEFAULT_WINDOW, meta=None):
    """Least-squares slope of log sigma_k against log k for k in the window (1-based, inclusive)."""
    sigma = np.asarray(sigma, dtype=float)
    lo, hi = int(window[0]), int(window[1])
    if lo < 1 or hi > len(sigma) or hi - lo + 1 < 4:
        raise DomainError(f"degenerate window [{lo}, {hi}] for a sequence of length {len(sigma)}")
    seg = sigma[lo - 1:hi]
    if np.any(seg <= 0):
        raise DomainError("singular values in the window must be positive")
    k = np.arange(lo, hi + 1, dtype=float)
    X, Y = np.log(k), np.log(seg)
    slope, intercept = np.polyfit(X, Y, 1)
    resid = Y - (slope * X + intercept)
    ss_tot = float(np.sum((Y - Y.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid**2)) / ss_tot if ss_tot > 0 else 1.0
    return DecayFit(float(slope), min(1.0, max(0.0, r2)), (lo, hi), len(sigma), dict(meta or {}))


def singular_decay(A, window=DEFAULT_WINDOW):
    return fit_power_law(A.singular_values, window, meta=A.meta)


def predicted_law(s1, s2, n=1):
    """Hilbert-space rate for F: H^{s1} -> H^{s2} with s1 > 0 > s2."""
    s1r, s2r = as_rational(s1), as_rational(s2)
    _, law = rates.FOURIER_HILBERT.select(s1=s1r, s2=s2r, n=n)
    return law


PASS, FAIL, REPORT_ONLY = "pass", "fail", "report_only"


def rate_check(fit, predicted, tol=DEFAULT_TOL, min_r2=MIN_R_SQUARED):
    """Compare a fitted exponent with a pure-power prediction.

    Log-corrected predictions are reported without a verdict.
    """
    report = {
        "measured_exponent": fit.power_exponent,
        "r2": fit.r_squared,
        "window": list(fit.window),
        "predicted_form": predicted.form,
        "predicted_exponent": fmt(predicted.power_exponent),
        "tolerance": tol,
    }
    if predicted.form != rates.PURE_POWER:
        report["outcome"] = REPORT_ONLY
        report["log_exponent"] = fmt(predicted.log_exponent)
        return report
    diff = abs(fit.power_exponent - float(predicted.power_exponent))
    report["deviation"] = diff
    report["outcome"] = PASS if diff <= tol and fit.r_squared >= min_r2 else FAIL
    return report


# --- entropy brackets for diagonal operators ---------------------------------

@dataclass(frozen=True)
class EntropyBracket:
    k: int
    lower: float
    upper: float

    def __post_init__(self):
        if self.k < 1:
            raise DomainError("k must be >= 1")
        if not (0 <= self.lower <= self.upper * (1 + 1e-12)):
            raise DomainError(f"invalid bracket [{self.lower}, {self.upper}]")

    def contains(self, value, rel=1e-9):
        return self.lower * (1 - rel) <= value <= self.upper * (1 + rel)

    def to_json(self):
        return {"k": self.k, "lower": self.lower, "upper": self.upper}


def _check_sigma(sigma):
    s = np.asarray(sigma, dtype=float)
    if s.ndim != 1 or s.size == 0:
        raise DomainError("sigma must be a non-empty sequence")
    if not np.all(np.isfinite(s)) or np.any(s <= 0):
        raise DomainError("sigma must be finite and positive")
    if np.any(np.diff(s) > 0):
        raise DomainError("sigma must be non-increasing")
    return s


def volumetric_lower(sigma, k):
    """sup_m 2^{-(k-1)/m} (sigma_1 ... sigma_m)^{1/m}: a cover of the first m
    coordinates needs 2^{k-1} eps^m >= sigma_1 ... sigma_m."""
    s = _check_sigma(sigma)
    m = np.arange(1, s.size + 1)
    geo = np.exp(np.cumsum(np.log(s)) / m)
    return float(np.max(2.0 ** (-(k - 1) / m) * geo))


def covering_upper(sigma, k):
    """Radius of an explicit covering by at most 2^{k-1} balls.

    Cover the projection onto the first m axes by a maximal eps-separated
    set; its size is at most prod(1 + 2 sigma_i / eps), because the
    ellipsoid plus an eps/2 ball sits inside the ellipsoid with semi-axes
    sigma_i + eps/2.  The discarded axes add at most sigma_{m+1} in
    quadrature.  The best m and eps are taken; m = 0 is the single ball of
    radius sigma_1.
    """
    s = _check_sigma(sigma)
    budget = k - 1
    best = float(s[0])
    for m in range(1, s.size + 1):
        head = s[:m]
        tail = float(s[m]) if m < s.size else 0.0
        if budget <= 0:
            break

        def excess(log_eps):
            return float(np.sum(np.log2(1 + 2 * head / math.exp(log_eps)))) - budget

        lo, hi = math.log(head[-1] * 1e-12), math.log(head[0])
        while excess(hi) > 0:
            hi += 1.0
        if excess(lo) <= 0:
            log_eps = lo
        else:
            log_eps = brentq(excess, lo, hi, xtol=1e-14)
            # nudge onto the feasible side of the root
            while excess(log_eps) > 0:
                log_eps += 1e-12
        best = min(best, math.hypot(math.exp(log_eps), tail))
    return best


def entropy_bracket_diagonal(sigma, k):
    if k < 1:
        raise DomainError("k must be >= 1")
    lo = volumetric_lower(sigma, k)
    hi = covering_upper(sigma, k)
    return EntropyBracket(int(k), lo, max(lo, hi))


def brute_force_entropy(sigma, k, seed=0):
    """Numerical e_k of the diagonal map with the given (<= 2) singular values.

    Searches for 2^{k-1} centres covering the ellipse (segment in dimension
    one) and returns a certified covering radius; the explicit covering of
    :func:`covering_upper` and the single ball of radius sigma_1 are also
    valid covers, so the smallest of the three is returned.
    """
    s = _check_sigma(sigma)
    if s.size > 2 or k > 6 or k < 1:
        raise DomainError(f"brute force budget is dimension <= 2 and 1 <= k <= 6, got dim {s.size}, k {k}")
    K = 2 ** (k - 1)
    if K == 1:
        return float(s[0])
    if s.size == 1:
        r, _ = search_segment_covering(float(s[0]), K)
    else:
        r, _ = search_ellipse_covering(float(s[0]), float(s[1]), K, seed=seed)
    return float(min(r, s[0], covering_upper(s, k)))


# --- exports -------------------------------------------------------------------

def sigma_csv(sigma):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["k", "sigma"])
    for i, v in enumerate(sigma, start=1):
        w.writerow([i, repr(float(v))])
    return buf.getvalue()


def fit_json(fit):
    return json.dumps(fit.to_json(), sort_keys=True)
