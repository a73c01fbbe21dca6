"""Spaces, regions and limiting lines for the Fourier transform on Besov scales.

Everything here is exact: smoothness and integrability are Fractions and
infinity enters only via :func:`fourier_besov.exact.recip`.  Verdicts carry a
``derivation`` list naming the results that produced each conclusion.
"""
import csv
import io
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional

from . import rates
from .errors import DomainError, UnsupportedParameters
from .exact import INF, as_rational, conjugate, fmt, is_inf, recip
from .rates import RateLaw


class Family(str, Enum):
    LP = "Lp"
    LORENTZ = "Lorentz"
    BESOV = "Besov"
    BESOV_DIAG = "BesovDiag"
    SOBOLEV = "Sobolev"
    HOLDER = "Holder"
    SOBOLEV_FRACTIONAL = "SobolevFractional"
    WEIGHTED_BESOV = "WeightedBesov"
    WEIGHTED_L2 = "WeightedL2"


_ZERO = Fraction(0)


@dataclass(frozen=True, eq=False)
class SpaceSpec:
    """Symbolic function space on R^n.

    Unused indices stay ``None``.  Equality is up to the standard aliases
    (H^s = B^s_{2,2}, C^s = B^s_{inf,inf}, L_p = L_{p,p}, ...), see
    :meth:`canonical`.
    """

    family: Family
    s: Optional[Fraction] = None
    p: Optional[Fraction] = None
    q: Optional[Fraction] = None
    r: Optional[Fraction] = None
    alpha: Optional[Fraction] = None
    n: int = 1

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        for name in ("s", "alpha"):
            v = getattr(self, name)
            if v is not None:
                object.__setattr__(self, name, as_rational(v))
        for name in ("p", "q", "r"):
            v = getattr(self, name)
            if v is not None:
                v = as_rational(v, allow_inf=True)
                if v <= 0:
                    raise DomainError(f"{name} must be positive, got {v}")
                object.__setattr__(self, name, v)
        if not isinstance(self.n, int) or self.n < 1:
            raise DomainError(f"dimension must be a positive integer, got {self.n!r}")

    @property
    def p_conjugate(self):
        return conjugate(self.p)

    def canonical(self):
        """Normal form used for equality."""
        f, n = self.family, self.n
        if f is Family.BESOV_DIAG:
            return SpaceSpec(Family.BESOV, self.s, self.p, self.p, n=n)
        if f is Family.SOBOLEV:
            return SpaceSpec(Family.BESOV, self.s, Fraction(2), Fraction(2), n=n)
        if f is Family.HOLDER:
            return SpaceSpec(Family.BESOV, self.s, INF, INF, n=n)
        if f is Family.LP:
            return SpaceSpec(Family.LORENTZ, p=self.p, r=self.p, n=n).canonical()
        if f is Family.LORENTZ:
            if self.r == self.p == 2:
                return SpaceSpec(Family.BESOV, _ZERO, Fraction(2), Fraction(2), n=n)
            return SpaceSpec(Family.LORENTZ, p=self.p, r=self.r, n=n)
        if f is Family.SOBOLEV_FRACTIONAL and self.p == 2:
            return SpaceSpec(Family.BESOV, self.s, Fraction(2), Fraction(2), n=n)
        if f is Family.WEIGHTED_L2:
            return SpaceSpec(Family.WEIGHTED_BESOV, _ZERO, Fraction(2), Fraction(2), alpha=self.alpha, n=n)
        if f is Family.WEIGHTED_BESOV and self.alpha == 0:
            return SpaceSpec(Family.BESOV, self.s, self.p, self.q, n=n)
        return self

    def _key(self):
        c = self.canonical()
        return (c.family, c.s, c.p, c.q, c.r, c.alpha, c.n)

    def __eq__(self, other):
        if not isinstance(other, SpaceSpec):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        f = self.family
        if f is Family.LP:
            return f"L_{fmt_short(self.p)}(R^{self.n})"
        if f is Family.LORENTZ:
            return f"L_{{{fmt_short(self.p)},{fmt_short(self.r)}}}(R^{self.n})"
        if f is Family.SOBOLEV:
            return f"H^{fmt_short(self.s)}(R^{self.n})"
        if f is Family.HOLDER:
            return f"C^{fmt_short(self.s)}(R^{self.n})"
        if f is Family.BESOV_DIAG:
            return f"B^{fmt_short(self.s)}_{fmt_short(self.p)}(R^{self.n})"
        if f is Family.SOBOLEV_FRACTIONAL:
            return f"H^{fmt_short(self.s)}_{fmt_short(self.p)}(R^{self.n})"
        if f is Family.WEIGHTED_L2:
            return f"L_2(R^{self.n}, w_{fmt_short(self.alpha)})"
        if f is Family.WEIGHTED_BESOV:
            return (f"B^{fmt_short(self.s)}_{{{fmt_short(self.p)},{fmt_short(self.q)}}}"
                    f"(R^{self.n}, w_{fmt_short(self.alpha)})")
        return f"B^{fmt_short(self.s)}_{{{fmt_short(self.p)},{fmt_short(self.q)}}}(R^{self.n})"

    def to_json(self):
        d = {"family": self.family.value, "n": self.n}
        for name in ("s", "p", "q", "r", "alpha"):
            v = getattr(self, name)
            if v is not None:
                d[name] = fmt(v)
        return d


def fmt_short(x):
    if is_inf(x):
        return "inf"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def lp(p, n=1):
    return SpaceSpec(Family.LP, p=p, n=n)


def lorentz(p, r, n=1):
    return SpaceSpec(Family.LORENTZ, p=p, r=r, n=n)


def besov(s, p, q, n=1):
    return SpaceSpec(Family.BESOV, s=s, p=p, q=q, n=n)


def besov_diag(s, p, n=1):
    return SpaceSpec(Family.BESOV_DIAG, s=s, p=p, n=n)


def sobolev(s, n=1):
    return SpaceSpec(Family.SOBOLEV, s=s, p=2, n=n)


def holder(s, n=1):
    return SpaceSpec(Family.HOLDER, s=s, p="inf", n=n)


def sobolev_fractional(s, p, n=1):
    return SpaceSpec(Family.SOBOLEV_FRACTIONAL, s=s, p=p, q=2, n=n)


def weighted_besov(s, p, q, alpha, n=1):
    return SpaceSpec(Family.WEIGHTED_BESOV, s=s, p=p, q=q, alpha=alpha, n=n)


def weighted_l2(alpha, n=1):
    return SpaceSpec(Family.WEIGHTED_L2, p=2, alpha=alpha, n=n)


# --- critical lines -------------------------------------------------------

def _check_p(p):
    p = as_rational(p, allow_inf=True)
    if p <= 0:
        raise DomainError(f"integrability p must be positive, got {p}")
    return p


def d_np(p, n):
    """Critical line 2n(1/p - 1/2)."""
    p = _check_p(p)
    return 2 * n * (recip(p) - Fraction(1, 2))


def tau_plus(p, n):
    return max(_ZERO, d_np(p, n))


def tau_minus(p, n):
    return min(_ZERO, d_np(p, n))


# --- verdicts ----------------------------------------------------------------

OUTSIDE_SOURCE = "outside_source_region"
OUTSIDE_TARGET = "outside_target_region"
LIMITING = "continuous_not_compact_limiting"
COMPACT = "compact"


@dataclass(frozen=True)
class MappingVerdict:
    status: str
    source_limiting: bool
    target_limiting: bool
    rate: Optional[RateLaw] = None
    derivation: tuple = ()
    target: Optional[SpaceSpec] = None

    def __post_init__(self):
        if (self.rate is not None) != (self.status == COMPACT):
            raise ValueError("rate must be present exactly for compact verdicts")
        if not self.derivation:
            raise ValueError("verdict without derivation")

    def to_json(self):
        d = {
            "status": self.status,
            "source_limiting": self.source_limiting,
            "target_limiting": self.target_limiting,
            "rate": None if self.rate is None else self.rate.to_json(),
            "derivation": list(self.derivation),
        }
        if self.target is not None:
            d["target"] = self.target.to_json()
        return d


@dataclass(frozen=True)
class EmbeddingVerdict:
    compact: bool
    delta: Fraction
    p_star_reciprocal: Fraction
    rho: Fraction
    rate: Optional[RateLaw] = None
    open: bool = False
    derivation: tuple = field(default=())

    def to_json(self):
        return {
            "compact": self.compact,
            "delta": fmt(self.delta),
            "p_star_reciprocal": fmt(self.p_star_reciprocal),
            "rho": fmt(self.rho),
            "rate": None if self.rate is None else self.rate.to_json(),
            "open": self.open,
            "derivation": list(self.derivation),
        }


def _fine_index(q, p, name):
    if q is None:
        return p
    q = as_rational(q, allow_inf=True)
    if q <= 0:
        raise DomainError(f"{name} must be positive, got {q}")
    return q


def classify_fourier(p, s1, s2, n=1, q1=None, q2=None):
    """Classify F: B^{s1}_{p,q1}(R^n) -> B^{s2}_{p,q2}(R^n).

    With q1, q2 omitted (or equal to p) this is the diagonal scale X^{s1}_p ->
    Y^{s2}_p.  ``p = inf`` is admitted only for the Hoelder configuration
    s2 + n < 0 < s1, where the rate is a conjecture.
    """
    p = _check_p(p)
    s1, s2 = as_rational(s1), as_rational(s2)
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"dimension must be a positive integer, got {n!r}")
    if p <= 1:
        raise UnsupportedParameters(f"classification requires 1 < p < inf, got p = {fmt_short(p)}")
    if is_inf(p):
        return _classify_holder(s1, s2, n, q1, q2)
    q1 = _fine_index(q1, p, "q1")
    q2 = _fine_index(q2, p, "q2")
    d = d_np(p, n)
    tp, tm = max(_ZERO, d), min(_ZERO, d)
    src_lim, tgt_lim = s1 == tp, s2 == tm
    fine = q1 != p or q2 != p
    strictly_inside = s1 > tp and s2 < tm

    if fine and not strictly_inside:
        raise UnsupportedParameters(
            "fine indices q1, q2 != p are classified only for s1 > tau+ and s2 < tau-; "
            "the limiting lines for B^s_{p,q} are unresolved"
        )
    if s1 < tp:
        return MappingVerdict(OUTSIDE_SOURCE, src_lim, tgt_lim, derivation=("Cor 3.3",))
    if s2 > tm:
        return MappingVerdict(OUTSIDE_TARGET, src_lim, tgt_lim, derivation=("Cor 3.3",))
    if src_lim or tgt_lim:
        return MappingVerdict(LIMITING, src_lim, tgt_lim, derivation=("Prop 3.1", "Thm 3.2"))

    inv_p = recip(p)
    params = dict(s1=s1, s2=s2, n=n, d=d, inv_p=inv_p)
    if fine:
        table = rates.FOURIER_FINE_SMALL_P if p < 2 else rates.FOURIER_FINE_LARGE_P
        case, law = table.select(**params)
        deriv = ("Thm 3.2", case.citation)
        if law.bound_type == rates.OPEN:
            deriv += ("Problem 5.3",)
    else:
        if p == 2:
            table = rates.FOURIER_HILBERT
        elif p < 2:
            table = rates.FOURIER_SMALL_P
        else:
            table = rates.FOURIER_LARGE_P
        case, law = table.select(**params)
        deriv = ("Thm 3.2", case.citation)
    return MappingVerdict(COMPACT, False, False, law, deriv)


def _classify_holder(s1, s2, n, q1, q2):
    for q in (q1, q2):
        if q is not None and not is_inf(as_rational(q, allow_inf=True)):
            raise UnsupportedParameters("p = inf is admitted only for Hoelder spaces (q = inf)")
    if not (s2 + n < 0 < s1):
        raise UnsupportedParameters(
            "p = inf is admitted only for C^{s1} -> C^{s2} with s2 + n < 0 < s1; "
            "otherwise classification requires 1 < p < inf"
        )
    params = dict(s1=s1, s2=s2, n=n)
    case, law = rates.HOLDER_CONJECTURE.select(**params)
    return MappingVerdict(COMPACT, False, False, law, ("Problem 5.6", case.citation))


def classify_spaces(src, dst):
    """Classify F: src -> dst for SpaceSpec arguments on a common p.

    Fractional Sobolev spaces H^s_p = F^s_{p,2} are replaced by their Besov
    envelope: the source by B^s_{p,max(p,2)}, the target by B^s_{p,min(p,2)},
    so any resulting rate is an upper bound.
    """
    if src.n != dst.n:
        raise UnsupportedParameters("source and target dimensions differ")
    s1, p1, q1, via1 = _besov_envelope(src, source=True)
    s2, p2, q2, via2 = _besov_envelope(dst, source=False)
    if p1 != p2:
        raise UnsupportedParameters("source and target must share p")
    verdict = classify_fourier(p1, s1, s2, src.n, q1, q2)
    if not (via1 or via2):
        return verdict
    rate = verdict.rate
    if rate is not None and rate.bound_type == rates.EQUIVALENCE and p1 != 2:
        rate = rate.with_bound(rates.UPPER_BOUND)
    return MappingVerdict(verdict.status, verdict.source_limiting, verdict.target_limiting,
                          rate, verdict.derivation + ("Remark 4.11 (4.56)",))


def _besov_envelope(x, source):
    c = x.canonical()
    if c.family is Family.BESOV:
        return c.s, c.p, c.q, False
    if c.family is Family.LORENTZ and c.r == c.p:
        return _ZERO, c.p, c.p, False
    if c.family is Family.SOBOLEV_FRACTIONAL:
        q = max(c.p, Fraction(2)) if source else min(c.p, Fraction(2))
        return c.s, c.p, q, True
    raise UnsupportedParameters(f"{x} is not on a Besov or Sobolev scale")


def classify_lorentz_source(p, r, n=1):
    """F: L_{p,r}(R^n) -> C^{-n/p'}(R^n), continuous and never compact."""
    p = _check_p(p)
    r = as_rational(r, allow_inf=True)
    if not (1 < p and not is_inf(p)):
        raise UnsupportedParameters(f"Lorentz source requires 1 < p < inf, got p = {fmt_short(p)}")
    if r <= 0:
        raise UnsupportedParameters(f"Lorentz source requires 0 < r <= inf, got r = {fmt_short(r)}")
    target_s = -n / conjugate(p)
    d = d_np(p, n)
    chain = "Remark 2.6 (2.33)" if p <= 2 else "Remark 2.6 (2.34)"
    return MappingVerdict(
        LIMITING,
        source_limiting=max(_ZERO, d) == 0,
        target_limiting=target_s == min(_ZERO, d),
        derivation=("Remark 2.6 (2.32)", chain, "Thm 2.5 (2.26)-(2.29)"),
        target=holder(target_s, n),
    )


def classify_embedding(src, dst):
    """Compactness and entropy rate of id: B^{s1}_{p1,q1}(w_alpha) -> B^{s2}_{p2,q2}."""
    a = src.canonical()
    b = dst.canonical()
    if a.family is Family.BESOV:
        a = SpaceSpec(Family.WEIGHTED_BESOV, a.s, a.p, a.q, alpha=_ZERO, n=a.n)
    if a.family is not Family.WEIGHTED_BESOV:
        raise UnsupportedParameters(f"embedding source must be a weighted Besov space, got {src}")
    if b.family is not Family.BESOV:
        raise UnsupportedParameters(f"embedding target must be a Besov space, got {dst}")
    if a.n != b.n:
        raise UnsupportedParameters("source and target dimensions differ")
    if a.alpha < 0:
        raise UnsupportedParameters(f"weight exponent must satisfy alpha >= 0, got {a.alpha}")
    n = a.n
    inv_p1, inv_p2 = recip(a.p), recip(b.p)
    delta = a.s - n * inv_p1 - (b.s - n * inv_p2)
    inv_pstar = inv_p1 + a.alpha / n
    rho = (a.s - b.s) / n + recip(b.q) - recip(a.q)
    compact = a.s > b.s and delta > 0 and a.alpha > 0 and inv_p2 < inv_pstar
    if not compact:
        return EmbeddingVerdict(False, delta, inv_pstar, rho, derivation=("Prop 4.5 (4.9)",))
    case, law = rates.WEIGHTED_EMBEDDING.select(
        s1=a.s, s2=b.s, n=n, alpha=a.alpha, delta=delta, rho=rho, inv_p1=inv_p1, inv_p2=inv_p2
    )
    return EmbeddingVerdict(True, delta, inv_pstar, rho, law, law is None,
                            ("Prop 4.5 (4.9)", case.citation))


def weighted_l2_embedding_rate(alpha, s, p, n=1):
    """Entropy rate of id: L_2(w_alpha) -> B^s_p (H^s when p = 2)."""
    alpha, s = as_rational(alpha), as_rational(s)
    p = _check_p(p)
    inv_p = recip(p)
    delta = n * (inv_p - Fraction(1, 2)) - s
    if not (alpha > 0 and s < 0):
        raise UnsupportedParameters("requires alpha > 0 and s < 0 (4.20)")
    if not (0 <= inv_p < Fraction(1, 2) + alpha / n and delta > 0):
        raise UnsupportedParameters(
            "requires 0 <= 1/p < 1/2 + alpha/n and delta = n(1/p - 1/2) - s > 0 (4.20)"
        )
    table = rates.WEIGHTED_L2_TO_SOBOLEV if p == 2 else rates.WEIGHTED_L2_TO_BESOV
    _, law = table.select(alpha=alpha, s=s, n=n, inv_p=inv_p, delta=delta)
    return law


def dual_space(x):
    """Dual space under the (S, S') pairing for 1 < p < inf."""
    f = x.family
    if f not in (Family.BESOV_DIAG, Family.BESOV, Family.LP, Family.SOBOLEV):
        raise UnsupportedParameters(f"duality is implemented for B^s_p, L_p and H^s, got {f.value}")
    if is_inf(x.p) or not 1 < x.p:
        raise UnsupportedParameters(f"duality requires 1 < p < inf, got p = {fmt_short(x.p)}")
    if f is Family.BESOV:
        if x.q != x.p:
            raise UnsupportedParameters("duality is implemented for B^s_{p,p} only")
        return besov(-x.s, conjugate(x.p), conjugate(x.p), x.n)
    if f is Family.BESOV_DIAG:
        return besov_diag(-x.s, conjugate(x.p), x.n)
    if f is Family.SOBOLEV:
        return sobolev(-x.s, x.n)
    return lp(conjugate(x.p), x.n)


# --- Figure-style region map -----------------------------------------------

SOURCE_REGION = "source_region"
SOURCE_BOUNDARY = "source_limiting_boundary"
TARGET_REGION = "target_region"
TARGET_BOUNDARY = "target_limiting_boundary"
EXCLUDED = "excluded"


def region_tags(inv_p, s, n=1):
    inv_p, s = as_rational(inv_p), as_rational(s)
    d = 2 * n * (inv_p - Fraction(1, 2))
    tp, tm = max(_ZERO, d), min(_ZERO, d)
    tags = []
    if s > tp:
        tags.append(SOURCE_REGION)
    elif s == tp:
        tags.append(SOURCE_BOUNDARY)
    if s < tm:
        tags.append(TARGET_REGION)
    elif s == tm:
        tags.append(TARGET_BOUNDARY)
    return tuple(tags) or (EXCLUDED,)


def region_grid(p_steps, s_range, n=1, s_steps=9):
    """Tag the points 1/p = k/(p_steps+1), s on an even grid over s_range."""
    if not isinstance(p_steps, int) or p_steps < 2:
        raise DomainError(f"p_steps must be an integer >= 2, got {p_steps!r}")
    s_min, s_max = (as_rational(v) for v in s_range)
    if s_min > s_max:
        raise DomainError(f"empty smoothness range [{s_min}, {s_max}]")
    if s_min == s_max:
        svals = [s_min]
    else:
        if s_steps < 2:
            raise DomainError("s_steps must be >= 2 for a non-degenerate range")
        svals = [s_min + (s_max - s_min) * Fraction(i, s_steps - 1) for i in range(s_steps)]
    rows = []
    for k in range(1, p_steps + 1):
        inv_p = Fraction(k, p_steps + 1)
        for s in svals:
            rows.append((inv_p, s, region_tags(inv_p, s, n)))
    return rows


def region_grid_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["inv_p", "s", "tag"])
    for inv_p, s, tags in rows:
        w.writerow([fmt_short(inv_p), fmt_short(s), "|".join(tags)])
    return buf.getvalue()
