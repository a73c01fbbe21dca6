"""Entropy-number rate laws and the case tables that produce them.

Each table is data: an ordered list of cases, every case pairing a predicate
over the parameter namespace with a builder for the resulting :class:`RateLaw`.
The classifier picks the first matching case; the CLI prints whole tables.
"""
from dataclasses import dataclass
from fractions import Fraction
from types import SimpleNamespace
from typing import Callable, Optional
import math

from .exact import fmt

PURE_POWER = "pure_power"
POWER_TIMES_LOG = "power_times_log"
K_OVER_LOGK = "k_over_logk_power"
K_OVER_LOGK_TIMES_LOG = "k_over_logk_power_times_log"
FORMS = (PURE_POWER, POWER_TIMES_LOG, K_OVER_LOGK, K_OVER_LOGK_TIMES_LOG)

EQUIVALENCE = "equivalence"
UPPER_BOUND = "upper_bound"
CONJECTURE = "conjecture"
OPEN = "open"
BOUND_TYPES = (EQUIVALENCE, UPPER_BOUND, CONJECTURE, OPEN)


@dataclass(frozen=True)
class RateLaw:
    """Envelope ``k^a (log k)^b`` or ``(k/log k)^a (log k)^b`` for e_k."""

    power_exponent: Fraction
    log_exponent: Fraction
    form: str
    bound_type: str

    def __post_init__(self):
        object.__setattr__(self, "power_exponent", Fraction(self.power_exponent))
        object.__setattr__(self, "log_exponent", Fraction(self.log_exponent))
        if self.form not in FORMS:
            raise ValueError(f"unknown form {self.form!r}")
        if self.bound_type not in BOUND_TYPES:
            raise ValueError(f"unknown bound type {self.bound_type!r}")
        has_log = self.form in (POWER_TIMES_LOG, K_OVER_LOGK_TIMES_LOG)
        if has_log != (self.log_exponent != 0):
            raise ValueError(f"form {self.form} inconsistent with log exponent {self.log_exponent}")
        if self.bound_type != OPEN and self.power_exponent >= 0:
            raise ValueError("a compact mapping must have a decaying envelope")

    def with_bound(self, bound_type):
        return RateLaw(self.power_exponent, self.log_exponent, self.form, bound_type)

    def __call__(self, k):
        """Evaluate the envelope (constant 1) at k >= 2."""
        k = float(k)
        a, b = float(self.power_exponent), float(self.log_exponent)
        base = k / math.log(k) if self.form in (K_OVER_LOGK, K_OVER_LOGK_TIMES_LOG) else k
        return base**a * math.log(k) ** b

    def describe(self):
        a = fmt(self.power_exponent)
        if self.form == PURE_POWER:
            s = f"k^({a})"
        elif self.form == POWER_TIMES_LOG:
            s = f"k^({a}) (log k)^({fmt(self.log_exponent)})"
        elif self.form == K_OVER_LOGK:
            s = f"(k/log k)^({a})"
        else:
            s = f"(k/log k)^({a}) (log k)^({fmt(self.log_exponent)})"
        return f"{s} [{self.bound_type}]"

    def to_json(self):
        return {
            "form": self.form,
            "power_exponent": fmt(self.power_exponent),
            "log_exponent": fmt(self.log_exponent),
            "bound_type": self.bound_type,
        }

    @classmethod
    def from_json(cls, d):
        return cls(Fraction(d["power_exponent"]), Fraction(d["log_exponent"]), d["form"], d["bound_type"])


def power(a, bound_type):
    return RateLaw(a, 0, PURE_POWER, bound_type)


def power_log(a, b, bound_type):
    return RateLaw(a, b, POWER_TIMES_LOG, bound_type)


def k_over_logk(a, bound_type, b=0):
    return RateLaw(a, b, K_OVER_LOGK_TIMES_LOG if b else K_OVER_LOGK, bound_type)


@dataclass(frozen=True)
class RateCase:
    condition: str
    formula: str
    citation: str
    applies: Callable[[SimpleNamespace], bool]
    law: Callable[[SimpleNamespace], Optional[RateLaw]]


@dataclass(frozen=True)
class RateTable:
    name: str
    citation: str
    bound_type: str
    cases: tuple

    def select(self, **params):
        """Return (case, law) for the first case whose predicate holds."""
        P = SimpleNamespace(**params)
        for case in self.cases:
            if case.applies(P):
                return case, case.law(P)
        raise LookupError(f"no case of {self.name} matches {params}")

    def rows(self):
        return [(c.condition, c.formula, c.citation) for c in self.cases]


def _three_way(name, citation, bound_type, key, labels, formulas, laws):
    """Table keyed on the sign of ``key(P)`` in the order >0, =0, <0."""
    preds = (lambda P: key(P) > 0, lambda P: key(P) == 0, lambda P: key(P) < 0)
    cases = tuple(
        RateCase(lbl, f, citation, pred, law) for lbl, f, pred, law in zip(labels, formulas, preds, laws)
    )
    return RateTable(name, citation, bound_type, cases)


def _half(P):
    # 1/p - 1/2
    return P.inv_p - Fraction(1, 2)


FOURIER_HILBERT = _three_way(
    "fourier_hilbert",
    "Thm 4.8 (4.31)",
    EQUIVALENCE,
    lambda P: P.s2 + P.s1,
    ("s2 > -s1", "s2 = -s1", "s2 < -s1"),
    ("k^(s2/n)", "(k/log k)^(s2/n)", "k^(-s1/n)"),
    (
        lambda P: power(P.s2 / P.n, EQUIVALENCE),
        lambda P: k_over_logk(P.s2 / P.n, EQUIVALENCE),
        lambda P: power(-P.s1 / P.n, EQUIVALENCE),
    ),
)

FOURIER_SMALL_P = _three_way(
    "fourier_small_p",
    "Thm 4.8 (4.33)",
    UPPER_BOUND,
    lambda P: P.s2 - (P.d - P.s1),
    ("s2 > d - s1", "s2 = d - s1", "s2 < d - s1"),
    ("k^(s2/n)", "(k/log k)^(s2/n) (log k)^(1/p-1/2)", "k^(-s1/n + 2(1/p-1/2))"),
    (
        lambda P: power(P.s2 / P.n, UPPER_BOUND),
        lambda P: k_over_logk(P.s2 / P.n, UPPER_BOUND, _half(P)),
        lambda P: power(-P.s1 / P.n + 2 * _half(P), UPPER_BOUND),
    ),
)

FOURIER_LARGE_P = _three_way(
    "fourier_large_p",
    "Thm 4.8 (4.35)",
    UPPER_BOUND,
    lambda P: P.s2 - (P.d - P.s1),
    ("s2 > d - s1", "s2 = d - s1", "s2 < d - s1"),
    ("k^(s2/n - 2(1/p-1/2))", "(k/log k)^(-s1/n) (log k)^(1/2-1/p)", "k^(-s1/n)"),
    (
        lambda P: power(P.s2 / P.n - 2 * _half(P), UPPER_BOUND),
        lambda P: k_over_logk(-P.s1 / P.n, UPPER_BOUND, -_half(P)),
        lambda P: power(-P.s1 / P.n, UPPER_BOUND),
    ),
)

# On the line s1 + s2 = d both neighbouring powers coincide; only the log
# factor is unknown, so the open law carries the shared power.
FOURIER_FINE_SMALL_P = _three_way(
    "fourier_fine_index_small_p",
    "Cor 4.10 (4.51)",
    UPPER_BOUND,
    lambda P: P.s2 - (P.d - P.s1),
    ("s2 > d - s1", "s2 = d - s1", "s2 < d - s1"),
    ("k^(s2/n)", "open", "k^(-s1/n + 2(1/p-1/2))"),
    (
        lambda P: power(P.s2 / P.n, UPPER_BOUND),
        lambda P: power(P.s2 / P.n, OPEN),
        lambda P: power(-P.s1 / P.n + 2 * _half(P), UPPER_BOUND),
    ),
)

FOURIER_FINE_LARGE_P = _three_way(
    "fourier_fine_index_large_p",
    "Cor 4.10 (4.53)",
    UPPER_BOUND,
    lambda P: P.s2 - (P.d - P.s1),
    ("s2 > d - s1", "s2 = d - s1", "s2 < d - s1"),
    ("k^(s2/n - 2(1/p-1/2))", "open", "k^(-s1/n)"),
    (
        lambda P: power(P.s2 / P.n - 2 * _half(P), UPPER_BOUND),
        lambda P: power(-P.s1 / P.n, OPEN),
        lambda P: power(-P.s1 / P.n, UPPER_BOUND),
    ),
)

HOLDER_CONJECTURE = _three_way(
    "holder_conjecture",
    "Problem 5.6 (5.3)",
    CONJECTURE,
    lambda P: P.s1 + P.s2 + P.n,
    ("s1 + s2 + n > 0", "s1 + s2 + n = 0", "s1 + s2 + n < 0"),
    ("k^(s2/n + 1)", "(k/log k)^(-s1/n) (log k)^(1/2)", "k^(-s1/n)"),
    (
        lambda P: power(P.s2 / P.n + 1, CONJECTURE),
        lambda P: k_over_logk(-P.s1 / P.n, CONJECTURE, Fraction(1, 2)),
        lambda P: power(-P.s1 / P.n, CONJECTURE),
    ),
)

WEIGHTED_EMBEDDING = RateTable(
    "weighted_embedding",
    "Prop 4.5",
    EQUIVALENCE,
    (
        RateCase("delta < alpha", "k^(-(s1-s2)/n)", "Prop 4.5 (4.10)",
                 lambda P: P.delta < P.alpha,
                 lambda P: power(-(P.s1 - P.s2) / P.n, EQUIVALENCE)),
        RateCase("delta > alpha", "k^(-alpha/n + 1/p2 - 1/p1)", "Prop 4.5 (4.11)",
                 lambda P: P.delta > P.alpha,
                 lambda P: power(-P.alpha / P.n + P.inv_p2 - P.inv_p1, EQUIVALENCE)),
        RateCase("delta = alpha, rho < 0", "k^(-(s1-s2)/n)", "Prop 4.5 (4.13)",
                 lambda P: P.rho < 0,
                 lambda P: power(-(P.s1 - P.s2) / P.n, EQUIVALENCE)),
        RateCase("delta = alpha, rho > 0", "k^(-(s1-s2)/n) (log k)^rho", "Prop 4.5 (4.14)",
                 lambda P: P.rho > 0,
                 lambda P: power_log(-(P.s1 - P.s2) / P.n, P.rho, EQUIVALENCE)),
        RateCase("delta = alpha, rho = 0", "open", "Prop 4.5 (4.12)",
                 lambda P: True,
                 lambda P: None),
    ),
)

WEIGHTED_L2_TO_BESOV = _three_way(
    "weighted_l2_to_besov",
    "Cor 4.7 (4.22)",
    EQUIVALENCE,
    lambda P: P.alpha - P.delta,
    ("delta < alpha", "delta = alpha", "delta > alpha"),
    ("k^(s/n)", "k^(s/n) (log k)^(alpha/n)", "k^(-alpha/n + 1/p - 1/2)"),
    (
        lambda P: power(P.s / P.n, EQUIVALENCE),
        lambda P: power_log(P.s / P.n, P.alpha / P.n, EQUIVALENCE),
        lambda P: power(-P.alpha / P.n + _half(P), EQUIVALENCE),
    ),
)

WEIGHTED_L2_TO_SOBOLEV = _three_way(
    "weighted_l2_to_sobolev",
    "Cor 4.7 (4.24)",
    EQUIVALENCE,
    lambda P: P.alpha + P.s,
    ("-s < alpha", "-s = alpha", "-s > alpha"),
    ("k^(s/n)", "(k/log k)^(s/n)", "k^(-alpha/n)"),
    (
        lambda P: power(P.s / P.n, EQUIVALENCE),
        lambda P: k_over_logk(P.s / P.n, EQUIVALENCE),
        lambda P: power(-P.alpha / P.n, EQUIVALENCE),
    ),
)

ALL_TABLES = (
    FOURIER_HILBERT,
    FOURIER_SMALL_P,
    FOURIER_LARGE_P,
    FOURIER_FINE_SMALL_P,
    FOURIER_FINE_LARGE_P,
    HOLDER_CONJECTURE,
    WEIGHTED_EMBEDDING,
    WEIGHTED_L2_TO_BESOV,
    WEIGHTED_L2_TO_SOBOLEV,
)
