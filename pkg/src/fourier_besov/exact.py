"""Exact rational helpers.

All region predicates run on :class:`fractions.Fraction`; infinity is the
float ``math.inf`` and only ever enters through :func:`recip`.
"""
import math
import re
from fractions import Fraction

INF = math.inf

_RATIONAL_RE = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)(/\d+)?$")


def is_inf(x):
    return isinstance(x, float) and math.isinf(x) and x > 0


def as_rational(x, *, allow_inf=False):
    """Coerce ``x`` to a Fraction (or INF when allowed).

    Accepts ints, Fractions and strings such as ``"1/3"``, ``"-2"`` or
    ``"0.25"``.  Binary floats are rejected: ``0.1`` has no exact meaning on a
    limiting line.
    """
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        t = x.strip().lower()
        if t in ("inf", "infinity", "∞", "+inf"):
            if not allow_inf:
                raise ValueError("infinity is not admitted here")
            return INF
        if not _RATIONAL_RE.match(t):
            raise ValueError(f"malformed rational {x!r}; use 'a/b' or a finite decimal")
        return Fraction(t)
    if isinstance(x, float):
        if is_inf(x):
            if not allow_inf:
                raise ValueError("infinity is not admitted here")
            return INF
        raise TypeError(f"binary float {x!r} is not exact; pass a string such as '1/3'")
    raise TypeError(f"cannot interpret {x!r} as a rational")


def recip(x):
    """1/x with 1/inf = 0."""
    if is_inf(x):
        return Fraction(0)
    return 1 / Fraction(x)


def conjugate(p):
    """Hoelder conjugate p' with 1/p + 1/p' = 1."""
    if is_inf(p):
        return Fraction(1)
    p = Fraction(p)
    if p == 1:
        return INF
    return p / (p - 1)


def sign(x):
    return (x > 0) - (x < 0)


def fmt(x):
    """Stable 'a/b' rendering used by the JSON schemas."""
    if is_inf(x):
        return "inf"
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def to_float(x):
    return math.inf if is_inf(x) else float(x)
