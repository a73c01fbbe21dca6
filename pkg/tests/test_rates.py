import json
import math
from fractions import Fraction
from pathlib import Path

import pytest

from fourier_besov import rates
from fourier_besov.rates import RateLaw
from fourier_besov.space_lattice import (
    besov,
    classify_embedding,
    classify_fourier,
    weighted_besov,
    weighted_l2_embedding_rate,
)

GOLDEN = json.loads((Path(__file__).parent / "golden_rates.json").read_text())


def evaluate(params):
    """Run the library on one golden tuple; returns (law or None, open flag)."""
    kind = params["kind"]
    if kind == "fourier":
        v = classify_fourier(params["p"], params["s1"], params["s2"], params["n"],
                             params.get("q1"), params.get("q2"))
        return v.rate, v.rate is not None and v.rate.bound_type == rates.OPEN
    if kind == "weighted_l2":
        law = weighted_l2_embedding_rate(params["alpha"], params["s"], params["p"], params["n"])
        return law, False
    n, src, dst = params["n"], params["src"], params["dst"]
    v = classify_embedding(weighted_besov(src["s"], src["p"], src["q"], src["alpha"], n),
                           besov(dst["s"], dst["p"], dst["q"], n))
    assert v.compact
    return v.rate, v.open


def test_golden_file_has_thirty_tuples():
    assert len(GOLDEN) == 30
    assert len({g["id"] for g in GOLDEN}) == 30


@pytest.mark.parametrize("entry", GOLDEN, ids=[g["id"] for g in GOLDEN])
def test_rate_matches_golden(entry):
    law, is_open = evaluate(entry["params"])
    expected = entry["expected"]
    if expected is None:
        assert law is None and is_open
        return
    assert law.to_json() == expected
    assert is_open == (expected["bound_type"] == rates.OPEN)


def test_every_table_branch_is_covered_by_golden():
    hit = set()
    for entry in GOLDEN:
        p = entry["params"]
        if p["kind"] == "fourier":
            v = classify_fourier(p["p"], p["s1"], p["s2"], p["n"], p.get("q1"), p.get("q2"))
            hit.add(v.derivation[1])
        elif p["kind"] == "embedding":
            src, dst = p["src"], p["dst"]
            v = classify_embedding(weighted_besov(src["s"], src["p"], src["q"], src["alpha"], p["n"]),
                                   besov(dst["s"], dst["p"], dst["q"], p["n"]))
            hit.add(v.derivation[1])
    assert {"Thm 4.8 (4.31)", "Thm 4.8 (4.33)", "Thm 4.8 (4.35)", "Cor 4.10 (4.51)", "Cor 4.10 (4.53)"} <= hit
    assert {"Prop 4.5 (4.10)", "Prop 4.5 (4.11)", "Prop 4.5 (4.12)", "Prop 4.5 (4.13)", "Prop 4.5 (4.14)"} <= hit


@pytest.mark.parametrize(
    "a, b, form",
    [(-1, 1, rates.PURE_POWER), (-1, 0, rates.POWER_TIMES_LOG), (-1, 1, rates.K_OVER_LOGK),
     (-1, 0, rates.K_OVER_LOGK_TIMES_LOG)],
)
def test_rate_law_rejects_inconsistent_forms(a, b, form):
    with pytest.raises(ValueError):
        RateLaw(a, b, form, rates.EQUIVALENCE)


def test_rate_law_requires_decay_unless_open():
    with pytest.raises(ValueError):
        RateLaw(0, 0, rates.PURE_POWER, rates.UPPER_BOUND)
    assert RateLaw(Fraction(1, 2), 0, rates.PURE_POWER, rates.OPEN).power_exponent == Fraction(1, 2)


def test_rate_law_json_round_trip():
    law = rates.k_over_logk(Fraction(-2, 3), rates.UPPER_BOUND, Fraction(1, 6))
    assert RateLaw.from_json(law.to_json()) == law


def test_rate_law_evaluates_envelope():
    law = rates.power_log(Fraction(-1), Fraction(1), rates.EQUIVALENCE)
    assert law(8) == pytest.approx(8.0**-1 * math.log(8))


def test_tables_have_printable_rows():
    for table in rates.ALL_TABLES:
        rows = table.rows()
        assert rows and all(len(r) == 3 for r in rows)
