"""Command-line front end: ``fourier-besov <subcommand> [flags]``.

Every subcommand writes JSON (default) or CSV to stdout or ``--out``.  Exit
status is 0 for any well-formed query, whatever the verdict, and nonzero
with a one-line diagnostic on stderr otherwise.
"""
import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import dataclass, field

import numpy as np

from . import entropy_lab, extremals, rates
from .errors import DomainError, UnsupportedParameters
from .exact import as_rational, fmt
from .gridio import GENERATORS, generate, read_grid
from .littlewood_paley import (
    besov_norm,
    lorentz_norm,
    lp_norm,
    sobolev_norm,
)
from .space_lattice import (
    classify_fourier,
    holder,
    region_grid,
    region_grid_csv,
    tau_minus,
    tau_plus,
)

EXIT_OK = 0
EXIT_QUERY_ERROR = 1
EXIT_USAGE = 2

# Top-level keys (and JSON types) each subcommand's JSON output must carry.
SCHEMAS = {
    "classify": {"query": dict, "verdict": dict},
    "classify-tables": {"tables": list},
    "region-grid": {"query": dict, "rows": list},
    "norm": {"query": dict, "norm": float, "per_level": list},
    "extremal-demo": {"query": dict, "lp_norms": list, "lp_constancy": float, "separation": dict},
    "svd-rates": {"query": dict, "fit": dict, "predicted": dict, "check": dict},
    "entropy-bounds": {"query": dict, "sigma": list, "brackets": list},
}


def validate_output(kind, obj):
    """Raise ValueError unless ``obj`` carries the keys declared for ``kind``."""
    for key, typ in SCHEMAS[kind].items():
        if key not in obj:
            raise ValueError(f"{kind} output lacks {key!r}")
        if not isinstance(obj[key], typ):
            raise ValueError(f"{kind} output key {key!r} is not {typ.__name__}")
    return True


@dataclass
class RunConfig:
    subcommand: str
    params: dict
    output_format: str = "json"
    output_path: str = None
    seed: int = 0
    grid: dict = field(default_factory=lambda: {"L": 16.0, "N": 1024})


# --- argument types --------------------------------------------------------------

def rational(text):
    try:
        return as_rational(text)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def rational_or_inf(text):
    try:
        return as_rational(text, allow_inf=True)
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


def positive_int(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def half_width(text):
    if text == "auto":
        return "auto"
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("L must be positive or 'auto'")
    return v


def float_list(text):
    parts = [t for t in text.replace(" ", "").split(",") if t]
    try:
        return [float(as_rational(t)) if "/" in t else float(t) for t in parts]
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e)) from None


# --- rendering ------------------------------------------------------------------

def _csv(header, rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _num(x):
    return repr(float(x))


def _dump(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# --- subcommands -------------------------------------------------------------------

def cmd_classify(cfg):
    a = cfg.params
    if a.get("show_tables"):
        tables = [
            {"name": t.name, "citation": t.citation, "bound_type": t.bound_type,
             "cases": [{"condition": c, "formula": f, "citation": cit} for c, f, cit in t.rows()]}
            for t in rates.ALL_TABLES
        ]
        obj = {"tables": tables}
        if cfg.output_format == "csv":
            rows = [(t["name"], c["condition"], c["formula"], c["citation"]) for t in tables for c in t["cases"]]
            return obj, "classify-tables", _csv(["table", "condition", "formula", "citation"], rows)
        return obj, "classify-tables", _dump(obj)
    for key in ("p", "s1", "s2"):
        if a.get(key) is None:
            raise UnsupportedParameters(f"classify needs --{key}")
    v = classify_fourier(a["p"], a["s1"], a["s2"], a["n"], a.get("q1"), a.get("q2"))
    query = {"p": fmt(a["p"]), "s1": fmt(a["s1"]), "s2": fmt(a["s2"]), "n": a["n"]}
    if a.get("q1") is not None:
        query["q1"] = fmt(a["q1"])
    if a.get("q2") is not None:
        query["q2"] = fmt(a["q2"])
    if a["p"] != math.inf:
        query["tau_plus"] = fmt(tau_plus(a["p"], a["n"]))
        query["tau_minus"] = fmt(tau_minus(a["p"], a["n"]))
    obj = {"query": query, "verdict": v.to_json()}
    if cfg.output_format == "csv":
        rate = "" if v.rate is None else v.rate.describe()
        bound = "" if v.rate is None else v.rate.bound_type
        row = [v.status, v.source_limiting, v.target_limiting, rate, bound, ";".join(v.derivation)]
        return obj, "classify", _csv(["status", "source_limiting", "target_limiting", "rate", "bound_type",
                                      "derivation"], [row])
    return obj, "classify", _dump(obj)


def cmd_region_grid(cfg):
    a = cfg.params
    rows = region_grid(a["p_steps"], (a["s_min"], a["s_max"]), a["n"], a["s_steps"])
    query = {"n": a["n"], "p_steps": a["p_steps"], "s_min": fmt(a["s_min"]), "s_max": fmt(a["s_max"]),
             "s_steps": a["s_steps"]}
    obj = {"query": query, "rows": [{"inv_p": fmt(i), "s": fmt(s), "tags": list(t)} for i, s, t in rows]}
    if cfg.output_format == "csv":
        return obj, "region-grid", region_grid_csv(rows)
    return obj, "region-grid", _dump(obj)


def _load_function(a):
    if a.get("input"):
        return read_grid(a["input"]), {"input": a["input"]}
    if a.get("generator"):
        params = {"n": a["grid_n"], "N": a["N"], "L": a["L"]}
        for key in ("width", "radius", "freq"):
            if a.get(key) is not None:
                params[key] = a[key]
        return generate(a["generator"], **params), {"generator": a["generator"], **params}
    raise UnsupportedParameters("norm needs --input PATH or --generator NAME")


def cmd_norm(cfg):
    a = cfg.params
    f, source = _load_function(a)
    space = a["space"]
    s, p, q, r, alpha = a.get("s"), a.get("p"), a.get("q"), a.get("r"), a.get("alpha")
    per_level, meta = [], {}
    if space == "L":
        value = lp_norm(f, p if p is not None else 2)
    elif space == "Lorentz":
        if p is None or r is None:
            raise UnsupportedParameters("Lorentz norm needs --p and --r")
        value = lorentz_norm(f, p, r)
    elif space == "H":
        value = sobolev_norm(f, float(s if s is not None else 0))
    elif space in ("B", "Bw", "C"):
        if s is None:
            raise UnsupportedParameters(f"space {space} needs --s")
        if space == "C":
            p = q = math.inf
        elif p is None:
            raise UnsupportedParameters(f"space {space} needs --p")
        q = p if q is None else q
        if space == "Bw" and alpha is None:
            raise UnsupportedParameters("weighted Besov norm needs --alpha")
        res = besov_norm(f, s, p, q, alpha=alpha if space == "Bw" else None, J=a.get("J"))
        value, per_level = res.total, res.per_level
        meta = {"truncation_level": res.truncation_level, "tail_l2": res.tail}
    else:  # argparse restricts choices; kept for direct callers
        raise UnsupportedParameters(f"unknown space {space!r}")
    query = {"space": space, **source}
    for key, v in (("s", s), ("p", p), ("q", q), ("r", r), ("alpha", alpha)):
        if v is not None:
            query[key] = fmt(v)
    obj = {"query": query, "norm": float(value), "per_level": [[j, float(v)] for j, v in per_level], **meta}
    if cfg.output_format == "csv":
        rows = [("total", _num(value))] + [(j, _num(v)) for j, v in per_level]
        return obj, "norm", _csv(["level", "value"], rows)
    return obj, "norm", _dump(obj)


def cmd_extremal_demo(cfg):
    a = cfg.params
    kind, p, n = a["kind"], a["p"], a["n"]
    if kind not in extremals.KINDS:
        raise UnsupportedParameters(f"unknown family kind {kind!r}; choose from {list(extremals.KINDS)}")
    if n != 1:
        raise UnsupportedParameters("extremal demos run in dimension n = 1")
    if not 1 < p < math.inf:
        raise UnsupportedParameters("extremal demos need 1 < p < inf")
    sigma = a.get("target_s")
    if sigma is None:
        sigma = -n * (1 - 1 / p)  # -n/p'
    target = holder(sigma, n)
    count = a.get("members")
    out = {}
    if kind == extremals.DILATED:
        count = count or 7
        fam = extremals.dilated_family_on_grid(
            extremals.default_dilation_profile(), p, n, a.get("N") or 2**16, a.get("L") or 128.0, range(count)
        )
        out["alignment_outside_energy"] = {str(j): v for j, v in extremals.block_alignment(fam).items()}
    else:
        count = count or 9
        base = extremals.default_modulation_base(n, N=a.get("N") or 2048, L_x=a.get("L") or 32 * math.pi)
        fam = extremals.modulated_family(base, range(count), p)
        errs = []
        for m, g in fam.transformed():
            tr = extremals.translate(base, m)
            errs.append(float(np.linalg.norm(g.values - tr.values) / np.linalg.norm(tr.values)))
        out["transform_vs_translate_max_rel_error"] = max(errs)
    norms = fam.lp_norms()
    constancy = max(abs(v / norms[0] - 1) for v in norms)
    sep = extremals.separation_matrix(fam, target)
    obj = {
        "query": {"kind": kind, "p": fmt(p), "n": n, "members": count, "target": target.to_json()},
        "indices": [int(i) for i in fam.indices],
        "lp_norms": norms,
        "lp_constancy": float(constancy),
        "separation": sep.to_json(),
        "meta": fam.meta,
        **out,
    }
    if cfg.output_format == "csv":
        rows = [(int(i), _num(v), _num(t)) for i, v, t in zip(fam.indices, norms, sep.norms)]
        return obj, "extremal-demo", _csv(["index", "lp_norm", "target_norm"], rows)
    return obj, "extremal-demo", _dump(obj)


def cmd_svd_rates(cfg):
    a = cfg.params
    s1, s2, N = a["s1"], a["s2"], a["N"]
    window = (a["window_lo"], a["window_hi"])
    L = a["L"]
    if L == "auto":
        L = entropy_lab.balanced_half_width(s1, s2, N, window[1])
    A = entropy_lab.build_fourier_kernel(s1, s2, 1, L, N)
    fit = entropy_lab.singular_decay(A, window)
    law = entropy_lab.predicted_law(s1, s2)
    check = entropy_lab.rate_check(fit, law, a["tol"])
    obj = {
        "query": {"s1": fmt(s1), "s2": fmt(s2), "L": float(L), "N": N, "window": list(window), "tol": a["tol"]},
        "fit": fit.to_json(),
        "predicted": law.to_json(),
        "check": check,
    }
    if cfg.output_format == "csv":
        return obj, "svd-rates", entropy_lab.sigma_csv(A.singular_values)
    return obj, "svd-rates", _dump(obj)


def cmd_entropy_bounds(cfg):
    a = cfg.params
    if a.get("sigma") is not None:
        sigma = a["sigma"]
    elif a.get("decay") is not None:
        sigma = [j ** (-float(a["decay"])) for j in range(1, a["length"] + 1)]
    else:
        raise UnsupportedParameters("entropy-bounds needs --sigma LIST or --decay RHO")
    if not sigma:
        raise DomainError("sigma must be a non-empty sequence")
    if a["k_min"] > a["k_max"]:
        raise DomainError("empty k range")
    brute = a.get("brute") and len(sigma) <= 2
    brackets = []
    for k in range(a["k_min"], a["k_max"] + 1):
        b = entropy_lab.entropy_bracket_diagonal(sigma, k)
        row = b.to_json()
        if brute and k <= 6:
            row["brute_force"] = entropy_lab.brute_force_entropy(sigma, k, seed=cfg.seed)
        brackets.append(row)
    obj = {"query": {"k_min": a["k_min"], "k_max": a["k_max"], "seed": cfg.seed}, "sigma": [float(s) for s in sigma],
           "brackets": brackets}
    if cfg.output_format == "csv":
        rows = [(b["k"], _num(b["lower"]), _num(b["upper"]),
                 _num(b["brute_force"]) if "brute_force" in b else "") for b in brackets]
        return obj, "entropy-bounds", _csv(["k", "lower", "upper", "brute_force"], rows)
    return obj, "entropy-bounds", _dump(obj)


COMMANDS = {
    "classify": cmd_classify,
    "region-grid": cmd_region_grid,
    "norm": cmd_norm,
    "extremal-demo": cmd_extremal_demo,
    "svd-rates": cmd_svd_rates,
    "entropy-bounds": cmd_entropy_bounds,
}


# --- parser ------------------------------------------------------------------------

# argparse only recognises "-3" or "-0.5" as negative numbers; fractions
# such as "-1/2" must not be mistaken for option flags either
_NEGATIVE_NUMBER = re.compile(r"^-(\d+(\.\d*)?|\.\d+)(/\d+)?$")


def _allow_negative_fractions(parser):
    parser._negative_number_matcher = _NEGATIVE_NUMBER
    return parser


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "csv"], default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS, help="write output to this file")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="fourier-besov", parents=[common],
                                     description="Compactness of the Fourier map between function spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify F between Besov-type spaces")
    p.add_argument("--p", type=rational_or_inf)
    p.add_argument("--s1", type=rational)
    p.add_argument("--s2", type=rational)
    p.add_argument("--n", type=positive_int, default=1)
    p.add_argument("--q1", type=rational_or_inf)
    p.add_argument("--q2", type=rational_or_inf)
    p.add_argument("--show-tables", action="store_true", help="print every rate table and exit")

    p = sub.add_parser("region-grid", parents=[common], help="tag a (1/p, s) grid by region")
    p.add_argument("--n", type=positive_int, default=1)
    p.add_argument("--p-steps", type=int, default=3)
    p.add_argument("--s-min", type=rational, default=rational("-1"))
    p.add_argument("--s-max", type=rational, default=rational("1"))
    p.add_argument("--s-steps", type=int, default=3)

    p = sub.add_parser("norm", parents=[common], help="norm of a sampled function")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="grid file ('n N L' header, then 're im' lines)")
    src.add_argument("--generator", choices=sorted(GENERATORS))
    p.add_argument("--grid-n", type=int, default=1, help="dimension of a generated grid")
    p.add_argument("--N", type=positive_int, default=1024)
    p.add_argument("--L", type=float, default=16.0)
    p.add_argument("--width", type=float)
    p.add_argument("--radius", type=float)
    p.add_argument("--freq", type=float)
    p.add_argument("--space", choices=["L", "Lorentz", "B", "Bw", "C", "H"], default="L")
    p.add_argument("--s", type=rational)
    p.add_argument("--p", type=rational_or_inf)
    p.add_argument("--q", type=rational_or_inf)
    p.add_argument("--r", type=rational_or_inf)
    p.add_argument("--alpha", type=rational)
    p.add_argument("--J", type=int)

    p = sub.add_parser("extremal-demo", parents=[common], help="witness families and their separation")
    p.add_argument("--kind", default="dilated")
    p.add_argument("--p", type=rational, default=rational("4"))
    p.add_argument("--n", type=positive_int, default=1)
    p.add_argument("--members", type=positive_int)
    p.add_argument("--target-s", type=rational)
    p.add_argument("--N", type=positive_int)
    p.add_argument("--L", type=float)

    p = sub.add_parser("svd-rates", parents=[common], help="singular-value decay of the Fourier kernel")
    p.add_argument("--s1", type=rational, required=True)
    p.add_argument("--s2", type=rational, required=True)
    p.add_argument("--L", type=half_width, default=32.0, help="half-width, or 'auto' for a balanced box")
    p.add_argument("--N", type=positive_int, default=512)
    p.add_argument("--window-lo", type=int, default=entropy_lab.DEFAULT_WINDOW[0])
    p.add_argument("--window-hi", type=int, default=entropy_lab.DEFAULT_WINDOW[1])
    p.add_argument("--tol", type=float, default=entropy_lab.DEFAULT_TOL)

    p = sub.add_parser("entropy-bounds", parents=[common], help="entropy brackets of a diagonal operator")
    p.add_argument("--sigma", type=float_list, help="comma-separated non-increasing values")
    p.add_argument("--decay", type=rational, help="use sigma_j = j^-RHO")
    p.add_argument("--length", type=positive_int, default=64)
    p.add_argument("--k-min", type=positive_int, default=1)
    p.add_argument("--k-max", type=positive_int, default=8)
    p.add_argument("--brute", action="store_true", help="add brute-force values (dimension <= 2, k <= 6)")
    _allow_negative_fractions(parser)
    for sp in sub.choices.values():
        _allow_negative_fractions(sp)
    return parser


def parse_config(argv=None):
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    fmt_ = ns.pop("format", "json")
    out = ns.pop("out", None)
    seed = ns.pop("seed", 0)
    return RunConfig(command, ns, fmt_, out, seed)


def run(cfg):
    """Execute a RunConfig; returns (json object, schema name, rendered text)."""
    return COMMANDS[cfg.subcommand](cfg)


def main(argv=None):
    try:
        cfg = parse_config(argv)
    except SystemExit as e:  # argparse already printed its diagnostic
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        _, _, text = run(cfg)
    except (UnsupportedParameters, DomainError, ValueError, TypeError, LookupError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_QUERY_ERROR
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
