"""Command-line front end.

Subcommands: exact, modular, estimate, ehrhart, series, delta, minentry,
verify-integral, audit.  Every subcommand accepts --format {text,json}
and --out FILE (JSON duplicate of the result).  Counting commands share
the JSON-lines results store at $SYMCOUNT_STORE (default
symcount_store.jsonl in the working directory).

Exit status: 0 success, 1 domain/usage error, 2 internal inconsistency
(method disagreement, store corruption, or non-polynomial data).
"""

import argparse
import json
import math
import sys
from fractions import Fraction

import mpmath

from . import __version__
from .asymptotics import (
    conjecture_delta,
    estimate_big_lambda,
    estimate_binomial_form,
    estimate_naive,
    estimate_saddle_form,
    min_entry_prob_asymptotic,
    min_entry_prob_exact,
)
from .backtrack import count_backtracking
from .ehrhart import (
    branch_degree,
    collect_values,
    h_vector,
    interpolate_quasipolynomial,
    series_numerator,
)
from .errors import (
    DomainError,
    MethodConflict,
    NegativeEntry,
    NonIntegerValue,
    NonPolynomialData,
    StoreCorrupt,
    SymcountError,
    TrailingNonzero,
)
from .instance import Instance, trivial_count
from .integral import IntegrandParams, aliasing_bound, count_by_quadrature, default_grid
from .modular import count_crt, plan_primes
from .store import ResultsStore, count_cached

_INCONSISTENCY = (
    MethodConflict,
    StoreCorrupt,
    NonPolynomialData,
    TrailingNonzero,
    NegativeEntry,
    NonIntegerValue,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; reserve 2 for inconsistencies
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(sub):
    sub.add_argument("--format", choices=("text", "json"), default="text")
    sub.add_argument("--out", metavar="FILE", help="also write the JSON result here")


def _add_nl(sub):
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--l", type=int, required=True)


def build_parser():
    parser = _Parser(prog="symcount", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"symcount {__version__}")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("exact", help="exact count via the cached pipeline")
    _add_nl(p)
    _add_common(p)

    p = subs.add_parser("modular", help="exact count via residues and CRT")
    _add_nl(p)
    p.add_argument("--threads", type=int, default=1)
    p.add_argument("--force-q", type=int, default=None, dest="force_q")
    p.add_argument("--emit-plans", action="store_true", dest="emit_plans")
    _add_common(p)

    p = subs.add_parser("estimate", help="closed-form log estimates")
    _add_nl(p)
    p.add_argument(
        "--form",
        choices=("saddle", "binomial", "biglambda", "naive"),
        required=True,
    )
    _add_common(p)

    p = subs.add_parser("ehrhart", help="branch polynomials, h-vectors, series")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-l", type=int, default=None, dest="max_l")
    _add_common(p)

    p = subs.add_parser("series", help="generating-function numerator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-l", type=int, default=None, dest="max_l")
    _add_common(p)

    p = subs.add_parser("delta", help="refined-constant statistic Delta(n,l)")
    _add_nl(p)
    _add_common(p)

    p = subs.add_parser("minentry", help="minimum-entry probability")
    _add_nl(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--asymptotic", action="store_true")
    _add_common(p)

    p = subs.add_parser("verify-integral", help="contour-integral quadrature check")
    _add_nl(p)
    p.add_argument("--grid", type=int, default=None)
    _add_common(p)

    p = subs.add_parser("audit", help="cross-method and conjecture audit")
    p.add_argument("--max-n", type=int, required=True, dest="max_n")
    p.add_argument("--max-l", type=int, required=True, dest="max_l")
    p.add_argument("--threads", type=int, default=1)
    _add_common(p)

    return parser


def _emit(args, result, text_lines):
    if args.format == "json":
        print(json.dumps(result))
    else:
        for line in text_lines:
            print(line)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump(result, fh, indent=2)
            fh.write("\n")


def _frac_str(fr):
    return f"{fr.numerator}/{fr.denominator}" if fr.denominator != 1 else str(fr.numerator)


def cmd_exact(args):
    inst = Instance(args.n, args.l)
    cv = count_cached(inst, ResultsStore())
    result = {"n": inst.n, "l": inst.l, "value": str(cv.value), "method": cv.method}
    _emit(args, result, [str(cv.value)])
    return 0


def cmd_modular(args):
    inst = Instance(args.n, args.l)
    store = ResultsStore()
    plans = None
    lines = []
    if trivial_count(inst) is None:
        plans = plan_primes(inst, force_q=args.force_q)
    cv = count_crt(inst, threads=args.threads, force_q=args.force_q, plans=plans)
    store.record(cv)
    plan_rows = []
    if plans is not None:
        plan_rows = [
            {"p": pl.p, "q": pl.q, "alpha": pl.alpha, "beta": pl.beta}
            for pl in plans
        ]
        if args.emit_plans:
            for pl in plans:
                lines.append(f"plan: p={pl.p} q={pl.q} alpha={pl.alpha} beta={pl.beta}")
    lines.append(str(cv.value))
    result = {
        "n": inst.n,
        "l": inst.l,
        "value": str(cv.value),
        "method": cv.method,
        "plans": plan_rows,
    }
    _emit(args, result, lines)
    return 0


def cmd_estimate(args):
    inst = Instance(args.n, args.l)
    fn = {
        "saddle": estimate_saddle_form,
        "binomial": estimate_binomial_form,
        "biglambda": estimate_big_lambda,
        "naive": estimate_naive,
    }[args.form]
    est = fn(inst)
    with mpmath.workdps(60):
        log_str = mpmath.nstr(est.log_value, 30)
        log10 = est.log_value / mpmath.log(10)
        decimal = mpmath.nstr(mpmath.exp(est.log_value), 20) if log10 < 40 else None
    lines = [f"log_value = {log_str}", f"formula = {est.formula}"]
    if decimal is not None:
        lines.append(f"value ~= {decimal}")
    result = {
        "n": inst.n,
        "l": inst.l,
        "formula": est.formula,
        "log_value": log_str,
        "value": decimal,
    }
    _emit(args, result, lines)
    return 0


def _branch_payload(n, values):
    qp = interpolate_quasipolynomial(n, values)
    d = branch_degree(n)
    series = series_numerator(n, values)
    h_even = h_vector(n, "even", values)
    h_odd = h_vector(n, "odd", values)
    return qp, series, h_even, h_odd, d


def cmd_ehrhart(args):
    n = args.n
    d = branch_degree(n)
    top = 2 * (d + 1)
    max_l = args.max_l if args.max_l is not None else top + 2
    if max_l < top:
        raise DomainError(f"--max-l must be at least {top} for n={n}")
    values = collect_values(n, range(max_l + 1), ResultsStore())
    qp, series, h_even, h_odd, d = _branch_payload(n, values)
    result = {
        "n": n,
        "d": d,
        "branches": {
            "even": [_frac_str(c) for c in qp.even],
            "odd": [_frac_str(c) for c in qp.odd],
        },
        "h_vectors": {
            "even": [str(h) for h in h_even.entries],
            "odd": [str(h) for h in h_odd.entries],
        },
        "series_numerator": [str(c) for c in series.numerator],
        "denominator_power": series.denominator_power,
    }
    lines = [
        f"n = {n}, branch degree d = {d}",
        "even branch (ascending): " + " ".join(_frac_str(c) for c in qp.even),
        "odd branch  (ascending): " + " ".join(_frac_str(c) for c in qp.odd),
        "h-vector (even): " + " ".join(str(h) for h in h_even.entries),
        "h-vector (odd):  " + " ".join(str(h) for h in h_odd.entries),
        "series numerator (ascending): "
        + " ".join(str(c) for c in series.numerator),
        f"denominator power = {series.denominator_power}",
    ]
    _emit(args, result, lines)
    return 0


def cmd_series(args):
    n = args.n
    d = branch_degree(n)
    top = 2 * (d + 1)
    max_l = args.max_l if args.max_l is not None else top
    if max_l < top:
        raise DomainError(f"--max-l must be at least {top} for n={n}")
    values = collect_values(n, range(max_l + 1), ResultsStore())
    series = series_numerator(n, values)
    result = {
        "n": n,
        "series_numerator": [str(c) for c in series.numerator],
        "denominator_power": series.denominator_power,
    }
    lines = [
        "series numerator (ascending): " + " ".join(str(c) for c in series.numerator),
        f"denominator power = {series.denominator_power}",
    ]
    _emit(args, result, lines)
    return 0


def cmd_delta(args):
    inst = Instance(args.n, args.l)
    cv = count_cached(inst, ResultsStore())
    dv = conjecture_delta(inst, cv)
    with mpmath.workdps(60):
        delta_str = mpmath.nstr(dv.delta, 20)
    within = abs(dv.delta) < 1
    lines = [
        f"M({inst.n},{inst.l}) = {cv.value}",
        f"Delta = {delta_str}",
        f"|Delta| < 1: {'yes' if within else 'NO (conjecture violated)'}",
    ]
    result = {
        "n": inst.n,
        "l": inst.l,
        "value": str(cv.value),
        "delta": delta_str,
        "within_conjecture": bool(within),
    }
    _emit(args, result, lines)
    return 0


def cmd_minentry(args):
    inst = Instance(args.n, args.l)
    if args.asymptotic:
        prob = min_entry_prob_asymptotic(inst, args.k)
        lines = [f"Prob(min entry >= {args.k}) ~= {prob:.12g}"]
        result = {"n": inst.n, "l": inst.l, "k": args.k, "asymptotic": f"{prob:.17g}"}
    else:
        prob = min_entry_prob_exact(inst, args.k, ResultsStore())
        lines = [
            f"Prob(min entry >= {args.k}) = {_frac_str(prob)}"
            + (f" ~= {float(prob):.12g}" if prob.denominator != 1 else "")
        ]
        result = {"n": inst.n, "l": inst.l, "k": args.k, "exact": _frac_str(prob)}
    _emit(args, result, lines)
    return 0


def cmd_verify_integral(args):
    inst = Instance(args.n, args.l)
    params = IntegrandParams(inst.n, inst.l)
    grid = args.grid if args.grid is not None else default_grid(params)
    value = count_by_quadrature(params, grid)
    bound = aliasing_bound(params, grid)
    exact = count_cached(inst, ResultsStore()).value
    nearest = round(value)
    lines = [
        f"quadrature = {value!r}   (grid {grid}^{inst.n}, aliasing bound {bound:.3e})",
        f"nearest integer = {nearest}",
        f"exact count = {exact}",
    ]
    result = {
        "n": inst.n,
        "l": inst.l,
        "grid": grid,
        "quadrature": f"{value:.17g}",
        "aliasing_bound": f"{bound:.6e}",
        "nearest": str(nearest),
        "exact": str(exact),
    }
    _emit(args, result, lines)
    if nearest != exact or abs(value - exact) > max(1e-4, 2 * bound):
        raise MethodConflict(
            f"quadrature {value!r} disagrees with exact count {exact}"
        )
    return 0


def cmd_audit(args):
    from .backtrack import DEFAULT_NODE_BUDGET
    from .store import _looks_small

    store = ResultsStore()
    rows = []
    failures = []
    with mpmath.workdps(60):
        for n in range(3, args.max_n + 1):
            for l in range(0, args.max_l + 1):
                inst = Instance(n, l)
                cells = {}
                cv = count_cached(inst, store)
                cells["exact"] = cv.value
                if trivial_count(inst) is None and _looks_small(inst):
                    bt = count_backtracking(inst)
                    cells["backtracking"] = bt.value
                    if bt.value != cv.value:
                        failures.append((n, l, "backtracking", bt.value, cv.value))
                if trivial_count(inst) is None and not inst.parity_obstructed:
                    mv = count_crt(inst, threads=args.threads)
                    cells["modular"] = mv.value
                    if mv.value != cv.value:
                        failures.append((n, l, "modular", mv.value, cv.value))
                delta_str = ""
                if n >= 5 and l >= 1 and cv.value >= 1:
                    dv = conjecture_delta(inst, cv)
                    delta_str = mpmath.nstr(dv.delta, 8)
                    cells["delta"] = delta_str
                    if not abs(dv.delta) < 1:
                        failures.append((n, l, "delta", delta_str, "|delta| < 1"))
                status = "ok"
                for f in failures:
                    if f[0] == n and f[1] == l:
                        status = "FAIL"
                rows.append(
                    {
                        "n": n,
                        "l": l,
                        "value": str(cv.value),
                        "methods": sorted(
                            k for k in cells if k not in ("exact", "delta")
                        ),
                        "delta": delta_str,
                        "status": status,
                    }
                )
    lines = [f"{'n':>3} {'l':>4} {'value':>24} {'delta':>14} {'status':>7}"]
    for row in rows:
        lines.append(
            f"{row['n']:>3} {row['l']:>4} {row['value']:>24} "
            f"{row['delta']:>14} {row['status']:>7}"
        )
    lines.append(
        f"{len(rows)} instances audited, {len(failures)} failure(s)"
    )
    result = {"rows": rows, "failures": [list(map(str, f)) for f in failures]}
    _emit(args, result, lines)
    if failures:
        conflicts = "; ".join(
            f"(n={f[0]}, l={f[1]}) {f[2]}: {f[3]} vs {f[4]}" for f in failures
        )
        raise MethodConflict(conflicts)
    return 0


_HANDLERS = {
    "exact": cmd_exact,
    "modular": cmd_modular,
    "estimate": cmd_estimate,
    "ehrhart": cmd_ehrhart,
    "series": cmd_series,
    "delta": cmd_delta,
    "minentry": cmd_minentry,
    "verify-integral": cmd_verify_integral,
    "audit": cmd_audit,
}


def main(argv=None):
    import warnings

    # threading-layer version probes are informational; any layer works
    warnings.filterwarnings("ignore", message=".*TBB.*")
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except _INCONSISTENCY as exc:
        print(f"symcount: inconsistency: {exc}", file=sys.stderr)
        return 2
    except SymcountError as exc:
        print(f"symcount: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
