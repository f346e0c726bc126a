"""Command-line front end: evaluation, identity verification, table emission.

Numeric flags where exactness matters (alpha, t) accept both decimal and
rational p/q syntax.  The WEYLFUN_CONFIG environment variable may point at
a JSON file holding default verify settings (same field names as the
harness SuiteConfig); explicit flags override it.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, replace
from fractions import Fraction

from . import bessel, disentangle, harness, polyfam
from .algebra import format_poly
from .errors import WeylfunError

CONFIG_ENV_VAR = "WEYLFUN_CONFIG"


@dataclass(frozen=True)
class CliConfig:
    command: str
    subcommand: str | None = None
    n: int | None = None
    n_max: int | None = None
    alpha: Fraction | None = None
    beta: complex | None = None
    gamma: complex | None = None
    x: float | None = None
    y: float | None = None
    t: Fraction | None = None
    n_terms: int | None = None
    k_cut: int | None = None
    m_cut: int | None = None
    tol: float | None = None
    method: str = "series"
    steps: int = 10_000
    output: str = "text"
    out_path: str | None = None
    filter: str = "*"
    seed: int | None = None


def _fraction_flag(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a number or p/q ratio, got {text!r}") from exc


def _complex_flag(text: str) -> complex:
    try:
        return complex(text.replace("i", "j").replace(" ", ""))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a (complex) number, got {text!r}") from exc


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from exc
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {value}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylfun",
        description="Exact operator-algebra kernel and special-function identity verifier.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate a polynomial family member or Bessel value")
    evsub = ev.add_subparsers(dest="target", required=True)

    ev_h = evsub.add_parser("hermite", help="print H_n as an exact polynomial")
    ev_h.add_argument("--n", type=_nonneg_int, required=True, help="degree n >= 0")
    _output_flags(ev_h)

    ev_l = evsub.add_parser("laguerre", help="print L_n^alpha as an exact polynomial")
    ev_l.add_argument("--n", type=_nonneg_int, required=True, help="degree n >= 0")
    ev_l.add_argument("--alpha", type=_fraction_flag, default=Fraction(0),
                      help="order alpha, decimal or p/q (default 0)")
    _output_flags(ev_l)

    ev_b = evsub.add_parser("bessel", help="evaluate J_n(x)")
    ev_b.add_argument("--n", type=int, required=True, help="integer order (any sign)")
    ev_b.add_argument("--x", type=float, required=True)
    ev_b.add_argument("--method", choices=("series", "integral", "miller"), default="series")
    _output_flags(ev_b)

    ev_p = evsub.add_parser("psi", help="evaluate the normalized oscillator function psi_n(x)")
    ev_p.add_argument("--n", type=_nonneg_int, required=True)
    ev_p.add_argument("--x", type=float, required=True)
    _output_flags(ev_p)

    sm = sub.add_parser("sum", help="evaluate a summed series")
    smsub = sm.add_subparsers(dest="target", required=True)
    sm_e = smsub.add_parser("even-hermite", help="sum_n t^n/n! H_2n(x), closed form and partial sum")
    sm_e.add_argument("--t", type=_fraction_flag, required=True,
                      help="series variable, decimal or p/q; closed form needs t > -1/4")
    sm_e.add_argument("--x", type=float, required=True)
    sm_e.add_argument("--N", dest="n_terms", type=_nonneg_int, default=None,
                      help="also report the partial sum with N+1 terms")
    _output_flags(sm_e)

    ds = sub.add_parser(
        "disentangle",
        help="factor exp{t(a x^2 + b(xp+px) + c p^2)} into exp(f x^2) exp(g(xp+px)) exp(h p^2)",
    )
    ds.add_argument("--t", type=_fraction_flag, required=True)
    ds.add_argument("--alpha", type=_complex_flag, default=None, help="coefficient of x^2")
    ds.add_argument("--beta", type=_complex_flag, default=None,
                    help="coefficient of xp+px (accepts forms like -2i)")
    ds.add_argument("--gamma", type=_complex_flag, default=None, help="coefficient of p^2")
    ds.add_argument("--steps", type=_nonneg_int, default=10_000, help="RK4 steps (custom exponent)")
    _output_flags(ds)

    vf = sub.add_parser("verify", help="run the identity check registry and report")
    vf.add_argument("--filter", default=None, help="fnmatch pattern over check names")
    vf.add_argument("--seed", type=int, default=None, help="seed for randomized exact checks")
    _output_flags(vf, formats=("text", "json", "csv"))

    tb = sub.add_parser("table", help="emit a polynomial family table")
    tbsub = tb.add_subparsers(dest="target", required=True)
    tb_h = tbsub.add_parser("hermite")
    tb_h.add_argument("--n-max", dest="n_max", type=_nonneg_int, required=True)
    _table_flags(tb_h)
    tb_l = tbsub.add_parser("laguerre")
    tb_l.add_argument("--n-max", dest="n_max", type=_nonneg_int, required=True)
    tb_l.add_argument("--alpha", type=_fraction_flag, default=Fraction(0))
    _table_flags(tb_l)

    return parser


def _output_flags(p, formats=("text", "json")):
    p.add_argument("--output", choices=formats, default="text", help="output format")
    p.add_argument("--out", dest="out_path", default=None, help="write output to FILE")


def _table_flags(p):
    p.add_argument("--format", dest="output", choices=("text", "csv", "json"), default="text")
    p.add_argument("--out", dest="out_path", default=None, help="write output to FILE")


def _config_from_args(args: argparse.Namespace) -> CliConfig:
    fields = {
        k: v
        for k, v in vars(args).items()
        if k in CliConfig.__dataclass_fields__ and v is not None
    }
    return CliConfig(
        command=args.command,
        subcommand=getattr(args, "target", None),
        **{k: v for k, v in fields.items() if k not in ("command", "subcommand")},
    )


def _fmt_float(v: float) -> str:
    if float(v).is_integer() and abs(v) < 1e15:
        return str(int(v))
    return repr(float(v))


def _fmt_complex(z: complex) -> str:
    if z.imag == 0.0:
        return _fmt_float(z.real)
    imag = f"{_fmt_float(abs(z.imag))}i"
    if z.real == 0.0:
        return ("-" if z.imag < 0 else "") + imag
    sign = "-" if z.imag < 0 else "+"
    return f"{_fmt_float(z.real)}{sign}{imag}"


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        print(text)
        return
    try:
        with open(out_path, "w") as fh:
            fh.write(text + "\n")
    except OSError as exc:
        raise WeylfunError(f"cannot write {out_path!r}: {exc}") from exc


def _poly_payload(n: int, poly) -> dict:
    coeffs = [str(poly.coeff(k)) for k in range(poly.degree + 1)]
    return {"n": n, "polynomial": format_poly(poly), "coefficients": coeffs}


def _cmd_eval(cfg: CliConfig) -> int:
    if cfg.subcommand == "hermite":
        poly = polyfam.hermite_recurrence(cfg.n)[cfg.n]
        payload = _poly_payload(cfg.n, poly)
        text = payload["polynomial"]
    elif cfg.subcommand == "laguerre":
        poly = polyfam.laguerre_recurrence(cfg.n, cfg.alpha)[cfg.n]
        payload = _poly_payload(cfg.n, poly)
        payload["alpha"] = str(cfg.alpha)
        text = payload["polynomial"]
    elif cfg.subcommand == "bessel":
        if cfg.method == "series":
            value = bessel.j_signed(cfg.n, cfg.x)
        elif cfg.method == "integral":
            # the integral representation is valid for any sign of n and x
            value = bessel.j_integral_auto(cfg.n, cfg.x)
        else:
            value = bessel.j_miller(abs(cfg.n), abs(cfg.x))[abs(cfg.n)]
            value *= (-1.0) ** cfg.n if cfg.n < 0 else 1.0
            value *= (-1.0) ** cfg.n if cfg.x < 0 else 1.0
        payload = {"n": cfg.n, "x": cfg.x, "method": cfg.method, "value": value}
        text = _fmt_float(value)
    else:  # psi
        value = polyfam.psi_eval(cfg.n, cfg.x).real
        payload = {"n": cfg.n, "x": cfg.x, "value": value}
        text = _fmt_float(value)
    _emit(text if cfg.output == "text" else json.dumps(payload, sort_keys=True), cfg.out_path)
    return 0


def _cmd_sum(cfg: CliConfig) -> int:
    t = float(cfg.t)
    closed = polyfam.even_hermite_closed(t, cfg.x)
    payload = {"t": str(cfg.t), "x": cfg.x, "closed": closed.real}
    lines = [f"closed = {_fmt_float(closed.real)}"]
    if cfg.n_terms is not None:
        partial = polyfam.even_hermite_partial(t, cfg.x, cfg.n_terms)
        err = abs(partial - closed)
        payload.update({"n_terms": cfg.n_terms, "partial": partial.real, "abs_err": err})
        lines.append(f"partial[N={cfg.n_terms}] = {_fmt_float(partial.real)}")
        lines.append(f"abs_err = {err!r}")
    _emit("\n".join(lines) if cfg.output == "text" else json.dumps(payload, sort_keys=True),
          cfg.out_path)
    return 0


def _cmd_disentangle(cfg: CliConfig) -> int:
    t = float(cfg.t)
    custom = any(v is not None for v in (cfg.alpha, cfg.beta, cfg.gamma))
    if custom:
        base = disentangle.EVEN_HERMITE_EXPONENT
        q = disentangle.QuadExponent(
            complex(cfg.alpha) if cfg.alpha is not None else base.a_x2,
            cfg.beta if cfg.beta is not None else base.b_mix,
            cfg.gamma if cfg.gamma is not None else base.c_p2,
        )
        form = disentangle.disentangle_ode(q, t, cfg.steps)
        route = "rk4"
    else:
        form = disentangle.disentangle_closed(t)
        route = "closed"
    payload = {
        "t": t,
        "route": route,
        "f": {"re": form.f.real, "im": form.f.imag},
        "g": {"re": form.g.real, "im": form.g.imag},
        "h": {"re": form.h.real, "im": form.h.imag},
    }
    text = "\n".join(
        [f"f = {_fmt_complex(form.f)}", f"g = {_fmt_complex(form.g)}", f"h = {_fmt_complex(form.h)}"]
    )
    _emit(text if cfg.output == "text" else json.dumps(payload, sort_keys=True), cfg.out_path)
    return 0


def _suite_config(cfg: CliConfig) -> harness.SuiteConfig:
    suite = harness.SuiteConfig()
    path = os.environ.get(CONFIG_ENV_VAR)
    if path:
        try:
            with open(path) as fh:
                overrides = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise WeylfunError(f"cannot load config {path!r}: {exc}") from exc
        bessel_over = overrides.pop("bessel", None)
        unknown = set(overrides) - set(harness.SuiteConfig.__dataclass_fields__)
        if unknown:
            raise WeylfunError(f"unknown config fields in {path!r}: {sorted(unknown)}")
        suite = replace(suite, **overrides)
        if bessel_over:
            suite = replace(suite, bessel=bessel.BesselEvalConfig(**bessel_over))
    if cfg.filter != "*":
        suite = replace(suite, filter=cfg.filter)
    if cfg.seed is not None:
        suite = replace(suite, seed=cfg.seed)
    return suite


def _cmd_verify(cfg: CliConfig) -> int:
    report = harness.run_suite(_suite_config(cfg))
    if cfg.output == "json":
        text = harness.report_serialize(report).rstrip("\n")
    elif cfg.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["name", "pass", "exact", "abs_err", "tolerance"])
        for c in report.checks:
            writer.writerow([c.name, c.passed, c.exact, repr(c.abs_err), repr(c.tolerance)])
        text = buf.getvalue().rstrip("\n")
    else:
        lines = []
        for c in report.checks:
            status = "PASS" if c.passed else "FAIL"
            tol = "exact" if c.exact else f"tol={c.tolerance!r}"
            lines.append(f"{status}  {c.name}  abs_err={c.abs_err!r}  {tol}")
        lines.append(
            f"{report.counts['pass']}/{report.counts['pass'] + report.counts['fail']} checks passed"
        )
        text = "\n".join(lines)
    _emit(text, cfg.out_path)
    return 0 if report.counts["fail"] == 0 else 1


def _cmd_table(cfg: CliConfig) -> int:
    if cfg.subcommand == "hermite":
        family = polyfam.hermite_recurrence(cfg.n_max)
        labels = [f"H_{n}" for n in range(cfg.n_max + 1)]
    else:
        family = polyfam.laguerre_recurrence(cfg.n_max, cfg.alpha)
        labels = [f"L_{n}^({cfg.alpha})" for n in range(cfg.n_max + 1)]
    rows = [(n, labels[n], family[n]) for n in range(cfg.n_max + 1)]
    if cfg.output == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["n"] + [f"c{k}" for k in range(cfg.n_max + 1)])
        for n, _, poly in rows:
            writer.writerow([n] + [str(poly.coeff(k)) for k in range(cfg.n_max + 1)])
        text = buf.getvalue().rstrip("\n")
    elif cfg.output == "json":
        payload = [_poly_payload(n, poly) for n, _, poly in rows]
        text = json.dumps(payload, sort_keys=True)
    else:
        text = "\n".join(f"{label} = {format_poly(poly)}" for _, label, poly in rows)
    _emit(text, cfg.out_path)
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(args)
    try:
        if cfg.command == "eval":
            return _cmd_eval(cfg)
        if cfg.command == "sum":
            return _cmd_sum(cfg)
        if cfg.command == "disentangle":
            return _cmd_disentangle(cfg)
        if cfg.command == "verify":
            return _cmd_verify(cfg)
        if cfg.command == "table":
            return _cmd_table(cfg)
    except (WeylfunError, ValueError, ZeroDivisionError) as exc:
        print(f"error[{type(exc).__name__}]: {exc}", file=sys.stderr)
        return 1
    raise AssertionError(f"unhandled command {cfg.command!r}")


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
