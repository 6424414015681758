"""klsums command line: L_p values, derivatives, period and Stickelberger tables, verification."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from .characters import CharacterError, parse_character
from .cyclo import CycloElement
from .fg import FGContext, fg_table, lp_derivative, render_table, taylor_coeff
from .measures import period_table, stickelberger
from .padic import PAdic, PrecisionExhausted, PrimeContext, parse_padic
from .sums import SumSpec, cyclo_to_json, d_experiment, default_workers, lp_value, run_sum
from .verify import SUITES, run_suite

EXIT_CONFIG, EXIT_PRECISION, EXIT_CERTIFICATE = 2, 3, 4


class ConfigError(ValueError):
    pass


@dataclass
class RunConfig:
    p: int = 5
    W: int = 10
    N: int | None = None
    chi: object = None
    psi: object = None
    s: object = 0
    levels: list = field(default_factory=lambda: [1])
    form: str = "riemann"
    residue: int | None = None
    format: str = "json"
    output: str | None = None
    workers: int | None = None
    precision: int | None = None

    def context(self) -> PrimeContext:
        try:
            return PrimeContext(int(self.p), int(self.W))
        except (TypeError, ValueError) as exc:
            raise ConfigError(str(exc)) from exc

    def character(self, which: str, ctx: PrimeContext):
        spec = getattr(self, which)
        if spec is None or spec == "1":
            return None
        if isinstance(spec, str) and spec.lstrip().startswith("{"):
            spec = json.loads(spec)
        try:
            return parse_character(spec, ctx)
        except (CharacterError, KeyError, ValueError) as exc:
            raise ConfigError(f"bad {which}: {exc}") from exc

    def s_value(self, ctx: PrimeContext):
        if isinstance(self.s, int):
            return self.s
        text = str(self.s).strip()
        try:
            return int(text)
        except ValueError:
            pass
        try:
            return parse_padic(ctx, text)
        except ValueError as exc:
            raise ConfigError(f"bad s: {exc}") from exc


def parse_levels(text) -> list[int]:
    """``3`` means 1..3; also ``2-4`` and ``1,3``."""
    if isinstance(text, list):
        return [int(x) for x in text]
    text = str(text)
    try:
        if "," in text:
            return [int(x) for x in text.split(",")]
        if "-" in text:
            lo, hi = text.split("-")
            return list(range(int(lo), int(hi) + 1))
        return list(range(1, int(text) + 1))
    except ValueError as exc:
        raise ConfigError(f"bad level range {text!r}") from exc


def _value_json(x):
    if isinstance(x, CycloElement):
        return cyclo_to_json(x)
    if isinstance(x, PAdic):
        return {"residue": str(x.residue()) if x.v >= 0 else str(x), "precision": x.prec}
    if isinstance(x, Fraction):
        return str(x)
    return x


def _emit(payload, rows, cfg: RunConfig) -> None:
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerows(rows)
        text = buf.getvalue()
    elif cfg.format == "text":
        text = payload if isinstance(payload, str) else json.dumps(payload, indent=2, sort_keys=True)
        text += "\n"
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands -------------------------------------------------------------------------


def cmd_lp(cfg: RunConfig, args) -> int:
    ctx = cfg.context()
    chi, psi = cfg.character("chi", ctx), cfg.character("psi", ctx)
    s = cfg.s_value(ctx)
    form = cfg.form.replace("-", "_")
    N = cfg.N or (chi.modulus if chi is not None else None)
    if N is None:
        raise ConfigError("N is required for zeta forms")
    try:
        spec = SumSpec(ctx, int(N), chi, psi, s, form, cfg.residue)
    except (ValueError, CharacterError) as exc:
        raise ConfigError(str(exc)) from exc
    report = run_sum(spec, cfg.levels, cfg.workers)
    d = report.to_dict(timing=args.timing)
    rows = [line.split(",") for line in report.to_csv().strip().split("\n")]
    if args.value is not None:
        val = lp_value(chi, psi, s, ctx, args.value, cfg.workers)
        d["lp_value"] = val.to_dict()
    _emit(d, rows, cfg)
    return 0 if report.ok() else EXIT_CERTIFICATE


def cmd_deriv(cfg: RunConfig, args) -> int:
    ctx = cfg.context()
    chi, psi = cfg.character("chi", ctx), cfg.character("psi", ctx)
    if chi is None:
        raise ConfigError("deriv needs --chi")
    prec = cfg.precision or ctx.W - 2
    try:
        if args.k is None:
            val = lp_derivative(chi, ctx, prec)
        else:
            val = taylor_coeff(chi, psi, args.k, ctx, prec)
    except AssertionError as exc:
        _emit({"error": str(exc)}, [["error", str(exc)]], cfg)
        return EXIT_CERTIFICATE
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    d = {"character": chi.label(), "p": ctx.p, "k": args.k, "value": cyclo_to_json(val), "precision": prec}
    rows = [["k", "precision", "coeffs"], [args.k if args.k is not None else 1, prec,
                                            " ".join(cyclo_to_json(val)["coeffs"])]]
    _emit(d, rows, cfg)
    return 0


def cmd_periods(cfg: RunConfig, args) -> int:
    ctx = cfg.context()
    chi = cfg.character("chi", ctx)
    kind = args.kind
    try:
        if kind == "chi":
            if chi is None:
                raise ConfigError("periods --kind chi needs --chi")
            table = period_table("chi", ctx.p, cfg.levels, chi=chi)
        else:
            if cfg.N is None:
                raise ConfigError(f"periods --kind {kind} needs --N")
            table = period_table(kind, ctx.p, cfg.levels, chi=chi, N=int(cfg.N))
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    rows = table.to_rows()
    d = {"kind": kind, "p": ctx.p, "levels": cfg.levels,
         "periods": [{"m": int(r[0]), "n": int(r[1]), "value": r[2:]} for r in rows]}
    width = max((len(r) for r in rows), default=2) - 2
    _emit(d, [["m", "n"] + [f"c{i}" for i in range(width)]] + rows, cfg)
    return 0


def cmd_stickelberger(cfg: RunConfig, args) -> int:
    ctx = cfg.context()
    chi, psi = cfg.character("chi", ctx), cfg.character("psi", ctx)
    try:
        if chi is None:
            from .characters import trivial_character
            chi = trivial_character()
        elem = stickelberger(args.kind, chi, psi, args.n, ctx.p, c=args.c, ctx=ctx)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    coeffs = [_value_json(c) for c in elem.coeffs]
    d = {"kind": args.kind, "p": ctx.p, "n": args.n, "group": elem.group, "coeffs": coeffs}
    rows = [["index", "value"]] + [[i, json.dumps(c, sort_keys=True)] for i, c in enumerate(coeffs)]
    _emit(d, rows, cfg)
    return 0


def cmd_fg_table(cfg: RunConfig, args) -> int:
    if cfg.N is None:
        raise ConfigError("fg-table needs --N")
    try:
        fg = FGContext(int(cfg.p), int(cfg.N), args.n)
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    before, after = fg_table(fg)
    if cfg.format == "text":
        _emit(render_table(before) + "\n\n" + render_table(after), [], cfg)
        return 0
    d = {"p": fg.p, "N": fg.N, "n": fg.n, "level": fg.level, "before": before, "after": after}
    rows = [["table", "row"] + [f"h{h}" for h in range(len(before[0]))]]
    for tag, tab in (("before", before), ("after", after)):
        for r, row in enumerate(tab, 1):
            rows.append([tag, r] + ["" if x is None else x for x in row])
    _emit(d, rows, cfg)
    return 0


def cmd_experiment(cfg: RunConfig, args) -> int:
    if args.kind != "dn":
        raise ConfigError(f"unknown experiment {args.kind!r}")
    try:
        rows = d_experiment(int(cfg.p), args.n_max, args.W_exp)
    except PrecisionExhausted:
        raise
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    d = {"experiment": "dn", "p": int(cfg.p), "n_max": args.n_max, "rows": [r.to_dict() for r in rows],
         "all_at_least_2n_minus_1": all(r.d is not None and r.d >= r.bound for r in rows)}
    table = [["n", "d", "bound", "capped"]] + [[r.n, r.d, r.bound, r.capped] for r in rows]
    _emit(d, table, cfg)
    return 0


def cmd_verify(cfg: RunConfig, args) -> int:
    results = run_suite(args.suite)
    d = {"suites": [r.to_dict() for r in results], "ok": all(r.ok for r in results)}
    if args.timing:
        for entry, r in zip(d["suites"], results):
            entry["seconds"] = r.seconds
    rows = [["suite", "check", "ok", "detail"]]
    for r in results:
        rows += [[r.suite, c.name, c.ok, c.detail] for c in r.checks]
    _emit(d, rows, cfg)
    return 0 if d["ok"] else EXIT_CERTIFICATE


# -- argument handling ----------------------------------------------------------------------


COMMON = ("p", "W", "N", "chi", "psi", "s", "levels", "form", "residue", "format", "output", "workers", "precision")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with the same keys as the flags")
    common.add_argument("--p", type=int)
    common.add_argument("--W", type=int, help="working precision (digits)")
    common.add_argument("--N", type=int)
    common.add_argument("--chi", help="quadN, omega^k, 1, products with *, or the JSON grammar")
    common.add_argument("--psi")
    common.add_argument("--s", help="integer or p-adic text")
    common.add_argument("--levels", help="K for 1..K, a-b, or a,b,c")
    common.add_argument("--form", help="riemann | pruned-dirichlet | pruned-zeta | residue-class | pm1")
    common.add_argument("--residue", type=int)
    common.add_argument("--format", choices=["json", "csv", "text"])
    common.add_argument("--output")
    common.add_argument("--workers", type=int)
    common.add_argument("--precision", type=int)
    common.add_argument("--timing", action="store_true", help="include wall-clock fields")

    parser = argparse.ArgumentParser(prog="klsums", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lp", parents=[common], help="partial sums against the interpolation reference")
    p.add_argument("--value", type=int, help="also compute L_p to this many digits")
    p.set_defaults(func=cmd_lp)

    p = sub.add_parser("deriv", parents=[common], help="L_p'(0) or a Taylor coefficient")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_deriv)

    p = sub.add_parser("periods", parents=[common], help="period tables")
    p.add_argument("--kind", choices=["chi", "mazur", "2reg"], default="chi")
    p.set_defaults(func=cmd_periods)

    p = sub.add_parser("stickelberger", parents=[common], help="Stickelberger elements")
    p.add_argument("--kind", choices=["xi", "eta", "theta"], default="theta")
    p.add_argument("--n", type=int, default=1)
    p.add_argument("--c", type=int)
    p.set_defaults(func=cmd_stickelberger)

    p = sub.add_parser("fg-table", parents=[common], help="Ferrero-Greenberg permutation tables")
    p.add_argument("--n", type=int, default=1)
    p.set_defaults(func=cmd_fg_table)

    p = sub.add_parser("experiment", parents=[common], help="convergence experiment")
    p.add_argument("kind", nargs="?", default="dn")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--W-exp", type=int, default=None, help="precision for the experiment")
    p.set_defaults(func=cmd_experiment)

    p = sub.add_parser("verify", parents=[common], help="run invariant suites")
    p.add_argument("suite", nargs="?", default="all", choices=sorted(SUITES) + ["all"])
    p.set_defaults(func=cmd_verify)
    return parser


def make_config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        unknown = set(data) - set(COMMON)
        if unknown:
            raise ConfigError(f"unknown config keys {sorted(unknown)}")
        for k, v in data.items():
            setattr(cfg, k, v)
    for k in COMMON:
        v = getattr(args, k, None)
        if v is not None:
            setattr(cfg, k, v)
    cfg.levels = parse_levels(cfg.levels)
    if cfg.workers is None:
        cfg.workers = default_workers()
    if cfg.format not in ("json", "csv", "text"):
        raise ConfigError(f"bad format {cfg.format!r}")
    cfg.context()
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_CONFIG if exc.code else 0
    try:
        cfg = make_config(args)
        return args.func(cfg, args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except PrecisionExhausted as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION


if __name__ == "__main__":
    sys.exit(main())
