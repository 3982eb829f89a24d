"""Command-line front end.

    galerkin-oafm list
    galerkin-oafm solve --problem fisher --t 0.001,0.01 --x 0:1:0.1
    galerkin-oafm convergence --problem fisher --t 0.001:0.005:0.001
    galerkin-oafm plotdata --problem fisher --t 0.001,0.01 --out figs/

Flags override values read from ``--config FILE`` (``key = value`` lines).
Exit codes: 0 ok, 2 usage error, 3 solver failure, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import logging
import math
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Sequence

import numpy as np

from .core import ConvergenceError, OAFMError, SingularMatrixError, SolveConfig
from .evaluation import convergence_table, default_grid, error_table
from .problems import PROBLEMS, get_problem

EXIT_OK, EXIT_USAGE, EXIT_SOLVER, EXIT_IO = 0, 2, 3, 4

log = logging.getLogger("galerkin_oafm")


class UsageError(Exception):
    pass


def fmt(v: Optional[float]) -> str:
    return "" if v is None else f"{v:.7e}"


def parse_grid(text: str) -> list[float]:
    """``a,b,c`` list, single value, or inclusive ``start:stop:step`` range."""
    text = text.strip()
    if not text:
        raise UsageError("empty grid")
    try:
        if ":" in text:
            parts = [float(p) for p in text.split(":")]
            if len(parts) != 3:
                raise UsageError(f"range must be start:stop:step, got {text!r}")
            start, stop, step = parts
            if not step > 0 or start > stop:
                raise UsageError(f"need step > 0 and start <= stop in {text!r}")
            count = int(math.floor((stop - start) / step + 1e-9)) + 1
            return [round(start + i * step, 12) for i in range(count)]
        values = [float(p) for p in text.split(",") if p.strip()]
    except ValueError as exc:
        raise UsageError(f"bad grid {text!r}: {exc}") from None
    if not values:
        raise UsageError("empty grid")
    return values


def read_config_file(path: str) -> dict[str, str]:
    out = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected 'key = value'")
            key, value = (s.strip() for s in line.split("=", 1))
            out[key.replace("-", "_")] = value
    return out


@dataclass
class RunConfig:
    problem: str
    ts: list[float]
    xs: Optional[list[float]]
    quad_order: int = 32
    tol: float = 1e-12
    format: str = "csv"
    out: Optional[str] = None
    re: Optional[float] = None
    alpha: Optional[float] = None
    beta: Optional[float] = None
    omega: Optional[float] = None
    published_sign: bool = False
    coef_t: Optional[float] = None
    points: int = 201

    def problem_spec(self):
        params = {}
        if self.problem == "shock":
            if self.re is not None:
                params["re"] = self.re
        elif self.re is not None:
            raise UsageError("--re applies to the shock problem only")
        bf_flags = {"alpha": self.alpha, "beta": self.beta, "omega": self.omega}
        if self.problem == "burgers-fisher":
            params.update({k: v for k, v in bf_flags.items() if v is not None})
            params["published_sign"] = self.published_sign
        elif any(v is not None for v in bf_flags.values()) or self.published_sign:
            raise UsageError("--alpha/--beta/--omega/--published-sign apply to burgers-fisher only")
        return get_problem(self.problem, **params)

    def solve_config(self) -> SolveConfig:
        return SolveConfig(quad_order=self.quad_order, newton_tol=self.tol)


_FIELDS = {
    "problem": str,
    "t": str,
    "x": str,
    "quad_order": int,
    "tol": float,
    "format": str,
    "out": str,
    "re": float,
    "alpha": float,
    "beta": float,
    "omega": float,
    "coef_t": float,
    "points": int,
    "published_sign": lambda s: str(s).lower() in ("1", "true", "yes", "on"),
}


def build_run_config(args: argparse.Namespace) -> RunConfig:
    merged: dict = {}
    if args.config:
        for key, raw in read_config_file(args.config).items():
            if key not in _FIELDS:
                raise UsageError(f"unknown config key {key!r}")
            try:
                merged[key] = _FIELDS[key](raw)
            except ValueError:
                raise UsageError(f"bad value for {key}: {raw!r}") from None
    for key in _FIELDS:
        value = getattr(args, key, None)
        if value is not None and value is not False:
            merged[key] = value

    problem = merged.get("problem")
    if problem not in PROBLEMS:
        raise UsageError(f"--problem must be one of {', '.join(PROBLEMS)}")
    if "t" not in merged:
        raise UsageError("--t is required")
    fmt_ = merged.get("format", "csv")
    if fmt_ not in ("csv", "md"):
        raise UsageError("--format must be csv or md")
    cfg = RunConfig(
        problem=problem,
        ts=parse_grid(merged["t"]),
        xs=parse_grid(merged["x"]) if "x" in merged else None,
        quad_order=merged.get("quad_order", 32),
        tol=merged.get("tol", 1e-12),
        format=fmt_,
        out=merged.get("out"),
        re=merged.get("re"),
        alpha=merged.get("alpha"),
        beta=merged.get("beta"),
        omega=merged.get("omega"),
        published_sign=bool(merged.get("published_sign", False)),
        coef_t=merged.get("coef_t"),
        points=merged.get("points", 201),
    )
    if any(t < 0 for t in cfg.ts):
        raise UsageError("time levels must be >= 0")
    if cfg.quad_order < 1 or cfg.points < 2 or not cfg.tol > 0:
        raise UsageError("quad order, points and tol must be positive")
    return cfg


# -- rendering ------------------------------------------------------------------


def _csv(header: Sequence[str], rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def render_error_table(rows, format: str) -> str:
    if format == "csv":
        return _csv(
            ["x", "t", "approx", "exact", "abs_error"],
            [[fmt(r.x), fmt(r.t), fmt(r.approx), fmt(r.exact), fmt(r.abs_error)] for r in rows],
        )
    ts = list(dict.fromkeys(r.t for r in rows))
    xs = list(dict.fromkeys(r.x for r in rows))
    by = {(r.x, r.t): r for r in rows}
    head = ["x"] + [f"{h} (t={t:g})" for t in ts for h in ("approx", "abs error")]
    lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
    for x in xs:
        cells = [f"{x:g}"]
        for t in ts:
            r = by[(x, t)]
            cells += [f"{r.approx:.8f}", fmt(r.abs_error)]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def render_convergence(rows, format: str) -> str:
    if format == "csv":
        return _csv(["t", "mae", "rate"], [[fmt(r.t), fmt(r.mae), "" if r.rate is None else f"{r.rate:.4f}"] for r in rows])
    lines = ["| t | MAE | rate |", "|---|---|---|"]
    for r in rows:
        lines.append(f"| {r.t:g} | {fmt(r.mae)} | {'' if r.rate is None else f'{r.rate:.4f}'} |")
    return "\n".join(lines) + "\n"


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    Path(out).write_text(text, encoding="utf-8", newline="\n")


# -- commands -------------------------------------------------------------------


def cmd_list() -> str:
    lines = []
    for name, ctor in sorted(PROBLEMS.items()):
        p = ctor()
        params = ", ".join(f"{k}={v:g}" for k, v in p.params.items() if k != "published_sign")
        lines.append(f"{name:<15} x in {p.domain}  n={p.n}" + (f"  {params}" if params else ""))
    return "\n".join(lines) + "\n"


def cmd_solve(cfg: RunConfig) -> str:
    problem = cfg.problem_spec()
    xs = cfg.xs if cfg.xs is not None else default_grid(problem)
    rows = error_table(problem, cfg.ts, xs, cfg.solve_config(), coefficient_time=cfg.coef_t)
    return render_error_table(rows, cfg.format)


def cmd_convergence(cfg: RunConfig) -> str:
    if len(cfg.ts) < 2:
        raise UsageError("convergence needs at least two time levels")
    problem = cfg.problem_spec()
    xs = cfg.xs if cfg.xs is not None else default_grid(problem)
    rows = convergence_table(problem, cfg.ts, xs, cfg.solve_config(), coefficient_time=cfg.coef_t)
    return render_convergence(rows, cfg.format)


def plotdata_name(problem: str, t: float) -> str:
    return f"{problem}_t{t:g}.csv"


def cmd_plotdata(cfg: RunConfig) -> list[Path]:
    problem = cfg.problem_spec()
    xs = cfg.xs if cfg.xs is not None else np.linspace(problem.domain.a, problem.domain.b, cfg.points)
    rows = error_table(problem, cfg.ts, xs, cfg.solve_config(), coefficient_time=cfg.coef_t)
    outdir = Path(cfg.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    written = []
    for t in dict.fromkeys(float(t) for t in cfg.ts):
        body = _csv(
            ["x", "exact", "approx", "abs_error"],
            [[fmt(r.x), fmt(r.exact), fmt(r.approx), fmt(r.abs_error)] for r in rows if r.t == t],
        )
        path = outdir / plotdata_name(cfg.problem, t)
        path.write_text(body, encoding="utf-8", newline="\n")
        written.append(path)
    return written


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="galerkin-oafm", description=__doc__.split("\n\n")[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("list", help="list benchmark problems")

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--problem", choices=sorted(PROBLEMS))
    common.add_argument("--t", help="time levels: list or start:stop:step")
    common.add_argument("--x", help="x grid: list or start:stop:step (default: tabulated grid)")
    common.add_argument("--quad-order", dest="quad_order", type=int)
    common.add_argument("--tol", type=float, help="Newton tolerance on ||G||_inf (default 1e-12)")
    common.add_argument("--format", choices=["csv", "md"])
    common.add_argument("--out", help="output file (solve/convergence) or directory (plotdata)")
    common.add_argument("--re", type=float, help="Reynolds number (shock)")
    common.add_argument("--alpha", type=float)
    common.add_argument("--beta", type=float)
    common.add_argument("--omega", type=float)
    common.add_argument(
        "--published-sign",
        dest="published_sign",
        action="store_true",
        help="burgers-fisher: use the sign convention of the tabulated benchmark values",
    )
    common.add_argument("--coef-t", dest="coef_t", type=float, help="solve coefficients once at this t and reuse them")
    common.add_argument("--config", help="key = value file; flags take precedence")

    sub.add_parser("solve", parents=[common], help="approximation and absolute error table")
    sub.add_parser("convergence", parents=[common], help="MAE and convergence rate per time level")
    plot = sub.add_parser("plotdata", parents=[common], help="dense-grid CSVs for plotting, one per t")
    plot.add_argument("--points", type=int, help="x points on the dense grid (default 201)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")

    try:
        if args.command == "list":
            sys.stdout.write(cmd_list())
            return EXIT_OK
        cfg = build_run_config(args)
        if args.command == "solve":
            _emit(cmd_solve(cfg), cfg.out)
        elif args.command == "convergence":
            _emit(cmd_convergence(cfg), cfg.out)
        else:
            for path in cmd_plotdata(cfg):
                log.info("wrote %s", path)
    except UsageError as exc:
        print(f"galerkin-oafm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConvergenceError, SingularMatrixError) as exc:
        print(f"galerkin-oafm: solver failure: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OAFMError as exc:
        # bad parameters or points outside the domain
        print(f"galerkin-oafm: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"galerkin-oafm: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
