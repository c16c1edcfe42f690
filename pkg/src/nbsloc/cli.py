"""Command-line surface.

Subcommands: eigvals, kernel, leakage, density, mc, verify.  Output goes
to stdout or --out as CSV (parameter header in '#' comment lines) or JSON
(top-level "params" object plus "data" array); identical configurations
produce byte-identical output.  Exit codes: 0 success, 1 verification
failure, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import __version__, bergman, locop, verify
from .errors import AccuracyError, ConvergenceError, DomainError
from .states import LocalizationRadius, ModelParams

DEFAULTS = {"B": 1.5, "R": 0.6, "m": 0, "j_max": 20, "tol": 1e-10, "seed": 42}


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected a complex number like 0.5+0.3j, got {text!r}"
        ) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nbsloc",
        description="Localization-operator numerics over negative binomial states.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--B", type=float, default=DEFAULTS["B"], help="strength parameter, 2B > 1")
        p.add_argument("--R", type=float, default=DEFAULTS["R"], help="localization radius in (0, 1)")
        p.add_argument("--m", type=int, default=DEFAULTS["m"], help="level index, 0 <= m <= floor(B - 1/2)")
        p.add_argument("--j-max", type=int, default=DEFAULTS["j_max"], dest="j_max")
        p.add_argument("--tol", type=float, default=DEFAULTS["tol"])
        p.add_argument("--seed", type=int, default=DEFAULTS["seed"])
        p.add_argument("--samples", type=int, default=1_000_000)
        p.add_argument("--format", choices=("csv", "json"), default="csv")
        p.add_argument("--out", default=None, help="output path (default stdout)")

    p = sub.add_parser("eigvals", help="eigenvalue table (j, lambda_j)")
    common(p)

    p = sub.add_parser("kernel", help="transferred kernel at one point pair")
    common(p)
    p.add_argument("--z", type=_complex_arg, required=True)
    p.add_argument("--w", type=_complex_arg, required=True)
    p.add_argument("--s", type=float, default=None, help="Beta upper limit; defaults to R^2")

    p = sub.add_parser("leakage", help="photon-counting bound outside the disk")
    common(p)
    p.add_argument("--z", type=_complex_arg, required=True, help="coherence point z0")

    p = sub.add_parser("density", help="eigenvalue densities on a rho grid")
    common(p)

    p = sub.add_parser("mc", help="Monte-Carlo eigenvalue estimates vs the closed form")
    common(p)

    p = sub.add_parser("verify", help="run the full verification suite")
    common(p)
    return parser


def _write(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _render(params: dict, columns: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        data = [dict(zip(columns, row)) for row in rows]
        return json.dumps({"params": params, "data": data}, indent=2, sort_keys=True) + "\n"
    lines = [f"# {key} = {value!r}" for key, value in sorted(params.items())]
    lines.append(",".join(columns))
    for row in rows:
        lines.append(",".join(repr(v) if isinstance(v, float) else str(v) for v in row))
    return "\n".join(lines) + "\n"


def _params_dict(args, extra: dict | None = None) -> dict:
    base = {
        "command": args.command,
        "B": args.B,
        "R": args.R,
        "m": args.m,
        "j_max": args.j_max,
        "tol": args.tol,
        "seed": args.seed,
    }
    if extra:
        base.update(extra)
    return base


def cmd_eigvals(args) -> int:
    params = ModelParams(args.B, args.m)
    radius = LocalizationRadius(args.R)
    rows = []
    for j in range(args.j_max + 1):
        if args.m == 0:
            lam = locop.disk_eigenvalue(j, args.B, radius)
        else:
            lam = locop.landau_eigenvalue(j, params, radius)
        rows.append([j, float(lam)])
    _write(_render(_params_dict(args), ["j", "lambda"], rows, args.format), args.out)
    return 0


def cmd_kernel(args) -> int:
    ModelParams(args.B, args.m)
    radius = LocalizationRadius(args.R)
    s = args.s
    note = ""
    if s is None:
        s = radius.R ** 2
        note = "s defaulted to R^2"
    series = bergman.kernel_series(args.z, args.w, args.B, s)
    closed = bergman.kernel_closed(args.z, args.w, args.B, s)
    limit = bergman.kernel_limit(args.z, args.w, args.B)
    rel = abs(series - closed) / max(abs(series), 1e-300)
    columns = ["series_re", "series_im", "closed_re", "closed_im",
               "rel_discrepancy", "limit_re", "limit_im", "note"]
    rows = [[series.real, series.imag, closed.real, closed.imag,
             float(rel), limit.real, limit.imag, note]]
    extra = {"s": s, "z": repr(args.z), "w": repr(args.w)}
    _write(_render(_params_dict(args, extra), columns, rows, args.format), args.out)
    return 0


def cmd_leakage(args) -> int:
    ModelParams(args.B, args.m)
    radius = LocalizationRadius(args.R)
    bound = locop.leakage_bound(args.z, args.B, radius, tail_tol=min(args.tol, 1e-14))
    columns = ["bound", "p"]
    rows = [[float(bound), float(abs(args.z) ** 2)]]
    _write(_render(_params_dict(args, {"z": repr(args.z)}), columns, rows, args.format), args.out)
    return 0


def cmd_density(args) -> int:
    params = ModelParams(args.B, args.m)
    # --samples doubles as the rho-grid size here; the Monte-Carlo default
    # of one million is clamped to a plot-friendly grid.
    n_points = args.samples if 2 <= args.samples <= 10_000 else 101
    rho = np.linspace(0.0, 1.0, n_points + 1)[:-1]
    rows = []
    for j in range(args.j_max + 1):
        vals = locop.landau_density(j, params, rho)
        rows.extend([j, float(r), float(v)] for r, v in zip(rho, vals))
    extra = {"rho_points": n_points}
    _write(_render(_params_dict(args, extra), ["j", "rho", "density"], rows, args.format), args.out)
    return 0


def cmd_mc(args) -> int:
    params = ModelParams(args.B, args.m)
    radius = LocalizationRadius(args.R)
    rows = []
    for j in range(args.j_max + 1):
        est, se = locop.mc_eigenvalue(j, params, radius, args.samples, args.seed + j)
        exact = locop.disk_eigenvalue(j, args.B, radius)
        rows.append([j, float(est), float(se), float(exact), float(abs(est - exact))])
    columns = ["j", "estimate", "std_error", "exact", "abs_error"]
    extra = {"samples": args.samples}
    _write(_render(_params_dict(args, extra), columns, rows, args.format), args.out)
    return 0


def cmd_verify(args) -> int:
    results = verify.run_all()
    columns = ["name", "passed", "max_error", "tolerance", "detail"]
    rows = [[r.name, r.passed, float(r.max_error), float(r.tolerance), r.detail] for r in results]
    _write(_render(_params_dict(args), columns, rows, args.format), args.out)
    failures = [r.name for r in results if not r.passed]
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.name} (err {r.max_error:.3e}, tol {r.tolerance:.1e})", file=sys.stderr)
    if failures:
        print(f"verification FAILED: {', '.join(failures)}", file=sys.stderr)
        return 1
    print(f"verification passed: {len(results)} checks", file=sys.stderr)
    return 0


_DISPATCH = {
    "eigvals": cmd_eigvals,
    "kernel": cmd_kernel,
    "leakage": cmd_leakage,
    "density": cmd_density,
    "mc": cmd_mc,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (DomainError, ConvergenceError, AccuracyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
