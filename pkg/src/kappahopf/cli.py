"""Command-line interface: expression evaluation, verification suites, numerics.

Exit codes: 0 all checks passed / evaluation ok, 1 at least one check failed,
2 invalid parameters or internal error.  Output is deterministic: fixed term
order and floats at 12 significant digits.  The default output format can be
overridden with the KAPPA_HOPF_FORMAT environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .crossproduct import (
    Convention,
    basis_map_check,
    derive_phase_space_relations,
)
from .elements import GEN_BY_NAME
from .errors import KappaHopfError
from .grammar import eval_text
from .hopf import (
    check_antipode_axiom,
    check_centrality,
    check_coassociativity,
    check_coproduct_homomorphism,
    check_counit_axiom,
    check_jacobi,
)
from .kinematics import (
    KinematicParams,
    bounds_bicross,
    bounds_standard,
    check_mass_shell,
    mass_shell_exp,
    sweep_rows,
)
from .presets import Basis, Sector, get_preset
from .scalars import Scalar
from .elements import Element


def fmt(x: float) -> str:
    return f"{x:.12g}"


def _resolve_format(args, default="text", allowed=("text", "json")) -> str:
    fmt_choice = getattr(args, "format", None) or os.environ.get("KAPPA_HOPF_FORMAT")
    if fmt_choice is None:
        fmt_choice = default
    if fmt_choice not in allowed:
        raise KappaHopfError(
            f"format {fmt_choice!r} not supported here (allowed: {', '.join(allowed)})"
        )
    return fmt_choice


def _emit(text: str, args):
    out_path = getattr(args, "out", None)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


# -- eval -----------------------------------------------------------------------


def cmd_eval(args) -> int:
    out_format = _resolve_format(args)
    sector = Sector(args.sector) if args.sector else None
    value = eval_text(args.expression, Basis(args.basis), sector)
    if out_format == "json":
        payload = {
            "expression": args.expression,
            "basis": args.basis,
            "kind": value.kind,
            "result": value.render(" (x) "),
        }
        _emit(json.dumps(payload, ensure_ascii=False), args)
    else:
        _emit(value.render(), args)
    return 0


# -- suites -----------------------------------------------------------------------


def _corrupted(preset, pair_text: str):
    """Replace one relation-table entry, adding i*hbar to its correction."""
    hi_name, lo_name = (s.strip() for s in pair_text.split(","))
    try:
        hi, lo = GEN_BY_NAME[hi_name], GEN_BY_NAME[lo_name]
    except KeyError as exc:
        raise KappaHopfError(f"unknown generator in --corrupt-rule: {exc}") from exc
    if (hi, lo) not in preset.rules:
        return preset
    bad = preset.rules[(hi, lo)] + Element.from_scalar(Scalar.term(0, 1, hbar=1))
    return preset.with_rule_override((hi, lo), bad)


def _axiom_reports(basis_filter, corrupt):
    reports = []
    for basis in _bases(basis_filter):
        for sector in (Sector.POINCARE, Sector.PHASESPACE):
            preset = get_preset(basis, sector)
            if corrupt:
                preset = _corrupted(preset, corrupt)
            for fn in (
                check_coassociativity,
                check_counit_axiom,
                check_antipode_axiom,
                check_coproduct_homomorphism,
            ):
                reports.append(fn(preset))
    return reports


def _jacobi_reports(basis_filter, corrupt):
    reports = []
    for basis in _bases(basis_filter):
        for sector in (Sector.POINCARE, Sector.PHASESPACE):
            preset = get_preset(basis, sector)
            if corrupt:
                preset = _corrupted(preset, corrupt)
            reports.append(check_jacobi(preset))
    return reports


def _casimir_reports(basis_filter, corrupt):
    reports = []
    for basis in _bases(basis_filter):
        preset = get_preset(basis, Sector.POINCARE)
        if corrupt:
            preset = _corrupted(preset, corrupt)
        reports.append(check_centrality(basis, preset))
    return reports


def _phasespace_reports(basis_filter, corrupt):
    reports = []
    for basis in _bases(basis_filter):
        table_preset = get_preset(basis, Sector.PHASESPACE)
        if corrupt:
            table_preset = _corrupted(table_preset, corrupt)
        reports.append(
            derive_phase_space_relations(basis, Convention.LEFT, table_preset)
        )
    return reports


def _bases(basis_filter) -> list[Basis]:
    if basis_filter:
        return [Basis(basis_filter)]
    return [Basis.BICROSS, Basis.STANDARD]


def cmd_suite(args) -> int:
    out_format = _resolve_format(args)
    corrupt = args.corrupt_rule
    reports = []
    basis_map = None
    if args.suite in ("axioms", "all"):
        reports.extend(_axiom_reports(args.basis, corrupt))
    if args.suite in ("jacobi", "all"):
        reports.extend(_jacobi_reports(args.basis, corrupt))
    if args.suite in ("casimir", "all"):
        reports.extend(_casimir_reports(args.basis, corrupt))
    if args.suite in ("phasespace", "all"):
        reports.extend(_phasespace_reports(args.basis, corrupt))
    if args.suite in ("basis-map", "all"):
        basis_map = basis_map_check()

    ok = all(r.passed for r in reports)
    if basis_map is not None:
        # the check passes when exactly one transformation (up to inversion)
        # intertwines the two momentum coproducts, and the report names it
        ok = ok and len(basis_map.transformations) == 1 and basis_map.named is not None

    if out_format == "json":
        payload = {
            "suite": args.suite,
            "pass": ok,
            "reports": [r.to_dict() for r in reports],
        }
        if basis_map is not None:
            payload["basis_map"] = basis_map.to_dict()
        _emit(json.dumps(payload, ensure_ascii=False), args)
    else:
        lines = []
        for r in reports:
            kind = getattr(r, "axiom", "phase-space derivation")
            tag = getattr(r, "preset", None) or getattr(r, "basis", "")
            status = "PASS" if r.passed else "FAIL"
            lines.append(f"{tag} {kind}: {status} ({len(r.entries)} checks)")
            for f in r.failures():
                subject = getattr(f, "subject", None) or getattr(f, "pair", "?")
                residual = getattr(f, "residual", None)
                if residual is None:
                    residual = f"derived {f.derived} != table {f.table}"
                lines.append(f"  FAIL {subject}: {residual}")
        if basis_map is not None:
            n = len(basis_map.transformations)
            status = "PASS" if (n == 1 and basis_map.named) else "FAIL"
            lines.append(f"basis-map: {status} ({n} intertwining transformation(s))")
            if basis_map.named:
                lines.append(f"  named: {basis_map.named}")
            for c in basis_map.candidates:
                lines.append(
                    f"  candidate {c.direction} sign {c.sign:+d}: "
                    f"{'intertwines' if c.intertwines else 'fails'}"
                )
        lines.append("RESULT: " + ("PASS" if ok else "FAIL"))
        _emit("\n".join(lines), args)
    return 0 if ok else 1


# -- numerics -----------------------------------------------------------------------


def _params_from(args) -> KinematicParams:
    return KinematicParams(
        kappa=args.kappa, c=args.c, hbar=args.hbar, M=args.M, Pvec=args.P
    )


def cmd_mass_shell(args) -> int:
    out_format = _resolve_format(args, allowed=("text", "json"))
    params = _params_from(args)
    q = mass_shell_exp(params)
    residual = check_mass_shell(params)
    if out_format == "json":
        _emit(
            json.dumps(
                {
                    "kappa": params.kappa,
                    "c": params.c,
                    "hbar": params.hbar,
                    "M": params.M,
                    "P": params.Pvec,
                    "exp_P0_over_2kc": float(fmt(q)),
                    "residual": float(fmt(residual)),
                }
            ),
            args,
        )
    else:
        _emit(
            f"exp(P0/2 kappa c) = {fmt(q)}\nmass-shell residual = {fmt(residual)}",
            args,
        )
    return 0


def cmd_bounds(args) -> int:
    out_format = _resolve_format(args, allowed=("text", "json"))
    basis = Basis(args.basis)
    if basis is Basis.BICROSS:
        bounds = bounds_bicross(args.hbar, args.kappa, args.c, args.exp_x, args.exp_p)
    else:
        exp_q = args.exp_q
        if exp_q is None:
            params = _params_from(args)
            exp_q = mass_shell_exp(params)
        bounds = bounds_standard(
            args.hbar, args.kappa, args.c, args.exp_x, args.exp_p, exp_q
        )
    table = bounds.as_dict()
    if out_format == "json":
        _emit(
            json.dumps(
                {"basis": basis.value}
                | {k: float(fmt(v)) for k, v in table.items()}
            ),
            args,
        )
    else:
        names = {
            "dt_dx": "dt dx_k  >=",
            "dp_dx": "dp_k dx_k >=",
            "dE_dt": "dE dt    >=",
            "dp_dt": "dp_k dt  >=",
        }
        _emit("\n".join(f"{names[k]} {fmt(v)}" for k, v in table.items()), args)
    return 0


def cmd_sweep(args) -> int:
    out_format = _resolve_format(args, default="csv", allowed=("text", "json", "csv"))
    base = _params_from(args)
    rows = sweep_rows(args.var, args.start, args.stop, args.points, base, args.quantity)
    cols = ["kappa", "c", "hbar", "M", "P", "value", "residual"]
    if out_format == "csv":
        lines = [",".join(cols)]
        lines += [",".join(fmt(row[c]) for c in cols) for row in rows]
        _emit("\n".join(lines), args)
    elif out_format == "json":
        _emit(
            json.dumps([{c: float(fmt(row[c])) for c in cols} for row in rows]),
            args,
        )
    else:
        lines = ["  ".join(c.rjust(14) for c in cols)]
        lines += ["  ".join(fmt(row[c]).rjust(14) for c in cols) for row in rows]
        _emit("\n".join(lines), args)
    return 0


# -- argument parsing -----------------------------------------------------------------


def _add_numeric_flags(p, with_hbar=True):
    p.add_argument("--kappa", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    if with_hbar:
        p.add_argument("--hbar", type=float, default=1.0)
    p.add_argument("--M", type=float, default=0.0)
    p.add_argument("--P", type=float, default=0.0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kappahopf",
        description="kappa-deformed Poincare algebra: symbolic checks and numerics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an algebra expression")
    p_eval.add_argument("expression")
    p_eval.add_argument("--basis", choices=["bicross", "standard"], default="bicross")
    p_eval.add_argument("--sector", choices=["poincare", "phasespace"], default=None)
    p_eval.add_argument("--format", choices=["text", "json"], default=None)
    p_eval.add_argument("--out", default=None)
    p_eval.set_defaults(func=cmd_eval)

    p_suite = sub.add_parser("suite", help="run a verification suite")
    p_suite.add_argument(
        "suite",
        choices=["axioms", "jacobi", "phasespace", "casimir", "basis-map", "all"],
    )
    p_suite.add_argument("--basis", choices=["bicross", "standard"], default=None)
    p_suite.add_argument("--format", choices=["text", "json"], default=None)
    p_suite.add_argument("--out", default=None)
    p_suite.add_argument(
        "--corrupt-rule",
        default=None,
        metavar="HI,LO",
        help="negative-control fixture: perturb one relation-table entry",
    )
    p_suite.set_defaults(func=cmd_suite)

    p_num = sub.add_parser("numeric", help="numeric kinematics")
    num_sub = p_num.add_subparsers(dest="numeric_command", required=True)

    p_ms = num_sub.add_parser("mass-shell", help="on-shell exp(P0/2kc) and residual")
    _add_numeric_flags(p_ms)
    p_ms.add_argument("--format", choices=["text", "json"], default=None)
    p_ms.add_argument("--out", default=None)
    p_ms.set_defaults(func=cmd_mass_shell)

    p_b = num_sub.add_parser("bounds", help="deformed uncertainty bounds")
    p_b.add_argument("--basis", choices=["bicross", "standard"], default="bicross")
    _add_numeric_flags(p_b)
    p_b.add_argument("--exp-x", type=float, default=0.0, dest="exp_x")
    p_b.add_argument("--exp-p", type=float, default=0.0, dest="exp_p")
    p_b.add_argument(
        "--exp-q",
        type=float,
        default=None,
        dest="exp_q",
        help="<exp(P0/2kc)>; defaults to the on-shell value from --M/--P",
    )
    p_b.add_argument("--format", choices=["text", "json"], default=None)
    p_b.add_argument("--out", default=None)
    p_b.set_defaults(func=cmd_bounds)

    p_s = num_sub.add_parser("sweep", help="log sweep of one parameter")
    p_s.add_argument("--var", choices=["kappa", "M", "P"], required=True)
    p_s.add_argument("--from", type=float, required=True, dest="start")
    p_s.add_argument("--to", type=float, required=True, dest="stop")
    p_s.add_argument("--points", type=int, default=10)
    p_s.add_argument(
        "--quantity", choices=["mass-shell", "bound"], default="mass-shell"
    )
    _add_numeric_flags(p_s)
    p_s.add_argument("--format", choices=["text", "json", "csv"], default=None)
    p_s.add_argument("--out", default=None)
    p_s.set_defaults(func=cmd_sweep)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except KappaHopfError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
