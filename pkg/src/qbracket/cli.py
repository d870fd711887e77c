"""qbracket command line: verify, eval, table, remark.

Exit codes: 0 success / verification passed, 1 verification failed or golden
mismatch, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from . import asymptotics, chowla_selberg, modular, qseries
from .errors import QBracketError
from .partitions import Partition, f_hook
from .reports import TransformReport, format_complex, format_exact
from .transforms import DEFAULT_POINTS, verify_transformations

SUITE_ORDERS = {"theorem1": 50, "hanji": 16, "nekrasov-okounkov": 20, "s2k": 40}
THEOREM2_POINTS = (1 / 3 + 1j, 0.2 + 2j / 3, 0.3 + 1j)


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    order: int | None = None
    tol: float = 1e-8
    y_floor: float = modular.Y_FLOOR
    output_format: str = "text"
    output_path: str | None = None

    def validate(self) -> None:
        if self.order is not None and self.order < 1:
            raise UsageError("order must be >= 1")
        if not self.tol > 0:
            raise UsageError("tol must be positive")
        if self.output_format not in ("json", "csv", "text"):
            raise UsageError(f"unknown format {self.output_format!r}")


def load_config(args) -> RunConfig:
    """flags > $QBRACKET_CONFIG (JSON file) > defaults."""
    cfg = RunConfig()
    path = os.environ.get("QBRACKET_CONFIG")
    if path:
        try:
            doc = json.loads(Path(path).read_text())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read QBRACKET_CONFIG={path}: {exc}") from exc
        cfg.order = doc.get("order", cfg.order)
        cfg.tol = doc.get("tol", cfg.tol)
        cfg.y_floor = doc.get("y_floor", cfg.y_floor)
        cfg.output_format = doc.get("format", doc.get("output_format", cfg.output_format))
        cfg.output_path = doc.get("output", doc.get("output_path", cfg.output_path))
    for flag, attr in (("order", "order"), ("tol", "tol"), ("y_floor", "y_floor"), ("format", "output_format"), ("output", "output_path")):
        val = getattr(args, flag, None)
        if val is not None:
            setattr(cfg, attr, val)
    cfg.validate()
    return cfg


_COMPLEX = re.compile(r"^[+-]?(\d+\.?\d*|\.\d+)?([eE][+-]?\d+)?([+-](\d+\.?\d*|\.\d+)?([eE][+-]?\d+)?i)?$|^[+-]?(\d+\.?\d*|\.\d+)?([eE][+-]?\d+)?i$")


def parse_complex(text: str) -> complex:
    s = text.strip().replace(" ", "")
    if not s or not _COMPLEX.match(s):
        raise UsageError(f"cannot parse complex number {text!r} (use e.g. 0.25+1.5i, 2i)")
    s = re.sub(r"(^|[+-])i$", r"\g<1>1i", s)
    return complex(s.replace("i", "j"))


def parse_list(text: str, conv) -> list:
    return [conv(part) for part in text.split(",") if part.strip()]


def parse_points(text: str | None, default) -> list[complex]:
    if text is None:
        return list(default)
    return [parse_complex(p) for p in text.split(",")]


# -- rendering --


def _render_verification(reports: list, fmt: str) -> str:
    if fmt == "json":
        docs = [r.to_dict() for r in reports]
        return json.dumps(docs[0] if len(docs) == 1 else docs, indent=2) + "\n"
    if fmt == "csv":
        lines = ["identity,params,z,lhs,rhs,residual,pass"]
        for r in reports:
            params = ";".join(f"{k}={v}" for k, v in r.params.items())
            if isinstance(r, TransformReport):
                for p in r.to_dict()["points"]:
                    lines.append(f"{r.identity},{params},{p['z']},{p['lhs']},{p['rhs']},{p['residual']},{r.passed}")
            else:
                lines.append(f"{r.identity},{params},,,,,{r.passed}")
        return "\n".join(lines) + "\n"
    out = []
    for r in reports:
        params = " ".join(f"{k}={v}" for k, v in r.params.items())
        status = "PASS" if r.passed else "FAIL"
        if isinstance(r, TransformReport):
            out.append(f"{status} {r.identity} {params} max_residual={r.max_residual:.3e} tol={r.tol:g}")
            for p in r.to_dict()["points"]:
                out.append(f"  z={p['z']}  lhs={p['lhs']}  rhs={p['rhs']}  residual={p['residual']}")
        else:
            out.append(f"{status} {r.identity} {params} order={r.order}")
            if r.first_discrepancy is not None:
                n, lhs, rhs = r.first_discrepancy
                out.append(f"  first discrepancy at q^{n}: {format_exact(lhs)} != {format_exact(rhs)}")
            for note in r.notes:
                out.append(f"  note: {note}")
    return "\n".join(out) + "\n"


def _emit(text: str, cfg: RunConfig, args) -> int:
    if cfg.output_path:
        Path(cfg.output_path).write_text(text)
    else:
        sys.stdout.write(text)
    golden = getattr(args, "golden", None)
    if golden:
        gpath = Path(golden)
        if getattr(args, "write_golden", False):
            gpath.parent.mkdir(parents=True, exist_ok=True)
            gpath.write_text(text)
        elif not gpath.exists() or gpath.read_text() != text:
            print(f"golden mismatch: {gpath}", file=sys.stderr)
            return 1
    return 0


# -- verify --


def _need(args, name, default=None):
    val = getattr(args, name, None)
    if val is None:
        if default is None:
            raise UsageError(f"--{name} is required for this command")
        return default
    return val


def run_verify(args, cfg: RunConfig) -> list:
    suite = args.suite
    order = cfg.order or SUITE_ORDERS.get(suite)
    tol = cfg.tol
    if suite == "theorem1":
        a, t = _need(args, "a"), _need(args, "t")
        if t < 1 or order < t:
            raise UsageError("need t >= 1 and order >= t")
        return [qseries.verify_theorem1(a, t, order)]
    if suite == "hanji":
        k, t = _need(args, "k"), _need(args, "t")
        if t < 1 or order < t:
            raise UsageError("need t >= 1 and order >= t")
        return [qseries.verify_hanji(k, t, order)]
    if suite == "nekrasov-okounkov":
        return [qseries.verify_nekrasov_okounkov(order)]
    if suite == "s2k":
        k = _need(args, "k")
        if k < 1:
            raise UsageError("k must be >= 1")
        return [qseries.verify_S2k_bracket(k, order)]
    points = parse_points(args.z, DEFAULT_POINTS)
    if suite == "theorem3":
        k, t = _need(args, "k", 1), _need(args, "t", 1)
        params = {"k": k, "t": t, "form": args.form}
        return [
            verify_transformations("theorem3-shift", params, points, tol),
            verify_transformations("theorem3-S", params, points, tol),
        ]
    if suite == "corollary4":
        k = _need(args, "k", 1)
        return [
            verify_transformations("corollary4-T", {"k": k}, points, tol),
            verify_transformations("corollary4-S", {"k": k}, points, tol),
        ]
    if suite == "berndt":
        return [verify_transformations("berndt", {"k": _need(args, "k", 1)}, points, tol)]
    if suite == "theorem2":
        pts = parse_points(args.z, THEOREM2_POINTS)
        t = _need(args, "t", 1)
        k = _need(args, "k", 2)
        reports = [verify_transformations("theorem2-E0-T", {"t": t}, pts, tol)]
        if t == 1:
            reports.append(verify_transformations("theorem2-E0-S", {}, pts, tol))
            reports.append(verify_transformations("theorem2-Eneg-S", {"k": k}, pts, tol))
        reports.append(verify_transformations("theorem2-E0-laplacian", {"t": t}, pts, 1e-4))
        reports.append(verify_transformations("theorem2-Eneg-laplacian", {"k": k, "t": t}, pts, 1e-3))
        return reports
    if suite == "theorem6-cocycle":
        a = _need(args, "a", -1)
        return [
            verify_transformations("theorem6-cocycle", {"a": a, "rep": "double-sum"}, points, tol),
            verify_transformations("theorem6-cocycle", {"a": a, "rep": "contour"}, points, tol),
        ]
    raise UsageError(f"unknown suite {suite!r}")


def cmd_verify(args, cfg: RunConfig) -> int:
    reports = run_verify(args, cfg)
    rc = _emit(_render_verification(reports, cfg.output_format), cfg, args)
    if not all(r.passed for r in reports):
        return 1
    return rc


# -- eval --


def parse_partition(text: str) -> Partition:
    try:
        parts = tuple(int(p) for p in text.split(",") if p.strip())
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}") from exc
    return Partition(parts)


def _eval_value(args, cfg: RunConfig):
    target = args.target
    yf = cfg.y_floor
    if target == "fhook":
        return f_hook(parse_partition(_need(args, "parts")), _need(args, "a"), _need(args, "t"))
    if target == "qbracket-coeffs":
        a, t = _need(args, "a"), _need(args, "t")
        order = cfg.order or 10
        if t < 1:
            raise UsageError("t must be >= 1")
        num = qseries.TruncatedQSeries(qseries.theorem1_numerator(a, t, order))
        return list((num * qseries.euler_series(order).inverse()).coeffs)
    if target == "omega":
        return chowla_selberg.omega_period(_need(args, "D"))
    z = parse_complex(_need(args, "z"))
    if target == "eichler":
        return modular.eichler_value(_need(args, "a"), z, yf)
    if target == "eta":
        return modular.eta_value(z, yf)
    if target == "maass-e0":
        return modular.maass_E0(_need(args, "t", 1), z, yf)
    if target == "maass-eneg":
        return modular.maass_E_neg(_need(args, "k", 2), _need(args, "t", 1), z, yf)
    if target == "psi":
        return modular.psi_value(_need(args, "k", 1), z)
    if target == "hstar":
        return modular.h_star_value(_need(args, "k", 1), z, yf)
    raise UsageError(f"unknown target {target!r}")


def _format_value(v) -> str:
    if isinstance(v, (int, Fraction)):
        return str(Fraction(v))
    if isinstance(v, list):
        return "\n".join(_format_value(x) for x in v)
    return format_complex(v)


def cmd_eval(args, cfg: RunConfig) -> int:
    v = _eval_value(args, cfg)
    if cfg.output_format == "json":
        doc = {"target": args.target, "value": _format_value(v).split("\n") if isinstance(v, list) else _format_value(v)}
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = _format_value(v) + "\n"
    return _emit(text, cfg, args)


# -- table --


def cmd_table(args, cfg: RunConfig) -> int:
    if args.kind == "asymptotic":
        k = _need(args, "k", 3)
        ts = parse_list(args.t_list or "2,1.5,1,0.5,0.1", float)
        cutoff = None if args.cutoff == "optimal" else int(args.cutoff)
        rows = asymptotics.asymptotic_table(k, ts, cutoff)
        fmt = cfg.output_format
        text = {"csv": asymptotics.table_csv, "json": asymptotics.table_json, "text": asymptotics.table_text}[fmt](rows)
        return _emit(text, cfg, args)
    a = _need(args, "a")
    t = int(_need(args, "t_list", "1"))
    order = cfg.order or 10
    if t < 1:
        raise UsageError("t must be >= 1")
    num = qseries.TruncatedQSeries(qseries.theorem1_numerator(a, t, order))
    br = num * qseries.euler_series(order).inverse()
    expected = qseries.divisor_sum_series(1 - a, order, step=t)
    rows = [(n, br[n], expected[n]) for n in range(1, order + 1)]
    if cfg.output_format == "json":
        text = json.dumps([{"n": n, "bracket": format_exact(b), "sigma": format_exact(s)} for n, b, s in rows], indent=2) + "\n"
    else:
        sep = "," if cfg.output_format == "csv" else "  "
        lines = [sep.join(["n", "bracket", "sigma"])]
        lines += [sep.join([str(n), str(b), str(s)]) for n, b, s in rows]
        text = "\n".join(lines) + "\n"
    return _emit(text, cfg, args)


# -- remark --


def cmd_remark(args, cfg: RunConfig) -> int:
    rec = asymptotics.a1_expansion(args.t if args.t is not None else 0.1)
    if cfg.output_format == "json":
        text = json.dumps(rec, indent=2) + "\n"
    else:
        text = "".join(f"{k}: {v:.12g}\n" for k, v in rec.items())
    return _emit(text, cfg, args)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qbracket", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--order", type=int)
    common.add_argument("--tol", type=float)
    common.add_argument("--y-floor", dest="y_floor", type=float)
    common.add_argument("--format", choices=("json", "csv", "text"))
    common.add_argument("--output")
    common.add_argument("--golden", help="compare the output with this file; mismatch exits 1")
    common.add_argument("--write-golden", action="store_true", help="store the output as the golden file instead")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common])
    v.add_argument("suite", choices=(
        "theorem1", "hanji", "nekrasov-okounkov", "s2k", "theorem3",
        "corollary4", "berndt", "theorem2", "theorem6-cocycle",
    ))
    v.add_argument("--a", type=int)
    v.add_argument("--t", type=int)
    v.add_argument("--k", type=int)
    v.add_argument("--z", help="comma-separated points, e.g. 2i,0.3+0.8i")
    v.add_argument("--form", choices=("stated", "corrected"), default="stated")

    e = sub.add_parser("eval", parents=[common])
    e.add_argument("target", choices=(
        "fhook", "qbracket-coeffs", "eichler", "eta", "maass-e0", "maass-eneg", "psi", "hstar", "omega",
    ))
    e.add_argument("--parts")
    e.add_argument("--a", type=int)
    e.add_argument("--t", type=int)
    e.add_argument("--k", type=int)
    e.add_argument("--z")
    e.add_argument("--D", type=int)

    t = sub.add_parser("table", parents=[common])
    t.add_argument("kind", choices=("asymptotic", "theorem1-coeffs"))
    t.add_argument("--k", type=int)
    t.add_argument("--a", type=int)
    t.add_argument("--t", dest="t_list", help="t values (asymptotic: comma list) or t (theorem1-coeffs)")
    t.add_argument("--cutoff", default=str(asymptotics.TABLE_CUTOFF), help="fixed last term index, or 'optimal'")

    r = sub.add_parser("remark", parents=[common])
    r.add_argument("which", choices=("a1",))
    r.add_argument("--t", type=float)
    return p


COMMANDS = {"verify": cmd_verify, "eval": cmd_eval, "table": cmd_table, "remark": cmd_remark}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = load_config(args)
        return COMMANDS[args.command](args, cfg)
    except (UsageError, QBracketError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
