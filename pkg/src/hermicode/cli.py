"""Command-line entry point.

Exit codes: 0 success, 2 bad arguments, 3 search refused by the subset
budget, 4 a mathematical disagreement (theorem violation, oracle mismatch or
golden-file mismatch).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from . import minwords, oracle, repro as repro_mod
from .code import CodeLabelError, build_code
from .curve import Divisor, DivisorError, enumerate_points
from .field import FieldContext, FieldError, make_field, prime_power
from .semigroup import gaps, label_table

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_VIOLATION = 4


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    action: Optional[str]
    p: Optional[int]
    k: Optional[int]
    q: Optional[int]
    m: Optional[int]
    seed: int
    budget: Optional[int]
    jobs: int
    out: Optional[str]
    fmt: str

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> RunConfig:
        p, k, q = getattr(args, "p", None), getattr(args, "k", None), getattr(args, "q", None)
        if q is not None:
            try:
                pq, kq = prime_power(q)
            except FieldError as exc:
                raise UsageError(str(exc)) from None
            if (p is not None and p != pq) or (k is not None and k != kq):
                raise UsageError(f"q={q} is not {p}^{k}")
            p, k = pq, kq
        elif p is not None:
            k = 1 if k is None else k
            q = p ** k
        return cls(
            command=args.command,
            action=getattr(args, "action", None),
            p=p,
            k=k,
            q=q,
            m=getattr(args, "m", None),
            seed=getattr(args, "seed", 0),
            budget=getattr(args, "budget", None),
            jobs=getattr(args, "jobs", 1),
            out=getattr(args, "out", None),
            fmt=getattr(args, "format", "json"),
        )

    def field(self) -> FieldContext:
        if self.p is None:
            raise UsageError("give --q (or --p and --k)")
        try:
            return make_field(self.p, self.k)
        except FieldError as exc:
            raise UsageError(str(exc)) from None

    def label(self) -> int:
        if self.m is None:
            raise UsageError("give --m")
        return self.m


def dump_json(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


# -- subcommands -----------------------------------------------------------------

def cmd_field_info(cfg: RunConfig) -> int:
    ctx = cfg.field()
    info = {
        "p": ctx.p,
        "k": ctx.k,
        "q": ctx.q,
        "order": ctx.order,
        "modulus": ctx.modulus_str(),
        "generator": str(ctx.generator),
        "subfield": [str(a) for a in ctx.subfield],
    }
    _emit(cfg, dump_json(info))
    return EXIT_OK


def cmd_curve(cfg: RunConfig) -> int:
    ctx = cfg.field()
    pts = enumerate_points(ctx)
    if cfg.fmt == "csv":
        _emit(cfg, _csv([["index", "x", "y"]] + [[i, pt.x, pt.y] for i, pt in enumerate(pts)]))
    else:
        _emit(cfg, dump_json({"q": ctx.q, "n": len(pts), "points": [pt.as_json() for pt in pts]}))
    return EXIT_OK


def semigroup_table_csv(q: int, m_from: int, m_to: int) -> str:
    table = label_table(q, m_from, m_to)
    rows = [
        ["m"] + [t.m for t in table],
        ["m_tilde"] + [t.m_tilde for t in table],
        ["delta_m"] + [t.delta_m for t in table],
        ["delta_tilde"] + [t.delta_tilde for t in table],
        ["phase"] + [t.phase.value for t in table],
    ]
    return _csv(rows)


def cmd_semigroup(cfg: RunConfig, args: argparse.Namespace) -> int:
    q = cfg.field().q
    if cfg.action == "gaps":
        _emit(cfg, ",".join(map(str, gaps(q))) + "\n")
    else:
        if args.m_from > args.m_to:
            raise UsageError("--from must not exceed --to")
        try:
            _emit(cfg, semigroup_table_csv(q, args.m_from, args.m_to))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return EXIT_OK


def _code(cfg: RunConfig, relax: bool = False):
    try:
        return build_code(cfg.field(), cfg.label(), relax=relax)
    except CodeLabelError as exc:
        raise UsageError(str(exc)) from None


def cmd_code(cfg: RunConfig, args: argparse.Namespace) -> int:
    code = _code(cfg, relax=args.relax)
    if cfg.action == "params":
        _emit(cfg, dump_json(code.params()))
        return EXIT_OK
    labels = [str(mono) for mono in code.monomials]
    if cfg.fmt == "csv":
        header = ["monomial"] + [f"{pt.x}:{pt.y}" for pt in code.points]
        rows = [[label] + [int(v) for v in row] for label, row in zip(labels, code.parity_check)]
        _emit(cfg, _csv([header] + rows))
    else:
        _emit(
            cfg,
            dump_json({
                "q": code.q,
                "m": code.m,
                "rows": labels,
                "columns": [pt.as_json() for pt in code.points],
                "matrix": [[str(int(v)) for v in row] for row in code.parity_check],
            }),
        )
    return EXIT_OK


def cmd_distance(cfg: RunConfig) -> int:
    q = cfg.field().q
    try:
        d = minwords.distance(q, cfg.label())
    except CodeLabelError as exc:
        raise UsageError(str(exc)) from None
    _emit(cfg, f"{d}\n")
    return EXIT_OK


def _parse_divisor(ctx: FieldContext, text: str) -> Divisor:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            data = json.load(fh)
        if isinstance(data, dict):
            data = data["divisor"]
        if data and isinstance(data[0], dict):
            return Divisor.from_json(ctx, data)
        return Divisor.from_indices(ctx, [int(i) for i in data])
    indices = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    n = len(enumerate_points(ctx))
    if any(not 0 <= i < n for i in indices):
        raise UsageError(f"point indices must lie in 0..{n - 1}")
    return Divisor.from_indices(ctx, indices)


def cmd_minwords(cfg: RunConfig, args: argparse.Namespace) -> int:
    ctx = cfg.field()
    m = cfg.label()
    code = _code(cfg)
    extra: dict = {}
    try:
        if cfg.action == "sample":
            found = minwords.sample_type_i_support(ctx, m, seed=cfg.seed, attempts=args.attempts)
            if found is None:
                _emit(cfg, dump_json({"found": False, "q": ctx.q, "m": m, "seed": cfg.seed}))
                return EXIT_OK
            divisor, poly = found
            extra["sampled_polynomial"] = poly.to_text()
        elif cfg.action == "construct":
            divisor = _construct(ctx, m, args.type, cfg.seed)
        else:
            if not args.divisor:
                raise UsageError("classify needs --divisor")
            divisor = _parse_divisor(ctx, args.divisor)
    except (minwords.ConstructionError, DivisorError) as exc:
        raise UsageError(str(exc)) from None
    cert = minwords.classify_support(code, divisor, seed=cfg.seed)
    _emit(cfg, dump_json({**cert.as_json(), **extra}))
    return EXIT_OK


def _construct(ctx: FieldContext, m: int, kind: str, seed: int) -> Divisor:
    seed_arg = seed if seed else None
    if kind == "i":
        return minwords.construct_line_union_support(ctx, m, seed=seed_arg)[0]
    if kind == "ii":
        mu = minwords.type_ii_mu(ctx.q, m)
        if mu is None:
            raise minwords.ConstructionError(f"m={m} is not of the form (mu+q-3)(q+1)+1")
        return minwords.construct_type_ii_support(ctx, mu, seed=seed_arg)[0]
    return minwords.construct_phase1_supports(ctx, m, kind, seed=seed_arg)


def cmd_oracle(cfg: RunConfig, args: argparse.Namespace) -> int:
    code = _code(cfg)
    if cfg.action == "distance":
        formula = code.distance
        w_max = args.w_max if args.w_max is not None else formula
        found = oracle.brute_force_distance(code, w_max, budget=cfg.budget, jobs=cfg.jobs)
        agree = found == formula if w_max >= formula else found is None
        _emit(cfg, dump_json({"q": code.q, "m": code.m, "w_max": w_max, "distance_found": found, "formula": formula, "agree": agree}))
        return EXIT_OK if agree else EXIT_VIOLATION
    report = oracle.enumerate_min_supports(code, budget=cfg.budget, jobs=cfg.jobs)
    _emit(cfg, dump_json(report.as_json(timing=args.timing)))
    return EXIT_OK if report.distance_found == code.distance else EXIT_VIOLATION


def cmd_repro(cfg: RunConfig, args: argparse.Namespace) -> int:
    if args.example not in repro_mod.EXAMPLES:
        raise UsageError(f"unknown example {args.example!r}; known: {', '.join(sorted(repro_mod.EXAMPLES))}")
    ex = repro_mod.EXAMPLES[args.example]
    if cfg.q is not None and cfg.q != ex.q:
        raise UsageError(f"{args.example} is stated for q={ex.q}")
    computed = ex.render()
    golden = repro_mod.golden_text(ex)
    _emit(cfg, computed)
    if computed != golden:
        sys.stderr.write(f"{args.example}: output differs from golden file {ex.golden}\n")
        return EXIT_VIOLATION
    return EXIT_OK


# -- parser ----------------------------------------------------------------------

def _field_opts(p: argparse.ArgumentParser) -> None:
    p.add_argument("--q", type=int, help="size of the subfield GF(q); the code lives over GF(q^2)")
    p.add_argument("--p", type=int, help="characteristic (alternative to --q)")
    p.add_argument("--k", type=int, help="q = p^k")


def _common(p: argparse.ArgumentParser, m: bool = True) -> None:
    _field_opts(p)
    if m:
        p.add_argument("--m", type=int, help="code label")
    p.add_argument("--out", help="write output to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hermicode", description="Hermitian codes and their minimum-weight supports")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("field-info", help="describe GF(q^2)")
    _common(p, m=False)

    p = sub.add_parser("curve", help="rational points of the Hermitian curve")
    p.add_argument("action", choices=["points"])
    _common(p, m=False)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("semigroup", help="gaps and the label table")
    p.add_argument("action", choices=["gaps", "table"])
    _common(p, m=False)
    p.add_argument("--from", dest="m_from", type=int, default=0)
    p.add_argument("--to", dest="m_to", type=int, default=0)

    p = sub.add_parser("code", help="parameters and parity-check matrix of C_m")
    p.add_argument("action", choices=["params", "matrix"])
    _common(p)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--relax", action="store_true", help="replace a non-label m by the label of the same code")

    p = sub.add_parser("distance", help="minimum distance of C_m")
    _common(p)

    p = sub.add_parser("minwords", help="construct and certify minimum-weight supports")
    p.add_argument("action", choices=["sample", "construct", "classify"])
    _common(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--type", choices=["i", "ii", "vertical", "nonvertical"], default="i")
    p.add_argument("--attempts", type=int, default=None)
    p.add_argument("--divisor", help="comma-separated point indices, or @file.json")

    p = sub.add_parser("oracle", help="exhaustive ground truth")
    p.add_argument("action", choices=["distance", "census"])
    _common(p)
    p.add_argument("--budget", type=int, default=None, help="maximum number of subsets (default $HERMICODE_BUDGET or 5e6)")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--w-max", dest="w_max", type=int, default=None)
    p.add_argument("--timing", action="store_true", help="include wall time in the report")

    p = sub.add_parser("repro", help="recompute a worked example and diff against its golden file")
    p.add_argument("example")
    _common(p, m=False)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        cfg = RunConfig.from_args(args)
        if getattr(args, "jobs", 1) < 1:
            raise UsageError("--jobs must be positive")
        if cfg.command == "field-info":
            return cmd_field_info(cfg)
        if cfg.command == "curve":
            return cmd_curve(cfg)
        if cfg.command == "semigroup":
            return cmd_semigroup(cfg, args)
        if cfg.command == "code":
            return cmd_code(cfg, args)
        if cfg.command == "distance":
            return cmd_distance(cfg)
        if cfg.command == "minwords":
            return cmd_minwords(cfg, args)
        if cfg.command == "oracle":
            return cmd_oracle(cfg, args)
        return cmd_repro(cfg, args)
    except UsageError as exc:
        sys.stderr.write(f"hermicode: error: {exc}\n")
        return EXIT_USAGE
    except oracle.BudgetExceeded as exc:
        sys.stderr.write(f"hermicode: refused: {exc}\n")
        return EXIT_BUDGET
    except minwords.TheoremViolation as exc:
        sys.stderr.write(f"hermicode: THEOREM VIOLATION: {exc}\n")
        return EXIT_VIOLATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
