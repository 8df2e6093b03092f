"""Command-line front end.

Every subcommand accepts the configuration flags ``--s``, ``--a0``,
``--arg-weights``, ``--val-weights``, ``--rule`` and ``--json``.  Exact
rationals are printed as ``p/q``; decimals are labelled as approximations.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence

from .codes import Alphabet, DigitCode, Prefix, normalize_code
from .errors import MalformedCodeError, TribinError
from .function import (
    BINARY,
    LevelSetReport,
    TribinConfig,
    VariationReport,
    WellDefinedReport,
    Witness,
    check_well_defined,
    cylinder_image,
    eval_f,
    level_set_classify,
    level_set_cylinders,
    monotonicity_witness,
    transduce_code,
    variation_growth_schedule,
    variation_report,
)
from .numsys import code_value, cylinder_bounds

__all__ = [
    "main",
    "run",
    "parse_prefix",
    "parse_code",
    "format_fraction",
    "format_decimal",
    "plot_rows",
]


# -- code strings ----------------------------------------------------------------


def _digit_list(text: str, s: int) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    out = []
    for part in text.split(","):
        part = part.strip()
        if not part.isdigit():
            raise MalformedCodeError(f"bad digit {part!r}")
        out.append(int(part))
    return Alphabet(s).check(out)


def parse_prefix(text: str, s: int) -> Prefix:
    """``1,2,0`` -> a cylinder base."""
    if any(ch in text for ch in ":()"):
        raise MalformedCodeError(f"{text!r} is a code, not a prefix")
    return Prefix(Alphabet(s), _digit_list(text, s))


def parse_code(text: str, s: int) -> DigitCode:
    """``1,2:(0)`` or ``(0,1)`` -> a canonical eventually periodic code."""
    text = text.strip()
    if ":" in text:
        head, _, tail = text.partition(":")
    else:
        head, tail = "", text
    tail = tail.strip()
    if not (tail.startswith("(") and tail.endswith(")")):
        raise MalformedCodeError(f"{text!r}: the period must be written in parentheses")
    period = _digit_list(tail[1:-1], s)
    if not period:
        raise MalformedCodeError(f"{text!r}: empty period")
    return normalize_code(DigitCode(Alphabet(s), _digit_list(head, s), period))


def format_fraction(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def format_decimal(x: Fraction, places: int) -> str:
    with localcontext() as ctx:
        ctx.prec = places + 40
        d = Decimal(x.numerator) / Decimal(x.denominator)
        return format(d.quantize(Decimal(1).scaleb(-places), rounding=ROUND_HALF_EVEN), "f")


def _parse_weights(text: str | None) -> list[Fraction] | None:
    if text is None or text.strip().lower() == "uniform":
        return None
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise TribinError(f"bad weight list {text!r}: {exc}") from None


def config_from_args(args: argparse.Namespace) -> TribinConfig:
    a0 = None if args.a0 is None else _digit_list(args.a0, args.s)
    return TribinConfig.build(
        s=args.s,
        a0=a0,
        arg_weights=_parse_weights(args.arg_weights),
        val_weights=_parse_weights(args.val_weights),
        rule=args.rule,
    )


def config_to_dict(config: TribinConfig) -> dict[str, Any]:
    return {
        "s": config.s,
        "a0": sorted(config.partition.a0),
        "a1": sorted(config.partition.a1),
        "arg_weights": [format_fraction(w) for w in config.argument_system.weights],
        "val_weights": [format_fraction(w) for w in config.value_system.weights],
        "rule": int(config.rule),
    }


# -- subcommands -------------------------------------------------------------------
# Each returns (exit status, result dict, text lines).


def _cmd_eval(config: TribinConfig, args) -> tuple[int, dict, list[str]]:
    code = parse_code(args.code, config.s)
    x = code_value(config.argument_system, code)
    beta = transduce_code(config, code)
    y = eval_f(config, code)
    result = {
        "code": str(code),
        "x": format_fraction(x),
        "beta": str(beta),
        "value": format_fraction(y),
    }
    lines = [format_fraction(y), f"approx {format_decimal(y, 12)}  (x = {format_fraction(x)}, value code {beta})"]
    return 0, result, lines


def _cmd_image(config, args):
    base = parse_prefix(args.base, config.s)
    image = cylinder_image(config, base)
    lo, hi = cylinder_bounds(config.value_system, image)
    xlo, xhi = cylinder_bounds(config.argument_system, base)
    result = {
        "base": str(base),
        "image": str(image),
        "min": format_fraction(lo),
        "max": format_fraction(hi),
        "arg_min": format_fraction(xlo),
        "arg_max": format_fraction(xhi),
    }
    lines = [
        f"f([{format_fraction(xlo)}, {format_fraction(xhi)}]) = cylinder {image} = [{format_fraction(lo)}, {format_fraction(hi)}]"
    ]
    return 0, result, lines


def _cmd_levelset(config, args):
    if (args.beta is None) == (args.beta_code is None):
        raise TribinError("levelset needs exactly one of --beta or --beta-code")
    if args.beta is not None:
        beta = parse_prefix(args.beta, 2)
        cylinders = level_set_cylinders(config, beta)
        result = {"beta": str(beta), "count": len(cylinders), "cylinders": [str(c) for c in cylinders]}
        lines = [f"{len(cylinders)} rank-{len(beta)} cylinders map onto beta = {beta}:"]
        lines += [f"  {c}" for c in cylinders]
        return 0, result, lines
    y = parse_code(args.beta_code, 2)
    report = level_set_classify(config, y, rank=args.rank)
    result = level_report_to_dict(report)
    result["y"] = str(y)
    result["y_value"] = format_fraction(code_value(config.value_system, y))
    lines = [f"level set of {y} (= {result['y_value']}): {report.kind.value}"]
    lines += [f"  {c}  (x = {format_fraction(code_value(config.argument_system, c))})" for c in report.points]
    if args.rank is not None:
        lines.append(f"{len(report.rank_cylinders)} rank-{args.rank} cylinders:")
        lines += [f"  {c}" for c in report.rank_cylinders]
    return 0, result, lines


def level_report_to_dict(report: LevelSetReport) -> dict[str, Any]:
    return {
        "classification": report.kind.value,
        "points": [str(c) for c in report.points],
        "rank_cylinders": [str(c) for c in report.rank_cylinders],
    }


def witness_to_dict(w: Witness) -> dict[str, Any]:
    return {
        "base": str(w.base),
        "codes": [str(c) for c in w.codes],
        "points": [format_fraction(x) for x in w.points],
        "values": [format_fraction(y) for y in w.values],
    }


def _cmd_witness(config, args):
    base = parse_prefix(args.base, config.s)
    w = monotonicity_witness(config, base)
    shape = "peak" if w.is_peak else "valley"
    lines = [f"witness in cylinder {w.base} ({shape}):"]
    for c, x, y in zip(w.codes, w.points, w.values):
        lines.append(f"  x = {str(c):<12} = {format_fraction(x):<12} f = {format_fraction(y)}")
    return 0, witness_to_dict(w), lines


def variation_to_dict(report: VariationReport) -> dict[str, Any]:
    return {
        "method": report.method,
        "W": [format_fraction(w) for w in report.values],
        "growth_schedule": list(report.growth_schedule),
    }


def _cmd_variation(config, args):
    report = variation_report(config, args.max_rank, args.method)
    lines = [f"{'k':>3}  W_k (exact)  [approx]"]
    for k, w in enumerate(report.values, start=1):
        lines.append(f"{k:>3}  W_{k} = {format_fraction(w)}  [approx {format_decimal(w, 6)}]")
    if args.method == "both":
        lines.append("brute force and DP agree exactly")
    return 0, variation_to_dict(report), lines


def _cmd_growth(config, args):
    report = variation_growth_schedule(config, args.n, args.max_rank)
    lines = [f"W_{r} = {format_fraction(report.W(r))} >= 2^{n} = {2**n}" for n, r in enumerate(report.growth_schedule, 1)]
    return 0, variation_to_dict(report), lines


def well_defined_to_dict(report: WellDefinedReport) -> dict[str, Any]:
    if report.ok:
        return {"ok": True, "checked": report.checked}
    return {
        "ok": False,
        "checked": report.checked,
        "codes": [str(report.code), str(report.dual)],
        "values": [format_fraction(report.value), format_fraction(report.dual_value)],
    }


def _cmd_check(config, args):
    report = check_well_defined(config, args.max_rank)
    if report.ok:
        return 0, well_defined_to_dict(report), [f"well defined at all {report.checked} binary points up to rank {args.max_rank}"]
    lines = [
        f"not well defined: f({report.code}) = {format_fraction(report.value)}"
        f" but f({report.dual}) = {format_fraction(report.dual_value)}"
    ]
    return 1, well_defined_to_dict(report), lines


def plot_rows(config: TribinConfig, rank: int) -> list[tuple[Fraction, Fraction]]:
    """``(x, f(x))`` at both endpoints of every rank-``rank`` cylinder, left to right."""
    if rank < 1:
        raise TribinError("plot rank must be at least 1")
    s, top = config.s, config.s - 1
    arg, val = config.argument_system, config.value_system
    step = config.rule.step
    rows: list[tuple[Fraction, Fraction]] = []

    def tail_value(last: int, beta: int, lo: Fraction, width: Fraction, t: int) -> Fraction:
        # value of beta-word + digits produced by the constant tail (t)
        code = DigitCode.make(BINARY, (), _tail_betas(step, last, beta, t))
        return lo + width * code_value(val, code)

    def walk(depth, last, beta, xlo, xw, ylo, yw):
        if depth == rank:
            rows.append((xlo, tail_value(last, beta, ylo, yw, 0)))
            rows.append((xlo + xw, tail_value(last, beta, ylo, yw, top)))
            return
        for d in range(s):
            b = config.partition.first_beta(d) if depth == 0 else step(beta, last, d)
            walk(
                depth + 1,
                d,
                b,
                xlo + xw * arg.offsets[d],
                xw * arg.weights[d],
                ylo + yw * val.offsets[b],
                yw * val.weights[b],
            )

    walk(0, -1, 0, Fraction(0), Fraction(1), Fraction(0), Fraction(1))
    return rows


def _tail_betas(step, last: int, beta: int, t: int) -> tuple[int, ...]:
    first = step(beta, last, t)
    second = step(first, t, t)
    return (first,) if second == first else (first, second)


def _cmd_plot(config, args):
    rows = plot_rows(config, args.rank)
    out = args.stdout if args.out == "-" else open(args.out, "w", newline="")
    try:
        writer = csv.writer(out, lineterminator="\r\n")
        writer.writerow(["x", "f"])
        for x, y in rows:
            writer.writerow([format_decimal(x, 15), format_decimal(y, 15)])
    finally:
        if out is not args.stdout:
            out.close()
    result = {"rank": args.rank, "rows": len(rows), "out": args.out}
    return 0, result, [f"wrote {len(rows)} rows to {args.out}"]


# -- argument parsing -----------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("configuration")
    g.add_argument("--s", type=int, default=3, help="argument alphabet size (default 3)")
    g.add_argument("--a0", default=None, help="comma-separated digits of A_0 (default 0..s-2)")
    g.add_argument("--arg-weights", default="uniform", help="'uniform' or s comma-separated rationals")
    g.add_argument("--val-weights", default="uniform", help="'uniform' or 2 comma-separated rationals")
    g.add_argument("--rule", type=int, choices=(3, 7), default=3, help="3 = standard, 7 = flipped")
    g.add_argument("--json", action="store_true", help="emit one JSON document")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="tribin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate f at a digit code")
    p.add_argument("--code", required=True)
    p = sub.add_parser("image", parents=[common], help="image of a cylinder")
    p.add_argument("--base", required=True)
    p = sub.add_parser("levelset", parents=[common], help="level-set cylinders or classification")
    p.add_argument("--beta", default=None)
    p.add_argument("--beta-code", default=None)
    p.add_argument("--rank", type=int, default=None)
    p = sub.add_parser("witness", parents=[common], help="non-monotonicity witness in a cylinder")
    p.add_argument("--base", required=True)
    p = sub.add_parser("variation", parents=[common], help="table of W_k")
    p.add_argument("--max-rank", type=int, required=True)
    p.add_argument("--method", choices=("dp", "brute", "both"), default="dp")
    p = sub.add_parser("growth", parents=[common], help="ranks where W_k doubles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-rank", type=int, required=True)
    p = sub.add_parser("check", parents=[common], help="well-definedness at binary points")
    p.add_argument("--max-rank", type=int, required=True)
    p = sub.add_parser("plot", parents=[common], help="CSV of f at cylinder endpoints")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--out", default="-")
    return parser


COMMANDS = {
    "eval": _cmd_eval,
    "image": _cmd_image,
    "levelset": _cmd_levelset,
    "witness": _cmd_witness,
    "variation": _cmd_variation,
    "growth": _cmd_growth,
    "check": _cmd_check,
    "plot": _cmd_plot,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    args.stdout = stdout
    try:
        config = config_from_args(args)
        status, result, lines = COMMANDS[args.command](config, args)
    except TribinError as exc:
        print(f"tribin {args.command}: error: {exc}", file=stderr)
        return 2
    if args.json:
        doc = {"config": config_to_dict(config), "command": args.command, "result": result}
        print(json.dumps(doc, indent=2), file=stdout)
    elif not (args.command == "plot" and args.out == "-"):
        print("\n".join(lines), file=stdout)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
