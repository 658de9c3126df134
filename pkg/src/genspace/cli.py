"""Command-line frontend.

Commands:
  analyze DIST          generic space, volumes, and the entropy family
  code build DIST       derive a prefix code, write its table
  code encode TABLE SYMBOLS OUT
  code decode TABLE STREAM [OUT]
  table1                effective dimensions of four reference coins
  check JOINT           elementary information inequalities on a joint

Exit codes: 0 success, 2 input error, 3 codec/framing error, 4 an
inequality check failed.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .coding import (
    DecodeError,
    average_length,
    build_generic_code,
    decode,
    encode,
    format_code_table,
    frame_bits,
    parse_code_table,
    unframe_bits,
)
from .distribution import (
    ExactDistribution,
    format_distribution,
    generic_space,
    parse_distribution,
)
from .entropy import (
    DEFAULT_EXACT_LIMIT,
    combinatorial_volumes,
    effective_dimension,
    entropy_suite,
    shannon_entropy,
)
from .joint import check_inequalities, parse_joint

TABLE1_DISTRIBUTIONS = (
    "1/2 1/2",
    "1/4 3/4",
    "1/16 15/16",
    "1/256 255/256",
)


def _add_common_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--base", type=int, default=2, metavar="B",
                        help="logarithm base for entropies (integer >= 2, default 2)")
    parser.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT,
                        metavar="L", help="largest dimension for exact volumes")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    parser.add_argument("--seed", type=int, default=42, metavar="S",
                        help="seed for any randomized operation")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genspace", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze a distribution file")
    p.add_argument("dist_file", type=Path)
    p.add_argument("--renyi", type=float, metavar="R",
                   help="also report the Renyi entropy of this order")
    p.add_argument("--tsallis", type=float, metavar="Q",
                   help="also report the Tsallis entropy of this order")
    _add_common_flags(p)
    p.set_defaults(handler=run_analyze)

    p = sub.add_parser("code", help="prefix-code operations")
    code_sub = p.add_subparsers(dest="code_command", required=True)

    b = code_sub.add_parser("build", help="build a code from a distribution")
    b.add_argument("dist_file", type=Path)
    b.add_argument("-o", "--output", type=Path, default=None,
                   help="code table path (default: distribution file with .code suffix)")
    _add_common_flags(b)
    b.set_defaults(handler=run_code_build)

    e = code_sub.add_parser("encode", help="encode symbol indices into a bit stream")
    e.add_argument("table_file", type=Path)
    e.add_argument("symbols_file", type=Path)
    e.add_argument("output_file", type=Path)
    _add_common_flags(e)
    e.set_defaults(handler=run_code_encode)

    d = code_sub.add_parser("decode", help="decode a bit stream back to indices")
    d.add_argument("table_file", type=Path)
    d.add_argument("stream_file", type=Path)
    d.add_argument("output_file", type=Path, nargs="?", default=None)
    _add_common_flags(d)
    d.set_defaults(handler=run_code_decode)

    p = sub.add_parser("table1", help="reference coin distributions and dimensions")
    _add_common_flags(p)
    p.set_defaults(handler=run_table1)

    p = sub.add_parser("check", help="verify information inequalities on a joint file")
    p.add_argument("joint_file", type=Path)
    _add_common_flags(p)
    p.set_defaults(handler=run_check)

    return parser


def _validate_config(args: argparse.Namespace) -> None:
    if args.base < 2:
        raise ValueError(f"--base must be an integer >= 2, got {args.base}")
    if args.exact_limit < 1:
        raise ValueError(f"--exact-limit must be >= 1, got {args.exact_limit}")
    if not -(2**63) <= args.seed < 2**64:
        raise ValueError(f"--seed must fit in 64 bits, got {args.seed}")


def run_analyze(args: argparse.Namespace) -> int:
    dist = parse_distribution(args.dist_file.read_text())
    space = generic_space(dist)
    volumes = combinatorial_volumes(space, args.exact_limit)
    suite = entropy_suite(dist, args.base)

    h_renyi = None
    if args.renyi is not None:
        # Order 1 is the Shannon limit; the library functions refuse it.
        if args.renyi == 1:
            h_renyi = suite.shannon
        else:
            h_renyi = entropy_suite(dist, args.base, renyi_order=args.renyi).renyi[1]
    h_tsallis = None
    if args.tsallis is not None:
        if args.tsallis == 1:
            h_tsallis = shannon_entropy(dist, 2) * math.log(2)
        else:
            h_tsallis = entropy_suite(dist, args.base, tsallis_order=args.tsallis).tsallis[1]

    if args.json:
        report = {
            "D": space.dimension,
            "counts": list(space.counts),
            "v_info": volumes.v_info,
            "v_uinfo": volumes.v_uinfo,
            "log2_ratio": volumes.log2_ratio,
            "H_shannon": suite.shannon,
            "H_shannon_via_ratio": suite.shannon_via_ratio,
            "eff_dim": suite.effective_dimension,
            "H_renyi": h_renyi,
            "H_tsallis": h_tsallis,
            "H_projection": suite.projection,
            "base": args.base,
        }
        print(json.dumps(report, indent=2))
        return 0

    print(f"distribution:        {format_distribution(dist)}")
    print(f"N (outcomes):        {dist.size}")
    print(f"D (generic dim):     {space.dimension}")
    print(f"counts:              {' '.join(str(c) for c in space.counts)}")
    if volumes.exact_computed:
        print(f"v_info:              {volumes.v_info}")
        print(f"v_uinfo:             {volumes.v_uinfo}")
        print(f"ratio:               {volumes.ratio}")
    else:
        print(f"v_info:              (skipped, D > {args.exact_limit})")
        print(f"v_uinfo:             (skipped, D > {args.exact_limit})")
    print(f"log2_ratio:          {volumes.log2_ratio:.12g}")
    print(f"H_shannon:           {suite.shannon:.12g}")
    print(f"H_shannon_via_ratio: {suite.shannon_via_ratio:.12g}")
    print(f"eff_dim:             {suite.effective_dimension:.12g}")
    print(f"H_projection:        {suite.projection:.12g}")
    if h_renyi is not None:
        print(f"H_renyi({args.renyi:g}):        {h_renyi:.12g}")
    if h_tsallis is not None:
        print(f"H_tsallis({args.tsallis:g}):      {h_tsallis:.12g}")
    print(f"base:                {args.base}")
    return 0


def run_code_build(args: argparse.Namespace) -> int:
    dist = parse_distribution(args.dist_file.read_text())
    code = build_generic_code(generic_space(dist))
    stats = average_length(code, dist)
    out = args.output or args.dist_file.with_suffix(".code")
    out.write_text(format_code_table(code))
    avg = stats.average_length
    if args.json:
        print(json.dumps({
            "mode": code.mode,
            "codewords": list(code.codewords),
            "average_length": f"{avg.numerator}/{avg.denominator}",
            "entropy_gap": stats.entropy_gap,
            "table": str(out),
        }, indent=2))
        return 0
    print(f"wrote code table to {out}")
    print(f"avg = {avg.numerator}/{avg.denominator} ({code.mode} mode)")
    return 0


def run_code_encode(args: argparse.Namespace) -> int:
    code = parse_code_table(args.table_file.read_text())
    tokens = args.symbols_file.read_text().split()
    try:
        symbols = [int(t) for t in tokens]
    except ValueError:
        raise ValueError("symbols file must hold whitespace-separated integers") from None
    bits = encode(code, symbols)
    args.output_file.write_bytes(frame_bits(bits))
    print(f"encoded {len(symbols)} symbols into {len(bits)} bits")
    return 0


def run_code_decode(args: argparse.Namespace) -> int:
    code = parse_code_table(args.table_file.read_text())
    bits = unframe_bits(args.stream_file.read_bytes())
    symbols = decode(code, bits)
    text = " ".join(str(s) for s in symbols) + "\n"
    if args.output_file is not None:
        args.output_file.write_text(text)
        print(f"decoded {len(symbols)} symbols to {args.output_file}")
    else:
        sys.stdout.write(text)
    return 0


def run_table1(args: argparse.Namespace) -> int:
    rows = []
    for text in TABLE1_DISTRIBUTIONS:
        dist = parse_distribution(text)
        rows.append((text, generic_space(dist).dimension, effective_dimension(dist)))
    if args.json:
        print(json.dumps(
            [{"distribution": t, "D": d, "eff_dim": round(e, 4)} for t, d, e in rows],
            indent=2,
        ))
        return 0
    print(f"{'distribution':<16} {'D':>4}  {'eff_dim':>8}")
    for text, dim, eff in rows:
        print(f"{text:<16} {dim:>4}  {eff:>8.4f}")
    return 0


def run_check(args: argparse.Namespace) -> int:
    joint = parse_joint(args.joint_file.read_text())
    report = check_inequalities(joint)
    verdicts = {
        "H(X) >= H(X|Y)": report.conditioning_reduces_entropy,
        "I(X;Y) >= 0": report.mi_nonnegative,
        "I(X;Y) == I(Y;X)": report.mi_symmetric,
        "independence => I == 0": report.independence_consistent,
    }
    if args.json:
        print(json.dumps({
            "H_x": report.h_x,
            "H_y": report.h_y,
            "H_joint": report.h_joint,
            "H_x_given_y": report.h_x_given_y,
            "H_y_given_x": report.h_y_given_x,
            "I_xy": report.mi_xy,
            "I_yx": report.mi_yx,
            "independent": report.independent,
            "verdicts": {k: ("PASS" if v else "FAIL") for k, v in verdicts.items()},
            "all_pass": report.all_pass,
        }, indent=2))
    else:
        print(f"H(X)   = {report.h_x:.12g}")
        print(f"H(Y)   = {report.h_y:.12g}")
        print(f"H(X,Y) = {report.h_joint:.12g}")
        print(f"H(X|Y) = {report.h_x_given_y:.12g}")
        print(f"H(Y|X) = {report.h_y_given_x:.12g}")
        print(f"I(X;Y) = {report.mi_xy:.12g}")
        print(f"independent: {'yes' if report.independent else 'no'}")
        for name, ok in verdicts.items():
            print(f"{name}: {'PASS' if ok else 'FAIL'}")
    return 0 if report.all_pass else 4


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _validate_config(args)
        return args.handler(args)
    except DecodeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
