"""Command-line interface: stats, oracle, family, enumerate, sample, cseq, verify."""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Tuple

from . import dp, enumeration, families, oracle, verify
from .rationals import format_ratio, to_decimal
from .tree import ParseError, Tree, TreeError, parse_tree, serialize

BLOCK_SEPARATOR = "---"


def _parse_range(text: str) -> Tuple[int, int]:
    """'A..B' -> (A, B); a bare integer N -> (N, N)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return int(lo), int(hi)
    n = int(text)
    return n, n


def _parse_params(text: str) -> dict:
    """'k=3,r=2' -> {'k': 3, 'r': 2}."""
    params = {}
    for item in text.split(","):
        if not item:
            continue
        key, _, value = item.partition("=")
        if not _:
            raise ValueError(f"bad parameter {item!r}, expected name=value")
        params[key.strip()] = int(value)
    return params


def _load_trees(path: str) -> List[Tree]:
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    blocks = [b for b in text.split(BLOCK_SEPARATOR) if b.strip()]
    return [parse_tree(b) for b in blocks]


def _emit(out, text: str):
    out.write(text)
    if not text.endswith("\n"):
        out.write("\n")


def _open_out(args):
    if getattr(args, "out", None):
        return open(args.out, "w", encoding="utf-8"), True
    return sys.stdout, False


def _stats_text(stats: dp.SubtreeStats, digits: int) -> str:
    lines = [
        f"n={stats.n}",
        f"subtrees={stats.subtree_count}",
        f"order_sum={stats.order_sum}",
        f"mu={format_ratio(stats.mu)} ({to_decimal(stats.mu, digits)})",
        f"density={format_ratio(stats.density)} ({to_decimal(stats.density, digits)})",
    ]
    if stats.mu_prime is not None:
        lines.append(
            f"mu_prime={format_ratio(stats.mu_prime)} ({to_decimal(stats.mu_prime, digits)})")
    return "\n".join(lines) + "\n"


def cmd_stats(args) -> int:
    tree = _load_trees(args.tree)[0]
    stats = dp.global_stats(tree)
    out, close = _open_out(args)
    try:
        if args.format == "json":
            _emit(out, json.dumps(stats.to_json_dict(), sort_keys=True, indent=2))
        else:
            out.write(_stats_text(stats, args.decimals))
    finally:
        if close:
            out.close()
    return 0


def cmd_oracle(args) -> int:
    tree = _load_trees(args.tree)[0]
    out, close = _open_out(args)
    try:
        if args.dump:
            for line in oracle.dump_subsets(tree):
                _emit(out, line)
            return 0
        brute = oracle.oracle_stats(tree)
        fast = dp.global_stats(tree)
        if args.format == "json":
            _emit(out, json.dumps(brute.to_json_dict(), sort_keys=True, indent=2))
        else:
            out.write(_stats_text(brute, args.decimals))
        if brute != fast:
            _emit(out, "MISMATCH: oracle disagrees with the DP computation")
            return 1
        _emit(out, "agreement=ok")
        return 0
    finally:
        if close:
            out.close()


def _family_spec(args) -> families.FamilySpec:
    if not args.family:
        raise TreeError("--family NAME is required")
    return families.FamilySpec(args.family, _parse_params(args.params or ""))


def cmd_family(args) -> int:
    spec = _family_spec(args)
    out, close = _open_out(args)
    try:
        if args.sweep:
            name, _, rng = args.sweep.partition("=")
            lo, hi = _parse_range(rng)
            points = families.density_sweep(spec, name.strip(), range(lo, hi + 1))
            if args.format == "json":
                _emit(out, json.dumps([{
                    "param": p.param_value, "n": p.n, "leaves": p.leaves,
                    "twigs": p.twigs, "diameter": p.diameter,
                    "density": {"num": str(p.density.numerator),
                                "den": str(p.density.denominator)},
                } for p in points], sort_keys=True, indent=2))
            else:
                families.write_sweep_csv(points, out, digits=args.decimals)
        else:
            out.write(serialize(families.make_family(spec)))
        return 0
    finally:
        if close:
            out.close()


def cmd_enumerate(args) -> int:
    lo, hi = _parse_range(args.n)
    out, close = _open_out(args)
    try:
        first = True
        for n in range(lo, hi + 1):
            for tree in enumeration.enumerate_trees(n, series_reduced=args.series_reduced):
                if not first:
                    _emit(out, BLOCK_SEPARATOR)
                out.write(serialize(tree))
                first = False
        return 0
    finally:
        if close:
            out.close()


def cmd_sample(args) -> int:
    lo, _ = _parse_range(args.n)
    out, close = _open_out(args)
    try:
        for i in range(args.count):
            if i:
                _emit(out, BLOCK_SEPARATOR)
            out.write(serialize(enumeration.sample_series_reduced(lo, args.seed + i)))
        return 0
    finally:
        if close:
            out.close()


def cmd_cseq(args) -> int:
    out, close = _open_out(args)
    try:
        from .ranks import c_sequence
        for j, c in enumerate(c_sequence(args.count)):
            _emit(out, f"{j} {format_ratio(c)} {to_decimal(c, 15)}")
        return 0
    finally:
        if close:
            out.close()


def _verify_trees(args):
    if args.source == "enum":
        lo, hi = _parse_range(args.n)
        for n in range(lo, hi + 1):
            yield from enumeration.enumerate_trees(n, series_reduced=args.series_reduced)
    elif args.source == "sample":
        lo, _ = _parse_range(args.n)
        for i in range(args.count):
            yield enumeration.sample_series_reduced(lo, args.seed + i)
    elif args.source == "family":
        spec = _family_spec(args)
        if args.sweep:
            name, _, rng = args.sweep.partition("=")
            lo, hi = _parse_range(rng)
            for v in range(lo, hi + 1):
                yield families.make_family(spec.with_param(name.strip(), v))
        else:
            yield families.make_family(spec)
    elif args.source == "file":
        yield from _load_trees(args.tree)
    else:
        raise TreeError(f"unknown source {args.source!r}")


def cmd_verify(args) -> int:
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    config = {
        "source": args.source,
        "checks": checks,
        "n": args.n,
        "series_reduced": args.series_reduced,
        "seed": args.seed,
        "count": args.count,
    }
    report = verify.run_checks(_verify_trees(args), checks, config=config)
    out, close = _open_out(args)
    try:
        if args.format == "json":
            _emit(out, report.to_json())
        else:
            for line in report.summary_lines():
                _emit(out, line)
            _emit(out, "result=" + ("pass" if report.passed else "FAIL"))
        return 0 if report.passed else 1
    finally:
        if close:
            out.close()


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="subtree-density",
        description="Exact subtree-count and mean-subtree-order invariants of trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, tree=False, family=False, n=False, seed=False, count=None):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")
        p.add_argument("--decimals", type=int, default=12)
        p.add_argument("--out", default=None)
        if tree:
            p.add_argument("--tree", required=True, help="tree file path")
        if family:
            p.add_argument("--family", choices=families.FAMILY_NAMES)
            p.add_argument("--params", default="", help="e.g. k=3,r=2")
            p.add_argument("--sweep", default=None, help="e.g. r=1..20")
        if n:
            p.add_argument("--n", required=True, help="N or A..B")
        if seed:
            p.add_argument("--seed", type=int, default=0)
        if count is not None:
            p.add_argument("--count", type=int, default=count)

    common(sub.add_parser("stats", help="exact per-tree invariants"), tree=True)
    p = sub.add_parser("oracle", help="brute-force cross-check")
    common(p, tree=True)
    p.add_argument("--dump", action="store_true", help="list subtrees one per line")

    common(sub.add_parser("family", help="build a family member or sweep"), family=True)

    p = sub.add_parser("enumerate", help="all free trees up to isomorphism")
    common(p, n=True)
    p.add_argument("--series-reduced", action="store_true")

    common(sub.add_parser("sample", help="random series-reduced trees"),
           n=True, seed=True, count=1)

    common(sub.add_parser("cseq", help="coefficient sequence c_j"), count=6)

    p = sub.add_parser("verify", help="run inequality checks over a tree stream")
    common(p, family=True, seed=True, count=200)
    p.add_argument("--source", choices=("enum", "sample", "family", "file"), required=True)
    p.add_argument("--n", default="4..12", help="N or A..B (enum range / sample target)")
    p.add_argument("--series-reduced", action="store_true")
    p.add_argument("--tree", default=None, help="tree file for --source file")
    p.add_argument("--checks", default=",".join(verify.ALL_CHECKS))
    return parser


_DISPATCH = {
    "stats": cmd_stats,
    "oracle": cmd_oracle,
    "family": cmd_family,
    "enumerate": cmd_enumerate,
    "sample": cmd_sample,
    "cseq": cmd_cseq,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (TreeError, ParseError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
