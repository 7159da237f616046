"""Command-line driver: verify, maps, r-map, check-ybe, enumerate.

Exit codes: 0 on success, 1 on a mathematical failure (an identity or the
Yang-Baxter equation fails, with witnesses reported), 2 on input or parse
errors. All file output is byte-identical across runs and across --jobs
settings; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from .braces import (
    IDENTITY_SUITE,
    BraceError,
    NotABraceError,
    SkewBrace,
    parse_brace_tables_json,
    parse_brace_tables_text,
    sigma_perm,
    tau_perm,
)
from .groups import GroupTable, GroupTableError
from .search import (
    OrderTooLargeError,
    catalog_to_json,
    deduplicate_catalog,
    enumerate_braces,
    oracle_enumerate,
)
from .ybe import (
    YbeMap,
    build_r,
    check_bijective,
    check_nondegenerate,
    check_ybe,
    parse_rmap_json,
    rmap_to_csv,
    rmap_to_json,
    ybe_violations,
)


def _read(path: str) -> str:
    return Path(path).read_text()


def _load_brace_tables(path: str) -> tuple[GroupTable, GroupTable]:
    text = _read(path)
    if text.lstrip().startswith("{"):
        return parse_brace_tables_json(text)
    return parse_brace_tables_text(text)


def _load_brace(path: str) -> SkewBrace:
    dot, circ = _load_brace_tables(path)
    return SkewBrace(dot, circ)


def _load_rmap(path: str) -> YbeMap:
    """Accept an R-map JSON file or a brace file (R is then built from it)."""
    text = _read(path)
    if text.lstrip().startswith("{"):
        obj = json.loads(text)
        if isinstance(obj, dict) and "r" in obj:
            return parse_rmap_json(text)
        if isinstance(obj, dict) and "dot" in obj:
            dot, circ = parse_brace_tables_json(text)
            return build_r(SkewBrace(dot, circ))
        raise ValueError('expected JSON with an "r" field or "dot"/"circ" fields')
    dot, circ = parse_brace_tables_text(text)
    return build_r(SkewBrace(dot, circ))


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def cmd_verify(args: argparse.Namespace) -> int:
    dot, circ = _load_brace_tables(args.brace_file)
    code = 0
    for name, violations in IDENTITY_SUITE:
        witnesses = violations(dot, circ)
        first = next(witnesses, None)
        if first is None:
            print(f"{name}: PASS")
        else:
            code = 1
            print(f"{name}: FAIL witness={first}")
            if args.all_witnesses:
                for witness in witnesses:
                    print(f"{name}: FAIL witness={witness}")
    return code


def cmd_maps(args: argparse.Namespace) -> int:
    brace = _load_brace(args.brace_file)
    if args.element is not None and not 0 <= args.element < brace.n:
        raise BraceError(
            f"element {args.element} is outside 0..{brace.n - 1}"
        )
    elements = [args.element] if args.element is not None else list(range(brace.n))
    if args.format == "json":
        payload = {
            "n": brace.n,
            "maps": [
                {
                    "element": x,
                    "sigma": list(sigma_perm(brace, x).image),
                    "tau": list(tau_perm(brace, x).image),
                }
                for x in elements
            ],
        }
        _emit(json.dumps(payload, indent=1) + "\n", args.output)
    else:
        lines = []
        for x in elements:
            lines.append(
                f"sigma[{x}] = " + " ".join(str(v) for v in sigma_perm(brace, x).image)
            )
            lines.append(
                f"tau[{x}] = " + " ".join(str(v) for v in tau_perm(brace, x).image)
            )
        _emit("\n".join(lines) + "\n", args.output)
    return 0


def cmd_rmap(args: argparse.Namespace) -> int:
    brace = _load_brace(args.brace_file)
    rmap = build_r(brace)
    if args.format == "csv":
        _emit(rmap_to_csv(rmap), args.output)
    else:
        _emit(rmap_to_json(rmap) + "\n", args.output)
    return 0


def cmd_check_ybe(args: argparse.Namespace) -> int:
    rmap = _load_rmap(args.input_file)
    result = check_ybe(rmap, jobs=args.jobs)
    if result.ok:
        print("yang-baxter: PASS")
        print(f"nondegenerate: {'yes' if check_nondegenerate(rmap) else 'no'}")
        print(f"bijective: {'yes' if check_bijective(rmap) else 'no'}")
        return 0
    print(f"yang-baxter: FAIL witness={result.witness}")
    if args.all_witnesses:
        for witness in ybe_violations(rmap):
            if witness != result.witness:
                print(f"yang-baxter: FAIL witness={witness}")
    return 1


def cmd_enumerate(args: argparse.Namespace) -> int:
    started = time.perf_counter()
    if args.oracle:
        raw = oracle_enumerate(args.order, up_to_iso=False)
        iso = deduplicate_catalog(raw, pairwise=True)
    else:
        raw = enumerate_braces(args.order, up_to_iso=False, jobs=args.jobs)
        iso = deduplicate_catalog(raw)
    chosen = iso if args.up_to_iso else raw
    text = catalog_to_json(
        chosen, count_raw=len(raw.braces), count_up_to_iso=len(iso.braces)
    )
    _emit(text + "\n", args.output)
    elapsed = time.perf_counter() - started
    print(
        f"order={args.order} raw={len(raw.braces)} iso={len(iso.braces)} "
        f"elapsed={elapsed:.2f}s",
        file=sys.stderr,
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewbrace",
        description="Verify skew brace identities, extract sigma/tau/R maps, "
        "check the Yang-Baxter equation, and enumerate braces of small order.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the identity suite on a brace file")
    p.add_argument("brace_file")
    p.add_argument(
        "--all-witnesses",
        action="store_true",
        help="stream every failing tuple per identity, not just the first",
    )
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("maps", help="print sigma/tau permutations of a brace")
    p.add_argument("brace_file")
    p.add_argument("--element", type=int, default=None, help="restrict to one element")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_maps)

    p = sub.add_parser("r-map", help="export the Yang-Baxter map of a brace")
    p.add_argument("brace_file")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_rmap)

    p = sub.add_parser(
        "check-ybe", help="check the Yang-Baxter equation on an R-map or brace file"
    )
    p.add_argument("input_file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--all-witnesses", action="store_true")
    p.set_defaults(func=cmd_check_ybe)

    p = sub.add_parser("enumerate", help="enumerate all braces of one order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--up-to-iso", action="store_true")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="use the naive cross-validation enumerator (order <= 5)",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--output", default=None)
    p.set_defaults(func=cmd_enumerate)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotABraceError as exc:
        print(f"not a brace: {exc}", file=sys.stderr)
        return 1
    except (GroupTableError, BraceError, OrderTooLargeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
