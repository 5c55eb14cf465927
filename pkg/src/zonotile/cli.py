"""Command-line entry points.

One binary with subcommands; inputs and outputs are the JSON schemas of
:mod:`zonotile.jsonio`.  Exit codes: 0 success, 1 validation or input
error (with an error object on stderr), 2 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bitsets as bs
from . import jsonio
from ._planar import TilingError
from .combi import (
    find_m_config_at,
    find_w_config_at,
    from_w_collection,
    validate_combi,
)
from .contraction import legal_path_report, n_contract, n_expand
from .flips import descend_to_minimum, lowering_flip, raising_flip
from .patterns import classify_pattern, domains, verify_complementary, verify_purity
from .render import RenderStyle, render_svg
from .separation import (
    RELATION_KINDS,
    ResourceGuardError,
    base_relation,
    enumerate_maximal,
    hypercube_domain,
    strongly_separated,
    weakly_separated,
)
from .suite import run_suite


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        if not text.endswith("\n"):
            sys.stdout.write("\n")
    else:
        Path(out).write_text(text, encoding="utf-8")


def _dump(data, out: str | None) -> None:
    _write_output(json.dumps(data, indent=2, sort_keys=True) + "\n", out)


def cmd(argv: list[str]) -> int:
    parser = argparse.ArgumentParser(prog="zonotile", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("separation", help="print relation verdicts for two subsets")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("enumerate", help="write the maximal-collection report of a domain")
    p.add_argument("--domain", required=True, help="SetFamily JSON file")
    p.add_argument("--relation", choices=("weak", "strong"), default="weak")
    p.add_argument("--out")

    p = sub.add_parser("purity", help="print pure/ranks for a domain")
    p.add_argument("--domain", help="SetFamily JSON file")
    p.add_argument("--hypercube", type=int, help="use the full power set of this ground size")
    p.add_argument("--relation", choices=("weak", "strong"), default="weak")

    p = sub.add_parser("build-combi", help="reconstruct the combi of a maximal w-collection")
    p.add_argument("--family", required=True)
    p.add_argument("--out")

    p = sub.add_parser("flip", help="apply one flip to a combi")
    p.add_argument("--combi", required=True)
    p.add_argument("--op", choices=("lower", "raise"), required=True)
    p.add_argument("--core", required=True, help="subset like '1,3' (the common part)")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--out")
    p.add_argument("--trace")

    p = sub.add_parser("descend", help="lowering flips down to the interval combi")
    p.add_argument("--combi", required=True)
    p.add_argument("--out")
    p.add_argument("--trace")

    p = sub.add_parser("contract", help="contract away the largest element")
    p.add_argument("--combi", required=True)
    p.add_argument("--out-combi")
    p.add_argument("--out-path")

    p = sub.add_parser("expand", help="expand a combi along a legal path")
    p.add_argument("--combi", required=True)
    p.add_argument("--path", required=True)
    p.add_argument("--out")

    p = sub.add_parser("pattern", help="cyclic pattern operations")
    p.add_argument("action", choices=("classify", "domains", "verify"))
    p.add_argument("--pattern", required=True)
    p.add_argument("--out")

    p = sub.add_parser("verify", help="run the verification battery")
    p.add_argument("--paper-suite", action="store_true")
    p.add_argument("--max-n", type=int, default=4)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out")

    p = sub.add_parser("render", help="emit deterministic SVG")
    p.add_argument("--combi")
    p.add_argument("--tiling")
    p.add_argument("--pattern")
    p.add_argument("--out")
    p.add_argument("--no-labels", action="store_true")

    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except ResourceGuardError as exc:
        sys.stderr.write(json.dumps({"error": "resource-guard", "detail": str(exc)}) + "\n")
        return 2
    except TilingError as exc:
        sys.stderr.write(
            json.dumps({"error": exc.axiom, "detail": exc.detail}) + "\n"
        )
        return 1
    except (ValueError, KeyError, OSError) as exc:
        sys.stderr.write(json.dumps({"error": "invalid-input", "detail": str(exc)}) + "\n")
        return 1


def _dispatch(args) -> int:
    if args.command == "separation":
        a, b = bs.parse_subset(args.first), bs.parse_subset(args.second)
        n = args.n
        verdicts = {}
        for kind in RELATION_KINDS:
            try:
                verdicts[kind] = base_relation(kind, a, b, n)
            except ValueError:
                verdicts[kind] = None
        verdicts["strongly_separated"] = strongly_separated(a, b)
        verdicts["weakly_separated"] = weakly_separated(a, b)
        for key, value in verdicts.items():
            shown = "undefined" if value is None else str(value).lower()
            print(f"{key}: {shown}")
        return 0

    if args.command == "enumerate":
        family = jsonio.family_from_json(_load(args.domain))
        report = enumerate_maximal(family, args.relation)
        _dump(jsonio.report_to_json(report), args.out)
        return 0

    if args.command == "purity":
        if (args.domain is None) == (args.hypercube is None):
            raise ValueError("pass exactly one of --domain or --hypercube")
        family = (
            hypercube_domain(args.hypercube)
            if args.hypercube is not None
            else jsonio.family_from_json(_load(args.domain))
        )
        report = enumerate_maximal(family, args.relation)
        if report.pure:
            print(f"pure, rank {report.ranks[0]}")
        else:
            print("impure, ranks " + ",".join(map(str, report.ranks)))
        return 0

    if args.command == "build-combi":
        family = jsonio.family_from_json(_load(args.family))
        combi = from_w_collection(family)
        _dump(jsonio.combi_to_json(combi), args.out)
        return 0

    if args.command == "flip":
        combi = jsonio.combi_from_json(_load(args.combi))
        validate_combi(combi)
        core = bs.parse_subset(args.core)
        if args.op == "lower":
            conf = find_w_config_at(combi, core, args.i, args.j, args.k)
            flipped = lowering_flip(combi, conf)
        else:
            conf = find_m_config_at(combi, core, args.i, args.j, args.k)
            flipped = raising_flip(combi, conf)
        if args.trace:
            line = jsonio.flip_trace_line(args.op, core, args.i, args.j, args.k)
            with open(args.trace, "a", encoding="utf-8") as fh:
                fh.write(json.dumps(line, sort_keys=True) + "\n")
        _dump(jsonio.combi_to_json(flipped), args.out)
        return 0

    if args.command == "descend":
        combi = jsonio.combi_from_json(_load(args.combi))
        validate_combi(combi)
        final, trace = descend_to_minimum(combi)
        if args.trace:
            with open(args.trace, "w", encoding="utf-8") as fh:
                for w in trace:
                    line = jsonio.flip_trace_line("lower", w.core, w.i, w.j, w.k)
                    fh.write(json.dumps(line, sort_keys=True) + "\n")
        _dump(jsonio.combi_to_json(final), args.out)
        return 0

    if args.command == "contract":
        combi = jsonio.combi_from_json(_load(args.combi))
        validate_combi(combi)
        smaller, path = n_contract(combi)
        _dump(jsonio.combi_to_json(smaller), args.out_combi)
        if args.out_path:
            _dump(jsonio.path_to_json(path), args.out_path)
        return 0

    if args.command == "expand":
        combi = jsonio.combi_from_json(_load(args.combi))
        validate_combi(combi)
        path = jsonio.path_from_json(_load(args.path))
        ok, why = legal_path_report(combi, path)
        if not ok:
            raise ValueError(why)
        _dump(jsonio.combi_to_json(n_expand(combi, path)), args.out)
        return 0

    if args.command == "pattern":
        pattern = jsonio.pattern_from_json(_load(args.pattern))
        if args.action == "classify":
            print(classify_pattern(pattern))
            return 0
        inner, outer = domains(pattern)
        if args.action == "domains":
            _dump(
                {
                    "inside": jsonio.family_to_json(inner),
                    "outside": jsonio.family_to_json(outer),
                },
                args.out,
            )
            return 0
        comp = verify_complementary(inner, outer)
        rin, rout = verify_purity(inner), verify_purity(outer)
        result = {
            "complementary": comp,
            "inside": {"pure": rin.pure, "ranks": list(rin.ranks)},
            "outside": {"pure": rout.pure, "ranks": list(rout.ranks)},
        }
        _dump(result, args.out)
        return 0 if comp and rin.pure and rout.pure else 1

    if args.command == "verify":
        if not args.paper_suite:
            raise ValueError("only --paper-suite verification is available")
        report = run_suite(max_n=args.max_n, seed=args.seed, samples=args.samples)
        _dump(report, args.out)
        return 0 if report["pass"] else 1

    if args.command == "render":
        chosen = [x for x in (args.combi, args.tiling, args.pattern) if x]
        if len(chosen) != 1:
            raise ValueError("pass exactly one of --combi, --tiling, --pattern")
        style = RenderStyle(labels=not args.no_labels)
        if args.combi:
            obj = jsonio.combi_from_json(_load(args.combi))
            validate_combi(obj)
        elif args.tiling:
            from .rhombus import validate_rhombus

            obj = jsonio.tiling_from_json(_load(args.tiling))
            validate_rhombus(obj)
        else:
            obj = jsonio.pattern_from_json(_load(args.pattern))
        _write_output(render_svg(obj, style), args.out)
        return 0

    raise ValueError(f"unknown command {args.command!r}")


def main() -> None:
    sys.exit(cmd(sys.argv[1:]))


if __name__ == "__main__":
    main()
