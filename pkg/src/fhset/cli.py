"""Command-line front end: ``fhset {generate,analyze,table1,verify}``.

Exit codes: 0 success, 1 property violation, 2 invalid input, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import table1 as table1_mod
from . import verify as verify_mod
from .constructions import GENERATORS, InvalidParam, generate
from .formats import FormatError, analyze, read_sequence_file, rational_str, write_sequence_file

# flag -> generator parameter name
_FLAG_PARAMS = {"p": "p", "m": "M", "q": "q", "n": "N", "k": "k", "d": "d"}


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="fhset", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="build a set and write it as a sequence file")
    names = sorted(n.replace("_", "-") for n in GENERATORS)
    g.add_argument("--construction", required=True, help="one of: " + ", ".join(names))
    for flag in _FLAG_PARAMS:
        g.add_argument(f"--{flag}", type=int)
    g.add_argument("-o", "--output", required=True)

    a = sub.add_parser("analyze", help="correlation statistics and bound verdicts for a file")
    a.add_argument("path")
    a.add_argument("--json", action="store_true")

    t = sub.add_parser("table1", help="reproduce the in-scope table rows by brute force")
    t.add_argument("--max-q", type=int, default=256)
    t.add_argument("--json", action="store_true")

    v = sub.add_parser("verify", help="run the seeded property suite")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--cases", type=int, default=1000)
    v.add_argument("--max-q", type=int, default=4096)
    return ap


def cmd_generate(args) -> int:
    params = {_FLAG_PARAMS[f]: getattr(args, f) for f in _FLAG_PARAMS if getattr(args, f) is not None}
    try:
        fset = generate(args.construction, **params)
    except (InvalidParam, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        write_sequence_file(fset, args.output)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    print(f"{fset.N} {fset.M} {fset.L}")
    return 0


def _human(report) -> str:
    c, b, d, s = report.correlation, report.bounds, report.distribution, report.shape
    lines = [
        f"shape         N={s['N']} M={s['M']} L={s['L']}",
        f"distribution  {d['sequence_level']}; {d['set_level']}",
        f"H_a={c['H_a']}  H_c={c['H_c']}  H={c['H']}",
        f"S_a={c['S_a']}  S_c={c['S_c']}",
        f"A_a={rational_str(c['A_a'])}  A_c={rational_str(c['A_c'])}",
        f"peng-fan      {b['peng_fan']['verdict']}",
        f"ahc           {b['ahc']['verdict']}",
    ]
    if b["lempel_greenberger"] is not None:
        verdicts = [v["verdict"] for v in b["lempel_greenberger"]]
        lines.append(f"lempel-greenberger  bound={b['lempel_greenberger'][0]['witnesses']['bound']}  "
                     f"optimal members: {verdicts.count('optimal')}/{len(verdicts)}")
    return "\n".join(lines)


def cmd_analyze(args) -> int:
    try:
        fset = read_sequence_file(args.path)
    except FormatError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {args.path}: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    report = analyze(fset)
    print(report.to_json(indent=2) if args.json else _human(report))
    return 0


def cmd_table1(args) -> int:
    results = table1_mod.table1(args.max_q)
    if args.json:
        print(json.dumps(table1_mod.to_json_rows(results), indent=2))
    else:
        print(table1_mod.render(results))
    return 0


def cmd_verify(args) -> int:
    results = verify_mod.run_suite(seed=args.seed, cases=args.cases, max_q=args.max_q)
    print(verify_mod.render(results))
    return 0 if all(r.ok for r in results) else 1


COMMANDS = {"generate": cmd_generate, "analyze": cmd_analyze,
            "table1": cmd_table1, "verify": cmd_verify}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    return COMMANDS[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
