"""Command line front end: ``cmreg SESSION [flags]``.

Exit status: 0 when every command ran (truncated results included) and no
verdict is "violated", 1 when some verdict is "violated", 2 on usage,
parse or input errors.
"""
from __future__ import annotations

import argparse
import json
import sys

from .session import SessionError, parse_session, parse_window, run_session


def build_parser():
    ap = argparse.ArgumentParser(prog="cmreg", description="Regularity computations and theorem checks.")
    ap.add_argument("session", help="session file, or '-' for standard input")
    ap.add_argument("-e", "--expr", action="store_true", help="treat SESSION as literal session text")
    ap.add_argument("--json", metavar="PATH", help="write JSON-lines records to PATH ('-' for stdout)")
    ap.add_argument("--seed", type=int, help="seed for random() declarations and reports")
    ap.add_argument("--window", type=_window, help="Hilbert function window a..b")
    ap.add_argument("--cap", type=int, help="resolution length cap")
    ap.add_argument("--emax", type=int, help="largest Frobenius exponent")
    ap.add_argument("--assert", dest="asserts", action="append", default=[], metavar="NAME=true",
                    help="assert a hypothesis the engine cannot verify")
    ap.add_argument("--parallel", action="store_true", help="run commands in worker processes")
    ap.add_argument("--quiet", action="store_true", help="suppress the human-readable summary")
    return ap


def _window(text):
    try:
        return parse_window(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _asserts(items, ap):
    out = {}
    for item in items:
        name, _, value = item.rpartition("=")
        if value not in ("true", "false") or not name:
            ap.error(f"--assert expects NAME=true, got {item!r}")
        out[name] = value == "true"
    return out


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.expr:
        text = args.session
    elif args.session == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.session, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"cmreg: {exc}", file=sys.stderr)
            return 2
    try:
        spec = parse_session(text, args.seed)
    except SessionError as exc:
        for err in exc.errors:
            print(f"cmreg: {err}", file=sys.stderr)
        return 2
    defaults = {"assert": _asserts(args.asserts, ap)}
    for key in ("window", "cap", "emax"):
        if getattr(args, key) is not None:
            defaults[key] = getattr(args, key)
    records, lines, status = run_session(spec, defaults, args.parallel)
    payload = "".join(json.dumps(r, sort_keys=True) + "\n" for r in records)
    if args.json == "-":
        sys.stdout.write(payload)
    elif args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(payload)
    if not args.quiet:
        out = sys.stderr if args.json == "-" else sys.stdout
        for line in lines:
            print(line, file=out)
    return status


if __name__ == "__main__":
    sys.exit(main())
