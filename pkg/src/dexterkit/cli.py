"""Command line entry point.

``dexterkit run script.jsonl`` executes a command script and prints the
report. ``--dump`` and ``--dot`` write the final workspace as canonical
terms or as a DOT graph; ``--fig`` renders the link graph to an image file.
Exit codes: 0 on a completed run, 1 on a parse error, 2 when ``--strict``
stopped at a failing command.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .workspace import ScriptError, export_dot, export_dump, run_script


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="dexterkit",
        description="run scripted edits against a workspace of hypermedia documents")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="execute a JSONL command script")
    run.add_argument("script", help="path of the script file")
    run.add_argument("--strict", action="store_true",
                     help="stop at the first failing command (exit code 2)")
    run.add_argument("--dump", metavar="PATH", help="write the final workspace as canonical terms")
    run.add_argument("--dot", metavar="PATH", help="write the final link graph as DOT")
    run.add_argument("--fig", metavar="PATH", help="render the final link graph to an image file")
    args = parser.parse_args(argv)

    try:
        text = Path(args.script).read_text()
    except OSError as err:
        print(f"error: cannot read script: {err}", file=sys.stderr)
        return 1

    try:
        ws, report, aborted = run_script(text, strict=args.strict)
    except ScriptError as err:
        print(f"parse error: {err}", file=sys.stderr)
        return 1

    for line in report:
        print(line)

    if args.dump:
        Path(args.dump).write_text(export_dump(ws))
    if args.dot:
        Path(args.dot).write_text(export_dot(ws))
    if args.fig:
        from .figures import render_link_graph
        render_link_graph(ws, args.fig)

    return 2 if aborted else 0


if __name__ == "__main__":
    raise SystemExit(main())
