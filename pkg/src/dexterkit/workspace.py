"""A scripted workspace: named documents driven by a JSONL command stream.

Each script line is one JSON object: ``{"cmd": ..., ...}``. Blank lines and
lines starting with ``#`` are skipped. Page, anchor, link and attribute
arguments are written in the canonical term syntax; locations are JSON
arrays of 1-based indices.

Parsing the script is strict and happens up front: any malformed line stops
everything with its position. Running is forgiving: a command that fails
(unknown document, or an operation the algebra leaves unspecified) is
reported and leaves the workspace untouched, unless strict mode asks to
stop at the first failure. Equal scripts always produce byte-equal reports.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Callable

from . import hyperdoc, hypermedia, page, terms
from .attributes import EMPTY_ATTRS
from .containers import FiniteMap, FiniteSet
from .errors import Unspecified
from .hyperdoc import HyperDoc, evaluate_add_link
from .link import BiType, format_link_type


@dataclass(frozen=True)
class Workspace:
    documents: FiniteMap = field(default_factory=FiniteMap)  # address -> document


class ScriptError(Exception):
    """A script line failed to parse; aborts the whole run."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message


@dataclass(frozen=True)
class Command:
    line: int
    name: str
    args: dict


_COMMANDS: dict[str, dict[str, Any]] = {}


def _parse_location(value: Any, line: int) -> tuple[int, ...]:
    if (not isinstance(value, list)
            or any(not isinstance(v, int) or isinstance(v, bool) or v < 1 for v in value)):
        raise ScriptError(line, "\"loc\" must be a JSON array of integers >= 1")
    return tuple(value)


def _parse_term(text: Any, production: Callable[[str], Any], what: str, line: int) -> Any:
    if not isinstance(text, str):
        raise ScriptError(line, f"\"{what}\" must be a term string")
    try:
        return production(text)
    except terms.TermSyntaxError as err:
        raise ScriptError(line, f"bad {what} term: {err}") from None


def _string_arg(args: dict, key: str, line: int) -> str:
    value = args.get(key)
    if not isinstance(value, str) or not value:
        raise ScriptError(line, f"\"{key}\" must be a non-empty string")
    return value


def _nat_arg(args: dict, key: str, line: int) -> int:
    value = args.get(key)
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ScriptError(line, f"\"{key}\" must be a non-negative integer")
    return value


def parse_script(text: str) -> list[Command]:
    commands = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as err:
            raise ScriptError(lineno, f"bad JSON: {err.msg} (column {err.colno})") from None
        if not isinstance(obj, dict) or not isinstance(obj.get("cmd"), str):
            raise ScriptError(lineno, "each line must be an object with a \"cmd\" string")
        name = obj.pop("cmd")
        spec = _COMMANDS.get(name)
        if spec is None:
            raise ScriptError(lineno, f"unknown command {name!r}")
        unknown = set(obj) - set(spec["keys"])
        if unknown:
            raise ScriptError(lineno, f"unknown argument(s) for {name}: {sorted(unknown)}")
        missing = [k for k in spec["required"] if k not in obj]
        if missing:
            raise ScriptError(lineno, f"missing argument(s) for {name}: {missing}")
        args = spec["check"](obj, lineno)
        commands.append(Command(lineno, name, args))
    return commands


# ---------------------------------------------------------------------------
# Command argument checkers. Each returns the cooked argument dict.

def _command(name: str, required: tuple[str, ...], optional: tuple[str, ...] = ()):
    def register(check):
        _COMMANDS[name] = {"required": required,
                           "keys": required + optional,
                           "check": check}
        return check
    return register


@_command("new-page", ("doc",))
def _check_new_page(args, line):
    return {"doc": _string_arg(args, "doc", line)}


@_command("mklist", ("doc", "n"))
def _check_mklist(args, line):
    return {"doc": _string_arg(args, "doc", line), "n": _nat_arg(args, "n", line)}


@_command("mktable", ("doc", "rows", "cols"))
def _check_mktable(args, line):
    return {"doc": _string_arg(args, "doc", line),
            "rows": _nat_arg(args, "rows", line),
            "cols": _nat_arg(args, "cols", line)}


@_command("insert-at", ("doc", "loc", "page"), ("extend",))
def _check_insert_at(args, line):
    extend = args.get("extend", False)
    if not isinstance(extend, bool):
        raise ScriptError(line, "\"extend\" must be a boolean")
    return {"doc": _string_arg(args, "doc", line),
            "loc": _parse_location(args["loc"], line),
            "page": _parse_term(args["page"], terms.parse_page, "page", line),
            "extend": extend}


@_command("add-anchor", ("doc", "name", "anchor"))
def _check_add_anchor(args, line):
    return {"doc": _string_arg(args, "doc", line),
            "name": _string_arg(args, "name", line),
            "anchor": _parse_term(args["anchor"], terms.parse_anchor, "anchor", line)}


@_command("del-anchor", ("doc", "name"))
def _check_del_anchor(args, line):
    return {"doc": _string_arg(args, "doc", line),
            "name": _string_arg(args, "name", line)}


@_command("add-link", ("doc", "link"))
def _check_add_link(args, line):
    return {"doc": _string_arg(args, "doc", line),
            "link": _parse_term(args["link"], terms.parse_link, "link", line)}


@_command("del-link", ("doc", "link"))
def _check_del_link(args, line):
    return _check_add_link(args, line)


@_command("set-attr", ("doc", "attrs"))
def _check_set_attr(args, line):
    return {"doc": _string_arg(args, "doc", line),
            "attrs": _parse_term(args["attrs"], terms.parse_attrs, "attrs", line)}


@_command("del-attr", ("doc", "attrs"))
def _check_del_attr(args, line):
    return _check_set_attr(args, line)


@_command("ch-addr", ("doc", "addr"))
def _check_ch_addr(args, line):
    return {"doc": _string_arg(args, "doc", line),
            "addr": _string_arg(args, "addr", line)}


@_command("insert-hmd", ("inner", "host", "loc", "addr"), ("extend",))
def _check_insert_hmd(args, line):
    extend = args.get("extend", False)
    if not isinstance(extend, bool):
        raise ScriptError(line, "\"extend\" must be a boolean")
    return {"inner": _string_arg(args, "inner", line),
            "host": _string_arg(args, "host", line),
            "loc": _parse_location(args["loc"], line),
            "addr": _string_arg(args, "addr", line),
            "extend": extend}


_OBSERVABLES = ("dimension", "locate", "struct", "anchors", "links")


@_command("observe", ("doc", "what"), ("loc",))
def _check_observe(args, line):
    what = args.get("what")
    if what not in _OBSERVABLES:
        raise ScriptError(line, f"\"what\" must be one of {', '.join(_OBSERVABLES)}")
    cooked = {"doc": _string_arg(args, "doc", line), "what": what}
    if what == "locate":
        if "loc" not in args:
            raise ScriptError(line, "observe locate needs \"loc\"")
        cooked["loc"] = _parse_location(args["loc"], line)
    elif "loc" in args:
        raise ScriptError(line, f"observe {what} takes no \"loc\"")
    return cooked


@_command("export", ("what",))
def _check_export(args, line):
    what = args.get("what")
    if what not in ("dump", "dot"):
        raise ScriptError(line, "\"what\" must be \"dump\" or \"dot\"")
    return {"what": what}


@_command("validate-link", ("doc", "link"))
def _check_validate_link(args, line):
    return _check_add_link(args, line)


# ---------------------------------------------------------------------------
# Execution.

def _lookup(ws: Workspace, addr: str) -> HyperDoc | None:
    if addr in ws.documents:
        return ws.documents.apply(addr)
    return None


def _store(ws: Workspace, doc: HyperDoc) -> Workspace:
    return Workspace(ws.documents.update(doc.address, doc))


def _replace_basis(ws: Workspace, addr: str, basis) -> Workspace:
    doc = ws.documents.apply(addr)
    return _store(ws, HyperDoc(basis, doc.anchors, doc.links, doc.attrs, doc.address))


def _execute(ws: Workspace, cmd: Command) -> tuple[Workspace, list[str], bool]:
    """Run one command; returns (workspace, report lines, failed)."""
    args = cmd.args
    name = cmd.name
    prefix = f"[{cmd.line}] {name}"

    def ok(head: str, payload: str | None = None, new_ws: Workspace = None) -> tuple:
        line = f"{prefix} {head}: " + (payload if payload is not None else "ok")
        return (new_ws if new_ws is not None else ws, [line], False)

    def fail(head: str, message: str) -> tuple:
        return (ws, [f"{prefix} {head}: {message}"], True)

    if name == "export":
        text = export_dump(ws) if args["what"] == "dump" else export_dot(ws)
        lines = [f"{prefix} {args['what']}:"] + [f"{prefix}   {l}" for l in text.splitlines()]
        return (ws, lines, False)

    if name == "insert-hmd":
        head = f"\"{args['inner']}\" into \"{args['host']}\""
        inner = _lookup(ws, args["inner"])
        host = _lookup(ws, args["host"])
        if inner is None:
            return fail(head, f"error: unknown document \"{args['inner']}\"")
        if host is None:
            return fail(head, f"error: unknown document \"{args['host']}\"")
        if args["addr"] in ws.documents:
            return fail(head, f"error: address \"{args['addr']}\" already in use")
        combine = hypermedia.insert_hmd_extend if args["extend"] else hypermedia.insert_hmd
        try:
            combined = combine(inner, args["loc"], host, args["addr"])
        except Unspecified as err:
            return fail(head, f"Unspecified: {err}")
        return ok(head, f"ok: stored \"{args['addr']}\"", _store(ws, combined))

    head = f"\"{args['doc']}\""
    if name == "observe":
        head = f"{head} {args['what']}"

    if name == "new-page":
        if args["doc"] in ws.documents:
            return fail(head, f"error: address \"{args['doc']}\" already in use")
        doc = hypermedia.mk_hmd(page.MT_PAGE, FiniteMap(), FiniteSet(), EMPTY_ATTRS, args["doc"])
        return ok(head, None, _store(ws, doc))

    doc = _lookup(ws, args["doc"])
    if doc is None:
        return fail(head, f"error: unknown document \"{args['doc']}\"")

    try:
        if name == "mklist":
            return ok(head, None, _replace_basis(ws, args["doc"], page.mk_list(args["n"])))
        if name == "mktable":
            return ok(head, None,
                      _replace_basis(ws, args["doc"], page.mk_table(args["rows"], args["cols"])))
        if name == "insert-at":
            insert = page.insert_at_extend if args["extend"] else page.insert_at
            return ok(head, None,
                      _replace_basis(ws, args["doc"], insert(args["page"], args["loc"], doc.basis)))
        if name == "add-anchor":
            return ok(head, None,
                      _store(ws, hyperdoc.add_anchor(args["name"], args["anchor"], doc)))
        if name == "del-anchor":
            return ok(head, None, _store(ws, hyperdoc.del_anchor(args["name"], doc)))
        if name == "add-link":
            return ok(head, None, _store(ws, hypermedia.add_hmd_link(args["link"], doc)))
        if name == "del-link":
            return ok(head, None, _store(ws, hyperdoc.del_link(args["link"], doc)))
        if name == "set-attr":
            return ok(head, None, _store(ws, hyperdoc.add_doc_attrs(args["attrs"], doc)))
        if name == "del-attr":
            return ok(head, None, _store(ws, hyperdoc.del_doc_attrs(args["attrs"], doc)))
        if name == "ch-addr":
            if args["addr"] == args["doc"]:
                return ok(head)
            if args["addr"] in ws.documents:
                return fail(head, f"error: address \"{args['addr']}\" already in use")
            moved = hyperdoc.ch_addr(args["addr"], doc)
            return ok(head, f"ok: now \"{args['addr']}\"",
                      _store(Workspace(ws.documents.remove(args["doc"])), moved))
        if name == "observe":
            what = args["what"]
            if what == "dimension":
                payload = terms.render(page.dimension(doc.basis))
            elif what == "locate":
                payload = terms.render(page.locate(args["loc"], doc.basis))
            elif what == "struct":
                payload = terms.render(page.struct_tree(doc.basis))
            elif what == "anchors":
                payload = terms.render(doc.anchors)
            else:
                payload = terms.render(doc.links)
            return ok(head, payload)
        if name == "validate-link":
            return _validate(ws, cmd, doc)
    except Unspecified as err:
        return fail(head, f"Unspecified: {err}")
    raise AssertionError(f"unhandled command {name}")


def _validate(ws: Workspace, cmd: Command, doc: HyperDoc) -> tuple[Workspace, list[str], bool]:
    prefix = f"[{cmd.line}] validate-link \"{cmd.args['doc']}\""
    checks = evaluate_add_link(cmd.args["link"], doc, hypermedia.HMD_PARAMS)
    accepted = [c for c in checks if c.ok]
    if accepted:
        return (ws, [f"{prefix}: accepted by rule {accepted[0].rule}"], False)
    # Headline the failure that got furthest through its rule's conjuncts.
    headline = max(checks, key=lambda c: c.stage)
    lines = [f"{prefix}: rejected: {headline.reason}"]
    lines += [f"{prefix}:   {c.rule}: {c.reason}" for c in checks]
    return (ws, lines, False)


def run_script(text: str, strict: bool = False) -> tuple[Workspace, list[str], bool]:
    """Run a script; returns (workspace, report, aborted).

    ``aborted`` is only ever True in strict mode, where the first failing
    command stops the run after reporting itself.
    """
    commands = parse_script(text)
    ws = Workspace()
    report: list[str] = []
    for cmd in commands:
        ws, lines, failed = _execute(ws, cmd)
        report.extend(lines)
        if failed and strict:
            report.append(f"[{cmd.line}] aborted: strict mode stops at the first failure")
            return ws, report, True
    return ws, report, False


# ---------------------------------------------------------------------------
# Exports.

def export_dump(ws: Workspace) -> str:
    """One canonical term per document, sorted by address. Parsing the dump
    back and re-dumping it reproduces the text byte for byte."""
    lines = [terms.render(doc) for _, doc in ws.documents.items()]
    return "".join(line + "\n" for line in lines)


def parse_dump(text: str) -> Workspace:
    docs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        try:
            doc = terms.parse_hyperdoc(stripped)
        except terms.TermSyntaxError as err:
            raise ScriptError(lineno, f"bad document term: {err}") from None
        docs.append((doc.address, doc))
    return Workspace(FiniteMap(docs))


def link_graph(ws: Workspace) -> tuple[list[str], list[str], list[dict]]:
    """The workspace as a graph: (document nodes, foreign nodes, edges).

    One edge per (source specifier, target specifier) pair of every stored
    link, in deterministic order.
    """
    doc_nodes = [addr for addr, _ in ws.documents.items()]
    edges = []
    for addr, doc in ws.documents.items():
        for link in doc.links:
            for sp in link.source:
                for tp in link.target:
                    edges.append({
                        "tail": sp.uri, "head": tp.uri,
                        "tail_spec": f"{sp.uri}#{sp.name}",
                        "head_spec": f"{tp.uri}#{tp.name}",
                        "label": format_link_type(link.kind),
                        "bidirectional": isinstance(link.kind, BiType),
                        "owner": addr,
                    })
    referenced = {e["tail"] for e in edges} | {e["head"] for e in edges}
    foreign = sorted(referenced - set(doc_nodes))
    return doc_nodes, foreign, edges


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(ws: Workspace) -> str:
    doc_nodes, foreign, edges = link_graph(ws)
    out = ["digraph hyperdocuments {", "  rankdir=LR;"]
    for addr in doc_nodes:
        out.append(f"  {_dot_quote(addr)} [shape=box];")
    for uri in foreign:
        out.append(f"  {_dot_quote(uri)} [shape=ellipse, style=dashed];")
    for e in edges:
        attrs = [f"label={_dot_quote(e['label'])}",
                 f"taillabel={_dot_quote(e['tail_spec'])}",
                 f"headlabel={_dot_quote(e['head_spec'])}"]
        if e["bidirectional"]:
            attrs.append("dir=none")
        out.append(f"  {_dot_quote(e['tail'])} -> {_dot_quote(e['head'])} [{', '.join(attrs)}];")
    out.append("}")
    return "".join(line + "\n" for line in out)
