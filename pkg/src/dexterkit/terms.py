"""Canonical term syntax: rendering and parsing of document values.

Every value the workspace stores or reports can be written as a constructor
term, e.g.::

    mkhd(mkld(list, [mtpage, impsymbol("*")], [k=v]), {"a" -> mkanchor([1], source, [])}, {}, [], "d1")

Rendering is canonical: set elements and map entries come out in their
deterministic container order, naturals render bare, strings render as JSON
string literals, and attribute entries render ``key=value`` with the key and
value left bare when they are plain enough. Parsing accepts exactly this
grammar (whitespace is free), so rendering then parsing is the identity and
re-rendering a parsed dump reproduces it byte for byte.
"""

from __future__ import annotations

import json
import re
from typing import Any, Callable

from .anchor import Anchor, AnchorType
from .attributes import AttrSet
from .containers import FiniteMap, FiniteSet, RoseTree
from .hyperdoc import HyperDoc
from .levels import (BookDoc, BookNode, ChapterDoc, ChapterNode, EmptyBook,
                     EmptyChapter)
from .link import (ActuateType, BiType, Link, ShowType, Specifier, UniType,
                   format_link_type)
from .page import (EmptyPage, MediaObject, MediaPage, PageNode, Struct,
                   SymbolPage)

_BARE_ATTR = re.compile(r"[A-Za-z0-9_./:@]+\Z")


class TermSyntaxError(ValueError):
    """A term failed to parse; ``column`` is 1-based."""

    def __init__(self, message: str, column: int):
        super().__init__(f"column {column}: {message}")
        self.column = column


# ---------------------------------------------------------------------------
# Rendering.

def _quote(text: str) -> str:
    return json.dumps(text)


def _attr_token(text: str) -> str:
    return text if _BARE_ATTR.match(text) else _quote(text)


def render(value: Any) -> str:
    """Canonical text for any document-algebra value."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, str):
        return _quote(value)
    if isinstance(value, tuple):
        if value and all(isinstance(v, int) for v in value):
            return "[" + ",".join(str(v) for v in value) + "]"
        return "[" + ", ".join(render(v) for v in value) + "]"
    if isinstance(value, AttrSet):
        entries = ", ".join(f"{_attr_token(k)}={_attr_token(v)}" for k, v in value.entries)
        return "[" + entries + "]"
    if isinstance(value, FiniteSet):
        return "{" + ", ".join(render(v) for v in value) + "}"
    if isinstance(value, FiniteMap):
        entries = ", ".join(f"{render(k)} -> {render(v)}" for k, v in value.items())
        return "{" + entries + "}"
    if isinstance(value, (UniType, BiType)):
        return format_link_type(value)
    if isinstance(value, (AnchorType, Struct, ShowType, ActuateType)):
        return value.value
    if isinstance(value, Specifier):
        return f"mkspecifier({_quote(value.uri)}, {_quote(value.name)})"
    if isinstance(value, Link):
        return (f"mklink({render(value.source)}, {render(value.target)}, "
                f"{format_link_type(value.kind)}, {render(value.attrs)})")
    if isinstance(value, Anchor):
        return (f"mkanchor({render(tuple(value.location))}, {value.kind.value}, "
                f"{render(value.attrs)})")
    if isinstance(value, MediaObject):
        return f"mkmo({_quote(value.uri)}, {render(value.anchor_names)})"
    if isinstance(value, EmptyPage):
        return "mtpage"
    if isinstance(value, MediaPage):
        return f"impmo({render(value.mo)})"
    if isinstance(value, SymbolPage):
        return f"impsymbol({_quote(value.symbol)})"
    if isinstance(value, PageNode):
        children = "[" + ", ".join(render(c) for c in value.children) + "]"
        return f"mkld({value.struct.value}, {children}, {render(value.attrs)})"
    if isinstance(value, HyperDoc):
        return (f"mkhd({render(value.basis)}, {render(value.anchors)}, "
                f"{render(value.links)}, {render(value.attrs)}, {render(value.address)})")
    if isinstance(value, RoseTree):
        children = "[" + ", ".join(render(c) for c in value.children) + "]"
        label = value.label.value if isinstance(value.label, Struct) else render(value.label)
        return f"mktree({label}, {children})"
    if isinstance(value, EmptyChapter):
        return "mtchapter"
    if isinstance(value, ChapterDoc):
        return f"impchapter({render(value.doc)})"
    if isinstance(value, ChapterNode):
        children = "[" + ", ".join(render(c) for c in value.children) + "]"
        return f"mkld2({value.struct.value}, {children}, {render(value.attrs)})"
    if isinstance(value, EmptyBook):
        return "mtbook"
    if isinstance(value, BookDoc):
        return f"impbook({render(value.doc)})"
    if isinstance(value, BookNode):
        children = "[" + ", ".join(render(c) for c in value.children) + "]"
        return f"mkld3({value.struct.value}, {children}, {render(value.attrs)})"
    raise TypeError(f"cannot render {type(value).__name__} values")


# ---------------------------------------------------------------------------
# Lexing. Tokens: punctuation, JSON strings, and bare words (which also
# cover naturals). '->' is its own token; '-' occurs nowhere else.

_WORD_CHARS = set("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_./:@")
_PUNCT = set("()[]{},=")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    """Produce (kind, value, column) triples; kinds are 'punct', 'string',
    'word' and 'arrow'."""
    tokens = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        col = i + 1
        if ch in _PUNCT:
            tokens.append(("punct", ch, col))
            i += 1
        elif ch == "-":
            if text[i:i + 2] != "->":
                raise TermSyntaxError("stray '-' (expected '->')", col)
            tokens.append(("arrow", "->", col))
            i += 2
        elif ch == '"':
            j = i + 1
            while j < n:
                if text[j] == "\\":
                    j += 2
                    continue
                if text[j] == '"':
                    break
                j += 1
            if j >= n:
                raise TermSyntaxError("unterminated string literal", col)
            raw = text[i:j + 1]
            try:
                value = json.loads(raw)
            except ValueError:
                raise TermSyntaxError(f"bad string literal {raw}", col) from None
            tokens.append(("string", value, col))
            i = j + 1
        elif ch in _WORD_CHARS:
            j = i
            while j < n and text[j] in _WORD_CHARS:
                j += 1
            tokens.append(("word", text[i:j], col))
            i = j
        else:
            raise TermSyntaxError(f"unexpected character {ch!r}", col)
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.length = len(text)

    def _peek(self) -> tuple[str, str, int] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def _next(self) -> tuple[str, str, int]:
        tok = self._peek()
        if tok is None:
            raise TermSyntaxError("unexpected end of input", self.length + 1)
        self.pos += 1
        return tok

    def _expect(self, value: str) -> None:
        kind, got, col = self._next()
        if got != value or kind == "string":
            raise TermSyntaxError(f"expected {value!r}, got {got!r}", col)

    def _word(self, what: str) -> str:
        kind, value, col = self._next()
        if kind != "word":
            raise TermSyntaxError(f"expected {what}, got {value!r}", col)
        return value

    def _string(self, what: str) -> str:
        kind, value, col = self._next()
        if kind != "string":
            raise TermSyntaxError(f"expected a quoted {what}, got {value!r}", col)
        return value

    def _nat(self) -> int:
        kind, value, col = self._next()
        if kind != "word" or not value.isdigit():
            raise TermSyntaxError(f"expected a natural number, got {value!r}", col)
        return int(value)

    def done(self) -> None:
        tok = self._peek()
        if tok is not None:
            raise TermSyntaxError(f"trailing input starting at {tok[1]!r}", tok[2])

    # -- generic shapes ----------------------------------------------------

    def _comma_list(self, close: str, item: Callable[[], Any]) -> list:
        items = []
        tok = self._peek()
        if tok and tok[1] == close and tok[0] == "punct":
            self._next()
            return items
        while True:
            items.append(item())
            kind, value, col = self._next()
            if value == close and kind == "punct":
                return items
            if value != "," or kind != "punct":
                raise TermSyntaxError(f"expected ',' or {close!r}, got {value!r}", col)

    def set_of(self, item: Callable[[], Any]) -> FiniteSet:
        self._expect("{")
        return FiniteSet(self._comma_list("}", item))

    def map_of(self, key: Callable[[], Any], value: Callable[[], Any]) -> FiniteMap:
        self._expect("{")

        def entry():
            k = key()
            kind, got, col = self._next()
            if kind != "arrow":
                raise TermSyntaxError(f"expected '->', got {got!r}", col)
            return (k, value())

        return FiniteMap(self._comma_list("}", entry))

    # -- leaf sorts --------------------------------------------------------

    def location(self) -> tuple[int, ...]:
        self._expect("[")
        return tuple(self._comma_list("]", self._nat))

    def attrs(self) -> AttrSet:
        self._expect("[")

        def entry():
            kind, key, col = self._next()
            if kind not in ("word", "string"):
                raise TermSyntaxError(f"expected an attribute key, got {key!r}", col)
            self._expect("=")
            kind2, val, col2 = self._next()
            if kind2 not in ("word", "string"):
                raise TermSyntaxError(f"expected an attribute value, got {val!r}", col2)
            return (key, val)

        return AttrSet(tuple(self._comma_list("]", entry)))

    def _enum(self, enum_cls, what: str):
        word = self._word(what)
        try:
            return enum_cls(word)
        except ValueError:
            raise TermSyntaxError(f"unknown {what} {word!r}", self.tokens[self.pos - 1][2]) from None

    def link_type(self):
        word = self._word("link type")
        if word == "bi":
            return BiType()
        if word != "uni":
            raise TermSyntaxError(f"unknown link type {word!r}", self.tokens[self.pos - 1][2])
        self._expect("(")
        show = self._enum(ShowType, "show mode")
        self._expect(",")
        actuate = self._enum(ActuateType, "actuate mode")
        self._expect(")")
        return UniType(show, actuate)

    # -- constructor sorts ---------------------------------------------------

    def specifier(self) -> Specifier:
        self._expect("mkspecifier")
        self._expect("(")
        uri = self._string("URI")
        self._expect(",")
        name = self._string("anchor name")
        self._expect(")")
        return Specifier(uri, name)

    def link(self) -> Link:
        self._expect("mklink")
        self._expect("(")
        source = self.set_of(self.specifier)
        self._expect(",")
        target = self.set_of(self.specifier)
        self._expect(",")
        kind = self.link_type()
        self._expect(",")
        attrs = self.attrs()
        self._expect(")")
        return Link(source, target, kind, attrs)

    def anchor(self) -> Anchor:
        self._expect("mkanchor")
        self._expect("(")
        location = self.location()
        self._expect(",")
        kind = self._enum(AnchorType, "anchor type")
        self._expect(",")
        attrs = self.attrs()
        self._expect(")")
        return Anchor(location, kind, attrs)

    def media_object(self) -> MediaObject:
        self._expect("mkmo")
        self._expect("(")
        uri = self._string("URI")
        self._expect(",")
        names = self.set_of(lambda: self._string("anchor name"))
        self._expect(")")
        return MediaObject(uri, names)

    def page(self):
        kind, word, col = self._next()
        if kind != "word":
            raise TermSyntaxError(f"expected a page term, got {word!r}", col)
        if word == "mtpage":
            return EmptyPage()
        if word == "impmo":
            self._expect("(")
            mo = self.media_object()
            self._expect(")")
            return MediaPage(mo)
        if word == "impsymbol":
            self._expect("(")
            symbol = self._string("symbol")
            self._expect(")")
            return SymbolPage(symbol)
        if word == "mkld":
            self._expect("(")
            struct = self._enum(Struct, "structure tag")
            self._expect(",")
            self._expect("[")
            children = tuple(self._comma_list("]", self.page))
            self._expect(",")
            attrs = self.attrs()
            self._expect(")")
            return PageNode(struct, children, attrs)
        raise TermSyntaxError(f"unknown page constructor {word!r}", col)

    def hyperdoc(self) -> HyperDoc:
        self._expect("mkhd")
        self._expect("(")
        basis = self.page()
        self._expect(",")
        anchors = self.map_of(lambda: self._string("anchor name"), self.anchor)
        self._expect(",")
        links = self.set_of(self.link)
        self._expect(",")
        attrs = self.attrs()
        self._expect(",")
        address = self._string("address")
        self._expect(")")
        return HyperDoc(basis, anchors, links, attrs, address)


def _parse(text: str, production: str) -> Any:
    parser = _Parser(text)
    value = getattr(parser, production)()
    parser.done()
    return value


def parse_page(text: str):
    return _parse(text, "page")


def parse_anchor(text: str) -> Anchor:
    return _parse(text, "anchor")


def parse_link(text: str) -> Link:
    return _parse(text, "link")


def parse_attrs(text: str) -> AttrSet:
    return _parse(text, "attrs")


def parse_hyperdoc(text: str) -> HyperDoc:
    return _parse(text, "hyperdoc")
