"""Levels two and three: chapters grouped into framesets, books into sites.

Only the skeleton exists at these levels. The term shapes mirror pages, with
whole lower-level documents as the atoms: a chapter is empty, an imported
level-one document, or a frameset node over chapters; a book is empty, an
imported frameset document, or a sitemap node over books. There is no
symbol atom here, and no editing calculus of their own.

What the skeleton buys is that the generic hyperdocument operations run
unchanged on top of these terms: the parameter bundles below plug in an
embed test with the same meaning as at level one (the location must exist
and hold the empty atom) and the identity address embedding.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any, Iterable

from .attributes import AttrSet
from .errors import Unspecified
from .hyperdoc import HdParams, HyperDoc


class FramesetStruct(Enum):
    HFRAMESET = "hframeset"
    VFRAMESET = "vframeset"
    AFRAMESET = "aframeset"


class SiteStruct(Enum):
    SITEMAP = "sitemap"


@dataclass(frozen=True)
class EmptyChapter:
    pass


@dataclass(frozen=True)
class ChapterDoc:
    doc: HyperDoc  # a level-one document used whole


@dataclass(frozen=True)
class ChapterNode:
    struct: FramesetStruct
    children: tuple
    attrs: AttrSet


Chapter = EmptyChapter | ChapterDoc | ChapterNode

MT_CHAPTER = EmptyChapter()


@dataclass(frozen=True)
class EmptyBook:
    pass


@dataclass(frozen=True)
class BookDoc:
    doc: HyperDoc  # a level-two document used whole


@dataclass(frozen=True)
class BookNode:
    struct: SiteStruct
    children: tuple
    attrs: AttrSet


Book = EmptyBook | BookDoc | BookNode

MT_BOOK = EmptyBook()


def mk_chapter(struct: FramesetStruct, children: Iterable[Chapter], attrs: AttrSet) -> ChapterNode:
    return ChapterNode(struct, tuple(children), attrs)


def mk_book(struct: SiteStruct, children: Iterable[Book], attrs: AttrSet) -> BookNode:
    return BookNode(struct, tuple(children), attrs)


def _locate(location: tuple, term: Any, node_type: type) -> Any:
    if not location:
        return term
    if not isinstance(term, node_type):
        return None
    n = location[0]
    if n < 1:
        raise Unspecified("child indices start at 1")
    if n > len(term.children):
        return None
    return _locate(location[1:], term.children[n - 1], node_type)


def include_link_ok_chapter(location: tuple, chapter: Chapter) -> bool:
    return _locate(tuple(location), chapter, ChapterNode) == MT_CHAPTER


def include_link_ok_book(location: tuple, book: Book) -> bool:
    return _locate(tuple(location), book, BookNode) == MT_BOOK


def _integrate(address: str) -> str:
    return address


FRAMESET_PARAMS = HdParams(embed_link_ok=include_link_ok_chapter, integrate=_integrate)
SITE_PARAMS = HdParams(embed_link_ok=include_link_ok_book, integrate=_integrate)
