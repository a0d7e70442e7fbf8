"""Pages: the basis documents at level one, with their location calculus.

A page is either atomic (the empty page, an imported media object, or a
symbol) or a structured node carrying a structure tag, a sequence of child
pages and attributes. A location is a path of 1-based child indices; the
empty path names the whole page. All observers and editors below work on
these terms directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .attributes import AttrSet, EMPTY_ATTRS, concat_attrs, remove_attrs
from .containers import FiniteSet, RoseTree, nth, rep, zip_with_defaults
from .errors import Unspecified


@dataclass(frozen=True)
class MediaObject:
    """An external medium plus the anchor names that may be attached in it."""

    uri: str
    anchor_names: FiniteSet


def mk_mo(uri: str, anchor_names: FiniteSet) -> MediaObject:
    return MediaObject(uri, anchor_names)


class Struct(Enum):
    BASIC = "basic"
    SYMB = "symb"
    EMPTYPAGE = "emptypage"
    LIST = "list"
    TABLE = "table"
    TABLELINE = "tableline"
    HEADLINE = "headline"
    PAGE = "page"
    TEXT = "text"
    LINEBREAK = "linebreak"
    FOOTNOTE = "footnote"
    PARAGRAPH = "paragraph"
    COPYRIGHT = "copyright"


@dataclass(frozen=True)
class EmptyPage:
    pass


@dataclass(frozen=True)
class MediaPage:
    mo: MediaObject


@dataclass(frozen=True)
class SymbolPage:
    symbol: str


@dataclass(frozen=True)
class PageNode:
    struct: Struct
    children: tuple
    attrs: AttrSet


Page = EmptyPage | MediaPage | SymbolPage | PageNode

MT_PAGE = EmptyPage()

# A location: 1-based child indices, outermost first. () is the whole page.
Location = tuple[int, ...]


def mk_page(struct: Struct, children: Iterable[Page], attrs: AttrSet) -> PageNode:
    return PageNode(struct, tuple(children), attrs)


def is_atomic(page: Page) -> bool:
    return not isinstance(page, PageNode)


def has_nth(n: int, pages: tuple) -> bool:
    if n < 1:
        raise Unspecified("child indices start at 1")
    return n <= len(pages)


def pnth(n: int, pages: tuple) -> Page:
    """The n-th child, counting from 1."""
    if n < 1:
        raise Unspecified("child indices start at 1")
    return nth(n - 1, pages)


def has_location(location: Location, page: Page) -> bool:
    if not location:
        return True
    if is_atomic(page):
        return False
    if not has_nth(location[0], page.children):
        return False
    return has_location(location[1:], pnth(location[0], page.children))


def locate(location: Location, page: Page) -> Page:
    """The subpage at ``location``; use has_location first if unsure."""
    if not location:
        return page
    if is_atomic(page):
        raise Unspecified(f"no page at location {list(location)}")
    return locate(location[1:], pnth(location[0], page.children))


def include_link_ok(location: Location, page: Page) -> bool:
    """Whether an embedded link may land at ``location``: the position must
    exist and hold the empty page, so inclusion overwrites nothing."""
    return has_location(location, page) and locate(location, page) == MT_PAGE


def struct_tree(page: Page) -> RoseTree:
    """The structure skeleton: tags only, content stripped."""
    if isinstance(page, EmptyPage):
        return RoseTree(Struct.EMPTYPAGE, ())
    if isinstance(page, MediaPage):
        return RoseTree(Struct.BASIC, ())
    if isinstance(page, SymbolPage):
        return RoseTree(Struct.SYMB, ())
    return RoseTree(page.struct, tuple(struct_tree(c) for c in page.children))


def pages_of(page: Page) -> tuple:
    if is_atomic(page):
        raise Unspecified("atomic pages have no child list")
    return page.children


def att_of(page: Page) -> AttrSet:
    if is_atomic(page):
        raise Unspecified("atomic pages have no attribute list")
    return page.attrs


def dimension(page: Page) -> tuple[int, ...]:
    """Per-depth maximum branching: entry i is the most children any node at
    depth i+1 has. Atomic pages have dimension []."""
    if is_atomic(page):
        return ()
    return (len(page.children),) + dimension_list(page.children)


def dimension_list(pages: tuple) -> tuple[int, ...]:
    if not pages:
        return ()
    return zip_with_defaults(0, 0, max, dimension(pages[0]), dimension_list(pages[1:]))


def change_struct(struct: Struct, page: Page) -> PageNode:
    if is_atomic(page):
        raise Unspecified("cannot restructure an atomic page")
    return PageNode(struct, page.children, page.attrs)


def mk_list(n: int) -> PageNode:
    return PageNode(Struct.LIST, rep(n, MT_PAGE), EMPTY_ATTRS)


def mk_tableline(n: int) -> PageNode:
    return PageNode(Struct.TABLELINE, rep(n, MT_PAGE), EMPTY_ATTRS)


def mk_table(m: int, n: int) -> PageNode:
    return PageNode(Struct.TABLE, rep(m, mk_tableline(n)), EMPTY_ATTRS)


def insert_at_extend(new: Page, location: Location, page: Page) -> Page:
    """Put ``new`` at ``location`` in ``page``, growing the page on the way.

    Descending past the end of a child list pads it with default children
    first: empty table lines inside a table, empty pages elsewhere. The
    whole-page location just replaces the page. Descending into an atomic
    page is refused.
    """
    if not location:
        return new
    if is_atomic(page):
        raise Unspecified("cannot descend into an atomic page")
    default = mk_tableline(0) if page.struct is Struct.TABLE else MT_PAGE
    children = insert_nth_extend(new, location[0], location[1:], page.children, default)
    return PageNode(page.struct, children, page.attrs)


def insert_nth_extend(new: Page, n: int, location: Location,
                      pages: tuple, default: Page) -> tuple:
    """Child-list worker for insert_at_extend: walk to the n-th child,
    appending ``default`` children whenever the list runs out."""
    if n < 1:
        raise Unspecified("child indices start at 1")
    if pages:
        if n == 1:
            return (insert_at_extend(new, location, pages[0]),) + pages[1:]
        return (pages[0],) + insert_nth_extend(new, n - 1, location, pages[1:], default)
    if n == 1:
        return (insert_at_extend(new, location, default),)
    return (default,) + insert_nth_extend(new, n - 1, location, (), default)


def insert_at(new: Page, location: Location, page: Page) -> Page:
    """Replace the existing subpage at ``location`` with ``new``."""
    if not has_location(location, page):
        raise Unspecified(f"location {list(location)} does not exist in the page")
    return insert_at_extend(new, location, page)


def add_page_attrs(extra: AttrSet, page: Page) -> PageNode:
    if is_atomic(page):
        raise Unspecified("atomic pages carry no attributes")
    return PageNode(page.struct, page.children, concat_attrs(extra, page.attrs))


def del_page_attrs(removed: AttrSet, page: Page) -> PageNode:
    if is_atomic(page):
        raise Unspecified("atomic pages carry no attributes")
    return PageNode(page.struct, page.children, remove_attrs(removed, page.attrs))
