"""Links between anchored documents.

A link carries a set of source specifiers, a set of target specifiers, a
link type and attributes. A specifier is a URI plus the name of an anchor
within the document that URI denotes. Unidirectional links say how the
target shows up (embedded in place, replacing the view, or in a new view)
and who triggers them (the user or the system); bidirectional links have no
such refinement.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .attributes import AttrSet, concat_attrs, remove_attrs
from .containers import FiniteSet


class ShowType(Enum):
    EMBED = "embed"
    REPLACE = "replace"
    NEW = "new"


class ActuateType(Enum):
    USER = "user"
    AUTO = "auto"


@dataclass(frozen=True)
class UniType:
    show: ShowType
    actuate: ActuateType


@dataclass(frozen=True)
class BiType:
    pass


LinkType = UniType | BiType

BI = BiType()

# The two classic flavours: follow-on-click, and evaluate-on-load inclusion.
JUMP_LINK = UniType(ShowType.REPLACE, ActuateType.USER)
INCLUDE_LINK = UniType(ShowType.EMBED, ActuateType.AUTO)


@dataclass(frozen=True)
class Specifier:
    uri: str
    name: str


@dataclass(frozen=True)
class Link:
    source: FiniteSet
    target: FiniteSet
    kind: LinkType
    attrs: AttrSet


def mk_specifier(uri: str, name: str) -> Specifier:
    return Specifier(uri, name)


def mk_link(source: FiniteSet, target: FiniteSet, kind: LinkType, attrs: AttrSet) -> Link:
    return Link(source, target, kind, attrs)


def format_link_type(kind: LinkType) -> str:
    if isinstance(kind, UniType):
        return f"uni({kind.show.value},{kind.actuate.value})"
    return "bi"


def link_specifiers(link: Link) -> FiniteSet:
    """All specifiers of the link, both ends pooled."""
    return link.source.union(link.target)


def ch_addr_spec(uri: str, spec: Specifier) -> Specifier:
    return Specifier(uri, spec.name)


def ch_name(name: str, spec: Specifier) -> Specifier:
    return Specifier(spec.uri, name)


def replace_addr_spec(old_uri: str, new_uri: str, spec: Specifier) -> Specifier:
    """Point the specifier at ``new_uri`` when it points at ``old_uri``;
    otherwise leave it alone."""
    if spec.uri == old_uri:
        return Specifier(new_uri, spec.name)
    return spec


def insert_source(spec: Specifier, link: Link) -> Link:
    return Link(link.source.insert(spec), link.target, link.kind, link.attrs)


def delete_source(spec: Specifier, link: Link) -> Link:
    return Link(link.source.remove(spec), link.target, link.kind, link.attrs)


def insert_target(spec: Specifier, link: Link) -> Link:
    return Link(link.source, link.target.insert(spec), link.kind, link.attrs)


def delete_target(spec: Specifier, link: Link) -> Link:
    return Link(link.source, link.target.remove(spec), link.kind, link.attrs)


def ch_link_type(kind: LinkType, link: Link) -> Link:
    return Link(link.source, link.target, kind, link.attrs)


def add_link_attrs(extra: AttrSet, link: Link) -> Link:
    return Link(link.source, link.target, link.kind, concat_attrs(extra, link.attrs))


def del_link_attrs(removed: AttrSet, link: Link) -> Link:
    return Link(link.source, link.target, link.kind, remove_attrs(removed, link.attrs))


def replace_addr_link(old_uri: str, new_uri: str, link: Link) -> Link:
    """Rewire every specifier of the link from ``old_uri`` to ``new_uri``."""
    def rewrite(spec: Specifier) -> Specifier:
        return replace_addr_spec(old_uri, new_uri, spec)

    return Link(link.source.map(rewrite), link.target.map(rewrite), link.kind, link.attrs)
