"""Hypermedia documents: hyperdocuments whose basis is a page.

This is the level-one instantiation: locations are page locations, document
addresses are strings, ``embed_link_ok`` is the page-level test that the
location exists and is empty, and ``integrate`` is the identity embedding of
addresses into URIs.

The one operation with real machinery is document insertion: replacing a
region of a host document with another whole document, which has to sink the
inserted document's anchors below the insertion point and rewire every link
that referred to either input onto the combined document's new address.
"""

from __future__ import annotations

from .anchor import Anchor
from .attributes import AttrSet, concat_attrs
from .containers import FiniteMap, FiniteSet, is_proper_prefix
from .errors import Unspecified
from .hyperdoc import HdParams, HyperDoc, add_link, mk_hd
from .link import Link, replace_addr_link
from .page import Location, Page, has_location, include_link_ok, insert_at_extend


def integrate(address: str) -> str:
    """Document addresses are already URIs here, so embedding is identity."""
    return address


HMD_PARAMS = HdParams(embed_link_ok=include_link_ok, integrate=integrate)


def mk_hmd(page: Page, anchors: FiniteMap, links: FiniteSet,
           attrs: AttrSet, address: str) -> HyperDoc:
    return mk_hd(page, anchors, links, attrs, address)


def add_hmd_link(link: Link, doc: HyperDoc) -> HyperDoc:
    return add_link(link, doc, HMD_PARAMS)


def sink_location(prefix: Location, anchor: Anchor) -> Anchor:
    """Push an anchor down below ``prefix``, keeping type and attributes."""
    return Anchor(tuple(prefix) + tuple(anchor.location), anchor.kind, anchor.attrs)


def combine_links(inner_addr: str, host_addr: str, new_addr: str,
                  inner_links: FiniteSet, host_links: FiniteSet) -> FiniteSet:
    """Pool the two link sets and point every reference to either old
    document at the combined document instead."""
    pooled = inner_links.union(host_links)
    pooled = pooled.map(lambda l: replace_addr_link(integrate(inner_addr), integrate(new_addr), l))
    return pooled.map(lambda l: replace_addr_link(integrate(host_addr), integrate(new_addr), l))


def insert_hmd_extend(inner: HyperDoc, location: Location,
                      host: HyperDoc, new_address: str) -> HyperDoc:
    """Replace the part of ``host`` at ``location`` with all of ``inner``.

    The result is one document: the host page with the inner page grafted in
    (growing the host page if the location reaches past it), the inner
    document's anchors sunk below the insertion point next to the host's
    own, the pooled links rewired onto ``new_address``, and the attribute
    lists concatenated.

    Two preconditions keep this meaningful: the documents must not share
    anchor names, and the host must not keep anchors strictly inside the
    region being replaced, because those would dangle afterwards.
    """
    if not inner.anchors.dom().intersect(host.anchors.dom()).is_empty():
        raise Unspecified("the two documents share anchor names")
    host_locations = host.anchors.ran().map(lambda c: c.location)
    if host_locations.exists(lambda loc: is_proper_prefix(tuple(location), tuple(loc))):
        raise Unspecified("the host document has anchors inside the replaced region")
    sunk = inner.anchors.map_values(lambda c: sink_location(location, c))
    return HyperDoc(
        basis=insert_at_extend(inner.basis, location, host.basis),
        anchors=sunk.compose(host.anchors),
        links=combine_links(inner.address, host.address, new_address,
                            inner.links, host.links),
        attrs=concat_attrs(inner.attrs, host.attrs),
        address=new_address,
    )


def insert_hmd(inner: HyperDoc, location: Location,
               host: HyperDoc, new_address: str) -> HyperDoc:
    """Like insert_hmd_extend, but only into a location the host already has."""
    if not has_location(location, host.basis):
        raise Unspecified(f"location {list(location)} does not exist in the host page")
    return insert_hmd_extend(inner, location, host, new_address)
