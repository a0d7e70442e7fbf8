"""A catalog of the algebra's defining equations as executable checks.

Every entry pairs a behavior-describing name with a runner. A runner draws
one random well-sorted instance from the shared generators and asserts the
equation on it, raising AssertionError when the two sides disagree. The
conditional equations build instances that satisfy their condition;
partial operations are compared with an "unspecified" outcome sentinel so
both sides must be undefined together.

test_axioms.py gives every entry a quick shakedown; the acceptance tests
drive the same catalog at volume.
"""

from __future__ import annotations

import random
from typing import Callable

from dexterkit import (Anchor, AnchorType, BI, EMPTY_ATTRS,
                       FiniteMap, FiniteSet, HyperDoc, Link, MT_PAGE,
                       MediaPage, PageNode, Specifier, Struct, SymbolPage,
                       ActuateType, ShowType, UniType, Unspecified,
                       add_anchor, add_anchor_attrs, add_doc_attrs,
                       add_hmd_link, add_link_attrs, add_page_attrs,
                       anchor_by_name, anchor_max, att_of, ch_addr,
                       ch_addr_spec, ch_anchor_type, ch_link_type,
                       ch_location, ch_name, change_struct, combine_links,
                       concat_attrs, del_anchor, del_anchor_attrs,
                       del_doc_attrs, del_link, del_link_attrs,
                       del_page_attrs, delete_source, delete_target,
                       dimension, dimension_list, has_location, has_nth,
                       include_link_ok, insert_at, insert_at_extend,
                       insert_hmd, insert_hmd_extend, insert_nth_extend,
                       insert_source, insert_target, integrate, is_atomic,
                       link_specifiers, locate, mk_anchor, mk_hmd, mk_link,
                       mk_list, mk_specifier, mk_table, mk_tableline,
                       mk_tree, names_of_anchor, nth, pages_of, pnth,
                       remove_attrs, replace_addr_link, replace_addr_spec,
                       sink_location, struct_tree, zip_with_defaults)

from generators import (NAMES, URIS, all_paths, anchor, anchor_map, attrs,
                        atomic_page, hmd, link, link_type, location,
                        media_object, page, spec_set, specifier,
                        structured_page)

CATALOG: list[tuple[str, Callable[[random.Random], None]]] = []


def equation(name: str):
    def register(runner):
        CATALOG.append((name, runner))
        return runner
    return register


class _Undefined:
    def __repr__(self):
        return "<unspecified>"


UNDEF = _Undefined()


def outcome(fn):
    try:
        return fn()
    except Unspecified:
        return UNDEF


def same_outcome(lhs, rhs):
    left, right = outcome(lhs), outcome(rhs)
    assert left == right, f"{left!r} != {right!r}"


def rebuilt(doc: HyperDoc, **changed) -> HyperDoc:
    parts = {"basis": doc.basis, "anchors": doc.anchors, "links": doc.links,
             "attrs": doc.attrs, "address": doc.address}
    parts.update(changed)
    return HyperDoc(**parts)


# ---------------------------------------------------------------------------
# Anchors.

@equation("anchor: location comes back out of the constructor")
def _(rng):
    o, t, a = location(rng), rng.choice(tuple(AnchorType)), attrs(rng)
    assert mk_anchor(o, t, a).location == o


@equation("anchor: type comes back out of the constructor")
def _(rng):
    o, t, a = location(rng), rng.choice(tuple(AnchorType)), attrs(rng)
    assert mk_anchor(o, t, a).kind == t


@equation("anchor: attributes come back out of the constructor")
def _(rng):
    o, t, a = location(rng), rng.choice(tuple(AnchorType)), attrs(rng)
    assert mk_anchor(o, t, a).attrs == a


@equation("anchor: rebuilding from the projections is the identity")
def _(rng):
    c = anchor(rng)
    assert mk_anchor(c.location, c.kind, c.attrs) == c


@equation("anchor: joining with a label on the left gives label")
def _(rng):
    c = Anchor(location(rng), AnchorType.LABEL, attrs(rng))
    assert anchor_max(c, anchor(rng)) == AnchorType.LABEL


@equation("anchor: joining with a label on the right gives label")
def _(rng):
    c = Anchor(location(rng), AnchorType.LABEL, attrs(rng))
    assert anchor_max(anchor(rng), c) == AnchorType.LABEL


@equation("anchor: joining distinct types gives label")
def _(rng):
    ts = rng.sample((AnchorType.SOURCE, AnchorType.TARGET), 2)
    first = Anchor(location(rng), ts[0], attrs(rng))
    second = Anchor(location(rng), ts[1], attrs(rng))
    assert anchor_max(first, second) == AnchorType.LABEL


@equation("anchor: joining equal types gives that type")
def _(rng):
    t = rng.choice(tuple(AnchorType))
    first = Anchor(location(rng), t, attrs(rng))
    second = Anchor(location(rng), t, attrs(rng))
    assert anchor_max(first, second) == t


@equation("anchor: changing the location keeps type and attributes")
def _(rng):
    c, o = anchor(rng), location(rng)
    assert ch_location(o, c) == mk_anchor(o, c.kind, c.attrs)


@equation("anchor: changing the type keeps location and attributes")
def _(rng):
    c, t = anchor(rng), rng.choice(tuple(AnchorType))
    assert ch_anchor_type(t, c) == mk_anchor(c.location, t, c.attrs)


@equation("anchor: added attributes go in front")
def _(rng):
    c, extra = anchor(rng), attrs(rng)
    assert add_anchor_attrs(extra, c) == mk_anchor(c.location, c.kind,
                                                   concat_attrs(extra, c.attrs))


@equation("anchor: deleted attributes are bag-subtracted")
def _(rng):
    c, removed = anchor(rng), attrs(rng)
    assert del_anchor_attrs(removed, c) == mk_anchor(c.location, c.kind,
                                                     remove_attrs(removed, c.attrs))


# ---------------------------------------------------------------------------
# Specifiers and links.

@equation("specifier: uri comes back out of the constructor")
def _(rng):
    a, n = rng.choice(URIS), rng.choice(NAMES)
    assert mk_specifier(a, n).uri == a


@equation("specifier: name comes back out of the constructor")
def _(rng):
    a, n = rng.choice(URIS), rng.choice(NAMES)
    assert mk_specifier(a, n).name == n


@equation("link: source set comes back out of the constructor")
def _(rng):
    l = link(rng)
    assert mk_link(l.source, l.target, l.kind, l.attrs).source == l.source


@equation("link: target set comes back out of the constructor")
def _(rng):
    l = link(rng)
    assert mk_link(l.source, l.target, l.kind, l.attrs).target == l.target


@equation("link: the specifiers are the union of both ends")
def _(rng):
    l = link(rng)
    assert link_specifiers(l) == l.source | l.target


@equation("link: type comes back out of the constructor")
def _(rng):
    l = link(rng)
    assert mk_link(l.source, l.target, l.kind, l.attrs).kind == l.kind


@equation("link: attributes come back out of the constructor")
def _(rng):
    l = link(rng)
    assert mk_link(l.source, l.target, l.kind, l.attrs).attrs == l.attrs


@equation("specifier: changing the address keeps the name")
def _(rng):
    s, a = specifier(rng), rng.choice(URIS)
    assert ch_addr_spec(a, s) == mk_specifier(a, s.name)


@equation("specifier: changing the name keeps the address")
def _(rng):
    s, n = specifier(rng), rng.choice(NAMES)
    assert ch_name(n, s) == mk_specifier(s.uri, n)


@equation("specifier: address replacement hits a matching address")
def _(rng):
    s, a = specifier(rng), rng.choice(URIS)
    assert replace_addr_spec(s.uri, a, s) == mk_specifier(a, s.name)


@equation("specifier: address replacement leaves other addresses alone")
def _(rng):
    s = specifier(rng)
    old = s.uri + "/other"
    assert replace_addr_spec(old, rng.choice(URIS), s) == s


@equation("link: inserting a source specifier grows the source set")
def _(rng):
    l, s = link(rng), specifier(rng)
    assert insert_source(s, l) == mk_link(l.source.insert(s), l.target, l.kind, l.attrs)


@equation("link: deleting a source specifier shrinks the source set")
def _(rng):
    l, s = link(rng), specifier(rng)
    assert delete_source(s, l) == mk_link(l.source.remove(s), l.target, l.kind, l.attrs)


@equation("link: inserting a target specifier grows the target set")
def _(rng):
    l, s = link(rng), specifier(rng)
    assert insert_target(s, l) == mk_link(l.source, l.target.insert(s), l.kind, l.attrs)


@equation("link: deleting a target specifier shrinks the target set")
def _(rng):
    l, s = link(rng), specifier(rng)
    assert delete_target(s, l) == mk_link(l.source, l.target.remove(s), l.kind, l.attrs)


@equation("link: changing the type keeps both ends and attributes")
def _(rng):
    l, t = link(rng), link_type(rng)
    assert ch_link_type(t, l) == mk_link(l.source, l.target, t, l.attrs)


@equation("link: added attributes go in front")
def _(rng):
    l, extra = link(rng), attrs(rng)
    assert add_link_attrs(extra, l) == mk_link(l.source, l.target, l.kind,
                                               concat_attrs(extra, l.attrs))


@equation("link: deleted attributes are bag-subtracted")
def _(rng):
    l, removed = link(rng), attrs(rng)
    assert del_link_attrs(removed, l) == mk_link(l.source, l.target, l.kind,
                                                 remove_attrs(removed, l.attrs))


@equation("link: address replacement maps over both specifier sets")
def _(rng):
    l = link(rng)
    old, new = rng.choice(URIS), rng.choice(URIS)
    expected = mk_link(l.source.map(lambda s: replace_addr_spec(old, new, s)),
                       l.target.map(lambda s: replace_addr_spec(old, new, s)),
                       l.kind, l.attrs)
    assert replace_addr_link(old, new, l) == expected


# ---------------------------------------------------------------------------
# Hyperdocuments.

@equation("doc: basis comes back out of the constructor")
def _(rng):
    d = hmd(rng)
    assert mk_hmd(d.basis, d.anchors, d.links, d.attrs, d.address).basis == d.basis


@equation("doc: anchors come back out of the constructor")
def _(rng):
    d = hmd(rng)
    assert mk_hmd(d.basis, d.anchors, d.links, d.attrs, d.address).anchors == d.anchors


@equation("doc: links come back out of the constructor")
def _(rng):
    d = hmd(rng)
    assert mk_hmd(d.basis, d.anchors, d.links, d.attrs, d.address).links == d.links


@equation("doc: attributes come back out of the constructor")
def _(rng):
    d = hmd(rng)
    assert mk_hmd(d.basis, d.anchors, d.links, d.attrs, d.address).attrs == d.attrs


@equation("doc: address comes back out of the constructor")
def _(rng):
    d = hmd(rng)
    assert mk_hmd(d.basis, d.anchors, d.links, d.attrs, d.address).address == d.address


@equation("doc: looking up an anchor name is map application")
def _(rng):
    A = anchor_map(rng)
    n = rng.choice(NAMES)
    same_outcome(lambda: anchor_by_name(n, A), lambda: A.apply(n))


@equation("doc: collecting the names of an anchor is reverse application")
def _(rng):
    A = anchor_map(rng)
    c = anchor(rng)
    if rng.random() < 0.5 and not A.is_empty():
        c = rng.choice([v for _, v in A.items()])
    assert names_of_anchor(c, A) == A.reverse_apply(c)


@equation("doc: adding an anchor under an unused name binds it")
def _(rng):
    d = hmd(rng)
    c = anchor(rng)
    fresh = "fresh9"
    assert fresh not in d.anchors
    assert add_anchor(fresh, c, d) == rebuilt(d, anchors=d.anchors.update(fresh, c))


@equation("doc: rebinding a name at the same location joins type and attributes")
def _(rng):
    name = rng.choice(NAMES)
    old = anchor(rng)
    d = rebuilt(hmd(rng), anchors=FiniteMap([(name, old)]).compose(anchor_map(rng)))
    new = Anchor(old.location, rng.choice(tuple(AnchorType)), attrs(rng))
    merged = mk_anchor(new.location, anchor_max(new, old),
                       concat_attrs(new.attrs, old.attrs))
    assert add_anchor(name, new, d) == rebuilt(d, anchors=d.anchors.update(name, merged))


@equation("doc: rebinding a name at a different location is unspecified")
def _(rng):
    name = rng.choice(NAMES)
    old = anchor(rng)
    d = rebuilt(hmd(rng), anchors=FiniteMap([(name, old)]).compose(anchor_map(rng)))
    new = Anchor(old.location + (1,), rng.choice(tuple(AnchorType)), attrs(rng))
    assert outcome(lambda: add_anchor(name, new, d)) is UNDEF


@equation("doc: deleting an anchor unbinds its name")
def _(rng):
    d = hmd(rng)
    n = rng.choice(NAMES)
    assert del_anchor(n, d) == rebuilt(d, anchors=d.anchors.remove(n))


def _admission_doc(rng, anchor_type, blank_slot=False):
    """A level-1 document with one anchor of the given type, plus a
    self-addressed specifier naming it. With blank_slot the anchor sits on
    an empty cell of the basis, where embedding is allowed."""
    k = rng.randrange(1, 4)
    basis = mk_list(k)
    loc = (rng.randrange(1, k + 1),) if blank_slot else location(rng)
    name = rng.choice(NAMES)
    c = Anchor(loc, anchor_type, attrs(rng))
    bound = FiniteMap([(name, c)]).compose(anchor_map(rng))
    links = FiniteSet(link(rng) for _ in range(rng.randrange(2)))
    d = mk_hmd(basis, bound, links, attrs(rng), rng.choice(URIS))
    return d, Specifier(integrate(d.address), name)


def _accepts(d, l):
    assert add_hmd_link(l, d) == rebuilt(d, links=d.links.insert(l))


@equation("doc: a jump link lands on a self-addressed source anchor")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.SOURCE)
    kind = UniType(ShowType.REPLACE, rng.choice(tuple(ActuateType)))
    _accepts(d, Link(spec_set(rng).insert(sp), spec_set(rng), kind, attrs(rng)))


@equation("doc: a jump link lands on a self-addressed label anchor")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.LABEL)
    kind = UniType(ShowType.REPLACE, rng.choice(tuple(ActuateType)))
    _accepts(d, Link(spec_set(rng).insert(sp), spec_set(rng), kind, attrs(rng)))


@equation("doc: a new-window link lands on a self-addressed source anchor")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.SOURCE)
    kind = UniType(ShowType.NEW, rng.choice(tuple(ActuateType)))
    _accepts(d, Link(spec_set(rng).insert(sp), spec_set(rng), kind, attrs(rng)))


@equation("doc: a new-window link lands on a self-addressed label anchor")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.LABEL)
    kind = UniType(ShowType.NEW, rng.choice(tuple(ActuateType)))
    _accepts(d, Link(spec_set(rng).insert(sp), spec_set(rng), kind, attrs(rng)))


@equation("doc: a hand-embedding link needs its source anchor on a blank slot")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.SOURCE, blank_slot=True)
    kind = UniType(ShowType.EMBED, ActuateType.USER)
    _accepts(d, Link(spec_set(rng).insert(sp), spec_set(rng), kind, attrs(rng)))


@equation("doc: a hand-embedding link needs its label anchor on a blank slot")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.LABEL, blank_slot=True)
    kind = UniType(ShowType.EMBED, ActuateType.USER)
    _accepts(d, Link(spec_set(rng).insert(sp), spec_set(rng), kind, attrs(rng)))


@equation("doc: an auto-embedding link also needs exactly one target (source anchor)")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.SOURCE, blank_slot=True)
    kind = UniType(ShowType.EMBED, ActuateType.AUTO)
    one_target = FiniteSet([specifier(rng)])
    _accepts(d, Link(spec_set(rng).insert(sp), one_target, kind, attrs(rng)))


@equation("doc: an auto-embedding link also needs exactly one target (label anchor)")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.LABEL, blank_slot=True)
    kind = UniType(ShowType.EMBED, ActuateType.AUTO)
    one_target = FiniteSet([specifier(rng)])
    _accepts(d, Link(spec_set(rng).insert(sp), one_target, kind, attrs(rng)))


@equation("doc: a two-way link lands on a self-addressed label anchor")
def _(rng):
    d, sp = _admission_doc(rng, AnchorType.LABEL)
    _accepts(d, Link(spec_set(rng).insert(sp), spec_set(rng), BI, attrs(rng)))


@equation("doc: a link no admission rule covers is unspecified")
def _(rng):
    name = rng.choice(NAMES)
    c = Anchor(location(rng), AnchorType.TARGET, attrs(rng))
    d = mk_hmd(page(rng), FiniteMap([(name, c)]), FiniteSet(), attrs(rng),
               rng.choice(URIS))
    l = Link(FiniteSet([Specifier(integrate(d.address), name)]),
             spec_set(rng), link_type(rng), attrs(rng))
    assert outcome(lambda: add_hmd_link(l, d)) is UNDEF


@equation("doc: deleting a link removes it from the set")
def _(rng):
    d = hmd(rng)
    l = rng.choice([link(rng)] + list(d.links))
    assert del_link(l, d) == rebuilt(d, links=d.links.remove(l))


@equation("doc: added attributes go in front")
def _(rng):
    d, extra = hmd(rng), attrs(rng)
    assert add_doc_attrs(extra, d) == rebuilt(d, attrs=concat_attrs(extra, d.attrs))


@equation("doc: deleted attributes are bag-subtracted")
def _(rng):
    d, removed = hmd(rng), attrs(rng)
    assert del_doc_attrs(removed, d) == rebuilt(d, attrs=remove_attrs(removed, d.attrs))


@equation("doc: changing the address touches nothing else")
def _(rng):
    d, a = hmd(rng), rng.choice(URIS)
    assert ch_addr(a, d) == rebuilt(d, address=a)


# ---------------------------------------------------------------------------
# Pages.

@equation("page: the blank page is atomic")
def _(rng):
    assert is_atomic(MT_PAGE) is True


@equation("page: an imported media object is atomic")
def _(rng):
    assert is_atomic(MediaPage(media_object(rng))) is True


@equation("page: an imported symbol is atomic")
def _(rng):
    assert is_atomic(SymbolPage(rng.choice(("*", "o", "->")))) is True


@equation("page: a structured node is not atomic")
def _(rng):
    assert is_atomic(structured_page(rng)) is False


@equation("page: the first child of an empty list does not exist")
def _(rng):
    assert has_nth(1, ()) is False


@equation("page: the first child of a non-empty list exists")
def _(rng):
    children = tuple(page(rng, 1) for _ in range(rng.randrange(1, 4)))
    assert has_nth(1, children) is True


@equation("page: child existence steps down the tail")
def _(rng):
    children = tuple(page(rng, 1) for _ in range(rng.randrange(1, 4)))
    n = rng.randrange(2, 6)
    assert has_nth(n, children) == has_nth(n - 1, children[1:])


@equation("page: the empty path exists in every page")
def _(rng):
    assert has_location((), page(rng)) is True


@equation("page: no non-empty path exists in an atomic page")
def _(rng):
    loc = location(rng)
    if not loc:
        loc = (1,)
    assert has_location(loc, atomic_page(rng)) is False


@equation("page: a path over a missing child index does not exist")
def _(rng):
    p = structured_page(rng)
    loc = (len(p.children) + rng.randrange(1, 3),) + location(rng)
    assert has_location(loc, p) is False


@equation("page: path existence recurses through the indexed child")
def _(rng):
    p = structured_page(rng)
    n = rng.randrange(1, len(p.children) + 1)
    o = location(rng)
    assert has_location((n,) + o, p) == has_location(o, pnth(n, p.children))


@equation("page: embedding is refused at a missing path")
def _(rng):
    p = atomic_page(rng)
    assert include_link_ok((1,) + location(rng), p) is False


@equation("page: embedding is allowed exactly on blank pages")
def _(rng):
    p = structured_page(rng)
    paths = all_paths(p)
    o = tuple(rng.choice(paths))
    assert include_link_ok(o, p) == (locate(o, p) == MT_PAGE)


@equation("page: the structure tree of a blank page is a leaf")
def _(rng):
    assert struct_tree(MT_PAGE) == mk_tree(Struct.EMPTYPAGE)


@equation("page: the structure tree of a media object is a basic leaf")
def _(rng):
    assert struct_tree(MediaPage(media_object(rng))) == mk_tree(Struct.BASIC)


@equation("page: the structure tree of a symbol is a symbol leaf")
def _(rng):
    assert struct_tree(SymbolPage("*")) == mk_tree(Struct.SYMB)


@equation("page: the structure tree of a node maps over its children")
def _(rng):
    p = structured_page(rng)
    assert struct_tree(p) == mk_tree(p.struct, tuple(struct_tree(c) for c in p.children))


@equation("page: the children come back out of a structured node")
def _(rng):
    p = structured_page(rng)
    assert pages_of(p) == p.children


@equation("page: the attributes come back out of a structured node")
def _(rng):
    p = structured_page(rng)
    assert att_of(p) == p.attrs


@equation("page: one-based indexing is zero-based indexing shifted")
def _(rng):
    children = tuple(page(rng, 1) for _ in range(rng.randrange(4)))
    n = rng.randrange(1, 6)
    same_outcome(lambda: pnth(n, children), lambda: nth(n - 1, children))


@equation("page: the empty path locates the page itself")
def _(rng):
    p = page(rng)
    assert locate((), p) == p


@equation("page: locating recurses through the indexed child")
def _(rng):
    p = structured_page(rng)
    n = rng.randrange(1, len(p.children) + 2)
    o = location(rng)
    same_outcome(lambda: locate((n,) + o, p),
                 lambda: locate(o, pnth(n, p.children)))


@equation("page: atomic pages have no extent")
def _(rng):
    assert dimension(atomic_page(rng)) == ()


@equation("page: a node's extent is its child count before the children's extents")
def _(rng):
    p = structured_page(rng)
    assert dimension(p) == (len(p.children),) + dimension_list(p.children)


@equation("page: the extent of no children is empty")
def _(rng):
    assert dimension_list(()) == ()


@equation("page: child extents fold with a padded element-wise maximum")
def _(rng):
    children = tuple(page(rng, 2) for _ in range(rng.randrange(1, 4)))
    head, tail = children[0], children[1:]
    expected = zip_with_defaults(0, 0, max, dimension(head), dimension_list(tail))
    assert dimension_list(children) == expected


@equation("page: changing the structure keeps children and attributes")
def _(rng):
    p = structured_page(rng)
    s = rng.choice(tuple(Struct))
    assert change_struct(s, p) == PageNode(s, p.children, p.attrs)


@equation("page: a fresh list is blank pages under a list node")
def _(rng):
    n = rng.randrange(5)
    assert mk_list(n) == PageNode(Struct.LIST, (MT_PAGE,) * n, EMPTY_ATTRS)


@equation("page: a fresh table is rows of table lines")
def _(rng):
    m, n = rng.randrange(4), rng.randrange(4)
    assert mk_table(m, n) == PageNode(Struct.TABLE, (mk_tableline(n),) * m, EMPTY_ATTRS)


@equation("page: a fresh table line is blank cells")
def _(rng):
    n = rng.randrange(5)
    assert mk_tableline(n) == PageNode(Struct.TABLELINE, (MT_PAGE,) * n, EMPTY_ATTRS)


@equation("page: inserting at the empty path replaces the whole page")
def _(rng):
    new, p = page(rng, 1), page(rng)
    assert insert_at_extend(new, (), p) == new


@equation("page: inserting under a table node pads rows with empty table lines")
def _(rng):
    p = PageNode(Struct.TABLE, tuple(page(rng, 2) for _ in range(rng.randrange(3))),
                 attrs(rng))
    new, n, o = page(rng, 1), rng.randrange(1, 5), location(rng, 2)
    same_outcome(
        lambda: insert_at_extend(new, (n,) + o, p),
        lambda: PageNode(p.struct,
                         insert_nth_extend(new, n, o, p.children, mk_tableline(0)),
                         p.attrs))


@equation("page: inserting under any other node pads with blank pages")
def _(rng):
    p = structured_page(rng)
    if p.struct == Struct.TABLE:
        p = PageNode(Struct.LIST, p.children, p.attrs)
    new, n, o = page(rng, 1), rng.randrange(1, 5), location(rng, 2)
    same_outcome(
        lambda: insert_at_extend(new, (n,) + o, p),
        lambda: PageNode(p.struct,
                         insert_nth_extend(new, n, o, p.children, MT_PAGE),
                         p.attrs))


@equation("page: inserting into the head of a child list recurses in place")
def _(rng):
    children = tuple(page(rng, 2) for _ in range(rng.randrange(1, 4)))
    new, o, default = page(rng, 1), location(rng, 2), atomic_page(rng)
    same_outcome(
        lambda: insert_nth_extend(new, 1, o, children, default),
        lambda: (insert_at_extend(new, o, children[0]),) + children[1:])


@equation("page: inserting past the head of a child list walks the tail")
def _(rng):
    children = tuple(page(rng, 2) for _ in range(rng.randrange(1, 4)))
    new, n, o, default = page(rng, 1), rng.randrange(2, 6), location(rng, 2), atomic_page(rng)
    same_outcome(
        lambda: insert_nth_extend(new, n, o, children, default),
        lambda: (children[0],) + insert_nth_extend(new, n - 1, o, children[1:], default))


@equation("page: inserting into an exhausted child list plants the default")
def _(rng):
    new, o, default = page(rng, 1), location(rng, 2), atomic_page(rng)
    same_outcome(
        lambda: insert_nth_extend(new, 1, o, (), default),
        lambda: (insert_at_extend(new, o, default),))


@equation("page: inserting past an exhausted child list pads with defaults")
def _(rng):
    new, n, o, default = page(rng, 1), rng.randrange(2, 6), location(rng, 2), atomic_page(rng)
    same_outcome(
        lambda: insert_nth_extend(new, n, o, (), default),
        lambda: (default,) + insert_nth_extend(new, n - 1, o, (), default))


@equation("page: plain insertion agrees with extending insertion on existing paths")
def _(rng):
    p = page(rng)
    o = tuple(rng.choice(all_paths(p)))
    new = page(rng, 1)
    assert insert_at(new, o, p) == insert_at_extend(new, o, p)


@equation("page: added attributes go in front")
def _(rng):
    p, extra = structured_page(rng), attrs(rng)
    assert add_page_attrs(extra, p) == PageNode(p.struct, p.children,
                                                concat_attrs(extra, p.attrs))


@equation("page: deleted attributes are bag-subtracted")
def _(rng):
    p, removed = structured_page(rng), attrs(rng)
    assert del_page_attrs(removed, p) == PageNode(p.struct, p.children,
                                                  remove_attrs(removed, p.attrs))


# ---------------------------------------------------------------------------
# Document composition.

def _composable_pair(rng):
    """(inner, location, host) satisfying the composition preconditions:
    anchor names disjoint, no host anchor inside the replaced region."""
    inner = rebuilt(hmd(rng, name_pool=("ia", "ib", "ic")), address="in")
    host_basis = structured_page(rng)
    o = tuple(rng.choice(all_paths(host_basis)))
    safe = [q for q in all_paths(host_basis) if not (len(o) < len(q) and q[:len(o)] == o)]
    names = rng.sample(("ha", "hb", "hc"), rng.randrange(3))
    host_anchors = FiniteMap(
        (n, Anchor(tuple(rng.choice(safe)), rng.choice(tuple(AnchorType)), attrs(rng)))
        for n in names)
    host = mk_hmd(host_basis, host_anchors,
                  FiniteSet(link(rng) for _ in range(rng.randrange(3))),
                  attrs(rng), "host")
    return inner, o, host


@equation("compose: sinking an anchor prepends the region's path")
def _(rng):
    o, c = location(rng), anchor(rng)
    assert sink_location(o, c) == mk_anchor(o + c.location, c.kind, c.attrs)


@equation("compose: both documents' links are pooled and readdressed")
def _(rng):
    inner_links = FiniteSet(link(rng, uris=("in", "host", "d1")) for _ in range(rng.randrange(3)))
    host_links = FiniteSet(link(rng, uris=("in", "host", "d1")) for _ in range(rng.randrange(3)))
    pooled = inner_links | host_links
    step = pooled.map(lambda l: replace_addr_link(integrate("in"), integrate("new"), l))
    expected = step.map(lambda l: replace_addr_link(integrate("host"), integrate("new"), l))
    assert combine_links("in", "host", "new", inner_links, host_links) == expected


@equation("compose: grafting one document into another rebuilds all five parts")
def _(rng):
    inner, o, host = _composable_pair(rng)
    result = insert_hmd_extend(inner, o, host, "new")
    sunk = inner.anchors.map_values(lambda c: sink_location(o, c))
    assert result.basis == insert_at_extend(inner.basis, o, host.basis)
    assert result.anchors == sunk.compose(host.anchors)
    assert result.links == combine_links(inner.address, host.address, "new",
                                         inner.links, host.links)
    assert result.attrs == concat_attrs(inner.attrs, host.attrs)
    assert result.address == "new"


@equation("compose: plain grafting agrees with extending grafting on existing paths")
def _(rng):
    inner, o, host = _composable_pair(rng)
    assert insert_hmd(inner, o, host, "new") == insert_hmd_extend(inner, o, host, "new")


def names() -> list[str]:
    return [name for name, _ in CATALOG]
