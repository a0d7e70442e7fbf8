"""Generic hyperdocuments: a basis document plus anchors, links, attributes
and an address.

Nothing here fixes what the basis is. An instantiation supplies two
parameter functions through :class:`HdParams`:

* ``embed_link_ok(location, basis)`` says whether the given location in the
  basis document may carry an embedded link, and
* ``integrate(address)`` injects a document address into the URI space that
  link specifiers use, so a document can recognise specifiers pointing at
  itself.

Anchors live in a name-keyed map; links are a set. All editing functions
return a new document and leave the input untouched.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable

from .anchor import Anchor, AnchorType, anchor_max
from .attributes import AttrSet, concat_attrs, remove_attrs
from .containers import FiniteMap, FiniteSet
from .errors import Unspecified
from .link import Link, LinkType, ShowType, ActuateType, UniType, BiType, format_link_type


@dataclass(frozen=True)
class HyperDoc:
    basis: Any
    anchors: FiniteMap  # anchor name -> Anchor
    links: FiniteSet    # of Link
    attrs: AttrSet
    address: Any


@dataclass(frozen=True)
class HdParams:
    """The two functions a hyperdocument instantiation must provide."""

    embed_link_ok: Callable[[Any, Any], bool]
    integrate: Callable[[Any], str]


def mk_hd(basis: Any, anchors: FiniteMap, links: FiniteSet,
          attrs: AttrSet, address: Any) -> HyperDoc:
    return HyperDoc(basis, anchors, links, attrs, address)


def anchor_by_name(name: str, anchors: FiniteMap) -> Anchor:
    return anchors.apply(name)


def names_of_anchor(anchor: Anchor, anchors: FiniteMap) -> FiniteSet:
    return anchors.reverse_apply(anchor)


def add_anchor(name: str, anchor: Anchor, doc: HyperDoc) -> HyperDoc:
    """Bind ``name`` to ``anchor``.

    A fresh name simply gets the binding. Rebinding a name whose existing
    anchor sits at the same location merges the two: the type becomes the
    join of both types and the new attributes go in front. Rebinding at a
    different location is refused, because that would silently move
    whatever links already rely on the name.
    """
    anchors = doc.anchors
    if name not in anchors:
        return replace(doc, anchors=anchors.update(name, anchor))
    existing = anchors.apply(name)
    if existing.location != anchor.location:
        raise Unspecified(f"anchor name {name!r} is already bound at a different location")
    merged = Anchor(anchor.location,
                    anchor_max(anchor, existing),
                    concat_attrs(anchor.attrs, existing.attrs))
    return replace(doc, anchors=anchors.update(name, merged))


def del_anchor(name: str, doc: HyperDoc) -> HyperDoc:
    return replace(doc, anchors=doc.anchors.remove(name))


# ---------------------------------------------------------------------------
# Link admission.
#
# A link may be added when one of nine rules accepts it. Every rule demands
# a source specifier that points back at this document (its URI equals the
# integrated document address) and names one of the document's anchors; the
# rules then differ in the link type they cover, the anchor type they need,
# and two extra conditions for embedded links.

_STAGES = ("link type", "self-addressed", "named anchor", "anchor type",
           "embed allowed", "single target")


@dataclass(frozen=True)
class RuleCheck:
    rule: str
    ok: bool
    stage: int            # index into _STAGES of the first failed conjunct
    reason: str | None


def _is_replace(kind: LinkType) -> bool:
    return isinstance(kind, UniType) and kind.show is ShowType.REPLACE


def _is_new(kind: LinkType) -> bool:
    return isinstance(kind, UniType) and kind.show is ShowType.NEW


def _is_embed_user(kind: LinkType) -> bool:
    return (isinstance(kind, UniType) and kind.show is ShowType.EMBED
            and kind.actuate is ActuateType.USER)


def _is_embed_auto(kind: LinkType) -> bool:
    return (isinstance(kind, UniType) and kind.show is ShowType.EMBED
            and kind.actuate is ActuateType.AUTO)


def _is_bi(kind: LinkType) -> bool:
    return isinstance(kind, BiType)


# (rule id, link-type test, required anchor type, needs embed_link_ok,
#  needs exactly one target)
_RULES = (
    ("uni(replace,*)/source", _is_replace, AnchorType.SOURCE, False, False),
    ("uni(replace,*)/label", _is_replace, AnchorType.LABEL, False, False),
    ("uni(new,*)/source", _is_new, AnchorType.SOURCE, False, False),
    ("uni(new,*)/label", _is_new, AnchorType.LABEL, False, False),
    ("uni(embed,user)/source", _is_embed_user, AnchorType.SOURCE, True, False),
    ("uni(embed,user)/label", _is_embed_user, AnchorType.LABEL, True, False),
    ("uni(embed,auto)/source", _is_embed_auto, AnchorType.SOURCE, True, True),
    ("uni(embed,auto)/label", _is_embed_auto, AnchorType.LABEL, True, True),
    ("bi/label", _is_bi, AnchorType.LABEL, False, False),
)


def evaluate_add_link(link: Link, doc: HyperDoc, params: HdParams) -> tuple[RuleCheck, ...]:
    """Run every admission rule against ``link`` and report, per rule,
    either acceptance or the first conjunct that failed."""
    own_uri = params.integrate(doc.address)
    self_addressed = [sp for sp in link.source if sp.uri == own_uri]
    named = [sp for sp in self_addressed if sp.name in doc.anchors]
    candidates = [doc.anchors.apply(sp.name) for sp in named]

    checks = []
    for rule, type_ok, required, needs_embed, needs_single in _RULES:
        if not type_ok(link.kind):
            checks.append(RuleCheck(rule, False, 0, f"link type is {format_link_type(link.kind)}"))
            continue
        if not self_addressed:
            checks.append(RuleCheck(rule, False, 1, "no self-addressed source specifier"))
            continue
        if not named:
            checks.append(RuleCheck(rule, False, 2,
                                    "no source specifier names an anchor of the document"))
            continue
        typed = [c for c in candidates if c.kind is required]
        if not typed:
            checks.append(RuleCheck(rule, False, 3, f"no matching anchor of type {required.value}"))
            continue
        if needs_embed:
            embeddable = [c for c in typed if params.embed_link_ok(c.location, doc.basis)]
            if not embeddable:
                checks.append(RuleCheck(rule, False, 4,
                                        "embed link not allowed at the anchor location"))
                continue
        if needs_single and link.target.card() != 1:
            checks.append(RuleCheck(rule, False, 5, f"card(target)={link.target.card()} ≠ 1"))
            continue
        checks.append(RuleCheck(rule, True, len(_STAGES), None))
    return tuple(checks)


def accepting_rule(link: Link, doc: HyperDoc, params: HdParams) -> str | None:
    for check in evaluate_add_link(link, doc, params):
        if check.ok:
            return check.rule
    return None


def add_link(link: Link, doc: HyperDoc, params: HdParams) -> HyperDoc:
    """Insert ``link`` if some admission rule accepts it.

    Acceptance is existential over the link's source specifiers: it is
    enough that one of them points back at this document, names an anchor
    here, and satisfies the rule for the link's type.
    """
    if accepting_rule(link, doc, params) is None:
        raise Unspecified("no addlink rule applies")
    return replace(doc, links=doc.links.insert(link))


def del_link(link: Link, doc: HyperDoc) -> HyperDoc:
    return replace(doc, links=doc.links.remove(link))


def add_doc_attrs(extra: AttrSet, doc: HyperDoc) -> HyperDoc:
    return replace(doc, attrs=concat_attrs(extra, doc.attrs))


def del_doc_attrs(removed: AttrSet, doc: HyperDoc) -> HyperDoc:
    return replace(doc, attrs=remove_attrs(removed, doc.attrs))


def ch_addr(address: Any, doc: HyperDoc) -> HyperDoc:
    return replace(doc, address=address)
