"""Anchors: typed, attributed handles on locations inside a document.

An anchor pins a location and says which end of a link it may serve:
``source``, ``target``, or ``label``, where a label anchor is good for
either end. Merging anchors takes the join of their types, so two
disagreeing anchors collapse to a label.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Any

from .attributes import AttrSet, concat_attrs, remove_attrs


class AnchorType(Enum):
    SOURCE = "source"
    TARGET = "target"
    LABEL = "label"


@dataclass(frozen=True)
class Anchor:
    location: Any
    kind: AnchorType
    attrs: AttrSet


def mk_anchor(location: Any, kind: AnchorType, attrs: AttrSet) -> Anchor:
    return Anchor(location, kind, attrs)


def anchor_max(first: Anchor, second: Anchor) -> AnchorType:
    """Join of two anchors' types: label absorbs everything, and distinct
    types meet at label; only equal types survive as themselves."""
    if first.kind is AnchorType.LABEL or second.kind is AnchorType.LABEL:
        return AnchorType.LABEL
    if first.kind is not second.kind:
        return AnchorType.LABEL
    return first.kind


def ch_location(location: Any, anchor: Anchor) -> Anchor:
    return Anchor(location, anchor.kind, anchor.attrs)


def ch_anchor_type(kind: AnchorType, anchor: Anchor) -> Anchor:
    return Anchor(anchor.location, kind, anchor.attrs)


def add_anchor_attrs(extra: AttrSet, anchor: Anchor) -> Anchor:
    return Anchor(anchor.location, anchor.kind, concat_attrs(extra, anchor.attrs))


def del_anchor_attrs(removed: AttrSet, anchor: Anchor) -> Anchor:
    return Anchor(anchor.location, anchor.kind, remove_attrs(removed, anchor.attrs))
