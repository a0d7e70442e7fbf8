"""Value-semantics containers: finite sets, finite maps, sequences, rose trees.

All values are immutable and compare structurally; every operation returns a
fresh value. Sets and maps iterate in a deterministic order (elements sorted
by a canonical structural key) so that renderings and reports are
reproducible run to run. The ordering is a convention of this
implementation, not something the algebra observes.

Sequences are plain tuples. ``rep``, ``nth``, ``is_proper_prefix`` and
``zip_with_defaults`` cover the handful of sequence operations the document
algebra needs beyond tuple concatenation, ``map`` and ``max``.
"""

from __future__ import annotations

import dataclasses
from enum import Enum
from typing import Any, Callable, Iterable, Iterator

from .errors import Unspecified


def canonical_key(value: Any) -> tuple:
    """Total structural sort key: equal values get equal keys and vice versa.

    The first tuple component is a type tag, so values of different sorts
    order by tag and never hit an unorderable comparison.
    """
    if isinstance(value, bool):
        return ("bool", value)
    if isinstance(value, int):
        return ("nat", value)
    if isinstance(value, str):
        return ("str", value)
    if isinstance(value, tuple):
        return ("seq", tuple(canonical_key(v) for v in value))
    if isinstance(value, Enum):
        return ("atom:" + type(value).__name__, value.value)
    if isinstance(value, (FiniteSet, FiniteMap)):
        return value._key()
    if dataclasses.is_dataclass(value):
        parts = tuple(canonical_key(getattr(value, f.name)) for f in dataclasses.fields(value))
        return (type(value).__name__, parts)
    raise TypeError(f"no canonical ordering for {type(value).__name__} values")


class FiniteSet:
    """A finite, duplicate-free collection with value semantics."""

    __slots__ = ("_items", "_cached_key")

    def __init__(self, items: Iterable[Any] = ()):
        ordered = sorted(items, key=canonical_key)
        deduped: list[Any] = []
        for item in ordered:
            if not deduped or item != deduped[-1]:
                deduped.append(item)
        self._items: tuple = tuple(deduped)
        self._cached_key = None

    @classmethod
    def of(cls, *items: Any) -> "FiniteSet":
        return cls(items)

    def is_empty(self) -> bool:
        return not self._items

    def card(self) -> int:
        return len(self._items)

    def member(self, item: Any) -> bool:
        return item in self._items

    def insert(self, item: Any) -> "FiniteSet":
        if item in self._items:
            return self
        return FiniteSet(self._items + (item,))

    def remove(self, item: Any) -> "FiniteSet":
        """Drop ``item`` if present; removing an absent element is identity."""
        if item not in self._items:
            return self
        return FiniteSet(x for x in self._items if x != item)

    def union(self, other: "FiniteSet") -> "FiniteSet":
        return FiniteSet(self._items + other._items)

    def intersect(self, other: "FiniteSet") -> "FiniteSet":
        return FiniteSet(x for x in self._items if x in other)

    def exists(self, pred: Callable[[Any], bool]) -> bool:
        return any(pred(x) for x in self._items)

    def map(self, fn: Callable[[Any], Any]) -> "FiniteSet":
        """Image of the set under ``fn``; may be smaller than the input."""
        return FiniteSet(fn(x) for x in self._items)

    def __contains__(self, item: Any) -> bool:
        return item in self._items

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[Any]:
        return iter(self._items)

    def __or__(self, other: "FiniteSet") -> "FiniteSet":
        return self.union(other)

    def __and__(self, other: "FiniteSet") -> "FiniteSet":
        return self.intersect(other)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteSet) and self._items == other._items

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> tuple:
        if self._cached_key is None:
            self._cached_key = ("set", tuple(canonical_key(x) for x in self._items))
        return self._cached_key

    def __repr__(self) -> str:
        return "FiniteSet({%s})" % ", ".join(repr(x) for x in self._items)


EMPTY_SET = FiniteSet()


class FiniteMap:
    """A finite map: a functional set of (key, value) bindings.

    ``update`` overwrites, ``apply`` is partial, ``remove`` is total.
    Constructing from an iterable lets later bindings win, matching repeated
    ``update`` calls.
    """

    __slots__ = ("_entries", "_cached_key")

    def __init__(self, entries: Iterable[tuple[Any, Any]] = ()):
        merged: list[tuple[Any, Any]] = []
        for key, value in entries:
            merged = [(k, v) for (k, v) in merged if k != key]
            merged.append((key, value))
        self._entries: tuple = tuple(sorted(merged, key=lambda kv: canonical_key(kv[0])))
        self._cached_key = None

    @classmethod
    def of(cls, *entries: tuple[Any, Any]) -> "FiniteMap":
        return cls(entries)

    def is_empty(self) -> bool:
        return not self._entries

    def update(self, key: Any, value: Any) -> "FiniteMap":
        return FiniteMap(self._entries + ((key, value),))

    def apply(self, key: Any) -> Any:
        for k, v in self._entries:
            if k == key:
                return v
        raise Unspecified(f"key {key!r} is not in the map's domain")

    def remove(self, key: Any) -> "FiniteMap":
        """Unbind ``key``; removing an absent key is identity."""
        if key not in self:
            return self
        return FiniteMap((k, v) for k, v in self._entries if k != key)

    def dom(self) -> FiniteSet:
        return FiniteSet(k for k, _ in self._entries)

    def ran(self) -> FiniteSet:
        return FiniteSet(v for _, v in self._entries)

    def reverse_apply(self, value: Any) -> FiniteSet:
        """All keys the map sends to ``value``."""
        return FiniteSet(k for k, v in self._entries if v == value)

    def compose(self, other: "FiniteMap") -> "FiniteMap":
        """Union of the two maps; on a shared key this map's binding wins."""
        return FiniteMap(other._entries + self._entries)

    def map_values(self, fn: Callable[[Any], Any]) -> "FiniteMap":
        return FiniteMap((k, fn(v)) for k, v in self._entries)

    def items(self) -> Iterator[tuple[Any, Any]]:
        return iter(self._entries)

    def __contains__(self, key: Any) -> bool:
        return any(k == key for k, _ in self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FiniteMap) and self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._key())

    def _key(self) -> tuple:
        if self._cached_key is None:
            self._cached_key = ("map", tuple(canonical_key(e) for e in self._entries))
        return self._cached_key

    def __repr__(self) -> str:
        return "FiniteMap({%s})" % ", ".join(f"{k!r}: {v!r}" for k, v in self._entries)


EMPTY_MAP = FiniteMap()


def rep(n: int, item: Any) -> tuple:
    """A sequence holding ``item`` exactly ``n`` times."""
    return (item,) * n


def nth(index: int, items: tuple) -> Any:
    """0-based indexing that refuses to step outside the sequence."""
    if not 0 <= index < len(items):
        raise Unspecified(f"sequence index {index} out of range for length {len(items)}")
    return items[index]


def is_proper_prefix(prefix: tuple, whole: tuple) -> bool:
    return len(prefix) < len(whole) and tuple(whole[: len(prefix)]) == tuple(prefix)


def zip_with_defaults(default_left: Any, default_right: Any,
                      fn: Callable[[Any, Any], Any],
                      left: tuple, right: tuple) -> tuple:
    """Map ``fn`` over the two sequences element-wise, padding the shorter
    one with its default so no tail is dropped."""
    out = []
    for i in range(max(len(left), len(right))):
        a = left[i] if i < len(left) else default_left
        b = right[i] if i < len(right) else default_right
        out.append(fn(a, b))
    return tuple(out)


@dataclasses.dataclass(frozen=True)
class RoseTree:
    """A finitely branching tree with labelled nodes."""

    label: Any
    children: tuple = ()


def mk_tree(label: Any, children: Iterable[RoseTree] = ()) -> RoseTree:
    return RoseTree(label, tuple(children))
