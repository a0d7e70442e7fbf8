"""Attribute collections: ordered key/value pairs with bag-style removal.

The algebra never interprets attributes, it only concatenates and subtracts
them. Entries keep their order, duplicates are allowed, and removal cancels
at most one matching entry per entry removed, so attaching attributes and
detaching the same ones round-trips.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class AttrSet:
    entries: tuple[tuple[str, str], ...] = ()

    @classmethod
    def of(cls, *pairs: tuple[str, str]) -> "AttrSet":
        return cls(tuple((str(k), str(v)) for k, v in pairs))

    def __iter__(self) -> Iterator[tuple[str, str]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)


EMPTY_ATTRS = AttrSet()


def mk_attrs(pairs: Iterable[tuple[str, str]]) -> AttrSet:
    return AttrSet(tuple((str(k), str(v)) for k, v in pairs))


def concat_attrs(first: AttrSet, second: AttrSet) -> AttrSet:
    """Append the two collections, ``first`` entries in front."""
    return AttrSet(first.entries + second.entries)


def remove_attrs(removed: AttrSet, attrs: AttrSet) -> AttrSet:
    """Cancel each entry of ``removed`` against at most one occurrence in
    ``attrs``; entries with no match are ignored."""
    remaining = list(attrs.entries)
    for entry in removed.entries:
        if entry in remaining:
            remaining.remove(entry)
    return AttrSet(tuple(remaining))
