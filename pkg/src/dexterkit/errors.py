"""Error signalling for operations the document algebra leaves partial."""


class Unspecified(Exception):
    """Raised where a partial operation has no defined result.

    Partial operations (looking a key up outside a map's domain, locating a
    position that does not exist, inserting a link no rule accepts) raise
    this instead of inventing a junk value, so callers can observe exactly
    where the gap is and report it.
    """
