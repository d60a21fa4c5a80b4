"""Deterministic ordering, canonical forms and digests for identifier tokens.

Identifiers are opaque hashable values: plain strings in documents, tuples for
structures generated in memory (chains, poset arrows, cylinder parts).  All
iteration in the library is driven through token_key so behaviour never depends
on hash order.
"""

from __future__ import annotations

import hashlib
import json


def token_key(token):
    """Total order on tokens; tuples sort after scalars and recursively."""
    if isinstance(token, tuple):
        return (1, tuple(token_key(t) for t in token))
    return (0, (type(token).__name__, repr(token)))


def canon(token):
    """JSON-able canonical image of a token (type-tagged, injective)."""
    if isinstance(token, tuple):
        return ["t", [canon(t) for t in token]]
    if isinstance(token, bool):
        return ["b", token]
    if isinstance(token, str):
        return ["s", token]
    if isinstance(token, int):
        return ["i", token]
    raise TypeError(f"unsupported identifier token: {token!r}")


def digest_payload(payload) -> str:
    """sha256 hex digest of a JSON-able canonical payload."""
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def sorted_tokens(tokens):
    return sorted(tokens, key=token_key)
