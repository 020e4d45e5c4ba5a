"""Delimiter-skip rule shared by both tree-walk kernels.

A node is dropped from the flat array only when the grammar marks it
anonymous AND its text is nothing but ASCII punctuation ("{", ";", "=>",
...). Anonymous keyword tokens ("return", "def") contain letters and stay,
as do comments, literals and error nodes; nothing addressable is lost
because the root always carries the full source text.
"""

import string

PUNCT_CHARS = frozenset(string.punctuation)


def is_skippable(named: bool, text: str) -> bool:
    if named:
        return False
    return all(ch in PUNCT_CHARS for ch in text)
