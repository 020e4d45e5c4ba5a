"""Grammar dispatch and flat-array extraction.

parse_source always yields a tree: the grammars recover from syntax errors
by emitting error-typed nodes, so broken input is data rather than failure.
extract_ast assigns dense pre-order ids (a node is numbered when first
visited, before its children), drops anonymous punctuation tokens, and
re-parents their children to the nearest kept ancestor.
"""

from __future__ import annotations

from uast._backend import get_backend
from uast._backend.skip_rules import is_skippable
from uast.languages import Language, detect_language
from uast.nodes import AstNode

__all__ = [
    "ParseOutcome",
    "detect_language",
    "extract_ast",
    "parse_and_extract",
    "parse_source",
    "should_skip_node",
]


class ParseOutcome:
    """A parsed file: the opaque tree handle plus its error-node count."""

    __slots__ = ("language", "source", "tree", "error_node_count", "_backend")

    def __init__(self, language: Language, source: str, tree, error_node_count: int, backend):
        self.language = language
        self.source = source
        self.tree = tree
        self.error_node_count = error_node_count
        self._backend = backend

    @property
    def backend_name(self) -> str:
        return self._backend.name


def parse_source(language: Language, source: str, backend=None) -> ParseOutcome:
    """Run the language's grammar over the source text."""
    backend = backend or get_backend()
    tree, errors = backend.parse(language.slug, source.encode("utf-8"))
    return ParseOutcome(language, source, tree, errors, backend)


def extract_ast(outcome: ParseOutcome) -> list[AstNode]:
    """Flatten the parse tree into the universal node array."""
    return outcome._backend.extract(outcome.tree, outcome.source.encode("utf-8"))


def parse_and_extract(language: Language, source: str, backend=None) -> tuple[ParseOutcome, list[AstNode]]:
    outcome = parse_source(language, source, backend)
    return outcome, extract_ast(outcome)


def should_skip_node(node) -> bool:
    """True iff a raw tree node is an anonymous punctuation token.

    Accepts any view exposing is_named and text (a RawNode from the ctypes
    backend, or anything shaped like one).
    """
    return is_skippable(node.is_named, node.text)
