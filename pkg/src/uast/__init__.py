"""Multi-language parsing pipeline with a four-layer universal AST schema."""

__version__ = "0.1.0"

from uast.languages import Language, detect_language
from uast.nodes import AstNode

__all__ = ["AstNode", "Language", "detect_language", "__version__"]
