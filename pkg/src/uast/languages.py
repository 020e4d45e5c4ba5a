"""The ten supported languages, with extension dispatch.

Each language has a display name (the canonical identifier used in records
and over HTTP) and a slug (filesystem- and symbol-safe, used for grammar
entry points and shard file names).
"""

from __future__ import annotations

import enum


class Language(enum.Enum):
    C = ("C", "c")
    CPP = ("C++", "cpp")
    C_SHARP = ("C#", "c_sharp")
    GO = ("Go", "go")
    JAVA = ("Java", "java")
    JAVASCRIPT = ("JavaScript", "javascript")
    PYTHON = ("Python", "python")
    RUBY = ("Ruby", "ruby")
    SCALA = ("Scala", "scala")
    TYPESCRIPT = ("TypeScript", "typescript")

    def __init__(self, display: str, slug: str):
        self.display = display
        self.slug = slug

    def __str__(self) -> str:
        return self.display


LANGUAGES = list(Language)

_BY_NAME = {lang.display: lang for lang in Language}
_BY_SLUG = {lang.slug: lang for lang in Language}

# .h defaults to C++ unless a manifest declares C for the file.
EXTENSION_TABLE = {
    ".c": Language.C,
    ".cc": Language.CPP,
    ".cpp": Language.CPP,
    ".cxx": Language.CPP,
    ".hpp": Language.CPP,
    ".h": Language.CPP,
    ".cs": Language.C_SHARP,
    ".go": Language.GO,
    ".java": Language.JAVA,
    ".js": Language.JAVASCRIPT,
    ".mjs": Language.JAVASCRIPT,
    ".py": Language.PYTHON,
    ".rb": Language.RUBY,
    ".scala": Language.SCALA,
    ".ts": Language.TYPESCRIPT,
    ".tsx": Language.TYPESCRIPT,
}


class UnsupportedLanguageError(ValueError):
    """Raised when neither a declaration nor the extension table decides."""


def language_from_name(name: str) -> Language:
    """Resolve a display name ("C++") or slug ("cpp") to a Language."""
    if name in _BY_NAME:
        return _BY_NAME[name]
    if name in _BY_SLUG:
        return _BY_SLUG[name]
    raise UnsupportedLanguageError(f"unsupported language: {name!r}")


def detect_language(path: str, declared: Language | None = None) -> Language:
    """Pick the language for a file: an explicit declaration wins, otherwise
    the extension table decides."""
    if declared is not None:
        return declared
    dot = path.rfind(".")
    ext = path[dot:].lower() if dot >= 0 else ""
    try:
        return EXTENSION_TABLE[ext]
    except KeyError:
        raise UnsupportedLanguageError(
            f"cannot detect language for {path!r}: unknown extension {ext!r}"
        ) from None
