"""Grammar backend selection.

Two interchangeable tree-walk kernels exist: a Cython extension compiled at
install time (fast path) and a ctypes binding over the shared grammar
bundle (pure-Python fallback). The compiled kernel is preferred when
importable; set UAST_BACKEND=ctypes|cython to force one, or pass an
explicit bundle path to parse with grammars other than the packaged set.
"""

from __future__ import annotations

import os
from pathlib import Path

from .bundle import bundle_version, grammar_versions, packaged_bundle_path
from .ctypes_backend import CtypesBackend, GrammarBundleError

try:
    from . import _walker
except ImportError:
    _walker = None


class CythonBackend:
    """Facade over the compiled kernel, mirroring CtypesBackend."""

    name = "cython"

    def __init__(self):
        if _walker is None:
            raise GrammarBundleError("compiled kernel is not available")
        self.bundle_path = packaged_bundle_path()

    def parse(self, slug: str, source: bytes):
        return _walker.parse(slug, source)

    def extract(self, tree, source: bytes):
        return _walker.extract(tree, source)

    def abi_version(self, slug: str) -> int:
        return _walker.abi_version(slug)


_default_backend = None


def get_backend(name: str | None = None, bundle_path: Path | None = None):
    """Return a grammar backend.

    An explicit bundle path always selects the ctypes binding (the compiled
    kernel has its grammars linked in and cannot swap them).
    """
    if bundle_path is not None:
        return CtypesBackend(Path(bundle_path))
    requested = name or os.environ.get("UAST_BACKEND", "").strip().lower() or None
    if requested == "ctypes":
        return CtypesBackend(packaged_bundle_path())
    if requested == "cython":
        return CythonBackend()
    if requested is not None:
        raise ValueError(f"unknown backend {requested!r}")
    global _default_backend
    if _default_backend is None:
        if _walker is not None:
            _default_backend = CythonBackend()
        else:
            _default_backend = CtypesBackend(packaged_bundle_path())
    return _default_backend


__all__ = [
    "CtypesBackend",
    "CythonBackend",
    "GrammarBundleError",
    "bundle_version",
    "get_backend",
    "grammar_versions",
    "packaged_bundle_path",
]
