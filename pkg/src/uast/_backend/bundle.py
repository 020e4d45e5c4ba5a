"""Grammar bundle location and version identity.

The packaged bundle is built from the vendored sources at install time; its
version string (recorded in every run report) combines the runtime version,
the per-grammar package versions and a fingerprint over the generated
parser sources.
"""

from __future__ import annotations

import hashlib
import json
from pathlib import Path

_BACKEND_DIR = Path(__file__).resolve().parent

BUNDLE_FILENAME = "libtsbundle.so"


def packaged_bundle_path() -> Path:
    return _BACKEND_DIR / BUNDLE_FILENAME


def _bundle_info() -> dict:
    info_path = _BACKEND_DIR / "bundle_info.json"
    if info_path.exists():
        return json.loads(info_path.read_text())
    return {}


def bundle_version(bundle_path: Path | None = None) -> str:
    """Version string for the loaded bundle.

    For the packaged bundle this is derived from the recorded package
    versions; an externally supplied bundle is identified by a content hash
    since nothing else is known about it.
    """
    if bundle_path is not None and bundle_path != packaged_bundle_path():
        digest = hashlib.sha256(Path(bundle_path).read_bytes()).hexdigest()
        return f"external-bundle:{digest[:12]}"
    info = _bundle_info()
    if not info:
        return "unknown"
    core = info.get("core", {})
    grammars = info.get("grammars", {})
    fingerprint = hashlib.sha256(
        "".join(
            grammars[slug].get("parser_sha256", "") for slug in sorted(grammars)
        ).encode()
    ).hexdigest()[:12]
    return (
        f"tree-sitter-{core.get('version', '?')}"
        f"+grammars-{fingerprint}"
    )


def grammar_versions() -> dict[str, str]:
    info = _bundle_info()
    return {
        slug: entry.get("version", "?")
        for slug, entry in info.get("grammars", {}).items()
    }
