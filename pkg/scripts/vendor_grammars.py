#!/usr/bin/env python3
"""Vendor the tree-sitter C runtime and the ten grammar sources into third_party/.

Downloads pinned npm tarballs (the grammar packages ship their generated
parser.c / scanner.c, and the core package vendors the full C runtime),
extracts just the C sources plus licenses and node-type inventories, and
writes third_party/BUNDLE_INFO.json recording versions and content hashes.

Requires network access to an npm registry. Run from the repo root:

    python3 scripts/vendor_grammars.py
"""

import hashlib
import json
import shutil
import subprocess
import sys
import tarfile
import tempfile
from pathlib import Path

CORE = ("tree-sitter", "0.25.1")

# slug -> (npm package, version)
GRAMMARS = {
    "c": ("tree-sitter-c", "0.24.1"),
    "cpp": ("tree-sitter-cpp", "0.23.4"),
    "c_sharp": ("tree-sitter-c-sharp", "0.23.5"),
    "go": ("tree-sitter-go", "0.25.0"),
    "java": ("tree-sitter-java", "0.23.5"),
    "javascript": ("tree-sitter-javascript", "0.25.0"),
    "python": ("tree-sitter-python", "0.25.0"),
    "ruby": ("tree-sitter-ruby", "0.23.1"),
    "scala": ("tree-sitter-scala", "0.24.0"),
    "typescript": ("tree-sitter-typescript", "0.23.2"),
}

REPO_ROOT = Path(__file__).resolve().parent.parent
THIRD_PARTY = REPO_ROOT / "third_party"


def npm_pack(package: str, version: str, dest: Path) -> Path:
    dest.mkdir(parents=True, exist_ok=True)
    out = subprocess.run(
        ["npm", "pack", f"{package}@{version}"],
        cwd=dest, check=True, capture_output=True, text=True,
    )
    return dest / out.stdout.strip().splitlines()[-1]


def extract(tgz: Path, dest: Path) -> Path:
    with tarfile.open(tgz) as tf:
        if hasattr(tarfile, "data_filter"):
            tf.extractall(dest, filter="data")
        else:
            tf.extractall(dest)
    return dest / "package"


def copy_tree(src: Path, dst: Path) -> None:
    if dst.exists():
        shutil.rmtree(dst)
    shutil.copytree(src, dst)


def sha256_file(path: Path) -> str:
    return hashlib.sha256(path.read_bytes()).hexdigest()


def main() -> int:
    THIRD_PARTY.mkdir(exist_ok=True)
    info = {"core": {}, "grammars": {}}

    with tempfile.TemporaryDirectory() as tmp:
        tmpdir = Path(tmp)

        # Core runtime: the npm binding package vendors the complete C library.
        name, version = CORE
        pkg = extract(npm_pack(name, version, tmpdir), tmpdir / "core")
        core_src = pkg / "vendor" / "tree-sitter" / "lib"
        copy_tree(core_src / "src", THIRD_PARTY / "tree-sitter" / "lib" / "src")
        copy_tree(core_src / "include", THIRD_PARTY / "tree-sitter" / "lib" / "include")
        for lic in ("LICENSE", "LICENSE.md"):
            if (pkg / "vendor" / "tree-sitter" / lic).exists():
                shutil.copy(pkg / "vendor" / "tree-sitter" / lic,
                            THIRD_PARTY / "tree-sitter" / "LICENSE")
        info["core"] = {"package": name, "version": version}

        for slug, (name, version) in GRAMMARS.items():
            pkg = extract(npm_pack(name, version, tmpdir / slug), tmpdir / slug)
            dest = THIRD_PARTY / "grammars" / slug
            if slug == "typescript":
                # This package nests per-dialect sources plus a shared scanner
                # header; keep its layout so relative includes resolve.
                copy_tree(pkg / "typescript" / "src", dest / "typescript" / "src")
                copy_tree(pkg / "common", dest / "common")
                parser_c = dest / "typescript" / "src" / "parser.c"
            else:
                copy_tree(pkg / "src", dest / "src")
                parser_c = dest / "src" / "parser.c"
            for lic in ("LICENSE", "LICENSE.md", "LICENSE.txt"):
                if (pkg / lic).exists():
                    shutil.copy(pkg / lic, dest / "LICENSE")
                    break
            info["grammars"][slug] = {
                "package": name,
                "version": version,
                "parser_sha256": sha256_file(parser_c),
            }
            print(f"vendored {name}@{version} -> {dest}")

    payload = json.dumps(info, indent=2, sort_keys=True) + "\n"
    (THIRD_PARTY / "BUNDLE_INFO.json").write_text(payload)
    # The installed package reports bundle identity from its own copy.
    pkg_copy = REPO_ROOT / "src" / "uast" / "_backend" / "bundle_info.json"
    pkg_copy.write_text(payload)
    print(f"wrote {THIRD_PARTY / 'BUNDLE_INFO.json'} and {pkg_copy}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
