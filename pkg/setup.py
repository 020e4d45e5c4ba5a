"""Build script for the compiled parsing core.

Two artifacts come out of the vendored C sources in third_party/:

1. ``src/uast/_backend/libtsbundle.so`` -- a plain shared library holding the
   tree-sitter runtime plus all ten grammars (the grammar bundle the pure
   Python ctypes backend loads).
2. ``uast._backend._walker`` -- a Cython extension that links the same
   objects and walks trees at C speed.

Each grammar is compiled with its own include directory first: the generated
parsers pin different ABI revisions of ``tree_sitter/parser.h`` and must not
see another grammar's copy.
"""

import os
from pathlib import Path

from setuptools import setup
from setuptools.command.build_ext import build_ext as _build_ext
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

ROOT = Path(__file__).resolve().parent
THIRD_PARTY = ROOT / "third_party"
CORE = THIRD_PARTY / "tree-sitter" / "lib"
GRAMMARS = THIRD_PARTY / "grammars"

GRAMMAR_SLUGS = [
    "c", "cpp", "c_sharp", "go", "java",
    "javascript", "python", "ruby", "scala", "typescript",
]

CFLAGS = ["-O2", "-std=gnu11", "-fPIC", "-fvisibility=default"]


def grammar_src_dir(slug: str) -> Path:
    if slug == "typescript":
        return GRAMMARS / slug / "typescript" / "src"
    return GRAMMARS / slug / "src"


class build_ext(_build_ext):
    """Compile the grammar objects once, then link both artifacts."""

    def build_extensions(self):
        objects = self._compile_grammar_objects()
        self._link_bundle(objects)
        for ext in self.extensions:
            ext.extra_objects = objects
        super().build_extensions()

    def _compile_grammar_objects(self):
        objects = []
        core_out = os.path.join(self.build_temp, "core")
        objects += self.compiler.compile(
            [str(CORE / "src" / "lib.c")],
            output_dir=core_out,
            include_dirs=[str(CORE / "src"), str(CORE / "include")],
            extra_postargs=CFLAGS,
        )
        for slug in GRAMMAR_SLUGS:
            src_dir = grammar_src_dir(slug)
            sources = [str(src_dir / "parser.c")]
            if (src_dir / "scanner.c").exists():
                sources.append(str(src_dir / "scanner.c"))
            objects += self.compiler.compile(
                sources,
                output_dir=os.path.join(self.build_temp, slug),
                include_dirs=[str(src_dir)],
                extra_postargs=CFLAGS,
            )
        return objects

    def _link_bundle(self, objects):
        ext_path = Path(self.get_ext_fullpath("uast._backend._walker"))
        bundle_dir = ext_path.parent
        bundle_dir.mkdir(parents=True, exist_ok=True)
        bundle = bundle_dir / "libtsbundle.so"
        self.compiler.link_shared_object(
            objects, str(bundle), extra_postargs=["-shared"],
        )
        # build_ext only copies its own extensions back into the source
        # tree; mirror that for the bundle so editable installs see it.
        inplace_dir = ROOT / "src" / "uast" / "_backend"
        if self.inplace and bundle_dir.resolve() != inplace_dir.resolve():
            self.copy_file(str(bundle), str(inplace_dir / "libtsbundle.so"))


extensions = [
    Extension(
        "uast._backend._walker",
        sources=["src/uast/_backend/_walker.pyx"],
        include_dirs=[str(CORE / "include")],
        extra_compile_args=["-O2"],
    )
]

if cythonize is not None:
    extensions = cythonize(extensions, compiler_directives={"language_level": "3"})

setup(
    ext_modules=extensions,
    cmdclass={"build_ext": build_ext},
)
