"""Pure-Python grammar binding over the shared grammar bundle.

Loads libtsbundle.so through ctypes and walks concrete-syntax trees with the
cursor API. Functionally identical to the compiled kernel in _walker.pyx;
roughly an order of magnitude slower because every cursor step crosses the
ctypes boundary. Selected automatically when the compiled kernel is absent,
or explicitly via UAST_BACKEND=ctypes.
"""

from __future__ import annotations

import ctypes
from pathlib import Path

from uast.nodes import AstNode

from .skip_rules import is_skippable


class _TSNode(ctypes.Structure):
    _fields_ = [
        ("context", ctypes.c_uint32 * 4),
        ("id", ctypes.c_void_p),
        ("tree", ctypes.c_void_p),
    ]


class _TSPoint(ctypes.Structure):
    _fields_ = [("row", ctypes.c_uint32), ("column", ctypes.c_uint32)]


class _TSTreeCursor(ctypes.Structure):
    _fields_ = [
        ("tree", ctypes.c_void_p),
        ("id", ctypes.c_void_p),
        ("context", ctypes.c_uint32 * 3),
    ]


_PROTOTYPES = {
    "ts_parser_new": ([], ctypes.c_void_p),
    "ts_parser_delete": ([ctypes.c_void_p], None),
    "ts_parser_set_language": ([ctypes.c_void_p, ctypes.c_void_p], ctypes.c_bool),
    "ts_parser_parse_string": (
        [ctypes.c_void_p, ctypes.c_void_p, ctypes.c_char_p, ctypes.c_uint32],
        ctypes.c_void_p,
    ),
    "ts_tree_delete": ([ctypes.c_void_p], None),
    "ts_tree_root_node": ([ctypes.c_void_p], _TSNode),
    "ts_node_type": ([_TSNode], ctypes.c_char_p),
    "ts_node_is_named": ([_TSNode], ctypes.c_bool),
    "ts_node_is_error": ([_TSNode], ctypes.c_bool),
    "ts_node_start_byte": ([_TSNode], ctypes.c_uint32),
    "ts_node_end_byte": ([_TSNode], ctypes.c_uint32),
    "ts_node_start_point": ([_TSNode], _TSPoint),
    "ts_node_end_point": ([_TSNode], _TSPoint),
    "ts_node_child_count": ([_TSNode], ctypes.c_uint32),
    "ts_node_child": ([_TSNode, ctypes.c_uint32], _TSNode),
    "ts_tree_cursor_new": ([_TSNode], _TSTreeCursor),
    "ts_tree_cursor_delete": ([ctypes.POINTER(_TSTreeCursor)], None),
    "ts_tree_cursor_current_node": ([ctypes.POINTER(_TSTreeCursor)], _TSNode),
    "ts_tree_cursor_goto_first_child": ([ctypes.POINTER(_TSTreeCursor)], ctypes.c_bool),
    "ts_tree_cursor_goto_next_sibling": ([ctypes.POINTER(_TSTreeCursor)], ctypes.c_bool),
    "ts_tree_cursor_goto_parent": ([ctypes.POINTER(_TSTreeCursor)], ctypes.c_bool),
    "ts_language_abi_version": ([ctypes.c_void_p], ctypes.c_uint32),
}


class GrammarBundleError(RuntimeError):
    """The bundle is missing, corrupt, or rejects a grammar."""


class CtypesBackend:
    """Grammar backend over an explicit bundle path."""

    name = "ctypes"

    def __init__(self, bundle_path: Path):
        self.bundle_path = Path(bundle_path)
        if not self.bundle_path.exists():
            raise GrammarBundleError(f"grammar bundle not found: {bundle_path}")
        try:
            self._lib = ctypes.CDLL(str(self.bundle_path))
        except OSError as exc:
            raise GrammarBundleError(f"cannot load grammar bundle: {exc}") from exc
        for fname, (argtypes, restype) in _PROTOTYPES.items():
            fn = getattr(self._lib, fname)
            fn.argtypes = argtypes
            fn.restype = restype
        self._languages: dict[str, int] = {}

    def _language_ptr(self, slug: str) -> int:
        ptr = self._languages.get(slug)
        if ptr is None:
            try:
                entry = getattr(self._lib, f"tree_sitter_{slug}")
            except AttributeError as exc:
                raise GrammarBundleError(
                    f"bundle exports no grammar for {slug!r}"
                ) from exc
            entry.restype = ctypes.c_void_p
            ptr = entry()
            self._languages[slug] = ptr
        return ptr

    def abi_version(self, slug: str) -> int:
        return self._lib.ts_language_abi_version(self._language_ptr(slug))

    def parse(self, slug: str, source: bytes) -> tuple["_Tree", int]:
        lib = self._lib
        parser = lib.ts_parser_new()
        try:
            if not lib.ts_parser_set_language(parser, self._language_ptr(slug)):
                raise GrammarBundleError(f"grammar {slug!r} has an incompatible ABI")
            tree_ptr = lib.ts_parser_parse_string(parser, None, source, len(source))
        finally:
            lib.ts_parser_delete(parser)
        if not tree_ptr:
            raise GrammarBundleError(f"parser produced no tree for {slug!r}")
        tree = _Tree(lib, tree_ptr)
        return tree, self._count_errors(tree)

    def _count_errors(self, tree: "_Tree") -> int:
        lib = self._lib
        cursor = lib.ts_tree_cursor_new(lib.ts_tree_root_node(tree.ptr))
        ref = ctypes.byref(cursor)
        errors = 0
        try:
            while True:
                if lib.ts_node_is_error(lib.ts_tree_cursor_current_node(ref)):
                    errors += 1
                if lib.ts_tree_cursor_goto_first_child(ref):
                    continue
                while not lib.ts_tree_cursor_goto_next_sibling(ref):
                    if not lib.ts_tree_cursor_goto_parent(ref):
                        return errors
        finally:
            lib.ts_tree_cursor_delete(ref)

    def extract(self, tree: "_Tree", source: bytes) -> list[AstNode]:
        lib = self._lib
        text = source.decode("utf-8")
        nodes: list[AstNode] = []
        parents: list[int] = []
        cursor = lib.ts_tree_cursor_new(lib.ts_tree_root_node(tree.ptr))
        ref = ctypes.byref(cursor)
        try:
            while True:
                node = lib.ts_tree_cursor_current_node(ref)
                self._enter(lib, node, source, nodes, parents)
                if lib.ts_tree_cursor_goto_first_child(ref):
                    continue
                parents.pop()
                climbing = True
                while climbing:
                    if lib.ts_tree_cursor_goto_next_sibling(ref):
                        climbing = False
                    elif lib.ts_tree_cursor_goto_parent(ref):
                        parents.pop()
                    else:
                        _widen_root(nodes, source, text)
                        return nodes
        finally:
            lib.ts_tree_cursor_delete(ref)

    def _enter(self, lib, node, source: bytes, nodes: list[AstNode], parents: list[int]) -> None:
        parent = parents[-1] if parents else -1
        start = lib.ts_node_start_byte(node)
        end = lib.ts_node_end_byte(node)
        node_text = source[start:end].decode("utf-8")
        if not lib.ts_node_is_named(node) and is_skippable(False, node_text):
            parents.append(parent)
            return
        nid = len(nodes)
        sp = lib.ts_node_start_point(node)
        ep = lib.ts_node_end_point(node)
        nodes.append(
            AstNode(
                nid,
                lib.ts_node_type(node).decode("utf-8"),
                node_text,
                None if parent < 0 else parent,
                [],
                (sp.row, sp.column),
                (ep.row, ep.column),
                start,
                end,
            )
        )
        if parent >= 0:
            nodes[parent].children.append(nid)
        parents.append(nid)

    def raw_root(self, tree: "_Tree", source: bytes) -> "RawNode":
        return RawNode(self, tree, self._lib.ts_tree_root_node(tree.ptr), source)


class _Tree:
    """Owns a TSTree pointer; freed when garbage collected."""

    __slots__ = ("_lib", "ptr")

    def __init__(self, lib, ptr):
        self._lib = lib
        self.ptr = ptr

    def __del__(self):
        if self.ptr:
            self._lib.ts_tree_delete(self.ptr)
            self.ptr = None


class RawNode:
    """Read-only view of one concrete-syntax-tree node, for inspecting raw
    grammar output (the flat array is the product; this is the input)."""

    __slots__ = ("_backend", "_tree", "_node", "_source")

    def __init__(self, backend: CtypesBackend, tree: _Tree, node: _TSNode, source: bytes):
        self._backend = backend
        self._tree = tree
        self._node = node
        self._source = source

    @property
    def type(self) -> str:
        return self._backend._lib.ts_node_type(self._node).decode("utf-8")

    @property
    def is_named(self) -> bool:
        return bool(self._backend._lib.ts_node_is_named(self._node))

    @property
    def start_byte(self) -> int:
        return self._backend._lib.ts_node_start_byte(self._node)

    @property
    def end_byte(self) -> int:
        return self._backend._lib.ts_node_end_byte(self._node)

    @property
    def text(self) -> str:
        return self._source[self.start_byte:self.end_byte].decode("utf-8")

    def children(self) -> list["RawNode"]:
        lib = self._backend._lib
        count = lib.ts_node_child_count(self._node)
        return [
            RawNode(self._backend, self._tree, lib.ts_node_child(self._node, i), self._source)
            for i in range(count)
        ]


def _widen_root(nodes: list[AstNode], source: bytes, text: str) -> None:
    """Stretch the root entry over the whole source.

    Lexers never tokenize leading whitespace, so the raw root can start past
    byte 0; the stored root must cover every byte for the file to be
    recoverable from the array.
    """
    if not nodes:
        raise GrammarBundleError("tree produced no nodes")
    root = nodes[0]
    root.start_byte = 0
    root.end_byte = len(source)
    root.text = text
    root.start_point = (0, 0)
    root.end_point = _end_point(source)


def _end_point(source: bytes) -> tuple[int, int]:
    rows = source.count(b"\n")
    last_nl = source.rfind(b"\n")
    return (rows, len(source) - last_nl - 1 if last_nl >= 0 else len(source))
