# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled tree-walk kernel.

Parses source bytes with the grammars linked into this extension and
flattens the concrete-syntax tree into the universal node array in a single
C-speed pass. Behaviour matches the ctypes backend exactly; the equivalence
is pinned by tests, the speed difference by the backend benchmark.
"""

from cpython.pycapsule cimport PyCapsule_New, PyCapsule_GetPointer, PyCapsule_IsValid
from libc.stdint cimport uint32_t

from uast.nodes import AstNode
from uast._backend.skip_rules import PUNCT_CHARS


cdef extern from "tree_sitter/api.h":
    ctypedef struct TSLanguage
    ctypedef struct TSParser
    ctypedef struct TSTree
    ctypedef struct TSPoint:
        uint32_t row
        uint32_t column
    ctypedef struct TSNode:
        uint32_t context[4]
        const void *id
        const TSTree *tree
    ctypedef struct TSTreeCursor:
        const void *tree
        const void *id
        uint32_t context[3]

    TSParser *ts_parser_new()
    void ts_parser_delete(TSParser *self)
    bint ts_parser_set_language(TSParser *self, const TSLanguage *language)
    TSTree *ts_parser_parse_string(TSParser *self, const TSTree *old_tree,
                                   const char *string, uint32_t length)
    void ts_tree_delete(TSTree *self)
    TSNode ts_tree_root_node(const TSTree *self)
    const char *ts_node_type(TSNode self)
    bint ts_node_is_named(TSNode self)
    bint ts_node_is_error(TSNode self)
    uint32_t ts_node_start_byte(TSNode self)
    uint32_t ts_node_end_byte(TSNode self)
    TSPoint ts_node_start_point(TSNode self)
    TSPoint ts_node_end_point(TSNode self)
    TSTreeCursor ts_tree_cursor_new(TSNode node)
    void ts_tree_cursor_delete(TSTreeCursor *self)
    TSNode ts_tree_cursor_current_node(const TSTreeCursor *self)
    bint ts_tree_cursor_goto_first_child(TSTreeCursor *self)
    bint ts_tree_cursor_goto_next_sibling(TSTreeCursor *self)
    bint ts_tree_cursor_goto_parent(TSTreeCursor *self)
    uint32_t ts_language_abi_version(const TSLanguage *self)

cdef extern from *:
    """
    #include "tree_sitter/api.h"
    const TSLanguage *tree_sitter_c(void);
    const TSLanguage *tree_sitter_c_sharp(void);
    const TSLanguage *tree_sitter_cpp(void);
    const TSLanguage *tree_sitter_go(void);
    const TSLanguage *tree_sitter_java(void);
    const TSLanguage *tree_sitter_javascript(void);
    const TSLanguage *tree_sitter_python(void);
    const TSLanguage *tree_sitter_ruby(void);
    const TSLanguage *tree_sitter_scala(void);
    const TSLanguage *tree_sitter_typescript(void);
    """
    const TSLanguage *tree_sitter_c()
    const TSLanguage *tree_sitter_c_sharp()
    const TSLanguage *tree_sitter_cpp()
    const TSLanguage *tree_sitter_go()
    const TSLanguage *tree_sitter_java()
    const TSLanguage *tree_sitter_javascript()
    const TSLanguage *tree_sitter_python()
    const TSLanguage *tree_sitter_ruby()
    const TSLanguage *tree_sitter_scala()
    const TSLanguage *tree_sitter_typescript()


cdef bint _PUNCT[256]
for _ch in PUNCT_CHARS:
    _PUNCT[ord(_ch)] = True

cdef dict _type_cache = {}

CAPSULE_NAME = b"uast.TSTree"


class KernelError(RuntimeError):
    pass


cdef const TSLanguage *_language_for(str slug) except? NULL:
    if slug == "c":
        return tree_sitter_c()
    if slug == "cpp":
        return tree_sitter_cpp()
    if slug == "c_sharp":
        return tree_sitter_c_sharp()
    if slug == "go":
        return tree_sitter_go()
    if slug == "java":
        return tree_sitter_java()
    if slug == "javascript":
        return tree_sitter_javascript()
    if slug == "python":
        return tree_sitter_python()
    if slug == "ruby":
        return tree_sitter_ruby()
    if slug == "scala":
        return tree_sitter_scala()
    if slug == "typescript":
        return tree_sitter_typescript()
    raise KernelError(f"no grammar linked for {slug!r}")


cdef void _destroy_tree(object capsule) noexcept:
    cdef TSTree *tree = <TSTree *>PyCapsule_GetPointer(capsule, CAPSULE_NAME)
    if tree is not NULL:
        ts_tree_delete(tree)


def abi_version(str slug):
    return ts_language_abi_version(_language_for(slug))


def parse(str slug, bytes source):
    """Parse and return (tree capsule, error node count)."""
    cdef const TSLanguage *lang = _language_for(slug)
    cdef TSParser *parser = ts_parser_new()
    cdef TSTree *tree
    try:
        if not ts_parser_set_language(parser, lang):
            raise KernelError(f"grammar {slug!r} has an incompatible ABI")
        tree = ts_parser_parse_string(parser, NULL, source, <uint32_t>len(source))
    finally:
        ts_parser_delete(parser)
    if tree is NULL:
        raise KernelError(f"parser produced no tree for {slug!r}")
    capsule = PyCapsule_New(tree, CAPSULE_NAME, _destroy_tree)
    return capsule, _count_errors(tree)


cdef int _count_errors(TSTree *tree):
    cdef TSTreeCursor cursor = ts_tree_cursor_new(ts_tree_root_node(tree))
    cdef int errors = 0
    try:
        while True:
            if ts_node_is_error(ts_tree_cursor_current_node(&cursor)):
                errors += 1
            if ts_tree_cursor_goto_first_child(&cursor):
                continue
            while not ts_tree_cursor_goto_next_sibling(&cursor):
                if not ts_tree_cursor_goto_parent(&cursor):
                    return errors
    finally:
        ts_tree_cursor_delete(&cursor)


cdef inline bint _skippable(const char *buf, uint32_t start, uint32_t end) noexcept:
    cdef uint32_t i
    for i in range(start, end):
        if not _PUNCT[<unsigned char>buf[i]]:
            return False
    return True


cdef inline str _type_name(TSNode node):
    cdef const char *ctype = ts_node_type(node)
    cdef object key = <size_t>ctype
    name = _type_cache.get(key)
    if name is None:
        name = (<bytes>ctype).decode("utf-8")
        _type_cache[key] = name
    return name


def extract(object capsule, bytes source):
    """Flatten the parsed tree into the universal node array."""
    if not PyCapsule_IsValid(capsule, CAPSULE_NAME):
        raise KernelError("not a parse tree handle")
    cdef TSTree *tree = <TSTree *>PyCapsule_GetPointer(capsule, CAPSULE_NAME)
    cdef const char *buf = source
    cdef TSTreeCursor cursor = ts_tree_cursor_new(ts_tree_root_node(tree))
    cdef TSNode node
    cdef TSPoint sp, ep
    cdef uint32_t start, end
    cdef Py_ssize_t parent, nid
    nodes = []
    parents = []
    try:
        while True:
            node = ts_tree_cursor_current_node(&cursor)
            # enter
            parent = parents[-1] if parents else -1
            start = ts_node_start_byte(node)
            end = ts_node_end_byte(node)
            if not ts_node_is_named(node) and _skippable(buf, start, end):
                parents.append(parent)
            else:
                nid = len(nodes)
                sp = ts_node_start_point(node)
                ep = ts_node_end_point(node)
                entry = AstNode(
                    nid,
                    _type_name(node),
                    source[start:end].decode("utf-8"),
                    None if parent < 0 else parent,
                    [],
                    (sp.row, sp.column),
                    (ep.row, ep.column),
                    start,
                    end,
                )
                nodes.append(entry)
                if parent >= 0:
                    (<object>nodes[parent]).children.append(nid)
                parents.append(nid)
            if ts_tree_cursor_goto_first_child(&cursor):
                continue
            parents.pop()
            while not ts_tree_cursor_goto_next_sibling(&cursor):
                if not ts_tree_cursor_goto_parent(&cursor):
                    _widen_root(nodes, source)
                    return nodes
                parents.pop()
    finally:
        ts_tree_cursor_delete(&cursor)


cdef _widen_root(list nodes, bytes source):
    # The raw root starts at the first token; the stored root must cover
    # every byte so the file is recoverable from the array.
    if not nodes:
        raise KernelError("tree produced no nodes")
    root = nodes[0]
    root.start_byte = 0
    root.end_byte = len(source)
    root.text = source.decode("utf-8")
    root.start_point = (0, 0)
    rows = source.count(b"\n")
    last_nl = source.rfind(b"\n")
    root.end_point = (rows, len(source) - last_nl - 1 if last_nl >= 0 else len(source))
