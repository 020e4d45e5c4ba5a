"""The flat node array entry.

Nodes carry integer ids plus parent/children links so any tree relation is a
constant-time list lookup instead of a traversal. Points are zero-based
(row, column) pairs with byte-counted columns; byte offsets address the
UTF-8 encoding of the source, end exclusive.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(slots=True)
class AstNode:
    id: int
    type: str
    text: str
    parent: int | None
    children: list[int] = field(default_factory=list)
    start_point: tuple[int, int] = (0, 0)
    end_point: tuple[int, int] = (0, 0)
    start_byte: int = 0
    end_byte: int = 0

    def to_json_dict(self) -> dict:
        """Field order follows the serialized node layout."""
        return {
            "id": self.id,
            "type": self.type,
            "text": self.text,
            "parent": self.parent,
            "children": list(self.children),
            "start_point": {"row": self.start_point[0], "column": self.start_point[1]},
            "end_point": {"row": self.end_point[0], "column": self.end_point[1]},
            "start_byte": self.start_byte,
            "end_byte": self.end_byte,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "AstNode":
        return cls(
            id=d["id"],
            type=d["type"],
            text=d["text"],
            parent=d["parent"],
            children=list(d["children"]),
            start_point=(d["start_point"]["row"], d["start_point"]["column"]),
            end_point=(d["end_point"]["row"], d["end_point"]["column"]),
            start_byte=d["start_byte"],
            end_byte=d["end_byte"],
        )
