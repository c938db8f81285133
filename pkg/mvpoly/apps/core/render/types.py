from enum import Enum


class RenderFormat(Enum):
    DOT = "dot"
    TEXT = "txt"
