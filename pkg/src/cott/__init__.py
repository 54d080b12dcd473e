"""Recognition and certification of co-TT (signed-interval) graphs and
Ferrers-dimension-2 bigraphs."""

from __future__ import annotations

from cott.graphcore import (
    Bigraph,
    BinaryMatrix,
    Graph,
    SetSystem,
    SizeLimitError,
    are_isomorphic,
    complement,
    induced,
)

__version__ = "0.1.0"

__all__ = [
    "Bigraph",
    "BinaryMatrix",
    "Graph",
    "SetSystem",
    "SizeLimitError",
    "are_isomorphic",
    "complement",
    "induced",
]
