"""Gate-level workbench for binary and ternary adders and multipliers.

Builds the circuits, simulates them exhaustively against integer
arithmetic, counts their cells, and prices them with published
transistor-count tables.
"""

__version__ = "0.1.0"

from .core import Radix, Word, WidthPair, information_ratio, word_from_uint, word_to_uint

__all__ = [
    "__version__",
    "Radix",
    "Word",
    "WidthPair",
    "information_ratio",
    "word_from_uint",
    "word_to_uint",
]
